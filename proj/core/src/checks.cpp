#include "spinfock/checks.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "spinfock/crystal.hpp"
#include "spinfock/error.hpp"
#include "spinfock/fixtures.hpp"
#include "spinfock/io.hpp"

namespace spinfock::checks {

namespace {

class Collector {
 public:
  void fail(const std::string& msg) {
    ++failures_;
    if (failures_ <= 5) notes_.push_back(msg);
  }
  void note(const std::string& msg) { info_.push_back(msg); }
  bool ok() const { return failures_ == 0; }

  std::string detail() const {
    std::string out;
    auto append = [&](const std::string& s) {
      if (!out.empty()) out += "; ";
      out += s;
    };
    for (const auto& s : info_) append(s);
    if (failures_) append(std::to_string(failures_) + " failure(s)");
    for (const auto& s : notes_) append(s);
    return out;
  }

 private:
  int failures_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> info_;
};

CheckResult timed(std::string name, const std::function<void(Collector&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  Collector c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.fail(e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.ok = c.ok();
  r.detail = c.detail();
  return r;
}

std::string show(const FockVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

FockVector k_operator(Modulus mod, int i, const FockVector& v) {
  const int e = q_i_exponent(i, mod.n());
  const LaurentPoly denom = LaurentPoly::monomial(e) - LaurentPoly::monomial(-e);
  FockVector out;
  for (const auto& [lambda, c] : v.terms()) {
    const int k = t_exponent(mod, i, lambda);
    out.add(lambda, c * exact_div(LaurentPoly::monomial(k) - LaurentPoly::monomial(-k), denom));
  }
  return out;
}

}  // namespace

CheckResult action_fixtures() {
  return timed("fock action fixtures", [](Collector& c) {
    for (const auto& a : fixtures::action_fixtures()) {
      FockVector got = apply_f(Modulus(a.h), a.i, FockVector::basis(a.input));
      if (got != a.expected) c.fail(a.name + " = " + show(got));
    }
  });
}

CheckResult degree9_vectors() {
  return timed("A and G for h = 3, m = 9", [](Collector& c) {
    const Modulus mod(3);
    const BasisMatrix G = canonical_basis(mod, 9);
    for (const auto& v : fixtures::vector_fixtures()) {
      if (v.h != 3) continue;
      FockVector got = v.kind == 'A' ? a_vector(mod, v.label) : G.column(v.label);
      if (got != v.expected) c.fail(v.name + " = " + show(got));
    }
  });
}

CheckResult degree10_basis(int jobs) {
  return timed("canonical basis h = 3, m = 10", [jobs](Collector& c) {
    const BasisMatrix got = canonical_basis(Modulus(3), 10, {true, jobs});
    const BasisMatrix want = fixtures::basis_h3_m10();
    std::size_t compared = 0;
    for (const auto& lambda : want.rows(true)) {
      for (const auto& mu : want.labels()) {
        ++compared;
        if (!got.columns.count(mu)) {
          c.fail("missing column " + mu.to_label());
          continue;
        }
        if (got.entry(lambda, mu) != want.entry(lambda, mu)) {
          c.fail("d[" + lambda.to_label() + "," + mu.to_label() + "] = " + got.entry(lambda, mu).to_string());
        }
      }
    }
    if (got.labels() != want.labels()) c.fail("column labels differ");
    if (got.rows(true) != want.rows(true)) c.fail("row labels differ");
    if (io::render_table(got) != io::render_table(want)) c.fail("rendered tables differ");
    c.note(std::to_string(compared) + " entries");
  });
}

CheckResult degree21_columns(int jobs) {
  return timed("G(75432), G(654321) for h = 7, m = 21", [jobs](Collector& c) {
    const BasisMatrix G = canonical_basis(Modulus(7), 21, {true, jobs});
    const Partition bottom{9, 7, 5};
    for (const auto& v : fixtures::vector_fixtures()) {
      if (v.h != 7) continue;
      const FockVector& got = G.column(v.label);
      if (got != v.expected) c.fail(v.name + " = " + show(got));
      const Partition last = got.terms().rbegin()->first;
      if (last != bottom) c.fail(v.name + " bottom row " + last.to_label());
    }
    c.note("bottom row (9 7 5) in both");
  });
}

CheckResult degree10_reduction(int jobs) {
  return timed("reduced matrix p = 3, m = 10", [jobs](Collector& c) {
    const ReducedMatrix got = reduced_matrix(Modulus(3), 10, {true, jobs});
    if (!(got == fixtures::reduced_p3_m10())) c.fail("differs from embedded reduced matrix:\n" + io::render_table(got));
    const ReducedMatrix ext = reduce_external_matrix(parse_decomposition_csv(fixtures::external_csv_p3_m10()), 3);
    if (!(ext == got)) c.fail("external matrix reduces to:\n" + io::render_table(ext));
  });
}

CheckResult crystal_strings() {
  return timed("crystal strings for n = 1", [](Collector& c) {
    const Modulus mod(3);
    const std::vector<std::vector<Partition>> strings = {
        {Partition{2}, Partition{2, 1}, Partition{3, 1}, Partition{4, 1}},
        {Partition{3, 2}, Partition{3, 2, 1}, Partition{3, 3, 1}, Partition{4, 3, 1}},
    };
    for (const auto& s : strings) {
      for (std::size_t k = 0; k + 1 < s.size(); ++k) {
        bool found = false;
        for (int i = 0; i <= mod.n(); ++i) {
          auto next = ftilde(mod, i, s[k]);
          if (next && *next == s[k + 1]) found = true;
        }
        if (!found) c.fail("no arrow " + s[k].to_label() + " -> " + s[k + 1].to_label());
      }
    }
    if (phi(mod, 1, Partition{3, 3, 1}) != 1) c.fail("phi_1(3 3 1) = " + std::to_string(phi(mod, 1, Partition{3, 3, 1})));
    const auto graph = component(mod, Partition{}, 10);
    auto got = graph.vertices_of_degree(10);
    auto want = fixtures::crystal_degree10_n1();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) c.fail("degree-10 vertex set differs");
  });
}

CheckResult ladder_word() {
  return timed("ladder monomial of (11 7 7 4), n = 3", [](Collector& c) {
    const Modulus mod(7);
    const Partition mu{11, 7, 7, 4};
    const auto got = io::ladder_monomial(mod, mu);
    if (got != fixtures::ladder_word_11774()) c.fail(got);
    const auto count = ladders(mod, mu).size();
    if (count != 22) c.fail(std::to_string(count) + " ladders");
  });
}

CheckResult degree11_export(int jobs) {
  return timed("reduced columns p = 3, m = 11 (export)", [jobs](Collector& c) {
    const Modulus mod(3);
    const ReducedMatrix R = reduced_matrix(mod, 11, {true, jobs});
    std::set<Partition> want;
    for (const auto& comb : fixtures::reduced_columns_p3_m11()) {
      CharacterVector sum;
      for (const auto& [mu, k] : comb.terms) {
        want.insert(mu);
        for (const auto& [lambda, v] : double_underline(R.columns.at(mu))) sum[lambda] += k * v;
      }
      for (const auto& [lambda, v] : sum) {
        if (v < 0) c.fail("negative entry at " + lambda.to_label());
      }
    }
    const auto labels = R.labels();
    if (std::set<Partition>(labels.begin(), labels.end()) != want) c.fail("column labels differ");
    c.note(std::to_string(labels.size()) + " columns");
  });
}

CheckResult partition_identity(const std::vector<int>& moduli, int max_m) {
  return timed("partition identity", [&](Collector& c) {
    for (int h : moduli) {
      const auto report = partition_identity_check(Modulus(h), max_m);
      for (const auto& row : report.rows) {
        if (row.regular != row.series || row.regular != row.crystal) {
          c.fail("h=" + std::to_string(h) + " m=" + std::to_string(row.m) + ": " + std::to_string(row.regular) +
                 "/" + std::to_string(row.series) + "/" + std::to_string(row.crystal));
        }
      }
    }
    c.note("m <= " + std::to_string(max_m));
  });
}

CheckResult triangularity(int h, int max_m, int jobs) {
  return timed("triangularity h = " + std::to_string(h), [=](Collector& c) {
    const Modulus mod(h);
    CanonicalEngine engine(mod, {true, jobs});
    std::size_t columns = 0;
    for (int m = 0; m <= max_m; ++m) {
      const auto& G = engine.basis(m);
      columns += G.columns.size();
      if (G.columns.size() != enumerate_dpr_h(mod, m).size()) c.fail("m=" + std::to_string(m) + " column count");
      for (const auto& f : verify_theorem41(mod, G).failures) c.fail("m=" + std::to_string(m) + " " + f);
    }
    c.note("m <= " + std::to_string(max_m) + ", " + std::to_string(columns) + " columns");
  });
}

CheckResult shift_equivariance(int h, int max_degree) {
  return timed("crystal shift equivariance h = " + std::to_string(h), [=](Collector& c) {
    const Modulus mod(h);
    const auto base = component(mod, Partition{}, max_degree);
    std::size_t components = 0;
    for (const auto& top : highest_weight_vertices(mod, max_degree)) {
      if (top.empty()) continue;
      ++components;
      std::vector<int> scaled = top.parts();
      for (int& x : scaled) x /= h;
      const Partition mu(std::move(scaled));
      const int budget = max_degree - top.degree();
      std::set<Partition> want_v;
      std::set<std::tuple<Partition, int, Partition>> want_e;
      for (const auto& v : base.vertices) {
        if (v.degree() <= budget) want_v.insert(shift_by_h_multiple(mod, v, mu));
      }
      for (const auto& e : base.edges) {
        if (e.to.degree() <= budget) {
          want_e.emplace(shift_by_h_multiple(mod, e.from, mu), e.color, shift_by_h_multiple(mod, e.to, mu));
        }
      }
      const auto comp = component(mod, top, max_degree);
      std::set<Partition> got_v(comp.vertices.begin(), comp.vertices.end());
      std::set<std::tuple<Partition, int, Partition>> got_e;
      for (const auto& e : comp.edges) got_e.emplace(e.from, e.color, e.to);
      if (got_v != want_v) c.fail("vertices of the component of " + top.to_label());
      if (got_e != want_e) c.fail("edges of the component of " + top.to_label());
    }
    c.note(std::to_string(components) + " shifted components");
  });
}

CheckResult normal_order_confluence(int h, int words, std::uint64_t seed) {
  return timed("straightening confluence h = " + std::to_string(h), [=](Collector& c) {
    const Modulus mod(h);
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Partition>> pool;
    for (int m = 1; m <= 9; ++m) pool.push_back(enumerate_dp_h(mod, m));
    int covered = 0, vanished = 0;
    for (int w = 0; w < words; ++w) {
      const auto& level = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      const Partition& lambda = level[std::uniform_int_distribution<std::size_t>(0, level.size() - 1)(rng)];
      WedgeWord word = lambda.parts();
      const int moves = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < moves; ++k) {
        auto pos = std::uniform_int_distribution<std::size_t>(0, word.size() - 1)(rng);
        int step = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
        if (word[pos] + step < 1) step = 1;
        word[pos] += step;
      }
      auto outcome = [&](std::mt19937_64* r) -> std::optional<FockVector> {
        try {
          return normal_order(mod, word, r);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::UncoveredDisorder) throw;
          return std::nullopt;
        }
      };
      // orders that reach an uncovered disorder are skipped; all others must agree
      std::optional<FockVector> reference = outcome(nullptr);
      bool partial = !reference;
      for (int trial = 0; trial < 4; ++trial) {
        auto got = outcome(&rng);
        if (!got) {
          partial = true;
          continue;
        }
        if (!reference) {
          reference = std::move(got);
        } else if (*got != *reference) {
          std::string text;
          for (int x : word) text += std::to_string(x) + " ";
          c.fail("word " + text + "depends on rule order");
          break;
        }
      }
      if (reference && !partial) {
        ++covered;
        if (reference->is_zero()) ++vanished;
      }
    }
    c.note(std::to_string(words) + " words, " + std::to_string(covered) + " straightened (" + std::to_string(vanished) +
           " to zero)");
  });
}

CheckResult fast_equals_slow(int h, int max_m, int jobs) {
  return timed("recursive and direct A(mu) agree h = " + std::to_string(h), [=](Collector& c) {
    const Modulus mod(h);
    CanonicalEngine fast(mod, {true, jobs});
    CanonicalEngine slow(mod, {false, jobs});
    for (int m = 0; m <= max_m; ++m) {
      if (fast.basis(m).columns != slow.basis(m).columns) c.fail("m=" + std::to_string(m));
    }
  });
}

CheckResult quotient_intertwiner(int p, int max_m) {
  return timed("q = 1 intertwiner p = " + std::to_string(p), [=](Collector& c) {
    const Modulus mod(p);
    std::size_t cases = 0;
    for (int m = 0; m < max_m; ++m) {
      for (const auto& lambda : enumerate_dp_h(mod, m)) {
        const FockVector v = FockVector::basis(lambda);
        const CharacterVector sv = specialize(mod, v);
        const ClassicalVector pv = to_schur_p(mod, v);
        for (int i = 0; i <= mod.n(); ++i) {
          ++cases;
          const FockVector fv = apply_f(mod, i, v);
          if (specialize(mod, fv) != spin_induction(mod, i, sv)) {
            c.fail("spin induction f_" + std::to_string(i) + lambda.to_label());
          }
          if (to_schur_p(mod, fv) != classical_apply(mod, {ClassicalGenerator::Kind::F, i}, pv)) {
            c.fail("P-basis f_" + std::to_string(i) + lambda.to_label());
          }
        }
      }
      for (const auto& lambda : enumerate_dp_h(mod, m + 1)) {
        const FockVector v = FockVector::basis(lambda);
        const ClassicalVector pv = to_schur_p(mod, v);
        for (int i = 0; i <= mod.n(); ++i) {
          ++cases;
          if (to_schur_p(mod, apply_e(mod, i, v)) != classical_apply(mod, {ClassicalGenerator::Kind::E, i}, pv)) {
            c.fail("P-basis e_" + std::to_string(i) + lambda.to_label());
          }
        }
      }
    }
    c.note(std::to_string(cases) + " generator actions");
  });
}

CheckResult divided_powers(int h, int max_degree, int max_k) {
  return timed("divided powers h = " + std::to_string(h), [=](Collector& c) {
    const Modulus mod(h);
    std::size_t cases = 0;
    for (int k = 2; k <= max_k; ++k) {
      for (int m = 0; m + k <= max_degree; ++m) {
        for (const auto& lambda : enumerate_dp_h(mod, m)) {
          for (int i = 0; i <= mod.n(); ++i) {
            ++cases;
            const FockVector v = FockVector::basis(lambda);
            FockVector power = v;
            for (int s = 0; s < k; ++s) power = apply_f(mod, i, power);
            const FockVector divided = apply_f_divided(mod, i, k, v);
            FockVector back;
            for (const auto& [nu, coeff] : divided.terms()) back.add(nu, coeff * q_factorial(k, i, mod.n()));
            if (back != power) c.fail("f_" + std::to_string(i) + "^(" + std::to_string(k) + ")" + lambda.to_label());
          }
        }
      }
    }
    c.note(std::to_string(cases) + " exact divisions");
  });
}

CheckResult commutator(int h, int exhaustive_degree, int max_degree, int samples, std::uint64_t seed) {
  return timed("[e_i, f_j] relation h = " + std::to_string(h), [=](Collector& c) {
    const Modulus mod(h);
    const int n = mod.n();
    auto check = [&](const FockVector& v, const std::string& where) {
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
          FockVector lhs = apply_e(mod, i, apply_f(mod, j, v));
          lhs -= apply_f(mod, j, apply_e(mod, i, v));
          const FockVector rhs = i == j ? k_operator(mod, i, v) : FockVector{};
          if (lhs != rhs) c.fail("[e_" + std::to_string(i) + ",f_" + std::to_string(j) + "] on " + where);
        }
      }
    };
    std::size_t vectors = 0;
    for (int m = 0; m <= exhaustive_degree; ++m) {
      for (const auto& lambda : enumerate_dp_h(mod, m)) {
        ++vectors;
        check(FockVector::basis(lambda), lambda.to_label());
      }
    }
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Partition>> pool;
    for (int m = 0; m < max_degree; ++m) pool.push_back(enumerate_dp_h(mod, m));
    for (int s = 0; s < samples; ++s) {
      const auto& level = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      FockVector v;
      const int terms = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int t = 0; t < terms; ++t) {
        const Partition& lambda = level[std::uniform_int_distribution<std::size_t>(0, level.size() - 1)(rng)];
        LaurentPoly coeff;
        for (int e = -2; e <= 2; ++e) coeff.add_term(e, std::uniform_int_distribution<int>(-3, 3)(rng));
        v.add(lambda, coeff);
      }
      if (v.is_zero()) continue;
      ++vectors;
      check(v, "random vector " + std::to_string(s));
    }
    c.note(std::to_string(vectors) + " vectors");
  });
}

CheckResult rank(int p, int max_m) {
  return timed("q = 1 rank of A(mu) p = " + std::to_string(p), [=](Collector& c) {
    for (int m = 0; m <= max_m; ++m) {
      const auto report = independence_check(Modulus(p), m);
      if (!report.ok) {
        c.fail("m=" + std::to_string(m) + " rank " + std::to_string(report.rank) + " of " +
               std::to_string(report.expected));
      }
    }
  });
}

CheckResult nonnegative_reduced(int p, int max_m, int jobs) {
  return timed("reduced entries nonnegative p = " + std::to_string(p), [=](Collector& c) {
    const Modulus mod(p);
    CanonicalEngine engine(mod, {true, jobs});
    for (int m = 0; m <= max_m; ++m) {
      const ReducedMatrix R = reduced_matrix(mod, engine.basis(m));
      for (const auto& [mu, col] : R.columns) {
        for (const auto& [lambda, v] : col) {
          if (v < 0) c.fail("m=" + std::to_string(m) + " entry " + lambda.to_label() + "," + mu.to_label());
        }
      }
    }
  });
}

std::vector<CheckResult> paper_suite(int jobs) {
  return {action_fixtures(), degree9_vectors(), degree10_basis(jobs), degree21_columns(jobs),
          degree10_reduction(jobs), crystal_strings(), ladder_word(), degree11_export(jobs)};
}

std::vector<CheckResult> property_suite(const SuiteOptions& o) {
  const int d = o.max_degree;
  return {
      partition_identity({3, 5, 7}, std::max(d, 20)),
      triangularity(3, d + 2, o.jobs),
      triangularity(5, d + 2, o.jobs),
      shift_equivariance(3, d + 1),
      normal_order_confluence(3, o.random_words, o.seed),
      fast_equals_slow(3, d + 1, o.jobs),
      quotient_intertwiner(3, d),
      quotient_intertwiner(5, d),
      divided_powers(3, d, 3),
      commutator(3, std::min(d - 3, 6), d, 200, o.seed + 1),
      rank(3, d + 2),
      nonnegative_reduced(3, d + 2, o.jobs),
  };
}

}  // namespace spinfock::checks
