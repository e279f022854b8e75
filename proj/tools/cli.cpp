#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "spinfock/checks.hpp"
#include "spinfock/crystal.hpp"
#include "spinfock/error.hpp"
#include "spinfock/io.hpp"

namespace spinfock::cli {

namespace {

struct Config {
  std::optional<int> n, p, h;
  int m = 0;
  int max_degree = 5;
  std::string format;
  std::string start;
  std::string partition;
  std::string suite = "all";
  std::string external;
  bool slow = false;
  int jobs = 1;
  int words = 10000;
  std::uint64_t seed = 0x5eedf0c5ULL;

  Modulus modulus() const {
    const int given = (n ? 1 : 0) + (p ? 1 : 0) + (h ? 1 : 0);
    if (given > 1) throw CLI::ValidationError("--n/--p/--h", "give only one of --n, --p, --h");
    if (n) return Modulus::from_rank(*n);
    if (p) return Modulus(*p);
    if (h) return Modulus(*h);
    return Modulus(3);
  }
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void need_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw Usage("format '" + format + "' not supported by this command");
}

int cmd_crystal(const Config& cfg, std::ostream& out) {
  const Modulus mod = cfg.modulus();
  const std::string format = cfg.format.empty() ? "dot" : cfg.format;
  need_format(format, {"dot", "json", "table"});
  if (cfg.max_degree < 0) throw Usage("--max-degree must be nonnegative");
  Partition start;
  if (!cfg.start.empty()) {
    start = Partition::parse(cfg.start);
    if (!in_dp_h(mod, start)) throw Usage("start vertex " + start.to_label() + " is not in DP_" + std::to_string(mod.h()));
  }
  const CrystalGraph g = component(mod, start, cfg.max_degree);
  if (format == "dot") {
    out << io::to_dot(g);
  } else if (format == "json") {
    out << io::to_json(g).dump(2) << "\n";
  } else {
    for (int m = start.degree(); m <= cfg.max_degree; ++m) {
      const auto level = g.vertices_of_degree(m);
      out << m << " (" << level.size() << "):";
      for (const auto& v : level) out << " " << v.to_label();
      out << "\n";
    }
  }
  return 0;
}

int cmd_canonical(const Config& cfg, std::ostream& out) {
  const Modulus mod = cfg.modulus();
  const std::string format = cfg.format.empty() ? "table" : cfg.format;
  need_format(format, {"table", "json"});
  if (cfg.m < 0) throw Usage("--m must be nonnegative");
  const BasisMatrix G = canonical_basis(mod, cfg.m, {!cfg.slow, cfg.jobs});
  if (format == "json") {
    out << io::to_json(G).dump(2) << "\n";
  } else {
    out << io::render_table(G);
  }
  return 0;
}

int cmd_decomp(const Config& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "table" : cfg.format;
  need_format(format, {"table", "json", "csv"});
  ReducedMatrix R;
  if (!cfg.external.empty()) {
    std::ifstream in(cfg.external);
    if (!in) throw Usage("cannot read " + cfg.external);
    std::stringstream buf;
    buf << in.rdbuf();
    const Modulus mod = cfg.modulus();
    R = reduce_external_matrix(parse_decomposition_csv(buf.str()), mod.h());
  } else {
    if (cfg.m < 0) throw Usage("--m must be nonnegative");
    R = reduced_matrix(cfg.modulus(), cfg.m, {!cfg.slow, cfg.jobs});
  }
  if (format == "json") {
    out << io::to_json(R).dump(2) << "\n";
  } else if (format == "csv") {
    out << io::to_csv(R);
  } else {
    out << io::render_table(R);
  }
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const std::string format = cfg.format.empty() ? "table" : cfg.format;
  need_format(format, {"table", "json"});
  if (cfg.suite != "paper" && cfg.suite != "properties" && cfg.suite != "all") {
    throw Usage("unknown suite '" + cfg.suite + "'");
  }
  std::vector<checks::CheckResult> results;
  if (cfg.suite != "properties") {
    auto r = checks::paper_suite(cfg.jobs);
    results.insert(results.end(), r.begin(), r.end());
  }
  if (cfg.suite != "paper") {
    checks::SuiteOptions o;
    o.max_degree = cfg.max_degree;
    o.jobs = cfg.jobs;
    o.seed = cfg.seed;
    o.random_words = cfg.words;
    if (o.max_degree < 4) throw Usage("--max-degree must be at least 4 for the property suite");
    auto r = checks::property_suite(o);
    results.insert(results.end(), r.begin(), r.end());
  }
  const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok; });
  if (format == "json") {
    io::json report = io::json::array();
    for (const auto& r : results) {
      report.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    }
    out << io::json{{"ok", ok}, {"checks", report}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.ok ? "PASS  " : "FAIL  ") << r.name;
      if (!r.detail.empty()) out << "  (" << r.detail << ")";
      out << "\n";
    }
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_ladders(const Config& cfg, std::ostream& out) {
  const Modulus mod = cfg.modulus();
  const std::string format = cfg.format.empty() ? "table" : cfg.format;
  need_format(format, {"table", "json"});
  if (cfg.partition.empty()) throw Usage("--partition is required");
  const Partition mu = Partition::parse(cfg.partition);
  if (!in_dp_h(mod, mu)) throw Usage(mu.to_label() + " is not in DP_" + std::to_string(mod.h()));
  const auto all = ladders(mod, mu);
  if (format == "json") {
    io::json ls = io::json::array();
    for (const auto& l : all) ls.push_back({{"index", l.index}, {"residue", l.residue}, {"cells", l.cells}});
    out << io::json{{"h", mod.h()}, {"partition", io::to_json(mu)}, {"ladders", ls},
                    {"monomial", io::ladder_monomial(mod, mu)}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << io::render_ladder_diagram(mod, mu);
  out << "ladders: " << all.size() << "\n";
  out << "A" << mu.to_label() << " = " << io::ladder_monomial(mod, mu) << " |0>\n";
  if (!is_h_regular(mod, mu)) out << "note: " << mu.to_label() << " is not " << mod.h() << "-regular\n";
  return 0;
}

int default_jobs() {
  if (const char* env = std::getenv("SPINFOCK_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical bases of the level-1 A_2n^(2) Fock space", "spinfock"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);
  Config cfg;
  cfg.jobs = default_jobs();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank n (h = 2n + 1)");
    sub->add_option("--p", cfg.p, "odd modulus p = h");
    sub->add_option("--h", cfg.h, "odd modulus h");
    sub->add_option("--format", cfg.format, "table | json | dot | csv");
    sub->add_option("--jobs", cfg.jobs, "worker threads (default $SPINFOCK_JOBS or 1)")->check(CLI::PositiveNumber);
  };

  auto* crystal = app.add_subcommand("crystal", "crystal graph of the basic module or a component");
  common(crystal);
  crystal->add_option("--max-degree", cfg.max_degree, "largest vertex degree");
  crystal->add_option("--start", cfg.start, "start vertex, e.g. 3 or 6,3");

  auto* canonical = app.add_subcommand("canonical", "canonical basis in degree m");
  common(canonical);
  canonical->add_option("--m", cfg.m, "degree")->required();
  canonical->add_flag("--slow", cfg.slow, "build every A(mu) from the vacuum");

  auto* decomp = app.add_subcommand("decomp", "reduced q = 1 matrix in degree m");
  common(decomp);
  decomp->add_option("--m", cfg.m, "degree");
  decomp->add_option("--external", cfg.external, "reduce a decomposition matrix CSV instead");
  decomp->add_flag("--slow", cfg.slow, "build every A(mu) from the vacuum");

  auto* verify = app.add_subcommand("verify", "embedded fixtures and property checks");
  common(verify);
  verify->add_option("--suite", cfg.suite, "paper | properties | all");
  verify->add_option("--max-degree", cfg.max_degree, "degree bound for the property suite");
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--words", cfg.words, "random words for the straightening check");

  auto* ladder = app.add_subcommand("ladders", "ladder decomposition of a partition");
  common(ladder);
  ladder->add_option("--partition", cfg.partition, "e.g. 11,7,7,4 or 3321")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed() && !verify->count("--max-degree")) cfg.max_degree = 9;
  try {
    if (crystal->parsed()) return cmd_crystal(cfg, out);
    if (canonical->parsed()) return cmd_canonical(cfg, out);
    if (decomp->parsed()) return cmd_decomp(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (ladder->parsed()) return cmd_ladders(cfg, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
      case ErrorCode::NotInDPh:
      case ErrorCode::NotRegular:
      case ErrorCode::InconsistentFixture:
        return 2;
      default:
        return 1;
    }
  }
  return 2;
}

}  // namespace spinfock::cli
