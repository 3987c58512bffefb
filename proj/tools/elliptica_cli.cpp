#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "elliptica/elliptica.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPole = 3;
constexpr int kExitScale = 4;

/// A failed library call or malformed input, carried to main as an exit code.
struct Failure : std::runtime_error {
  Failure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

int exit_code(ell_status status) {
  switch (status) {
    case ELL_OK: return 0;
    case ELL_ERR_POLE: return kExitPole;
    case ELL_ERR_SCALE:
    case ELL_ERR_RANGE: return kExitScale;
    default: return kExitUsage;
  }
}

void check(ell_status status) {
  if (status != ELL_OK) {
    throw Failure(exit_code(status), std::string(ell_status_name(status)) + ": " + ell_last_error());
  }
}

double parse_real(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw Failure(kExitUsage, "cannot parse " + what + " '" + text + "'");
  }
  return v;
}

long parse_integer(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const long v = std::strtol(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw Failure(kExitUsage, "cannot parse " + what + " '" + text + "'");
  }
  return v;
}

/// "re" or "re,im"
ell_complex parse_complex(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(text, what), 0};
  return {parse_real(text.substr(0, comma), what), parse_real(text.substr(comma + 1), what)};
}

std::pair<long, long> parse_point(const std::string& text, const std::string& what) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Failure(kExitUsage, what + " must be 'x,y'");
  return {parse_integer(text.substr(0, comma), what), parse_integer(text.substr(comma + 1), what)};
}

std::string show(ell_complex z) {
  char buf[96];
  check(ell_format_complex(z, buf, sizeof buf));
  return buf;
}

std::string show(double x) {
  char buf[48];
  check(ell_format_real(x, buf, sizeof buf));
  return buf;
}

template <typename T, void (*Free)(T*)>
struct Owned {
  T* ptr = nullptr;
  Owned() = default;
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  Owned(Owned&& other) noexcept : ptr(std::exchange(other.ptr, nullptr)) {}
  Owned& operator=(Owned&& other) noexcept {
    std::swap(ptr, other.ptr);
    return *this;
  }
  ~Owned() { Free(ptr); }
};

using Model = Owned<ell_model, ell_model_free>;
using Paths = Owned<ell_paths, ell_paths_free>;
using Config = Owned<ell_config, ell_config_free>;
using Report = Owned<ell_report, ell_report_free>;

struct EvalArgs {
  std::string subject;
  std::string x, p = "0", a, b, q, z = "1", a1;
  std::vector<std::string> rest;
  std::string l = "0", k = "0", n = "0", m = "0";
};

Model make_model(const std::string& p, const std::string& a, const std::string& b, const std::string& q) {
  if (a.empty() || b.empty() || q.empty()) throw Failure(kExitUsage, "--a, --b and --q are required");
  const ell_complex av = parse_complex(a, "--a"), bv = parse_complex(b, "--b");
  const bool a_zero = av.re == 0 && av.im == 0, b_zero = bv.re == 0 && bv.im == 0;
  const ell_degeneration d = a_zero ? (b_zero ? ELL_DEGEN_AB_ZERO : ELL_DEGEN_A_ZERO) : ELL_DEGEN_NONE;
  Model model;
  check(ell_model_new(parse_complex(p, "--p"), av, bv, parse_complex(q, "--q"), d, &model.ptr));
  return model;
}

int run_eval(const EvalArgs& e) {
  const ell_complex p = parse_complex(e.p, "--p");
  ell_complex value{};
  if (e.subject == "theta") {
    if (e.x.empty()) throw Failure(kExitUsage, "--x is required");
    check(ell_theta(parse_complex(e.x, "--x"), p, &value));
  } else if (e.subject == "qpfac") {
    if (e.a.empty() || e.q.empty()) throw Failure(kExitUsage, "--a and --q are required");
    check(ell_qpfac(parse_complex(e.a, "--a"), parse_integer(e.n, "--n"), parse_complex(e.q, "--q"), p, &value));
  } else if (e.subject == "weight") {
    const Model model = make_model(e.p, e.a, e.b, e.q);
    check(ell_weight(model.ptr, parse_integer(e.n, "--n"), parse_integer(e.m, "--m"), &value));
  } else if (e.subject == "ebinom") {
    const Model model = make_model(e.p, e.a, e.b, e.q);
    check(ell_ebinom(model.ptr, parse_integer(e.l, "--l"), parse_integer(e.k, "--k"), parse_integer(e.n, "--n"),
                     parse_integer(e.m, "--m"), &value));
  } else {
    if (e.a1.empty() || e.q.empty()) throw Failure(kExitUsage, "--a1 and --q are required");
    std::vector<ell_complex> rest;
    for (const auto& u : e.rest) rest.push_back(parse_complex(u, "--u"));
    check(ell_vseries(parse_complex(e.a1, "--a1"), rest.data(), rest.size(), parse_complex(e.z, "--z"),
                      parse_complex(e.q, "--q"), p, parse_integer(e.n, "--n"), &value, nullptr));
  }
  std::printf("%s\n", show(value).c_str());
  return 0;
}

struct PathArgs {
  std::string from, to, p = "0", a, b, q;
};

int run_paths(const PathArgs& args) {
  const auto [ux, uy] = parse_point(args.from, "--from");
  const auto [vx, vy] = parse_point(args.to, "--to");
  const bool weighted = !args.a.empty() || !args.b.empty() || !args.q.empty();
  Model model;
  if (weighted) model = make_model(args.p, args.a, args.b, args.q);
  Paths paths;
  check(ell_paths_enumerate(ux, uy, vx, vy, &paths.ptr));
  const size_t count = ell_paths_count(paths.ptr);
  for (size_t i = 0; i < count; ++i) {
    if (weighted) {
      ell_complex w{};
      check(ell_paths_weight(paths.ptr, i, model.ptr, &w));
      std::printf("%s %s\n", ell_paths_text(paths.ptr, i), show(w).c_str());
    } else {
      std::printf("%s\n", ell_paths_text(paths.ptr, i));
    }
  }
  ell_complex total{static_cast<double>(count), 0};
  if (weighted) check(ell_gf_bruteforce(model.ptr, ux, uy, vx, vy, &total));
  std::printf("total = %s\n", show(total).c_str());
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::optional<long> trials;
  std::optional<std::string> seed, tol, threads;
  std::string json, csv, config;
  bool escalate = false, mutate = false;
};

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw Failure(kExitUsage, "cannot read config '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  for (int number = 1; std::getline(file, line); ++number) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Failure(kExitUsage, path + ":" + std::to_string(number) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return entries;
}

int run_verify(const VerifyArgs& args) {
  std::vector<std::string> suites;
  if (args.suite == "all") {
    for (size_t i = 0; i < ell_suite_count(); ++i) suites.emplace_back(ell_suite_id(i));
  } else {
    suites.push_back(args.suite);
  }

  // defaults < ELLIPTICA_SEED < config file < flags
  std::vector<std::pair<std::string, std::string>> settings;
  if (const char* env = std::getenv("ELLIPTICA_SEED")) settings.emplace_back("seed", env);
  if (!args.config.empty()) {
    for (auto& kv : read_config(args.config)) settings.push_back(std::move(kv));
  }
  if (args.trials) settings.emplace_back("trials", std::to_string(*args.trials));
  if (args.seed) settings.emplace_back("seed", *args.seed);
  if (args.tol) settings.emplace_back("tol", *args.tol);
  if (args.threads) settings.emplace_back("threads", *args.threads);
  if (args.escalate) settings.emplace_back("escalate", "1");
  if (args.mutate) settings.emplace_back("mutate", "1");

  std::vector<Config> configs;
  for (const auto& id : suites) {
    Config config;
    check(ell_config_new(id.c_str(), &config.ptr));
    for (const auto& [key, value] : settings) check(ell_config_set(config.ptr, key.c_str(), value.c_str()));
    check(ell_config_check(config.ptr));
    configs.push_back(std::move(config));
  }

  std::printf("%-24s %8s %8s %14s %10s\n", "suite", "trials", "passes", "max_rel_error", "time_s");
  std::vector<Report> reports;
  bool all_passed = true;
  for (const auto& config : configs) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    check(ell_run_suite(config.ptr, &report.ptr));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool passed = ell_report_passed(report.ptr) != 0;
    all_passed = all_passed && passed;
    std::printf("%-24s %8ld %8ld %14s %10.3f  %s\n", ell_report_suite(report.ptr), ell_report_trials(report.ptr),
                ell_report_passes(report.ptr), show(ell_report_max_rel_error(report.ptr)).c_str(), seconds,
                passed ? "PASS" : "FAIL");
    std::fflush(stdout);
    reports.push_back(std::move(report));
  }

  std::vector<const ell_report*> views;
  for (const auto& r : reports) views.push_back(r.ptr);
  if (!args.json.empty()) check(ell_write_json(views.data(), views.size(), args.json.c_str()));
  if (!args.csv.empty()) check(ell_write_csv(views.data(), views.size(), args.csv.c_str()));
  return all_passed ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic weights, lattice paths and identity verification"};
  app.require_subcommand(1);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a single quantity");
  eval_cmd->add_option("subject", eval.subject, "theta | qpfac | weight | ebinom | vseries")
      ->required()
      ->check(CLI::IsMember({"theta", "qpfac", "weight", "ebinom", "vseries"}));
  eval_cmd->add_option("--x", eval.x, "theta argument");
  eval_cmd->add_option("--p", eval.p, "nome")->capture_default_str();
  eval_cmd->add_option("--a", eval.a);
  eval_cmd->add_option("--b", eval.b);
  eval_cmd->add_option("--q", eval.q);
  eval_cmd->add_option("--z", eval.z, "series argument")->capture_default_str();
  eval_cmd->add_option("--a1", eval.a1, "leading very-well-poised parameter");
  eval_cmd->add_option("--u", eval.rest, "further series parameters a_6, a_7, ...");
  eval_cmd->add_option("--l", eval.l)->capture_default_str();
  eval_cmd->add_option("--k", eval.k)->capture_default_str();
  eval_cmd->add_option("--n", eval.n, "lattice abscissa, factorial length or series length")->capture_default_str();
  eval_cmd->add_option("--m", eval.m)->capture_default_str();

  PathArgs paths;
  auto* paths_cmd = app.add_subcommand("paths", "List monotone lattice paths");
  paths_cmd->add_option("--from", paths.from, "start point x,y")->required();
  paths_cmd->add_option("--to", paths.to, "end point x,y")->required();
  paths_cmd->add_option("--p", paths.p)->capture_default_str();
  paths_cmd->add_option("--a", paths.a);
  paths_cmd->add_option("--b", paths.b);
  paths_cmd->add_option("--q", paths.q);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity suites");
  verify_cmd->add_option("suite", verify.suite, "suite id or 'all'")->required();
  verify_cmd->add_option("--trials", verify.trials);
  verify_cmd->add_option("--seed", verify.seed);
  verify_cmd->add_option("--tol", verify.tol);
  verify_cmd->add_option("--threads", verify.threads);
  verify_cmd->add_option("--json", verify.json, "write outcomes as JSON");
  verify_cmd->add_option("--csv", verify.csv, "write outcomes as CSV");
  verify_cmd->add_option("--config", verify.config, "key=value settings file");
  verify_cmd->add_flag("--escalate", verify.escalate, "rerun failing or ill-conditioned trials in quad precision");
  verify_cmd->add_flag("--mutate", verify.mutate, "negative control: push one side off the identity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(eval);
    if (*paths_cmd) return run_paths(paths);
    return run_verify(verify);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.what());
    return f.code;
  }
}
