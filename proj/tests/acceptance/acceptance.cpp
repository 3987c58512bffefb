// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "elliptica/harness.hpp"

using namespace elliptica;

namespace {

constexpr std::uint64_t kSeed = 7;

struct Run {
  SuiteReport report;
  double seconds = 0;
};

Run run(const std::string& suite, bool mutate = false) {
  SuiteConfig c;
  c.suite_id = suite;
  c.seed = kSeed;
  c.escalate = !mutate;
  c.mutate = mutate;
  const auto start = std::chrono::steady_clock::now();
  Run r{run_suite(c), 0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::map<std::string, long> passes_by_identity(const SuiteReport& r) {
  std::map<std::string, long> out;
  for (const auto& o : r.outcomes) {
    if (o.status == TrialStatus::pass) ++out[o.identity_id];
  }
  return out;
}

/// Outcome of one criterion: pass flag plus a short measurement summary.
struct Verdict {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

/// Every counted outcome passes within `tol`, and each listed identity has at
/// least `min_passes` passing trials.
void suite_clean(Verdict& v, const Run& r, double tol, const std::vector<std::string>& subs, long min_passes) {
  const auto& rep = r.report;
  const auto counts = passes_by_identity(rep);
  v.detail << " " << rep.config.suite_id << ": " << rep.passes() << "/" << rep.counted()
           << " max_rel=" << rep.max_rel_error();
  v.require(rep.passed() && rep.passes() == rep.counted(), rep.config.suite_id + " has failing trials");
  v.require(rep.max_rel_error() <= tol, rep.config.suite_id + " above tolerance");
  for (const auto& s : subs) {
    const std::string id = rep.config.suite_id + "." + s;
    const auto it = counts.find(id);
    const long n = it == counts.end() ? 0 : it->second;
    v.require(n >= min_passes, id + " passed " + std::to_string(n) + " < " + std::to_string(min_passes));
  }
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ELLIPTICA_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

using Criterion = std::function<void(Verdict&)>;

const std::vector<std::pair<const char*, Criterion>>& criteria() {
  static const std::vector<std::pair<const char*, Criterion>> list{
      {"theta laws: inversion, quasi-periodicity, addition, 500 trials each, 1e-10, < 5 s",
       [](Verdict& v) {
         const Run r = run("theta_laws");
         suite_clean(v, r, 1e-10, {"inversion", "quasi_periodicity", "addition"}, 500);
         v.detail << " time=" << r.seconds << "s";
         v.require(r.seconds < 5, "runtime");
         v.require(r.report.config.domain.p_modulus_max <= 0.5, "nome range");
       }},
      {"elliptic binomial equals path enumeration on the full grid sweep, 20 sets, 1e-10, < 60 s",
       [](Verdict& v) {
         const Run r = run("theorem2_oracle");
         suite_clean(v, r, 1e-10, {"sweep"}, 20);
         v.detail << " time=" << r.seconds << "s";
         v.require(r.report.config.grid_max >= 6, "grid size");
         v.require(r.seconds < 60, "runtime");
       }},
      {"recursions and shift/reflection identities, 200 trials each, 1e-10",
       [](Verdict& v) {
         suite_clean(v, run("recursions"), 1e-10, {"last_step", "first_step", "shift", "reflection"}, 200);
       }},
      {"LGV determinant equals nonintersecting enumeration, r = 2, 3, 30 configurations, 1e-9",
       [](Verdict& v) {
         const Run r = run("lgv_oracle");
         suite_clean(v, r, 1e-9, {"r2", "r3"}, 15);
         v.require(r.report.counted() >= 30, "trial count");
       }},
      {"Warnaar determinant, r = 1..4, 100 trials, 1e-9",
       [](Verdict& v) {
         const Run r = run("warnaar_det");
         suite_clean(v, r, 1e-9, {"r1", "r2", "r3", "r4"}, 25);
       }},
      {"product formulas (a)-(f), r = 1..3 x 50 trials, brute force r = 2 x 10, 1e-8",
       [](Verdict& v) {
         for (char tag : std::string("abcdef")) {
           const Run r = run(std::string("prop4_") + tag);
           suite_clean(v, r, 1e-8, {"r1", "r2", "r3"}, 50);
           v.require(passes_by_identity(r.report)[r.report.config.suite_id + ".bruteforce"] >= 10,
                     r.report.config.suite_id + ".bruteforce below 10");
         }
       }},
      {"10V9 summation, 200 trials, m <= 8, 1e-9; broken balancing fails > 1e-4 in >= 95%",
       [](Verdict& v) {
         const Run r = run("ft_10V9");
         suite_clean(v, r, 1e-9, {"summation"}, 200);
         v.require(r.report.config.m_max <= 8, "m range");
         const Run neg = run("ft_10V9", true);
         long counted = 0, large = 0;
         for (const auto& o : neg.report.outcomes) {
           if (o.status != TrialStatus::pass && o.status != TrialStatus::fail) continue;
           ++counted;
           if (o.rel_error > 1e-4) ++large;
         }
         const double share = counted ? static_cast<double>(large) / counted : 0;
         v.detail << " negative control: " << large << "/" << counted << " above 1e-4";
         v.require(share >= 0.95, "negative control share");
       }},
      {"12V11 transformation, 100 trials, n <= 6, 1e-9; specialization reproduces 10V9",
       [](Verdict& v) {
         const Run r = run("ft_12V11");
         suite_clean(v, r, 1e-9, {"transformation", "specialization"}, 100);
         v.require(r.report.config.m_max <= 6, "n range");
       }},
      {"p = 0: Jackson, q-Pfaff-Saalschutz, q-Chu-Vandermonde 100 each at 1e-11; binomial at 1e-12",
       [](Verdict& v) {
         const Run r = run("degenerations_p0");
         suite_clean(v, r, 1e-11, {"jackson_8phi7", "q_pfaff_saalschutz", "q_chu_vandermonde", "binomial"}, 100);
         double binomial_worst = 0;
         for (const auto& o : r.report.outcomes) {
           if (o.identity_id == "degenerations_p0.binomial") binomial_worst = std::max(binomial_worst, o.rel_error);
         }
         v.detail << " binomial max_rel=" << binomial_worst;
         v.require(binomial_worst <= 1e-12, "binomial tolerance");
       }},
      {"multivariate convolutions (a)-(c), r = 2, 30 trials each, 1e-9",
       [](Verdict& v) {
         for (char tag : std::string("abc")) suite_clean(v, run(std::string("prop5_") + tag), 1e-9, {"r2"}, 30);
       }},
      {"multivariate 10V9 and 12V11, r = 1..3, m <= 6, 50 trials each, 1e-8; reductions hold",
       [](Verdict& v) {
         const Run sum = run("multivariate_sum");
         suite_clean(v, sum, 1e-8, {"r1", "r2", "r3", "rank_one"}, 50);
         const Run tf = run("multivariate_transform");
         suite_clean(v, tf, 1e-8, {"r1", "r2", "r3", "specialization", "rank_one"}, 50);
         v.require(sum.report.config.m_max <= 6 && tf.report.config.m_max <= 6, "m range");
       }},
      {"verify all --seed 7 twice gives byte-identical JSON; runtime < 10 min",
       [](Verdict& v) {
         const std::string first = "acceptance_run1.json", second = "acceptance_run2.json";
         const auto start = std::chrono::steady_clock::now();
         const int code1 = run_cli("verify all --seed 7 --json " + first);
         const double seconds =
             std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         const int code2 = run_cli("verify all --seed 7 --json " + second);
         const std::string a = slurp(first), b = slurp(second);
         v.detail << " exit codes " << code1 << "," << code2 << " json bytes " << a.size() << " time=" << seconds
                  << "s";
         v.require(code1 == 0 || code1 == 1, "first run did not complete");
         v.require(code1 == code2, "exit codes differ");
         v.require(!a.empty() && a == b, "reports differ");
         v.require(seconds < 600, "runtime");
         std::remove(first.c_str());
         std::remove(second.c_str());
       }},
  };
  return list;
}

}  // namespace

int main() {
  int failed = 0;
  int index = 0;
  for (const auto& [title, check] : criteria()) {
    ++index;
    Verdict v;
    try {
      check(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("error: ") + e.what());
    }
    if (!v.ok) ++failed;
    std::printf("criterion %2d: %s  %s |%s\n", index, v.ok ? "PASS" : "FAIL", title, v.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
