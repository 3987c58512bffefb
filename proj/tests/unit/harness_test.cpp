#include <cstdlib>
#include <numbers>
#include <sstream>

#include "elliptica/harness.hpp"
#include "elliptica/report.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace elliptica;

namespace {

SuiteConfig config_for(const char* id, long trials, std::uint64_t seed = 7) {
  SuiteConfig c;
  c.suite_id = id;
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("suite registry") {
  const auto& suites = registered_suites();
  REQUIRE(suites.size() == 25);
  CHECK(suites.front().id == "theta_laws");
  CHECK(suites.back().id == "multivariate_transform");
  CHECK(suite_info("ft_10V9").identities == std::vector<std::string>{"ft_10V9.summation"});
  CHECK_THROWS_AS(suite_info("no_such_suite"), UsageError);
}

TEST_CASE("configuration defaults and validation") {
  const SuiteConfig c = resolve(config_for("theta_laws", -1));
  CHECK(c.trials == 1500);
  CHECK(c.tolerance == 1e-10);
  auto bad = config_for("theta_laws", 5);
  bad.tolerance = 2;
  CHECK_THROWS_AS(resolve(bad), UsageError);
  bad = config_for("theta_laws", 5);
  bad.m_max = 40;
  CHECK_THROWS_AS(resolve(bad), UsageError);
  bad = config_for("theta_laws", 5);
  bad.domain.p_modulus_max = 0.95;
  CHECK_THROWS_AS(resolve(bad), UsageError);
}

TEST_CASE("sampling is a function of the seed") {
  SamplingDomain domain;
  Sampler first(domain, trial_seed(42, "theta_laws", 0, 0));
  Sampler second(domain, trial_seed(42, "theta_laws", 0, 0));
  for (int i = 0; i < 5; ++i) CHECK(first.q() == second.q());
  CHECK(trial_seed(42, "theta_laws", 0, 0) != trial_seed(42, "theta_laws", 1, 0));
  CHECK(trial_seed(42, "theta_laws", 0, 0) != trial_seed(42, "weight_laws", 0, 0));

  Sampler draw(domain, 99);
  for (int i = 0; i < 100; ++i) {
    const double r = std::abs(draw.a());
    CHECK(r >= domain.a.lo);
    CHECK(r <= domain.a.hi);
    CHECK(std::abs(draw.nome()) <= domain.p_modulus_max);
  }
}

TEST_CASE("zero nome cap samples the basic case") {
  SamplingDomain domain;
  domain.p_modulus_max = 0;
  Sampler s(domain, 5);
  CHECK(s.nome() == std::complex<double>{});
}

TEST_CASE("pinned q phase") {
  SamplingDomain domain;
  domain.q = {0.9, 0.9};
  domain.q_turn = 0.25;
  Sampler s(domain, 5);
  const auto q = s.q();
  CHECK(std::abs(q - std::complex<double>{0, 0.9}) <= 1e-15);
}

TEST_CASE("outcomes are identical across runs and thread counts") {
  auto c = config_for("weight_laws", 21, 42);
  const auto one = run_suite(c);
  c.threads = 4;
  const auto four = run_suite(c);
  REQUIRE(one.outcomes.size() == four.outcomes.size());
  for (std::size_t i = 0; i < one.outcomes.size(); ++i) {
    CHECK(one.outcomes[i].params == four.outcomes[i].params);
    CHECK(one.outcomes[i].lhs == four.outcomes[i].lhs);
    CHECK(one.outcomes[i].trial_index == four.outcomes[i].trial_index);
  }
  CHECK(one.outcomes.front().identity_id == "weight_laws.elliptic_a");
}

TEST_CASE("zero trials pass vacuously") {
  const auto r = run_suite(config_for("ft_10V9", 0));
  CHECK(r.outcomes.empty());
  CHECK(r.passed());
  CHECK(r.counted() == 0);
}

TEST_CASE("broken balancing fails the summation suite") {
  auto c = config_for("ft_10V9", 40);
  c.mutate = true;
  const auto r = run_suite(c);
  CHECK_FALSE(r.passed());
  long large = 0;
  for (const auto& o : r.outcomes) {
    if (o.status == TrialStatus::fail && o.rel_error > 1e-4) ++large;
  }
  CHECK(large >= 38);
}

TEST_CASE("elliptic binomial sweep passes 100 trials") {
  auto c = config_for("theorem2_oracle", 100);
  c.escalate = true;
  c.threads = 4;
  const auto r = run_suite(c);
  CHECK(r.counted() == 100);
  CHECK(r.passes() == 100);
  CHECK(r.max_rel_error() <= 1e-10);
}

TEST_CASE("q at a root of unity exhausts the resampler") {
  auto c = config_for("ft_10V9", 20);
  c.domain.q = {1.0, 1.0};
  c.domain.q_turn = 1.0 / 3;
  c.domain.resample_limit = 10;
  CHECK_THROWS_AS(run_suite(c), DomainError);
}

TEST_CASE("real formatting") {
  CHECK(format_real(0.5) == "5.0000000000000000e-1");
  CHECK(format_real(0.0) == "0e0");
  CHECK(format_real(-0.0) == "0e0");
  CHECK(format_real(-1234.5) == "-1.2345000000000000e3");
  CHECK(format_complex({0.5, 0}) == "5.0000000000000000e-1+0e0i");
  CHECK(format_complex({1, -2}) == "1.0000000000000000e0-2.0000000000000000e0i");
  for (double x : {std::numbers::pi, 1e-300, 6.02214076e23, -0.1}) {
    CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
  }
}

TEST_CASE("JSON report round-trips every field") {
  const auto r = run_suite(config_for("warnaar_det", 8));
  std::ostringstream out;
  write_json(out, r.outcomes);
  const auto doc = nlohmann::json::parse(out.str());
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == r.outcomes.size());
  const std::vector<std::string> fields{"identity_id", "seed", "trial_index", "params", "lhs_re", "lhs_im",
                                        "rhs_re", "rhs_im", "rel_error", "status", "condition_flag"};
  auto number = [](const nlohmann::json& v) {
    return v.is_string() ? std::strtod(v.get<std::string>().c_str(), nullptr) : v.get<double>();
  };
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& row = doc[i];
    const auto& o = r.outcomes[i];
    std::vector<std::string> keys;
    for (auto it = row.begin(); it != row.end(); ++it) keys.push_back(it.key());
    CHECK(keys.size() == fields.size());
    for (const auto& f : fields) CHECK(row.contains(f));
    CHECK(row["identity_id"] == o.identity_id);
    CHECK(row["seed"].get<std::uint64_t>() == o.seed);
    CHECK(row["trial_index"].get<long>() == o.trial_index);
    CHECK(row["params"] == o.params);
    CHECK(number(row["lhs_re"]) == o.lhs.real());
    CHECK(number(row["lhs_im"]) == o.lhs.imag());
    CHECK(number(row["rhs_re"]) == o.rhs.real());
    CHECK(number(row["rhs_im"]) == o.rhs.imag());
    CHECK(number(row["rel_error"]) == o.rel_error);
    CHECK(row["status"] == status_name(o.status));
    CHECK(row["condition_flag"].get<bool>() == o.condition_flag);
  }
}

TEST_CASE("CSV columns follow the JSON fields") {
  const auto r = run_suite(config_for("warnaar_det", 3));
  std::ostringstream out;
  write_csv(out, r.outcomes);
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "identity_id,seed,trial_index,params,lhs_re,lhs_im,rhs_re,rhs_im,rel_error,status,condition_flag");
  long rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == static_cast<long>(r.outcomes.size()));
}
