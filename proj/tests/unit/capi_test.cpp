#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "elliptica/elliptica.h"
#include "json.hpp"

namespace {

std::string formatted(ell_complex z) {
  char buf[96];
  REQUIRE(ell_format_complex(z, buf, sizeof buf) == ELL_OK);
  return buf;
}

ell_model* model(ell_complex p, ell_complex a, ell_complex b, ell_complex q,
                 ell_degeneration d = ELL_DEGEN_NONE) {
  ell_model* m = nullptr;
  REQUIRE(ell_model_new(p, a, b, q, d, &m) == ELL_OK);
  return m;
}

}  // namespace

TEST_CASE("theta through the C interface") {
  ell_complex out{};
  CHECK(ell_theta({0.5, 0}, {0, 0}, &out) == ELL_OK);
  CHECK(formatted(out) == "5.0000000000000000e-1+0e0i");
  CHECK(std::strcmp(ell_last_error(), "") == 0);
  CHECK(ell_theta({0, 0}, {0.1, 0}, &out) == ELL_ERR_DOMAIN);
  CHECK(std::strlen(ell_last_error()) > 0);
  CHECK(std::strcmp(ell_status_name(ELL_ERR_POLE), "pole error") == 0);
}

TEST_CASE("factorials and formatting buffers") {
  ell_complex out{};
  CHECK(ell_qpfac({2, 0}, -1, {3, 0}, {0, 0}, &out) == ELL_OK);
  CHECK(std::abs(out.re - 3) <= 1e-15);
  char tiny[4];
  CHECK(ell_format_real(0.5, tiny, sizeof tiny) == ELL_ERR_USAGE);
}

TEST_CASE("model handles") {
  ell_model* m = model({0.2, 0}, {1.1, 0}, {0.7, 0}, {0.9, 0});
  ell_complex w{};
  CHECK(ell_weight(m, 3, 0, &w) == ELL_OK);
  CHECK(std::abs(w.re - 1) <= 1e-14);
  ell_complex e{};
  CHECK(ell_ebinom(m, 0, 0, 0, 5, &e) == ELL_OK);
  CHECK(std::abs(e.re - 1) <= 1e-13);
  CHECK(ell_weight(m, 20000, 1, &w) == ELL_ERR_RANGE);
  ell_model_free(m);

  ell_model* bad = nullptr;
  CHECK(ell_model_new({0.2, 0}, {0, 0}, {0, 0}, {0.5, 0}, ELL_DEGEN_AB_ZERO, &bad) == ELL_ERR_DOMAIN);
  CHECK(bad == nullptr);
  ell_model_free(nullptr);
}

TEST_CASE("path listings") {
  ell_paths* paths = nullptr;
  REQUIRE(ell_paths_enumerate(0, 0, 2, 2, &paths) == ELL_OK);
  CHECK(ell_paths_count(paths) == 6);
  CHECK(std::strcmp(ell_paths_text(paths, 0), "(0,0):EENN") == 0);
  ell_model* m = model({0, 0}, {0, 0}, {0, 0}, {0.5, 0}, ELL_DEGEN_AB_ZERO);
  double total = 0;
  for (size_t i = 0; i < ell_paths_count(paths); ++i) {
    ell_complex w{};
    REQUIRE(ell_paths_weight(paths, i, m, &w) == ELL_OK);
    total += w.re;
  }
  CHECK(total == doctest::Approx(2.1875).epsilon(1e-15));
  ell_complex gf{};
  CHECK(ell_gf_bruteforce(m, 0, 0, 2, 2, &gf) == ELL_OK);
  CHECK(gf.re == doctest::Approx(2.1875).epsilon(1e-15));
  ell_model_free(m);
  ell_paths_free(paths);

  ell_paths* huge = nullptr;
  CHECK(ell_paths_enumerate(0, 0, 13, 13, &huge) == ELL_ERR_SCALE);
}

TEST_CASE("series evaluation") {
  const ell_complex a{0.8, 0.4}, b{1.3, 0.2}, c{0.7, -0.5}, d{1.6, 0.3}, q{0.9, 0.2}, p{0.3, 0.1};
  std::complex<double> A(a.re, a.im), B(b.re, b.im), C(c.re, c.im), D(d.re, d.im), Q(q.re, q.im);
  const auto E = A * A * std::pow(Q, 6) / (B * C * D);
  const auto qm = std::pow(Q, -5);
  const ell_complex rest[] = {b, c, d, {E.real(), E.imag()}, {qm.real(), qm.imag()}};
  ell_complex out{};
  double max_term = 0;
  CHECK(ell_vseries(a, rest, 5, {1, 0}, q, p, 5, &out, &max_term) == ELL_OK);
  CHECK(std::abs(std::complex<double>(out.re, out.im) - std::complex<double>(0.45277302821139045, -0.17806562038932527)) <=
        1e-12);
  CHECK(max_term > 0);
}

TEST_CASE("suite runs and reports") {
  CHECK(ell_suite_count() == 25);
  CHECK(std::strcmp(ell_suite_id(0), "theta_laws") == 0);
  CHECK(ell_suite_id(99) == nullptr);

  ell_config* cfg = nullptr;
  REQUIRE(ell_config_new("warnaar_det", &cfg) == ELL_OK);
  CHECK(ell_config_set(cfg, "trials", "6") == ELL_OK);
  CHECK(ell_config_set(cfg, "seed", "7") == ELL_OK);
  CHECK(ell_config_set(cfg, "escalate", "true") == ELL_OK);
  CHECK(ell_config_set(cfg, "trials", "six") == ELL_ERR_USAGE);
  CHECK(ell_config_set(cfg, "colour", "blue") == ELL_ERR_USAGE);
  CHECK(ell_config_check(cfg) == ELL_OK);

  ell_report* report = nullptr;
  REQUIRE(ell_run_suite(cfg, &report) == ELL_OK);
  CHECK(std::strcmp(ell_report_suite(report), "warnaar_det") == 0);
  CHECK(ell_report_trials(report) == 6);
  CHECK(ell_report_passes(report) == 6);
  CHECK(ell_report_passed(report) == 1);
  CHECK(ell_report_max_rel_error(report) <= 1e-9);
  REQUIRE(ell_report_outcome_count(report) >= 6);
  ell_outcome o{};
  REQUIRE(ell_report_outcome(report, 0, &o) == ELL_OK);
  CHECK(std::strcmp(o.identity_id, "warnaar_det.r1") == 0);
  CHECK(o.seed == 7);
  CHECK(std::strcmp(o.status, "pass") == 0);
  CHECK(ell_report_outcome(report, 1000, &o) == ELL_ERR_USAGE);

  const char* path = "capi_report.json";
  const ell_report* reports[] = {report};
  REQUIRE(ell_write_json(reports, 1, path) == ELL_OK);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc.size() == ell_report_outcome_count(report));
  std::remove(path);

  ell_report_free(report);
  ell_config_free(cfg);

  ell_config* unknown = nullptr;
  CHECK(ell_config_new("nonexistent", &unknown) == ELL_ERR_USAGE);
  ell_config* bad = nullptr;
  REQUIRE(ell_config_new("ft_10V9", &bad) == ELL_OK);
  CHECK(ell_config_set(bad, "tol", "5") == ELL_ERR_USAGE);
  CHECK(ell_config_set(bad, "m_max", "40") == ELL_OK);
  CHECK(ell_config_check(bad) == ELL_ERR_USAGE);
  ell_config_free(bad);
}
