#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "su2f/su2f.h"

TEST_CASE("status strings and version") {
  CHECK(std::string(su2f_version()).size() > 0);
  CHECK(std::string(su2f_status_string(SU2F_OK)) == "ok");
  CHECK(std::string(su2f_status_string(SU2F_DEGENERATE)) == "degenerate");
}

TEST_CASE("elements") {
  su2f_element x, y, z;
  CHECK(su2f_element_make(2.0, 0.0, 0.0, 0.0, &x) == SU2F_NOT_NORMALIZED);
  CHECK(std::string(su2f_last_error()).size() > 0);
  CHECK(su2f_identity(&x) == SU2F_OK);
  CHECK(std::string(su2f_last_error()).empty());
  CHECK(su2f_torus(0.7, &y) == SU2F_OK);
  CHECK(su2f_mul(&x, &y, &z) == SU2F_OK);
  CHECK(std::memcmp(&y, &z, sizeof z) == 0);
  double angle = 0.0;
  CHECK(su2f_conj_angle(&z, &angle) == SU2F_OK);
  CHECK(angle == doctest::Approx(0.7));
  CHECK(su2f_conj_angle(nullptr, &angle) == SU2F_INVALID_ARGUMENT);
  CHECK(su2f_mul(&x, &y, nullptr) == SU2F_INVALID_ARGUMENT);

  su2f_element r[4], r2[4];
  CHECK(su2f_random_elements(5, 4, r) == SU2F_OK);
  CHECK(su2f_random_elements(5, 4, r2) == SU2F_OK);
  CHECK(std::memcmp(r, r2, sizeof r) == 0);
  su2f_element inv, prod;
  su2f_inverse(&r[0], &inv);
  su2f_mul(&r[0], &inv, &prod);
  double d = 1.0;
  CHECK(su2f_metric(&prod, &x, &d) == SU2F_OK);
  CHECK(d < 1e-7);

  CHECK(su2f_exp(0.0, 0.3, 0.4, &z) == SU2F_OK);
  su2f_conj_angle(&z, &angle);
  CHECK(angle == doctest::Approx(0.5));
}

TEST_CASE("representations and kernels") {
  double c = 0.0;
  CHECK(su2f_char(3, 0.0, &c) == SU2F_OK);
  CHECK(c == 4.0);
  su2f_element x;
  su2f_identity(&x);
  std::vector<double> m(2 * 9);
  CHECK(su2f_repr_matrix(2, &x, m.data(), m.size() - 1) == SU2F_OUT_OF_RANGE);
  CHECK(su2f_repr_matrix(2, &x, m.data(), m.size()) == SU2F_OK);
  CHECK(m[0] == doctest::Approx(1.0));
  CHECK(m[2] == doctest::Approx(0.0));
  double a = 0.0, b = 0.0;
  su2f_dirichlet_direct(7, 0.9, &a);
  su2f_dirichlet_closed(7, 0.9, &b);
  CHECK(a == doctest::Approx(b).epsilon(1e-10));
  CHECK(su2f_lebesgue(0, &a) == SU2F_OK);
  CHECK(a == doctest::Approx(1.0 / 3.0 + 2.0 * std::sqrt(3.0) / 3.14159265358979323846).epsilon(1e-12));
}

TEST_CASE("series handles") {
  su2f_series* s = nullptr;
  CHECK(su2f_series_from_spec("bogus:1", 16, &s) == SU2F_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  CHECK(su2f_series_from_spec("sawtooth:x", 16, &s) == SU2F_INVALID_ARGUMENT);
  CHECK(su2f_series_from_spec("sawtooth:3", 256, &s) == SU2F_OK);
  REQUIRE(s != nullptr);
  int n_max = 0;
  su2f_series_n_max(s, &n_max);
  CHECK(n_max == 256);
  std::vector<double> coeffs(257);
  CHECK(su2f_series_coeffs(s, coeffs.data(), 10) == SU2F_OUT_OF_RANGE);
  CHECK(su2f_series_coeffs(s, coeffs.data(), coeffs.size()) == SU2F_OK);
  double v = 0.0;
  CHECK(su2f_series_eval(s, 0.0, &v) == SU2F_OK);
  CHECK(v == 1.0);
  CHECK(su2f_series_partial_sum(s, 4, SU2F_POLYHEDRAL, 0.3, &v) == SU2F_OK);
  CHECK(su2f_series_partial_sum(s, 4, static_cast<su2f_mode>(7), 0.3, &v) == SU2F_INVALID_ARGUMENT);
  CHECK(su2f_series_rm_sum(s, 1000, &v) == SU2F_OUT_OF_RANGE);
  CHECK(su2f_series_best_approx(s, -1, &v) == SU2F_INVALID_ARGUMENT);
  CHECK(su2f_modulus(s, 0.0, 8, 1, 0, &v) == SU2F_INVALID_ARGUMENT);
  CHECK(su2f_modulus(s, 0.1, 8, 1, 0, &v) == SU2F_OK);
  CHECK(v > 0.0);

  size_t len = 0, count = 0;
  CHECK(su2f_modulus_profile_length(1e-3, 1.0, 8, &len) == SU2F_OK);
  CHECK(len == 25);
  std::vector<double> t(len), w(len);
  CHECK(su2f_modulus_profile(s, 1e-3, 1.0, 8, 4, 1, t.data(), w.data(), len - 1, &count) == SU2F_OUT_OF_RANGE);
  CHECK(count == len);
  CHECK(su2f_modulus_profile(s, 1e-3, 1.0, 8, 4, 1, t.data(), w.data(), len, &count) == SU2F_OK);
  double dini = 0.0;
  CHECK(su2f_dini_integral(t.data(), w.data(), len, 1e-3, &dini) == SU2F_OK);
  CHECK(dini > 0.0);
  CHECK(su2f_dini_integral(t.data(), w.data(), len, 1e-4, &dini) == SU2F_INVALID_ARGUMENT);
  su2f_series_free(s);

  const double c[] = {2.0};
  CHECK(su2f_series_from_coeffs(c, 0, &s) == SU2F_INVALID_ARGUMENT);
  CHECK(su2f_series_from_coeffs(c, 1, &s) == SU2F_OK);
  CHECK(su2f_jackson_ratio(s, 2, 8, 1, &v) == SU2F_DEGENERATE);
  CHECK(std::string(su2f_last_error()).find("constant") != std::string::npos);
  su2f_series_free(s);
  su2f_series_free(nullptr);
}

TEST_CASE("chain handles") {
  su2f_chain* c = nullptr;
  CHECK(su2f_chain_verify(1, 0.5, &c) != SU2F_OK);
  CHECK(su2f_chain_verify(8, 0.5, &c) == SU2F_OK);
  su2f_chain_summary s;
  CHECK(su2f_chain_summary_get(c, &s) == SU2F_OK);
  CHECK(s.n == 8);
  CHECK(s.passed == 1);
  size_t count = 0;
  su2f_chain_interval_count(c, &count);
  CHECK(count > 0);
  su2f_interval iv;
  CHECK(su2f_chain_interval(c, 0, &iv) == SU2F_OK);
  CHECK(iv.margin <= iv.lhs - iv.rhs + 1e-15);
  CHECK(iv.margin > -1e-8);
  CHECK(su2f_chain_interval(c, count, &iv) == SU2F_OUT_OF_RANGE);
  su2f_chain_free(c);
  CHECK(su2f_chain_summary_get(nullptr, &s) == SU2F_INVALID_ARGUMENT);
}
