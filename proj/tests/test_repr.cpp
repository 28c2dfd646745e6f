#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "su2f/error.hpp"
#include "su2f/group.hpp"
#include "su2f/repr.hpp"

using namespace su2f;
using std::numbers::pi;

TEST_CASE("char_eval") {
  for (double t : {0.0, 0.3, 1.7, pi}) CHECK(char_eval(0, t) == 1.0);
  for (int n : {1, 4, 9, 200}) {
    CHECK(char_eval(n, 0.0) == n + 1);
    CHECK(char_eval(n, pi) == doctest::Approx((n % 2 ? -1.0 : 1.0) * (n + 1)).epsilon(1e-14));
    CHECK(char_eval(n, 1e-9) == doctest::Approx(n + 1).epsilon(1e-12));
    CHECK(char_eval(n, pi - 1e-9) == doctest::Approx((n % 2 ? -1.0 : 1.0) * (n + 1)).epsilon(1e-12));
  }
  CHECK(char_eval(7, 0.9) == doctest::Approx(2.0 * std::cos(0.9) * char_eval(6, 0.9) - char_eval(5, 0.9)).epsilon(1e-14));
  double worst = 0.0;
  for (int n = 0; n <= 40; ++n)
    for (int i = 0; i <= 400; ++i) {
      const double t = pi * i / 400.0;
      worst = std::max(worst, std::abs(char_eval(n, t) - oracle::chebyshev_u(n, t)));
    }
  CHECK(worst < 1e-11);
  CHECK(char_eval(3, -0.4) == doctest::Approx(char_eval(3, 0.4)).epsilon(1e-15));
  CHECK_THROWS_AS(char_eval(-1, 0.2), Error);
}

TEST_CASE("repr_matrix small cases") {
  auto rng = seeded_stream(10, 0);
  const GroupElement x = random_element(rng);
  const Eigen::MatrixXcd p0 = repr_matrix(0, x);
  CHECK(p0.rows() == 1);
  CHECK(std::abs(p0(0, 0) - 1.0) < 1e-15);
  const Eigen::MatrixXcd p1 = repr_matrix(1, x);
  CHECK(std::abs(p1(0, 0) - x.a()) < 1e-15);
  CHECK(std::abs(p1(0, 1) - x.b()) < 1e-15);
  CHECK(std::abs(p1(1, 0) + std::conj(x.b())) < 1e-15);
  CHECK(std::abs(p1(1, 1) - std::conj(x.a())) < 1e-15);
  CHECK_THROWS_AS(repr_matrix(65, x), Error);
}

TEST_CASE("repr_matrix against polynomial expansion") {
  auto rng = seeded_stream(11, 0);
  for (int trial = 0; trial < 5; ++trial) {
    const GroupElement x = random_element(rng);
    for (int n : {2, 5, 9}) {
      const Eigen::MatrixXcd m = repr_matrix(n, x);
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= n; ++j)
          CHECK(std::abs(m(k, j) - oracle::repr_entry_by_expansion(n, k, j, x.a(), x.b())) < 1e-12);
    }
  }
}

TEST_CASE("unitarity, homomorphism and traces") {
  auto rng = seeded_stream(12, 0);
  double unit = 0.0, hom = 0.0, trace = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const GroupElement x = random_element(rng), y = random_element(rng);
    for (int n = 0; n <= 32; ++n) {
      const Eigen::MatrixXcd m = repr_matrix(n, x);
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n + 1, n + 1);
      unit = std::max(unit, (m * m.adjoint() - id).cwiseAbs().maxCoeff());
      trace = std::max(trace, std::abs(m.trace() - char_eval(n, conj_angle(x))) / (n + 1));
      if (n <= 16) hom = std::max(hom, (repr_matrix(n, x * y) - m * repr_matrix(n, y)).cwiseAbs().maxCoeff());
    }
  }
  CHECK(unit < 1e-11);
  CHECK(hom < 1e-10);
  CHECK(trace < 1e-10);
  const GroupElement x = random_element(rng);
  CHECK(std::abs(repr_matrix(4, x).trace() - char_eval(4, conj_angle(x))) < 1e-10);
}

TEST_CASE("truncation sets") {
  CHECK(truncation_set(TruncationMode::polyhedral, 3).members == std::vector<int>{0, 1, 2, 3});
  CHECK(truncation_set(TruncationMode::spherical, 0).members == std::vector<int>{1});
  CHECK(truncation_set(TruncationMode::spherical, 3).members == std::vector<int>{0, 1, 2, 3, 4});

  // brute force over m with ||lambda_m - rho|| = |m - 1|
  for (int N = 0; N <= 70; ++N) {
    std::vector<int> expect;
    for (int m = 0; m <= 200; ++m)
      if (std::abs(m - 1) <= N) expect.push_back(m);
    const TruncationSet s = truncation_set(TruncationMode::spherical, N);
    CHECK(s.members == expect);
    if (N >= 1) CHECK(s.members == truncation_set(TruncationMode::polyhedral, N + 1).members);
    for (auto mode : {TruncationMode::polyhedral, TruncationMode::spherical}) {
      const auto a = truncation_set(mode, N).members, b = truncation_set(mode, N + 1).members;
      CHECK(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }
  }
  const TruncationSet s = truncation_set(TruncationMode::spherical, 4);
  CHECK(s.blocks[0] == std::vector<int>{1});
  CHECK(s.blocks[1] == std::vector<int>{0, 2});
  CHECK(s.blocks[2] == std::vector<int>{3});
  CHECK(s.blocks[4] == std::vector<int>{5});
  CHECK(truncation_set(TruncationMode::polyhedral, 4).blocks[3] == std::vector<int>{3});
  CHECK_THROWS_AS(truncation_set(TruncationMode::polyhedral, -1), Error);
}
