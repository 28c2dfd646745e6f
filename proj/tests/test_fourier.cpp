#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "su2f/divergence.hpp"
#include "su2f/error.hpp"
#include "su2f/fourier.hpp"

using namespace su2f;
using std::numbers::pi;

namespace {

CentralFn character(int k) {
  return CentralFn([k](double t) { return char_eval(k, t); }, "char:" + std::to_string(k));
}

}  // namespace

TEST_CASE("piecewise-linear CentralFn interpolates its breakpoints") {
  const CentralFn f = CentralFn::piecewise_linear({{0.0, 1.0}, {1.0, -1.0}, {2.0, 3.0}, {pi, 0.0}}, "pl");
  CHECK(f.is_piecewise_linear());
  for (const auto& p : f.breakpoints()) CHECK(std::abs(f(p.theta) - p.value) < 1e-14);
  CHECK(std::abs(f(0.5) - 0.0) < 1e-14);
  CHECK(std::abs(f(1.25) - 0.0) < 1e-14);
  CHECK(f.partition().front() == 0.0);
  CHECK(f.partition().back() == pi);
  CHECK_THROWS_AS(CentralFn::piecewise_linear({{0.1, 1.0}, {pi, 0.0}}, "bad"), Error);
  CHECK_THROWS_AS(CentralFn::piecewise_linear({{0.0, 1.0}, {2.0, 0.0}, {1.0, 0.0}, {pi, 0.0}}, "bad"), Error);
}

TEST_CASE("coeff_central") {
  const WeylRule rule = weyl_grid(32);
  for (int n = 0; n <= 10; ++n) CHECK(std::abs(coeff_central(character(3), n, rule) - (n == 3)) < 1e-11);
  const CentralFn one([](double) { return 1.0; }, "one");
  const CentralFn cosine([](double t) { return std::cos(t); }, "cos");
  for (int n = 0; n <= 10; ++n) {
    CHECK(std::abs(coeff_central(one, n, rule) - (n == 0)) < 1e-13);
    CHECK(std::abs(coeff_central(cosine, n, rule) - (n == 1 ? 0.5 : 0.0)) < 1e-13);
  }
}

TEST_CASE("coefficient cache") {
  CoefficientCache cache;
  const WeylRule rule = weyl_grid(16);
  const auto first = coeffs_central(character(2), 6, rule, &cache);
  CHECK(cache.size() == 7);
  const auto second = coeffs_central(character(2), 6, rule, &cache);
  CHECK(cache.size() == 7);
  CHECK(first == second);
  coeffs_central(character(2), 6, weyl_grid(20), &cache);
  CHECK(cache.size() == 14);
}

TEST_CASE("piecewise-linear coefficients: closed form, adaptive quadrature and a Simpson oracle") {
  const CentralFn f = sawtooth(7);
  const auto closed = coeffs_piecewise_linear(f, 40);
  const auto adaptive = coeffs_adaptive(f, 40);
  std::vector<double> breaks;
  for (const auto& p : f.breakpoints()) breaks.push_back(p.theta);
  for (int n = 0; n <= 40; ++n) {
    const double ref = oracle::weyl_integral([&](double t) { return f(t) * oracle::chebyshev_u(n, t); }, breaks, 4000);
    CHECK(std::abs(closed[n] - ref) < 1e-10);
    CHECK(std::abs(closed[n] - adaptive[n]) < 1e-10);
  }
}

TEST_CASE("Parseval on band-limited functions") {
  auto rng = seeded_stream(20, 0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(51);
  for (double& v : c) v = u(rng);
  const CentralSeries s = CentralSeries::band_limited_from(c);
  const CentralFn f([&](double t) { return s.partial_sum(50, TruncationMode::polyhedral, t); }, "random");
  const WeylRule rule = weyl_grid(64);
  double quad = 0.0, energy = 0.0;
  for (std::size_t i = 0; i < rule.order(); ++i) quad += rule.weight[i] * f(rule.theta[i]) * f(rule.theta[i]);
  for (double v : c) energy += v * v;
  CHECK(std::abs(quad - energy) < 1e-10);
  const auto back = coeffs_central(f, 50, rule);
  for (int n = 0; n <= 50; ++n) CHECK(std::abs(back[n] - c[n]) < 1e-12);
}

TEST_CASE("central partial sums") {
  const CentralSeries chi2 = CentralSeries::band_limited_from({0.0, 0.0, 1.0});
  for (double t : {0.0, 0.3, 1.2, 2.9, pi}) {
    CHECK(std::abs(chi2.partial_sum(2, TruncationMode::polyhedral, t) - char_eval(2, t)) < 1e-12);
    CHECK(chi2.partial_sum(1, TruncationMode::polyhedral, t) == 0.0);
  }
  CHECK_THROWS_AS(chi2.partial_sum(3, TruncationMode::polyhedral, 0.2), Error);

  const CentralFn f = sawtooth(7);
  const CentralSeries s = sawtooth_series(7, 12);
  std::vector<double> breaks;
  for (const auto& p : f.breakpoints()) breaks.push_back(p.theta);
  const double ref = oracle::central_partial_sum_by_kernel(f, 12, 0.4, breaks, 4000);
  CHECK(std::abs(s.partial_sum(12, TruncationMode::polyhedral, 0.4) - ref) < 1e-6);
}

TEST_CASE("idempotence and the spherical shift on coefficient data") {
  const CentralSeries s = sawtooth_series(9, 80);
  for (int N = 0; N <= 64; ++N) {
    const TruncationSet poly = truncation_set(TruncationMode::polyhedral, N);
    const CentralSeries once = s.truncated(poly);
    CHECK(once.truncated(poly).coeffs == once.coeffs);
    if (N == 0) continue;
    CHECK(s.truncated(truncation_set(TruncationMode::spherical, N)).coeffs ==
          s.truncated(truncation_set(TruncationMode::polyhedral, N + 1)).coeffs);
    for (double t : {0.0, 0.7, 2.2, pi})
      CHECK(s.partial_sum(N, TruncationMode::spherical, t) == s.partial_sum(N + 1, TruncationMode::polyhedral, t));
  }
}

TEST_CASE("tail energy and band-limited series") {
  const CentralSeries s = sawtooth_series(7, 4096);
  double inside = 0.0;
  for (int n = 0; n <= 3; ++n) inside += s.coeffs[n] * s.coeffs[n];
  CHECK(std::abs(s.tail_energy(3) + inside - s.norm_sq) < 1e-12);
  const CentralSeries b = CentralSeries::band_limited_from({1.0, 2.0, 0.5});
  CHECK(b.tail_energy(2) == 0.0);
  CHECK(b.tail_energy(0) == doctest::Approx(4.25));
}

TEST_CASE("Dirichlet kernels") {
  for (double t : {0.0, 0.4, 1.1, pi}) {
    CHECK(dirichlet_direct(0, t) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dirichlet_closed(0, t) == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (int N : {1, 5, 30, 200}) {
    const double pyramid = (N + 1.0) * (N + 2.0) * (2.0 * N + 3.0) / 6.0;
    CHECK(dirichlet_direct(N, 0.0) == doctest::Approx(pyramid).epsilon(1e-14));
    CHECK(dirichlet_closed(N, 1e-7) == doctest::Approx(pyramid).epsilon(1e-9));
    double alternating = 0.0;
    for (int n = 0; n <= N; ++n) alternating += (n % 2 ? -1.0 : 1.0) * (n + 1.0) * (n + 1.0);
    CHECK(dirichlet_closed(N, pi) == doctest::Approx(alternating).epsilon(1e-12));
  }
  CHECK(dirichlet_direct(5, 1.1) == doctest::Approx(dirichlet_closed(5, 1.1)).epsilon(1e-10));

  auto rng = seeded_stream(21, 0);
  std::uniform_int_distribution<int> pickN(0, 200);
  std::uniform_real_distribution<double> pickT(0.0, pi);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const int N = pickN(rng);
    const double t = pickT(rng);
    const double scale = (N + 1.0) * (N + 2.0) * (2.0 * N + 3.0) / 6.0;
    worst = std::max(worst, std::abs(dirichlet_direct(N, t) - dirichlet_closed(N, t)) / scale);
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("classical Dirichlet kernel") {
  for (int n : {0, 3, 50}) {
    CHECK(classical_dirichlet(n, 0.0) == 2 * n + 1);
    for (double t : {0.2, 1.3, 2.8}) {
      CHECK(classical_dirichlet(n, t) == doctest::Approx(oracle::classical_dirichlet_sum(n, t)).epsilon(1e-12));
      const double h = 1e-6;
      const double fd = (classical_dirichlet(n, t + h) - classical_dirichlet(n, t - h)) / (2 * h);
      const double d = classical_dirichlet_deriv(n, t);
      CHECK(std::abs(fd - d) <= 1e-6 * std::max(1.0, std::abs(d)));
    }
  }
  for (int n : {2, 10, 100, 10000}) {
    const double t = pi / (2 * n + 3);
    CHECK(classical_dirichlet(n + 1, t) == doctest::Approx(1.0 / std::sin(pi / (2.0 * (2 * n + 3)))).epsilon(1e-13));
  }
}

TEST_CASE("Lebesgue constants") {
  CHECK(std::abs(lebesgue_constant(0) - (1.0 / 3.0 + 2.0 * std::sqrt(3.0) / pi)) < 1e-12);
  const double ref10 =
      oracle::simpson([](double t) { return std::abs(oracle::classical_dirichlet_sum(11, t)); }, 0.0, pi, 400000) / pi;
  CHECK(std::abs(lebesgue_constant(10) - ref10) < 1e-8);
  const double L1000 = lebesgue_constant(1000);
  CHECK(std::abs(L1000 - (4.0 / (pi * pi) * std::log(1001.0) + 1.2706)) < 0.2);
  double prev = 0.0;
  for (int n = 0; n <= 300; n += 7) {
    const double L = lebesgue_constant(n);
    CHECK(L > prev);
    prev = L;
  }
  const double g10 = lebesgue_constant(10) - 4.0 / (pi * pi) * std::log(11.0);
  const double g100 = lebesgue_constant(100) - 4.0 / (pi * pi) * std::log(101.0);
  const double g1000 = L1000 - 4.0 / (pi * pi) * std::log(1001.0);
  CHECK(std::abs(g1000 - g100) < std::abs(g100 - g10));
}

TEST_CASE("matrix coefficients on the Haar rule") {
  const HaarRule rule = haar_grid(10);
  const GroupFn one = [](const GroupElement&) { return std::complex<double>(1.0); };
  CHECK(std::abs(coeff_matrix(one, 0, rule)(0, 0) - 1.0) < 1e-12);
  CHECK(coeff_matrix(one, 2, rule).cwiseAbs().maxCoeff() < 1e-12);

  const GroupFn entry = [](const GroupElement& x) { return repr_matrix(2, x)(0, 1); };
  const Eigen::MatrixXcd F2 = coeff_matrix(entry, 2, rule);
  // F_n = int f pi_n^*: the single entry sits at the transposed position
  for (int j = 0; j <= 2; ++j)
    for (int k = 0; k <= 2; ++k) CHECK(std::abs(F2(j, k) - ((j == 1 && k == 0) ? 1.0 / 3.0 : 0.0)) < 1e-8);

  const GeneralSeries fast = haar_transform(entry, 4, rule);
  for (int n = 0; n <= 4; ++n) CHECK((fast.blocks[n] - coeff_matrix(entry, n, rule)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("general partial sums") {
  const HaarRule rule = haar_grid(12);
  auto rng = seeded_stream(22, 0);
  const GroupFn entry = [](const GroupElement& x) { return repr_matrix(3, x)(1, 2); };
  const GeneralSeries s = haar_transform(entry, 5, rule);
  for (int i = 0; i < 5; ++i) {
    const GroupElement x = random_element(rng);
    CHECK(std::abs(s.partial_sum(3, TruncationMode::polyhedral, x) - entry(x)) < 1e-7);
    CHECK(std::abs(s.partial_sum(2, TruncationMode::polyhedral, x)) < 1e-7);
    CHECK(std::abs(s.partial_sum(2, TruncationMode::spherical, x) - entry(x)) < 1e-7);
  }
  CHECK(s.block_energy(3) == doctest::Approx(1.0 / 4.0).epsilon(1e-8));

  // central f: F_n = (c_n / (n + 1)) I, and the two paths agree
  const CentralFn f([](double t) { return std::exp(std::cos(t)); }, "exp-cos");
  const CentralSeries central = CentralSeries::band_limited_from(coeffs_central(f, 40, weyl_grid(64)));
  const GeneralSeries g = haar_transform([&](const GroupElement& x) { return std::complex<double>(f.at(x)); }, 8,
                                         haar_grid(24));
  for (int n = 0; n <= 8; ++n) {
    CHECK(std::abs(g.blocks[n].trace() - central.coeffs[n]) < 1e-8);
    Eigen::MatrixXcd off = g.blocks[n];
    off.diagonal().array() -= central.coeffs[n] / (n + 1);
    CHECK(off.cwiseAbs().maxCoeff() < 1e-8);
  }
  for (int i = 0; i < 3; ++i) {
    const GroupElement x = random_element(rng);
    CHECK(std::abs(g.partial_sum(8, TruncationMode::polyhedral, x) -
                   central.partial_sum(8, TruncationMode::polyhedral, conj_angle(x))) < 1e-7);
  }
}

TEST_CASE("left translation commutes with S_N on band-limited functions") {
  auto rng = seeded_stream(23, 0);
  std::normal_distribution<double> normal;
  std::vector<Eigen::MatrixXcd> A;
  for (int n = 0; n <= 4; ++n) {
    Eigen::MatrixXcd m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) m(i, j) = {normal(rng), normal(rng)};
    A.push_back(m);
  }
  const GroupFn f = [&](const GroupElement& x) {
    std::complex<double> v = 0.0;
    for (int n = 0; n <= 4; ++n) v += (A[n].transpose() * repr_matrix(n, x)).trace();
    return v;
  };
  const HaarRule rule = haar_grid(12);
  const GeneralSeries sf = haar_transform(f, 4, rule);
  for (int i = 0; i < 3; ++i) {
    const GroupElement z = random_element(rng), x = random_element(rng);
    const GeneralSeries sl = haar_transform([&](const GroupElement& y) { return f(z * y); }, 4, rule);
    for (int N = 0; N <= 4; ++N)
      CHECK(std::abs(sl.partial_sum(N, TruncationMode::polyhedral, x) -
                     sf.partial_sum(N, TruncationMode::polyhedral, z * x)) < 1e-6);
  }
}
