#include "su2f/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "su2f/error.hpp"

namespace su2f {

using std::numbers::pi;

GroupFn delta_translate(GroupFn f, const GroupElement& h) {
  const GroupElement h_inv = h.inverse();
  return [f = std::move(f), h_inv](const GroupElement& x) { return f(x) - f(h_inv * x); };
}

GroupFn left_translate(GroupFn f, const GroupElement& z) {
  return [f = std::move(f), z](const GroupElement& y) { return f(z * y); };
}

GroupFn as_group_fn(const CentralFn& f) {
  return [f](const GroupElement& x) { return std::complex<double>(f.at(x)); };
}

TranslationNorm haar_translation_norm(GroupFn f, HaarRule rule) {
  auto shared = std::make_shared<const HaarRule>(std::move(rule));
  return [f = std::move(f), shared](const GroupElement& h) {
    const GroupElement h_inv = h.inverse();
    double sum = 0.0;
    shared->for_each([&](const GroupElement& x, double w) { sum += w * std::norm(f(x) - f(h_inv * x)); });
    return std::sqrt(sum);
  };
}

double normalized_char_defect(int n, double s) {
  const double m = n + 1.0;
  if (m * std::abs(s) < 1e-2) {
    const double s2 = s * s;
    const double m2 = m * m;
    return (m2 - 1.0) * s2 / 6.0 - (m2 - 1.0) * (3.0 * m2 - 7.0) * s2 * s2 / 360.0;
  }
  return 1.0 - char_eval(n, s) / m;
}

TranslationNorm spectral_translation_norm(CentralSeries series) {
  auto shared = std::make_shared<const CentralSeries>(std::move(series));
  const double remainder = shared->tail_energy(shared->n_max());
  return [shared, remainder](const GroupElement& h) {
    const double s = conj_angle(h);
    double sum = 0.0;
    for (int n = 0; n <= shared->n_max(); ++n) {
      const double c = shared->coeffs[n];
      if (c != 0.0) sum += c * c * normalized_char_defect(n, s);
    }
    // energy beyond n_max sits at frequencies above n_max; its defect is
    // ~((n_max+2)^2 - 1) s^2 / 6 while small and ~1 once (n_max s) >> 1
    const double m = shared->n_max() + 2.0;
    sum += remainder * std::min(1.0, (m * m - 1.0) * s * s / 6.0);
    return std::sqrt(std::max(2.0 * sum, 0.0));
  };
}

namespace {

double sample_radii(const TranslationNorm& norm, double t, std::size_t samples, std::mt19937_64& rng) {
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const LieVector dir = random_lie_vector(rng, 1.0);
    for (double r : {t, 0.5 * t, 0.25 * t}) {
      const LieVector X{dir.c * r, dir.beta * r};
      best = std::max(best, norm(exp_map(X)));
    }
  }
  return best;
}

}  // namespace

double modulus(const TranslationNorm& norm, double t, std::size_t samples, std::uint64_t seed) {
  if (!(t > 0.0 && t <= pi)) throw Error(ErrorCode::invalid_argument, "modulus: t must lie in (0, pi]");
  if (samples == 0) throw Error(ErrorCode::invalid_argument, "modulus: need at least one sample");
  std::mt19937_64 rng = seeded_stream(seed, 0);
  return sample_radii(norm, t, samples, rng);
}

ModulusProfile modulus_profile(const TranslationNorm& norm, double t_min, double t_max,
                               int points_per_decade, std::size_t samples, std::uint64_t seed) {
  if (!(t_min > 0.0 && t_min < t_max && t_max <= pi))
    throw Error(ErrorCode::invalid_argument, "modulus_profile: need 0 < t_min < t_max <= pi");
  if (points_per_decade < 1 || samples == 0)
    throw Error(ErrorCode::invalid_argument, "modulus_profile: need points_per_decade >= 1 and samples >= 1");
  const double decades = std::log10(t_max / t_min);
  const int count = static_cast<int>(std::ceil(decades * points_per_decade)) + 1;

  ModulusProfile profile;
  profile.sample_count = samples;
  profile.seed = seed;
  profile.t_values.resize(count);
  std::vector<double> raw(count);
  for (int i = 0; i < count; ++i) {
    const double t = (i == count - 1) ? t_min : t_max * std::pow(t_min / t_max, static_cast<double>(i) / (count - 1));
    profile.t_values[i] = t;
    std::mt19937_64 rng = seeded_stream(seed, static_cast<std::uint64_t>(i));
    raw[i] = sample_radii(norm, t, samples, rng);
  }
  profile.omega_values.resize(count);
  double running = 0.0;
  for (int i = count - 1; i >= 0; --i) {
    running = std::max(running, raw[i]);
    profile.omega_values[i] = running;
  }
  return profile;
}

double dini_integral(const ModulusProfile& profile, double t_min) {
  const auto& t = profile.t_values;
  const auto& w = profile.omega_values;
  if (t.size() < 2 || t.size() != w.size())
    throw Error(ErrorCode::invalid_argument, "dini_integral: profile needs at least two points");
  if (t.front() < 1.0 * (1.0 - 1e-12) || t.back() > t_min * (1.0 + 1e-12))
    throw Error(ErrorCode::invalid_argument, "dini_integral: profile must cover [t_min, 1]");
  // ascending in u = log t, integrand Omega^2 linear between samples
  const double lo = std::log(t_min);
  const double hi = 0.0;
  double total = 0.0;
  for (std::size_t i = t.size() - 1; i > 0; --i) {
    const double u0 = std::log(t[i]);
    const double u1 = std::log(t[i - 1]);
    const double f0 = w[i] * w[i];
    const double f1 = w[i - 1] * w[i - 1];
    const double a = std::max(u0, lo);
    const double b = std::min(u1, hi);
    if (!(b > a)) continue;
    auto lerp = [&](double u) { return f0 + (f1 - f0) * (u - u0) / (u1 - u0); };
    total += 0.5 * (lerp(a) + lerp(b)) * (b - a);
  }
  return total;
}

double best_approx(const CentralSeries& series, int M) {
  if (M < 0) throw Error(ErrorCode::invalid_argument, "best_approx: M must be nonnegative");
  return std::sqrt(series.tail_energy(M));
}

double jackson_ratio(const CentralSeries& series, const TranslationNorm& norm, int k, std::size_t samples,
                     std::uint64_t seed) {
  if (k < 0 || k > 30) throw Error(ErrorCode::invalid_argument, "jackson_ratio: k must lie in [0, 30]");
  const double t = std::ldexp(1.0, -k);
  const double omega = modulus(norm, std::min(t, pi), samples, seed);
  if (!(omega > 0.0))
    throw Error(ErrorCode::degenerate, "jackson_ratio: Omega(f, 2^-k) vanishes (f is constant)");
  return best_approx(series, 1 << k) / omega;
}

double rm_weighted_sum(const CentralSeries& series, int J) {
  if (J > series.n_max() && !series.band_limited)
    throw Error(ErrorCode::out_of_range, "rm_weighted_sum: coefficients do not reach J");
  double sum = 0.0;
  const int top = std::min(J, series.n_max());
  for (int j = 2; j <= top; ++j) sum += std::log(static_cast<double>(j)) * series.coeffs[j] * series.coeffs[j];
  return sum;
}

double uniform_error_central(const CentralFn& f, const CentralSeries& series, int N, double delta,
                             std::size_t grid_points) {
  if (!(delta >= 0.0 && delta < pi / 2))
    throw Error(ErrorCode::invalid_argument, "uniform_error_central: delta must lie in [0, pi/2)");
  if (grid_points < 2) throw Error(ErrorCode::invalid_argument, "uniform_error_central: need two grid points");
  const TruncationSet set = truncation_set(TruncationMode::polyhedral, N);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double theta = delta + (pi - 2.0 * delta) * static_cast<double>(i) / (grid_points - 1);
    worst = std::max(worst, std::abs(series.partial_sum(set, theta) - f(theta)));
  }
  return worst;
}

CentralFn cos_power(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::invalid_argument, "cos_power: alpha must be positive");
  return CentralFn([alpha](double t) { return std::pow(std::abs(std::cos(t)), alpha); },
                   "cos-power:" + std::to_string(alpha), {}, {pi / 2});
}

CentralSeries cos_power_series(double alpha, int n_max) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::invalid_argument, "cos_power_series: alpha must be positive");
  // int_0^pi |cos t|^a cos(k t) dt = 2 pi Gamma(a+1) / (2^{a+1} Gamma(1+(a+k)/2) Gamma(1+(a-k)/2))
  // for even k, zero for odd k
  const double prefactor = 2.0 * pi * std::tgamma(alpha + 1.0) / std::pow(2.0, alpha + 1.0);
  auto integral = [&](int k) {
    if (k % 2 != 0) return 0.0;
    const double z1 = 1.0 + 0.5 * (alpha + k);
    const double z2 = 1.0 + 0.5 * (alpha - k);
    if (z2 > 0.0) return prefactor * std::exp(-std::lgamma(z1) - std::lgamma(z2));
    // 1/Gamma(z2) = sin(pi z2) Gamma(1 - z2) / pi, and sin(pi z2) = (-1)^{1-k/2} sin(pi a/2)
    const int j = 1 - k / 2;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return prefactor * sign * std::sin(0.5 * pi * alpha) / pi * std::exp(std::lgamma(1.0 - z2) - std::lgamma(z1));
  };
  CentralSeries s;
  s.coeffs.resize(n_max + 1);
  double prev = integral(0), cur = integral(1);
  for (int n = 0; n <= n_max; ++n) {
    const double next = integral(n + 2);
    s.coeffs[n] = (prev - next) / pi;
    prev = cur;
    cur = next;
  }
  s.norm_sq = 2.0 / pi * std::tgamma(alpha + 0.5) * std::tgamma(1.5) / std::tgamma(alpha + 2.0);
  return s;
}

CentralFn cusp(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::invalid_argument, "cusp: alpha must be positive");
  return CentralFn([alpha](double t) { return std::pow(std::abs(t - pi / 2), alpha); },
                   "cusp:" + std::to_string(alpha), {}, {pi / 2});
}

}  // namespace su2f
