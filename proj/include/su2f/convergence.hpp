#ifndef SU2F_CONVERGENCE_HPP
#define SU2F_CONVERGENCE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "su2f/fourier.hpp"
#include "su2f/group.hpp"

namespace su2f {

// Quantities in the hypothesis chain of the almost-everywhere convergence
// criterion: the integral modulus of continuity Omega(f, t), the Dini-type
// integral int Omega^2(f, t) / t dt, best approximations E_M(f), the Jackson
// ratio E_{2^k} / Omega(f, 2^-k), and the log-weighted block energy sum.
//
// On SU(2) with omega the fundamental weight every block Gamma_j holds the
// single representation pi_j, so ||Gamma_j f||^2 = c_j^2 for central f.

/// x -> f(x) - f(h^-1 x)
GroupFn delta_translate(GroupFn f, const GroupElement& h);

/// y -> f(z y)
GroupFn left_translate(GroupFn f, const GroupElement& z);

GroupFn as_group_fn(const CentralFn& f);

/// h -> ||delta_h f||_{L^2}
using TranslationNorm = std::function<double(const GroupElement&)>;

/// Quadrature of |f(x) - f(h^-1 x)|^2 over every node of `rule`.
TranslationNorm haar_translation_norm(GroupFn f, HaarRule rule);

/// Central f from its coefficients:
///   ||delta_h f||^2 = 2 sum_n c_n^2 (1 - chi_n(h)/(n+1)) + 2 (remainder beyond n_max),
/// exact for band-limited series. Depends on h only through conj_angle(h).
TranslationNorm spectral_translation_norm(CentralSeries series);

/// 1 - chi_n(s)/(n+1), accurate for small (n+1) s.
double normalized_char_defect(int n, double s);

/// Lower estimate of Omega(f, t): max of ||delta_h f|| over `samples` random
/// directions X, each at radii t, t/2, t/4, with h = exp(X).
double modulus(const TranslationNorm& norm, double t, std::size_t samples, std::uint64_t seed);

struct ModulusProfile {
  std::vector<double> t_values;      // decreasing
  std::vector<double> omega_values;  // non-decreasing in t
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
};

/// Omega on log-spaced radii from t_max down to t_min. Every radius reuses the
/// samples drawn for all smaller radii, so the profile is monotone.
ModulusProfile modulus_profile(const TranslationNorm& norm, double t_min, double t_max,
                               int points_per_decade, std::size_t samples, std::uint64_t seed);

/// Trapezoid in log t of int_{t_min}^1 Omega^2(t) / t dt.
double dini_integral(const ModulusProfile& profile, double t_min);

/// E_M(f) = sqrt(sum_{n > M} c_n^2), via the Parseval remainder.
double best_approx(const CentralSeries& series, int M);

/// E_{2^k}(f) / Omega(f, 2^-k). Throws ErrorCode::degenerate when Omega vanishes.
double jackson_ratio(const CentralSeries& series, const TranslationNorm& norm, int k, std::size_t samples,
                     std::uint64_t seed);

/// sum_{j=2}^{J} log(j) c_j^2
double rm_weighted_sum(const CentralSeries& series, int J);

/// max over `grid_points` equally spaced angles of [delta, pi - delta] of |S_N f - f|.
double uniform_error_central(const CentralFn& f, const CentralSeries& series, int N, double delta,
                             std::size_t grid_points = 2001);

/// |cos theta|^alpha; alpha-Hölder with constant 1.
CentralFn cos_power(double alpha);

/// Closed-form coefficients of cos_power(alpha) (Gamma-function integrals) and its exact norm.
CentralSeries cos_power_series(double alpha, int n_max);

/// |theta - pi/2|^alpha
CentralFn cusp(double alpha);

}  // namespace su2f

#endif  // SU2F_CONVERGENCE_HPP
