#ifndef SU2F_DIVERGENCE_HPP
#define SU2F_DIVERGENCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "su2f/fourier.hpp"
#include "su2f/group.hpp"

namespace su2f {

// Sawtooth witnesses f_n and the lower-bound chain for S_n f_n(e).
//
// g_n is piecewise linear on [0, pi] with g_n(2k pi/(2n+3)) = (-1)^k for
// k = 0..n+1 and g_n(pi) = 0; f_n is the central function with profile g_n.
// On the cells I_k = [2k pi/(2n+3), 2(k+1) pi/(2n+3)] it follows the sign of
// cos((n + 3/2) theta), which makes S_n f_n(e) grow linearly in n.

/// Throws for n < 2.
CentralFn sawtooth(int n);

/// Closed-form coefficients c_0..c_{n_max} of f_n and its exact L^2 norm.
CentralSeries sawtooth_series(int n, int n_max);

/// S_n f_n(e) = sum_{m <= n} (m + 1) c_m.
double sawtooth_partial_sum_at_identity(int n);

/// (pi/2)^alpha (2 pi/(2n+3))^{1-alpha}
double holder_bound(int n, double alpha);

/// Exact alpha-Hölder seminorm of f_n under metric_d: the quotient is
/// maximized by a pair of adjacent extrema on the torus,
/// 2 / (2 sin(pi/(2n+3)))^alpha.
double sawtooth_holder_seminorm(int n, double alpha);

/// Largest |f(x) - f(y)| / d(x, y)^alpha over `sample_count` pairs.
///
/// Three quarters of the pairs are (x, x exp(X)) with x Haar-random and ||X||
/// log-uniform on [1e-6, pi]; the rest lie on the maximal torus. A lower bound
/// for the true seminorm, deterministic in `seed`.
double holder_quotient_estimate(const CentralFn& f, double alpha, std::size_t sample_count,
                                std::uint64_t seed);

struct PhiDecomposition {
  double term1 = 0.0;  // (1/pi) int f_n cos^2(t/2) D_{n+1}(t)
  double term2 = 0.0;  // ((2n+3)/pi) int f_n cos((n+3/2) t) cos(t/2)
  double phi = 0.0;    // term1 - term2 = S_n f_n(e)
};

PhiDecomposition phi_decomposition(int n, std::size_t nodes_per_cell = 8);

/// One cell I_k of the chain
///   int_{I_k} g h cos(t/2) >= int_{I_k} g^2 cos(t/2)
///                          >= cos((k+1) pi/(2n+3)) int_{I_k} g^2
///                           = 2 pi/(3(2n+3)) cos((k+1) pi/(2n+3)).
struct IntervalBound {
  int k = 0;
  double lhs = 0.0;
  double weighted_square = 0.0;
  double frozen_cosine = 0.0;
  double rhs = 0.0;

  double margin() const;  // smallest of the three step differences
};

struct ChainReport {
  int n = 0;
  double alpha = 0.5;
  std::vector<IntervalBound> per_interval;
  double tail_integral = 0.0;        // over [2(n+1) pi/(2n+3), pi], >= 0
  double oscillatory_integral = 0.0; // sum of lhs plus tail
  double summed_bound = 0.0;         // sum of rhs
  double cosine_sum = 0.0;           // sum_{k=1}^{n+1} cos(k pi/(2n+3))
  double identity_error = 0.0;       // |cosine_sum - (D - 1)/2|
  double dirichlet_value = 0.0;      // D = D_{n+1}(pi/(2n+3))
  double dirichlet_floor = 0.0;      // 2(2n+3)/pi
  double term1 = 0.0;
  double term2 = 0.0;
  double phi_value = 0.0;
  double lebesgue = 0.0;             // bounds |term1|
  double final_lower_bound = 0.0;    // (D - 1)/3 <= term2
  double doubled_bound = 0.0;        // 2 (D - 1)/3, not a valid bound
  double lipalpha_norm = 0.0;        // 1 + exact seminorm at alpha
  double functional_ratio = 0.0;     // |phi| / lipalpha_norm

  /// Smallest margin across every inequality in the chain.
  double min_margin() const;
  bool doubled_bound_met() const { return term2 >= doubled_bound; }
  bool dirichlet_floor_holds() const { return dirichlet_value >= dirichlet_floor; }
  bool passed(double margin_tol = 1e-8, double identity_tol = 1e-10) const;
};

ChainReport chain_verify(int n, double alpha = 0.5, std::size_t nodes_per_cell = 8);

struct DivergenceRow {
  GroupElement z;
  int n = 0;
  double general_abs = 0.0;  // |S_n(L_{z^-1} f_n)(z)| on the Haar path
  double central_abs = 0.0;  // |S_n f_n(e)| from central coefficients
  double relative_gap = 0.0;
  double growth = 0.0;       // central_abs / n
};

/// Requires n <= 24; cost grows like haar_order^3 n.
DivergenceRow divergence_row(const GroupElement& z, int n, std::size_t haar_order);

std::vector<DivergenceRow> divergence_table(std::span<const GroupElement> points, std::span<const int> n_list,
                                            std::size_t haar_order);

}  // namespace su2f

#endif  // SU2F_DIVERGENCE_HPP
