#ifndef SU2F_FOURIER_HPP
#define SU2F_FOURIER_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "su2f/group.hpp"
#include "su2f/repr.hpp"

namespace su2f {

struct Breakpoint {
  double theta;
  double value;
};

/// A real class function on SU(2), given by its profile on [0, pi].
///
/// `kinks` lists interior angles where the profile is continuous but not
/// smooth; `singular` lists angles where a derivative blows up (|t - t0|^p).
/// Quadrature routines split there. A piecewise-linear function carries its
/// exact breakpoint list.
class CentralFn {
 public:
  using Profile = std::function<double(double)>;

  CentralFn(Profile profile, std::string name, std::vector<double> kinks = {},
            std::vector<double> singular = {});

  /// Linear interpolation of `points`, which must start at 0, end at pi and increase.
  static CentralFn piecewise_linear(std::vector<Breakpoint> points, std::string name);

  double operator()(double theta) const { return profile_(theta); }
  double at(const GroupElement& x) const { return profile_(conj_angle(x)); }

  const std::string& name() const { return name_; }
  bool is_piecewise_linear() const { return !breakpoints_.empty(); }
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& kinks() const { return kinks_; }
  const std::vector<double>& singular() const { return singular_; }

  /// 0, every kink and singular point, pi; sorted.
  std::vector<double> partition() const;

 private:
  Profile profile_;
  std::string name_;
  std::vector<double> kinks_;
  std::vector<double> singular_;
  std::vector<Breakpoint> breakpoints_;
};

/// <f, chi_n> = (2/pi) int_0^pi f chi_n sin^2 on the Weyl rule.
double coeff_central(const CentralFn& f, int n, const WeylRule& rule);

/// Thread-safe memo of central coefficients keyed by (function name, n, rule order).
class CoefficientCache {
 public:
  double get_or_compute(const std::string& fn, int n, std::size_t order,
                        const std::function<double()>& compute);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::tuple<std::string, int, std::size_t>, double> values_;
};

/// c_0..c_{n_max} on the Weyl rule, optionally through a cache.
std::vector<double> coeffs_central(const CentralFn& f, int n_max, const WeylRule& rule,
                                   CoefficientCache* cache = nullptr);

/// c_0..c_{n_max} by composite Gauss-Legendre on f.partition(), resolving each
/// frequency and grading towards singular points.
std::vector<double> coeffs_adaptive(const CentralFn& f, int n_max);

/// Closed-form coefficients of a piecewise-linear central function
/// (integration by parts on the exact breakpoints).
std::vector<double> coeffs_piecewise_linear(const CentralFn& f, int n_max);

/// (2/pi) int_0^pi f^2 sin^2, composite quadrature on f.partition().
double norm_sq_adaptive(const CentralFn& f);

/// Fourier data of a real central function: c_n = <f, chi_n>.
struct CentralSeries {
  std::vector<double> coeffs;  // c_0 .. c_{n_max}
  double norm_sq = 0.0;        // ||f||^2_{L^2}
  bool band_limited = false;   // coeffs hold the full spectrum

  int n_max() const { return static_cast<int>(coeffs.size()) - 1; }

  /// sum over the truncation set of c_n chi_n(theta)
  double partial_sum(const TruncationSet& set, double theta) const;
  double partial_sum(int N, TruncationMode mode, double theta) const;

  /// Energy outside indices 0..M: sum_{M < n <= n_max} c_n^2 plus the Parseval
  /// remainder beyond n_max (zero when band-limited).
  double tail_energy(int M) const;

  /// Series retaining indices in `set` only.
  CentralSeries truncated(const TruncationSet& set) const;

  static CentralSeries band_limited_from(std::vector<double> coeffs);
};

/// Coefficients from coeffs_adaptive and the norm from norm_sq_adaptive.
CentralSeries central_series_adaptive(const CentralFn& f, int n_max);

/// sum_{n<=N} (n+1) chi_n(theta).
double dirichlet_direct(int N, double theta);

/// -D'_{N+1}(theta) / (2 sin theta); direct finite sum when |sin theta| < 1e-4.
double dirichlet_closed(int N, double theta);

/// D_n(t) = 1 + 2 sum_{j<=n} cos(j t) = sin((2n+1) t/2) / sin(t/2).
double classical_dirichlet(int n, double t);
double classical_dirichlet_deriv(int n, double t);

/// (1/pi) int_0^pi |D_{n+1}(theta)| d theta, Gauss-Legendre between the zeros
/// 2k pi / (2n+3).
double lebesgue_constant(int n, std::size_t nodes_per_cell = 8);

using GroupFn = std::function<std::complex<double>(const GroupElement&)>;

/// Matrix Fourier data F_n = int f(x) pi_n(x)* d mu(x), n = 0..n_max.
struct GeneralSeries {
  std::vector<Eigen::MatrixXcd> blocks;

  int n_max() const { return static_cast<int>(blocks.size()) - 1; }
  /// sum over the set of (n+1) tr(F_n pi_n(x))
  std::complex<double> partial_sum(const TruncationSet& set, const GroupElement& x) const;
  std::complex<double> partial_sum(int N, TruncationMode mode, const GroupElement& x) const;
  /// (n+1) ||F_n||_F^2
  double block_energy(int n) const;
};

/// F_n by summing over every node of the rule. O(|rule| n^3).
Eigen::MatrixXcd coeff_matrix(const GroupFn& f, int n, const HaarRule& rule);

/// F_0..F_{n_max} using the Euler-angle factorization
/// pi_n(x(a, b, g)) = diag(e^{-i(n-2k)a/2}) d_n(b) diag(e^{-i(n-2j)g/2}),
/// so the alpha/gamma sums become small DFTs per beta node.
GeneralSeries haar_transform(const GroupFn& f, int n_max, const HaarRule& rule);

}  // namespace su2f

#endif  // SU2F_FOURIER_HPP
