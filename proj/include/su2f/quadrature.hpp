#ifndef SU2F_QUADRATURE_HPP
#define SU2F_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace su2f {

/// Gauss-Legendre nodes and weights on [-1, 1]; weights sum to 2.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(std::size_t count);

/// Integral of `f` over [a, b] with a fixed `count`-node Gauss-Legendre rule.
double integrate_gauss(const std::function<double(double)>& f, double a, double b,
                       std::size_t count = 8);

/// Composite Gauss-Legendre integral over the partition `breaks` (sorted).
///
/// Each cell is split further so that no piece spans more than half a period of
/// `max_frequency`; pieces adjacent to a break listed in `singular` are graded
/// geometrically towards it, which restores fast convergence for integrands that
/// behave like |t - t0|^p there.
double integrate_composite(const std::function<double(double)>& f, std::span<const double> breaks,
                           double max_frequency, std::span<const double> singular = {},
                           std::size_t nodes_per_piece = 8);

/// Kahan-compensated sum; fixed order, so the result is reproducible.
class CompensatedSum {
 public:
  void add(double x) {
    const double y = x - carry_;
    const double t = total_ + y;
    carry_ = (t - total_) - y;
    total_ = t;
  }
  double value() const { return total_; }

 private:
  double total_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace su2f

#endif  // SU2F_QUADRATURE_HPP
