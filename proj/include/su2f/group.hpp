#ifndef SU2F_GROUP_HPP
#define SU2F_GROUP_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace su2f {

using complex = std::complex<double>;

/// A point of SU(2), the matrix [[a, b], [-conj(b), conj(a)]].
///
/// Construction re-normalizes so that |a|^2 + |b|^2 == 1; inputs that drift
/// further than 1e-6 from the unit sphere are rejected.
class GroupElement {
 public:
  GroupElement() = default;  // identity
  GroupElement(complex a, complex b);

  static GroupElement identity() { return {}; }
  /// diag(e^{i theta}, e^{-i theta})
  static GroupElement torus(double theta);
  /// Euler angles (alpha, beta, gamma); alpha in [0, 2pi), beta in [0, pi], gamma in [0, 4pi).
  static GroupElement euler(double alpha, double beta, double gamma);

  complex a() const { return a_; }
  complex b() const { return b_; }

  GroupElement inverse() const;
  friend GroupElement operator*(const GroupElement& x, const GroupElement& y);

 private:
  struct Unchecked {};
  GroupElement(complex a, complex b, Unchecked) : a_(a), b_(b) {}

  complex a_{1.0, 0.0};
  complex b_{0.0, 0.0};
};

/// X = [[i c, beta], [-conj(beta), -i c]] in su(2). The inner product is
/// <X, Y> = 1/2 tr(X Y*), so ||X|| = sqrt(c^2 + |beta|^2).
struct LieVector {
  double c = 0.0;
  complex beta{0.0, 0.0};

  double norm() const;
};

/// Conjugacy angle theta in [0, pi]: x is conjugate to diag(e^{i theta}, e^{-i theta}).
double conj_angle(const GroupElement& x);

/// sqrt(1/2 tr((x - y)(x - y)*)), the bi-invariant chordal metric.
double metric_d(const GroupElement& x, const GroupElement& y);

GroupElement exp_map(const LieVector& X);

/// Largest componentwise distance between the (a, b) pairs.
double max_abs_diff(const GroupElement& x, const GroupElement& y);

enum class RuleKind { weyl_1d, haar_euler_3d };

/// Quadrature for the Weyl measure (2/pi) sin^2(theta) d theta on [0, pi].
///
/// This is the Gauss rule of that weight (Chebyshev polynomials of the second
/// kind in cos theta): exact for cos(k theta) sin^2(theta) with k <= 2 order - 1.
struct WeylRule {
  static constexpr RuleKind kind = RuleKind::weyl_1d;
  std::vector<double> theta;
  std::vector<double> weight;

  std::size_t order() const { return theta.size(); }
};

WeylRule weyl_grid(std::size_t order);

/// Product Euler-angle rule for normalized Haar measure.
///
/// Trapezoid in alpha (order points on [0, 2pi)) and gamma (2 order points on
/// [0, 4pi)), Gauss-Legendre in cos(beta). Nodes are generated on the fly;
/// the rule is never materialized.
struct HaarRule {
  static constexpr RuleKind kind = RuleKind::haar_euler_3d;
  std::vector<double> alpha;
  std::vector<double> beta;
  std::vector<double> beta_weight;  // sums to 1
  std::vector<double> gamma;

  std::size_t order() const { return alpha.size(); }
  std::size_t size() const { return alpha.size() * beta.size() * gamma.size(); }
  double weight(std::size_t /*ia*/, std::size_t ib, std::size_t /*ig*/) const {
    return beta_weight[ib] / static_cast<double>(alpha.size() * gamma.size());
  }
  GroupElement element(std::size_t ia, std::size_t ib, std::size_t ig) const {
    return GroupElement::euler(alpha[ia], beta[ib], gamma[ig]);
  }

  /// Calls fn(element, weight) for every node in a fixed order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t ib = 0; ib < beta.size(); ++ib)
      for (std::size_t ia = 0; ia < alpha.size(); ++ia)
        for (std::size_t ig = 0; ig < gamma.size(); ++ig) fn(element(ia, ib, ig), weight(ia, ib, ig));
  }
};

HaarRule haar_grid(std::size_t order);

/// Haar-distributed element (normalized Gaussian in R^4).
GroupElement random_element(std::mt19937_64& rng);

/// Direction uniform on the unit sphere of su(2), scaled to `length`.
LieVector random_lie_vector(std::mt19937_64& rng, double length);

/// Independent, reproducible generator for stream `stream` of `seed`.
std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t stream);

}  // namespace su2f

#endif  // SU2F_GROUP_HPP
