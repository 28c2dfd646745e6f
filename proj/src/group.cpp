#include "su2f/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "su2f/error.hpp"
#include "su2f/quadrature.hpp"

namespace su2f {

using std::numbers::pi;

GroupElement::GroupElement(complex a, complex b) {
  const double norm_sq = std::norm(a) + std::norm(b);
  if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > 1e-6) {
    std::ostringstream msg;
    msg << "GroupElement: |a|^2 + |b|^2 = " << norm_sq << " is not within 1e-6 of 1";
    throw Error(ErrorCode::not_normalized, msg.str());
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  a_ = a * scale;
  b_ = b * scale;
}

GroupElement GroupElement::torus(double theta) {
  return {std::polar(1.0, theta), complex{0.0, 0.0}, Unchecked{}};
}

GroupElement GroupElement::euler(double alpha, double beta, double gamma) {
  const double c = std::cos(0.5 * beta);
  const double s = std::sin(0.5 * beta);
  return {std::polar(c, -0.5 * (alpha + gamma)), std::polar(-s, -0.5 * (alpha - gamma)), Unchecked{}};
}

GroupElement GroupElement::inverse() const { return {std::conj(a_), -b_, Unchecked{}}; }

GroupElement operator*(const GroupElement& x, const GroupElement& y) {
  const complex a = x.a_ * y.a_ - x.b_ * std::conj(y.b_);
  const complex b = x.a_ * y.b_ + x.b_ * std::conj(y.a_);
  // long products drift off the sphere; pull back without the tolerance check
  const double scale = 1.0 / std::sqrt(std::norm(a) + std::norm(b));
  return {a * scale, b * scale, GroupElement::Unchecked{}};
}

double LieVector::norm() const { return std::sqrt(c * c + std::norm(beta)); }

double conj_angle(const GroupElement& x) {
  // atan2 keeps full relative accuracy near theta = 0 and pi, unlike acos
  const double im = std::hypot(x.a().imag(), std::abs(x.b()));
  return std::atan2(im, x.a().real());
}

double metric_d(const GroupElement& x, const GroupElement& y) {
  // (x - y)(x - y)* = (|da|^2 + |db|^2) I
  return std::hypot(std::abs(x.a() - y.a()), std::abs(x.b() - y.b()));
}

GroupElement exp_map(const LieVector& X) {
  // X^2 = -r^2 I, so exp(X) = cos(r) I + sin(r)/r X
  const double r = X.norm();
  const double sinc = r < 1e-8 ? 1.0 - r * r / 6.0 : std::sin(r) / r;
  return {complex{std::cos(r), X.c * sinc}, X.beta * sinc};
}

double max_abs_diff(const GroupElement& x, const GroupElement& y) {
  const complex da = x.a() - y.a();
  const complex db = x.b() - y.b();
  return std::max({std::abs(da.real()), std::abs(da.imag()), std::abs(db.real()), std::abs(db.imag())});
}

WeylRule weyl_grid(std::size_t order) {
  if (order < 2) throw Error(ErrorCode::invalid_argument, "weyl_grid: order must be >= 2");
  WeylRule rule;
  rule.theta.resize(order);
  rule.weight.resize(order);
  const double step = pi / static_cast<double>(order + 1);
  for (std::size_t i = 0; i < order; ++i) {
    const double t = step * static_cast<double>(i + 1);
    const double s = std::sin(t);
    rule.theta[i] = t;
    rule.weight[i] = 2.0 * s * s / static_cast<double>(order + 1);
  }
  return rule;
}

HaarRule haar_grid(std::size_t order) {
  if (order < 2) throw Error(ErrorCode::invalid_argument, "haar_grid: order must be >= 2");
  HaarRule rule;
  rule.alpha.resize(order);
  rule.gamma.resize(2 * order);
  for (std::size_t i = 0; i < order; ++i) rule.alpha[i] = 2.0 * pi * static_cast<double>(i) / order;
  for (std::size_t i = 0; i < 2 * order; ++i)
    rule.gamma[i] = 4.0 * pi * static_cast<double>(i) / static_cast<double>(2 * order);
  // sin(beta) d beta = d(cos beta)
  const GaussLegendre gl = gauss_legendre(order);
  rule.beta.resize(order);
  rule.beta_weight.resize(order);
  for (std::size_t i = 0; i < order; ++i) {
    rule.beta[i] = std::acos(gl.nodes[i]);
    rule.beta_weight[i] = 0.5 * gl.weights[i];
  }
  return rule;
}

GroupElement random_element(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  for (;;) {
    const double q0 = normal(rng), q1 = normal(rng), q2 = normal(rng), q3 = normal(rng);
    const double r = std::sqrt(q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3);
    if (r < 1e-12) continue;
    return {complex{q0 / r, q1 / r}, complex{q2 / r, q3 / r}};
  }
}

LieVector random_lie_vector(std::mt19937_64& rng, double length) {
  std::normal_distribution<double> normal;
  for (;;) {
    const double x = normal(rng), y = normal(rng), z = normal(rng);
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r < 1e-12) continue;
    return {length * x / r, complex{length * y / r, length * z / r}};
  }
}

std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace su2f
