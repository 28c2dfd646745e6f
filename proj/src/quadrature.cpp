#include "su2f/quadrature.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "su2f/error.hpp"

namespace su2f {

namespace {

struct TableDeleter {
  void operator()(gsl_integration_glfixed_table* t) const { gsl_integration_glfixed_table_free(t); }
};

const GaussLegendre& cached_rule(std::size_t count) {
  static std::mutex mutex;
  static std::map<std::size_t, GaussLegendre> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(count);
  if (it != cache.end()) return it->second;
  return cache.emplace(count, gauss_legendre(count)).first->second;
}

// Appends the interior points and `b` of a geometric refinement of [a, b]
// towards the endpoint(s) flagged singular.
void graded_pieces(double a, double b, bool grade_left, bool grade_right, std::vector<double>& out) {
  constexpr int kLevels = 24;
  constexpr double kRatio = 0.25;
  if (grade_left && grade_right) {
    const double mid = 0.5 * (a + b);
    graded_pieces(a, mid, true, false, out);
    graded_pieces(mid, b, false, true, out);
    return;
  }
  const double len = b - a;
  if (grade_left) {
    for (int i = kLevels; i >= 1; --i) out.push_back(a + len * std::pow(kRatio, i));
  } else if (grade_right) {
    for (int i = 1; i <= kLevels; ++i) out.push_back(b - len * std::pow(kRatio, i));
  }
  out.push_back(b);
}

}  // namespace

GaussLegendre gauss_legendre(std::size_t count) {
  if (count == 0) throw Error(ErrorCode::invalid_argument, "gauss_legendre: count must be positive");
  std::unique_ptr<gsl_integration_glfixed_table, TableDeleter> table(
      gsl_integration_glfixed_table_alloc(count));
  if (!table) throw Error(ErrorCode::invalid_argument, "gauss_legendre: table allocation failed");
  GaussLegendre rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    gsl_integration_glfixed_point(-1.0, 1.0, i, &rule.nodes[i], &rule.weights[i], table.get());
  }
  return rule;
}

double integrate_gauss(const std::function<double(double)>& f, double a, double b, std::size_t count) {
  const GaussLegendre& rule = cached_rule(count);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

double integrate_composite(const std::function<double(double)>& f, std::span<const double> breaks,
                           double max_frequency, std::span<const double> singular,
                           std::size_t nodes_per_piece) {
  if (breaks.size() < 2) return 0.0;
  auto is_singular = [&](double x) {
    return std::any_of(singular.begin(), singular.end(),
                       [x](double s) { return std::abs(s - x) <= 1e-15 * (1.0 + std::abs(x)); });
  };
  const double half_period = max_frequency > 0.0 ? std::numbers::pi / max_frequency : 0.0;
  CompensatedSum total;
  for (std::size_t c = 0; c + 1 < breaks.size(); ++c) {
    const double a = breaks[c];
    const double b = breaks[c + 1];
    if (!(b > a)) continue;
    std::size_t splits = 1;
    if (half_period > 0.0) splits = static_cast<std::size_t>(std::ceil((b - a) / half_period));
    splits = std::max<std::size_t>(splits, 1);
    const double h = (b - a) / static_cast<double>(splits);
    for (std::size_t s = 0; s < splits; ++s) {
      const double lo = a + h * static_cast<double>(s);
      const double hi = (s + 1 == splits) ? b : lo + h;
      const bool left = (s == 0) && is_singular(a);
      const bool right = (s + 1 == splits) && is_singular(b);
      std::vector<double> pts{lo};
      graded_pieces(lo, hi, left, right, pts);
      for (std::size_t p = 0; p + 1 < pts.size(); ++p) {
        total.add(integrate_gauss(f, pts[p], pts[p + 1], nodes_per_piece));
      }
    }
  }
  return total.value();
}

}  // namespace su2f
