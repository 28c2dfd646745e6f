#include "su2f/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "su2f/error.hpp"
#include "su2f/quadrature.hpp"

namespace su2f {

using std::numbers::pi;

namespace {

void require_sawtooth_index(int n) {
  if (n < 2) throw Error(ErrorCode::invalid_argument, "sawtooth: n must be >= 2");
}

double cell_width(int n) { return 2.0 * pi / (2 * n + 3); }

}  // namespace

CentralFn sawtooth(int n) {
  require_sawtooth_index(n);
  const double step = cell_width(n);
  std::vector<Breakpoint> points;
  points.reserve(n + 3);
  for (int k = 0; k <= n + 1; ++k) points.push_back({k * step, (k % 2 == 0) ? 1.0 : -1.0});
  points.push_back({pi, 0.0});
  return CentralFn::piecewise_linear(std::move(points), "sawtooth:" + std::to_string(n));
}

CentralSeries sawtooth_series(int n, int n_max) {
  const CentralFn f = sawtooth(n);
  CentralSeries s;
  s.coeffs = coeffs_piecewise_linear(f, n_max);
  // g^2 sin^2 is a quadratic times a trigonometric polynomial of frequency 2 on each cell
  const auto& p = f.breakpoints();
  CompensatedSum total;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    total.add(integrate_gauss(
        [&](double t) {
          const double v = f(t) * std::sin(t);
          return v * v;
        },
        p[i].theta, p[i + 1].theta, 8));
  }
  s.norm_sq = 2.0 / pi * total.value();
  return s;
}

double sawtooth_partial_sum_at_identity(int n) {
  const CentralSeries s = sawtooth_series(n, n);
  CompensatedSum sum;
  for (int m = 0; m <= n; ++m) sum.add((m + 1) * s.coeffs[m]);
  return sum.value();
}

double holder_bound(int n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::invalid_argument, "holder_bound: alpha must lie in (0, 1)");
  require_sawtooth_index(n);
  return std::pow(pi / 2.0, alpha) * std::pow(cell_width(n), 1.0 - alpha);
}

double sawtooth_holder_seminorm(int n, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorCode::invalid_argument, "sawtooth_holder_seminorm: alpha must lie in (0, 1)");
  require_sawtooth_index(n);
  return 2.0 / std::pow(2.0 * std::sin(0.5 * cell_width(n)), alpha);
}

double holder_quotient_estimate(const CentralFn& f, double alpha, std::size_t sample_count,
                                std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw Error(ErrorCode::invalid_argument, "holder_quotient_estimate: alpha must lie in (0, 1)");
  std::mt19937_64 rng = seeded_stream(seed, 0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_lo = std::log(1e-6);
  const double log_hi = std::log(pi);
  double best = 0.0;
  for (std::size_t i = 0; i < sample_count; ++i) {
    const double r = std::exp(log_lo + (log_hi - log_lo) * unit(rng));
    GroupElement x, y;
    if (i % 4 == 3) {
      const double t1 = pi * unit(rng);
      double t2 = unit(rng) < 0.5 ? t1 - r : t1 + r;
      t2 = std::clamp(t2, 0.0, pi);
      x = GroupElement::torus(t1);
      y = GroupElement::torus(t2);
    } else {
      x = random_element(rng);
      y = x * exp_map(random_lie_vector(rng, r));
    }
    const double d = metric_d(x, y);
    if (!(d > 0.0)) continue;
    best = std::max(best, std::abs(f.at(x) - f.at(y)) / std::pow(d, alpha));
  }
  return best;
}

PhiDecomposition phi_decomposition(int n, std::size_t nodes_per_cell) {
  const CentralFn f = sawtooth(n);
  const double freq = n + 1.5;
  auto first = [&](double t) {
    const double c = std::cos(0.5 * t);
    return f(t) * c * c * classical_dirichlet(n + 1, t);
  };
  auto second = [&](double t) { return f(t) * std::cos(freq * t) * std::cos(0.5 * t); };
  CompensatedSum s1, s2;
  const auto& p = f.breakpoints();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    s1.add(integrate_gauss(first, p[i].theta, p[i + 1].theta, nodes_per_cell));
    s2.add(integrate_gauss(second, p[i].theta, p[i + 1].theta, nodes_per_cell));
  }
  PhiDecomposition out;
  out.term1 = s1.value() / pi;
  out.term2 = (2 * n + 3) / pi * s2.value();
  out.phi = out.term1 - out.term2;
  return out;
}

double IntervalBound::margin() const {
  return std::min({lhs - weighted_square, weighted_square - frozen_cosine, frozen_cosine - rhs});
}

double ChainReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& cell : per_interval) m = std::min(m, cell.margin());
  m = std::min(m, tail_integral);
  m = std::min(m, oscillatory_integral - summed_bound);
  m = std::min(m, term2 - final_lower_bound);
  m = std::min(m, lebesgue - std::abs(term1));
  return m;
}

bool ChainReport::passed(double margin_tol, double identity_tol) const {
  return min_margin() >= -margin_tol && identity_error <= identity_tol && dirichlet_floor_holds();
}

ChainReport chain_verify(int n, double alpha, std::size_t nodes_per_cell) {
  require_sawtooth_index(n);
  const CentralFn f = sawtooth(n);
  const double step = cell_width(n);
  const double freq = n + 1.5;
  const double angle = pi / (2 * n + 3);

  ChainReport r;
  r.n = n;
  r.alpha = alpha;
  r.per_interval.reserve(n + 1);

  auto oscillating = [&](double t) { return f(t) * std::cos(freq * t) * std::cos(0.5 * t); };
  auto weighted_sq = [&](double t) {
    const double g = f(t);
    return g * g * std::cos(0.5 * t);
  };
  auto square = [&](double t) {
    const double g = f(t);
    return g * g;
  };

  CompensatedSum lhs_total, rhs_total;
  for (int k = 0; k <= n; ++k) {
    const double a = k * step;
    const double b = (k + 1) * step;
    const double frozen = std::cos((k + 1) * angle);
    IntervalBound cell;
    cell.k = k;
    cell.lhs = integrate_gauss(oscillating, a, b, nodes_per_cell);
    cell.weighted_square = integrate_gauss(weighted_sq, a, b, nodes_per_cell);
    cell.frozen_cosine = frozen * integrate_gauss(square, a, b, nodes_per_cell);
    cell.rhs = 2.0 * pi / (3.0 * (2 * n + 3)) * frozen;
    lhs_total.add(cell.lhs);
    rhs_total.add(cell.rhs);
    r.per_interval.push_back(cell);
  }
  r.tail_integral = integrate_gauss(oscillating, (n + 1) * step, pi, nodes_per_cell);
  lhs_total.add(r.tail_integral);
  r.oscillatory_integral = lhs_total.value();
  r.summed_bound = rhs_total.value();

  CompensatedSum cos_sum;
  for (int k = 1; k <= n + 1; ++k) cos_sum.add(std::cos(k * angle));
  r.cosine_sum = cos_sum.value();
  r.dirichlet_value = classical_dirichlet(n + 1, angle);
  r.dirichlet_floor = 2.0 * (2 * n + 3) / pi;
  r.identity_error = std::abs(r.cosine_sum - 0.5 * (r.dirichlet_value - 1.0));

  const PhiDecomposition phi = phi_decomposition(n, nodes_per_cell);
  r.term1 = phi.term1;
  r.term2 = (2 * n + 3) / pi * r.oscillatory_integral;
  r.phi_value = r.term1 - r.term2;
  r.lebesgue = lebesgue_constant(n);
  r.final_lower_bound = (r.dirichlet_value - 1.0) / 3.0;
  r.doubled_bound = 2.0 * (r.dirichlet_value - 1.0) / 3.0;
  r.lipalpha_norm = 1.0 + sawtooth_holder_seminorm(n, alpha);
  r.functional_ratio = std::abs(r.phi_value) / r.lipalpha_norm;
  return r;
}

DivergenceRow divergence_row(const GroupElement& z, int n, std::size_t haar_order) {
  if (n > 24) throw Error(ErrorCode::out_of_range, "divergence_row: the Haar path is capped at n = 24");
  const CentralFn f = sawtooth(n);
  const GroupElement z_inv = z.inverse();
  // L_{z^-1} f_n (y) = f_n(z^-1 y): not central unless z is central
  const GroupFn translated = [&](const GroupElement& y) { return std::complex<double>(f.at(z_inv * y)); };
  const GeneralSeries series = haar_transform(translated, n, haar_grid(haar_order));
  const std::complex<double> general = series.partial_sum(n, TruncationMode::polyhedral, z);
  const double central = sawtooth_partial_sum_at_identity(n);

  DivergenceRow row;
  row.z = z;
  row.n = n;
  row.general_abs = std::abs(general);
  row.central_abs = std::abs(central);
  row.relative_gap = std::abs(general - central) / std::abs(central);
  row.growth = row.central_abs / n;
  return row;
}

std::vector<DivergenceRow> divergence_table(std::span<const GroupElement> points, std::span<const int> n_list,
                                            std::size_t haar_order) {
  std::vector<DivergenceRow> rows;
  rows.reserve(points.size() * n_list.size());
  for (const GroupElement& z : points)
    for (int n : n_list) rows.push_back(divergence_row(z, n, haar_order));
  return rows;
}

}  // namespace su2f
