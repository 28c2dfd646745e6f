#include "su2f/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "su2f/error.hpp"
#include "su2f/quadrature.hpp"

namespace su2f {

using std::numbers::pi;

CentralFn::CentralFn(Profile profile, std::string name, std::vector<double> kinks,
                     std::vector<double> singular)
    : profile_(std::move(profile)),
      name_(std::move(name)),
      kinks_(std::move(kinks)),
      singular_(std::move(singular)) {
  if (!profile_) throw Error(ErrorCode::invalid_argument, "CentralFn: empty profile");
  std::sort(kinks_.begin(), kinks_.end());
  std::sort(singular_.begin(), singular_.end());
}

CentralFn CentralFn::piecewise_linear(std::vector<Breakpoint> points, std::string name) {
  if (points.size() < 2 || points.front().theta != 0.0 || points.back().theta != pi)
    throw Error(ErrorCode::invalid_argument, "piecewise_linear: breakpoints must span [0, pi]");
  for (std::size_t i = 1; i < points.size(); ++i)
    if (!(points[i].theta > points[i - 1].theta))
      throw Error(ErrorCode::invalid_argument, "piecewise_linear: breakpoints must increase");

  auto shared = std::make_shared<const std::vector<Breakpoint>>(points);
  auto profile = [shared](double theta) {
    const auto& p = *shared;
    auto it = std::upper_bound(p.begin(), p.end(), theta,
                               [](double t, const Breakpoint& b) { return t < b.theta; });
    if (it == p.begin()) return p.front().value;
    if (it == p.end()) return p.back().value;
    const Breakpoint& hi = *it;
    const Breakpoint& lo = *(it - 1);
    const double s = (theta - lo.theta) / (hi.theta - lo.theta);
    return lo.value + s * (hi.value - lo.value);
  };
  std::vector<double> kinks;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) kinks.push_back(points[i].theta);
  CentralFn f(profile, std::move(name), std::move(kinks));
  f.breakpoints_ = std::move(points);
  return f;
}

std::vector<double> CentralFn::partition() const {
  std::vector<double> p{0.0};
  p.insert(p.end(), kinks_.begin(), kinks_.end());
  p.insert(p.end(), singular_.begin(), singular_.end());
  p.push_back(pi);
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  return p;
}

double coeff_central(const CentralFn& f, int n, const WeylRule& rule) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "coeff_central: n must be nonnegative");
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.theta.size(); ++i)
    sum += rule.weight[i] * f(rule.theta[i]) * char_eval(n, rule.theta[i]);
  return sum;
}

double CoefficientCache::get_or_compute(const std::string& fn, int n, std::size_t order,
                                        const std::function<double()>& compute) {
  const auto key = std::make_tuple(fn, n, order);
  {
    std::lock_guard lock(mutex_);
    auto it = values_.find(key);
    if (it != values_.end()) return it->second;
  }
  const double value = compute();
  std::lock_guard lock(mutex_);
  return values_.emplace(key, value).first->second;
}

std::size_t CoefficientCache::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

std::vector<double> coeffs_central(const CentralFn& f, int n_max, const WeylRule& rule,
                                   CoefficientCache* cache) {
  std::vector<double> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto compute = [&] { return coeff_central(f, n, rule); };
    c[n] = cache ? cache->get_or_compute(f.name(), n, rule.order(), compute) : compute();
  }
  return c;
}

std::vector<double> coeffs_adaptive(const CentralFn& f, int n_max) {
  const std::vector<double> breaks = f.partition();
  std::vector<double> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto integrand = [&](double t) { return f(t) * std::sin((n + 1) * t) * std::sin(t); };
    c[n] = (2.0 / pi) * integrate_composite(integrand, breaks, n + 2.0, f.singular());
  }
  return c;
}

std::vector<double> coeffs_piecewise_linear(const CentralFn& f, int n_max) {
  if (!f.is_piecewise_linear())
    throw Error(ErrorCode::invalid_argument, "coeffs_piecewise_linear: function has no breakpoints");
  const auto& p = f.breakpoints();
  const std::size_t cells = p.size() - 1;
  std::vector<double> slope(cells);
  for (std::size_t i = 0; i < cells; ++i)
    slope[i] = (p[i + 1].value - p[i].value) / (p[i + 1].theta - p[i].theta);

  // J(k) = int_0^pi f cos(k t) dt. Boundary terms f sin(k t)/k vanish at 0 and
  // pi, leaving sum_i slope_i (cos(k t_{i+1}) - cos(k t_i)) / k^2.
  auto J = [&](int k) {
    CompensatedSum s;
    if (k == 0) {
      for (std::size_t i = 0; i < cells; ++i)
        s.add(0.5 * (p[i].value + p[i + 1].value) * (p[i + 1].theta - p[i].theta));
      return s.value();
    }
    for (std::size_t i = 0; i < cells; ++i)
      s.add(slope[i] * (std::cos(k * p[i + 1].theta) - std::cos(k * p[i].theta)));
    return s.value() / (static_cast<double>(k) * k);
  };

  // chi_n sin^2 = sin((n+1)t) sin t = (cos(n t) - cos((n+2) t)) / 2
  std::vector<double> c(n_max + 1);
  std::vector<double> j_cache(n_max + 3);
  for (int k = 0; k <= n_max + 2; ++k) j_cache[k] = J(k);
  for (int n = 0; n <= n_max; ++n) c[n] = (j_cache[n] - j_cache[n + 2]) / pi;
  return c;
}

double norm_sq_adaptive(const CentralFn& f) {
  const std::vector<double> breaks = f.partition();
  auto integrand = [&](double t) {
    const double v = f(t) * std::sin(t);
    return v * v;
  };
  return (2.0 / pi) * integrate_composite(integrand, breaks, 2.0, f.singular());
}

double CentralSeries::partial_sum(const TruncationSet& set, double theta) const {
  if (set.max_index() > n_max())
    throw Error(ErrorCode::out_of_range, "partial_sum: coefficients do not cover the truncation set");
  const double s = std::sin(theta);
  if (std::abs(s) >= 1e-4) {
    double sum = 0.0;
    for (int n : set.members) sum += coeffs[n] * std::sin((n + 1) * theta);
    return sum / s;
  }
  const double x = std::cos(theta);
  double prev = 0.0;  // U_{-1}
  double cur = 1.0;   // U_0
  double sum = 0.0;
  std::size_t next = 0;
  for (int n = 0; n <= set.max_index(); ++n) {
    if (next < set.members.size() && set.members[next] == n) {
      sum += coeffs[n] * cur;
      ++next;
    }
    const double u = 2.0 * x * cur - prev;
    prev = cur;
    cur = u;
  }
  return sum;
}

double CentralSeries::partial_sum(int N, TruncationMode mode, double theta) const {
  return partial_sum(truncation_set(mode, N), theta);
}

double CentralSeries::tail_energy(int M) const {
  double inside = 0.0;
  double outside = 0.0;
  for (int n = 0; n <= n_max(); ++n) (n <= M ? inside : outside) += coeffs[n] * coeffs[n];
  double remainder = 0.0;
  if (!band_limited) remainder = std::max(norm_sq - inside - outside, 0.0);
  return outside + remainder;
}

CentralSeries CentralSeries::truncated(const TruncationSet& set) const {
  CentralSeries out;
  out.coeffs.assign(std::max(set.max_index(), 0) + 1, 0.0);
  for (int n : set.members) {
    if (n > n_max()) throw Error(ErrorCode::out_of_range, "truncated: index beyond coefficients");
    out.coeffs[n] = coeffs[n];
  }
  out.band_limited = true;
  for (double c : out.coeffs) out.norm_sq += c * c;
  return out;
}

CentralSeries CentralSeries::band_limited_from(std::vector<double> coeffs) {
  CentralSeries s;
  s.coeffs = std::move(coeffs);
  s.band_limited = true;
  for (double c : s.coeffs) s.norm_sq += c * c;
  return s;
}

CentralSeries central_series_adaptive(const CentralFn& f, int n_max) {
  CentralSeries s;
  s.coeffs = coeffs_adaptive(f, n_max);
  s.norm_sq = norm_sq_adaptive(f);
  return s;
}

double dirichlet_direct(int N, double theta) {
  if (N < 0) throw Error(ErrorCode::invalid_argument, "dirichlet_direct: N must be nonnegative");
  if (std::abs(std::sin(theta)) >= 1e-4) {
    double sum = 0.0;
    for (int n = 0; n <= N; ++n) sum += (n + 1) * char_eval(n, theta);
    return sum;
  }
  const double x = std::cos(theta);
  double prev = 0.0, cur = 1.0, sum = 0.0;
  for (int n = 0; n <= N; ++n) {
    sum += (n + 1) * cur;
    const double u = 2.0 * x * cur - prev;
    prev = cur;
    cur = u;
  }
  return sum;
}

double dirichlet_closed(int N, double theta) {
  if (N < 0) throw Error(ErrorCode::invalid_argument, "dirichlet_closed: N must be nonnegative");
  const double s = std::sin(theta);
  if (std::abs(s) < 1e-4) return dirichlet_direct(N, theta);
  return -classical_dirichlet_deriv(N + 1, theta) / (2.0 * s);
}

double classical_dirichlet(int n, double t) {
  const double s = std::sin(0.5 * t);
  if (std::abs(s) < 1e-4) {
    double sum = 1.0;
    for (int j = 1; j <= n; ++j) sum += 2.0 * std::cos(j * t);
    return sum;
  }
  return std::sin((2 * n + 1) * 0.5 * t) / s;
}

double classical_dirichlet_deriv(int n, double t) {
  const double s = std::sin(0.5 * t);
  if (std::abs(s) < 1e-4) {
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) sum -= 2.0 * j * std::sin(j * t);
    return sum;
  }
  const double A = (2 * n + 1) * 0.5;
  return (A * std::cos(A * t) * s - 0.5 * std::sin(A * t) * std::cos(0.5 * t)) / (s * s);
}

double lebesgue_constant(int n, std::size_t nodes_per_cell) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "lebesgue_constant: n must be nonnegative");
  const int m = n + 1;
  const double step = 2.0 * pi / (2 * n + 3);
  auto integrand = [m](double t) { return std::abs(classical_dirichlet(m, t)); };
  CompensatedSum total;
  for (int k = 0; k <= m; ++k) {
    const double a = k * step;
    const double b = (k == m) ? pi : (k + 1) * step;
    total.add(integrate_gauss(integrand, a, b, nodes_per_cell));
  }
  return total.value() / pi;
}

std::complex<double> GeneralSeries::partial_sum(const TruncationSet& set, const GroupElement& x) const {
  if (set.max_index() > n_max())
    throw Error(ErrorCode::out_of_range, "partial_sum: blocks do not cover the truncation set");
  std::complex<double> sum = 0.0;
  for (int n : set.members) {
    const Eigen::MatrixXcd P = repr_matrix(n, x);
    sum += static_cast<double>(n + 1) * (blocks[n] * P).trace();
  }
  return sum;
}

std::complex<double> GeneralSeries::partial_sum(int N, TruncationMode mode, const GroupElement& x) const {
  return partial_sum(truncation_set(mode, N), x);
}

double GeneralSeries::block_energy(int n) const { return (n + 1) * blocks.at(n).squaredNorm(); }

Eigen::MatrixXcd coeff_matrix(const GroupFn& f, int n, const HaarRule& rule) {
  Eigen::MatrixXcd F = Eigen::MatrixXcd::Zero(n + 1, n + 1);
  rule.for_each([&](const GroupElement& x, double w) {
    F += (w * f(x)) * repr_matrix(n, x).adjoint();
  });
  return F;
}

GeneralSeries haar_transform(const GroupFn& f, int n_max, const HaarRule& rule) {
  if (n_max < 0 || n_max > kMaxReprIndex)
    throw Error(ErrorCode::out_of_range, "haar_transform: n_max must lie in [0, 64]");
  using cd = std::complex<double>;
  const std::size_t na = rule.alpha.size();
  const std::size_t ng = rule.gamma.size();
  const int width = 2 * n_max + 1;  // half-frequencies P, Q in [-n_max, n_max]

  // e^{i Q gamma / 2} / ng and e^{i P alpha / 2} / na
  std::vector<cd> tw_g(ng * width), tw_a(na * width);
  for (std::size_t c = 0; c < ng; ++c)
    for (int q = -n_max; q <= n_max; ++q)
      tw_g[c * width + (q + n_max)] = std::polar(1.0 / ng, 0.5 * q * rule.gamma[c]);
  for (std::size_t a = 0; a < na; ++a)
    for (int p = -n_max; p <= n_max; ++p)
      tw_a[a * width + (p + n_max)] = std::polar(1.0 / na, 0.5 * p * rule.alpha[a]);

  GeneralSeries out;
  out.blocks.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) out.blocks.push_back(Eigen::MatrixXcd::Zero(n + 1, n + 1));

  std::vector<cd> values(na * ng), H(na * width), G(width * width);
  for (std::size_t ib = 0; ib < rule.beta.size(); ++ib) {
    const double beta = rule.beta[ib];
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t c = 0; c < ng; ++c)
        values[a * ng + c] = f(GroupElement::euler(rule.alpha[a], beta, rule.gamma[c]));

    std::fill(H.begin(), H.end(), cd{});
    for (std::size_t a = 0; a < na; ++a) {
      cd* h = &H[a * width];
      for (std::size_t c = 0; c < ng; ++c) {
        const cd v = values[a * ng + c];
        const cd* t = &tw_g[c * width];
        for (int q = 0; q < width; ++q) h[q] += v * t[q];
      }
    }
    std::fill(G.begin(), G.end(), cd{});
    for (std::size_t a = 0; a < na; ++a) {
      const cd* h = &H[a * width];
      const cd* t = &tw_a[a * width];
      for (int p = 0; p < width; ++p) {
        cd* g = &G[p * width];
        const cd tp = t[p];
        for (int q = 0; q < width; ++q) g[q] += tp * h[q];
      }
    }

    const double wb = rule.beta_weight[ib];
    const GroupElement middle(cd{std::cos(0.5 * beta), 0.0}, cd{-std::sin(0.5 * beta), 0.0});
    for (int n = 0; n <= n_max; ++n) {
      const Eigen::MatrixXd d = repr_matrix(n, middle).real();
      Eigen::MatrixXcd& F = out.blocks[n];
      for (int j = 0; j <= n; ++j) {
        const int q = n - 2 * j + n_max;
        for (int k = 0; k <= n; ++k) {
          const int p = n - 2 * k + n_max;
          F(j, k) += wb * d(k, j) * G[p * width + q];
        }
      }
    }
  }
  return out;
}

}  // namespace su2f
