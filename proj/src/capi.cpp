#include "su2f/su2f.h"

#include <charconv>
#include <cmath>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <string_view>

#include "su2f/convergence.hpp"
#include "su2f/divergence.hpp"
#include "su2f/error.hpp"
#include "su2f/fourier.hpp"
#include "su2f/group.hpp"
#include "su2f/repr.hpp"

#ifndef SU2F_VERSION
#define SU2F_VERSION "0.0.0"
#endif

struct su2f_series {
  su2f::CentralFn fn;
  su2f::CentralSeries series;
};

struct su2f_chain {
  su2f::ChainReport report;
};

namespace {

thread_local std::string last_error;

su2f_status to_status(su2f::ErrorCode code) {
  switch (code) {
    case su2f::ErrorCode::invalid_argument: return SU2F_INVALID_ARGUMENT;
    case su2f::ErrorCode::not_normalized: return SU2F_NOT_NORMALIZED;
    case su2f::ErrorCode::out_of_range: return SU2F_OUT_OF_RANGE;
    case su2f::ErrorCode::degenerate: return SU2F_DEGENERATE;
  }
  return SU2F_INTERNAL;
}

su2f_status fail(su2f_status status, const char* what) {
  last_error = what;
  return status;
}

template <class F>
su2f_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return SU2F_OK;
  } catch (const su2f::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(SU2F_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SU2F_INTERNAL, e.what());
  } catch (...) {
    return fail(SU2F_INTERNAL, "unknown failure");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw su2f::Error(su2f::ErrorCode::invalid_argument, std::string(name) + " is null");
}

su2f::GroupElement from_c(const su2f_element* x) {
  require(x, "element");
  return su2f::GroupElement({x->a_re, x->a_im}, {x->b_re, x->b_im});
}

su2f_element to_c(const su2f::GroupElement& x) {
  return {x.a().real(), x.a().imag(), x.b().real(), x.b().imag()};
}

su2f::TruncationMode to_mode(su2f_mode mode) {
  if (mode == SU2F_POLYHEDRAL) return su2f::TruncationMode::polyhedral;
  if (mode == SU2F_SPHERICAL) return su2f::TruncationMode::spherical;
  throw su2f::Error(su2f::ErrorCode::invalid_argument, "unknown truncation mode");
}

template <class T>
T parse_number(std::string_view text, std::string_view spec) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw su2f::Error(su2f::ErrorCode::invalid_argument, "bad function spec '" + std::string(spec) + "'");
  return value;
}

su2f_series* make_series(std::string_view spec, int n_max) {
  if (n_max < 0) throw su2f::Error(su2f::ErrorCode::invalid_argument, "n_max must be nonnegative");
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw su2f::Error(su2f::ErrorCode::invalid_argument, "function spec needs the form name:parameter");
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);

  if (name == "sawtooth") {
    const int n = parse_number<int>(arg, spec);
    return new su2f_series{su2f::sawtooth(n), su2f::sawtooth_series(n, n_max)};
  }
  if (name == "cos-power") {
    const double alpha = parse_number<double>(arg, spec);
    return new su2f_series{su2f::cos_power(alpha), su2f::cos_power_series(alpha, n_max)};
  }
  if (name == "cusp") {
    const double alpha = parse_number<double>(arg, spec);
    su2f::CentralFn f = su2f::cusp(alpha);
    su2f::CentralSeries s = su2f::central_series_adaptive(f, n_max);
    return new su2f_series{std::move(f), std::move(s)};
  }
  if (name == "char" || name == "const") {
    std::vector<double> coeffs;
    if (name == "char") {
      const int k = parse_number<int>(arg, spec);
      if (k < 0) throw su2f::Error(su2f::ErrorCode::invalid_argument, "char index must be nonnegative");
      coeffs.assign(std::max(k, n_max) + 1, 0.0);
      coeffs[k] = 1.0;
    } else {
      coeffs.assign(n_max + 1, 0.0);
      coeffs[0] = parse_number<double>(arg, spec);
    }
    su2f::CentralSeries s = su2f::CentralSeries::band_limited_from(coeffs);
    su2f::CentralFn f([s](double t) { return s.partial_sum(s.n_max(), su2f::TruncationMode::polyhedral, t); },
                      std::string(spec));
    return new su2f_series{std::move(f), std::move(s)};
  }
  throw su2f::Error(su2f::ErrorCode::invalid_argument, "unknown function '" + std::string(name) + "'");
}

const su2f_series& deref(const su2f_series* s) {
  require(s, "series");
  return *s;
}

template <class T>
void put(T* out, T value) {
  require(out, "output");
  *out = value;
}

su2f::TranslationNorm translation_norm(const su2f_series& s, std::size_t haar_order) {
  if (haar_order == 0) return su2f::spectral_translation_norm(s.series);
  return su2f::haar_translation_norm(su2f::as_group_fn(s.fn), su2f::haar_grid(haar_order));
}

}  // namespace

extern "C" {

const char* su2f_version(void) { return SU2F_VERSION; }

const char* su2f_status_string(su2f_status status) {
  switch (status) {
    case SU2F_OK: return "ok";
    case SU2F_INVALID_ARGUMENT: return "invalid argument";
    case SU2F_NOT_NORMALIZED: return "not normalized";
    case SU2F_OUT_OF_RANGE: return "out of range";
    case SU2F_DEGENERATE: return "degenerate";
    case SU2F_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* su2f_last_error(void) { return last_error.c_str(); }

su2f_status su2f_element_make(double a_re, double a_im, double b_re, double b_im, su2f_element* out) {
  return guard([&] { put(out, to_c(su2f::GroupElement({a_re, a_im}, {b_re, b_im}))); });
}

su2f_status su2f_identity(su2f_element* out) {
  return guard([&] { put(out, to_c(su2f::GroupElement::identity())); });
}

su2f_status su2f_torus(double theta, su2f_element* out) {
  return guard([&] { put(out, to_c(su2f::GroupElement::torus(theta))); });
}

su2f_status su2f_euler(double alpha, double beta, double gamma, su2f_element* out) {
  return guard([&] { put(out, to_c(su2f::GroupElement::euler(alpha, beta, gamma))); });
}

su2f_status su2f_mul(const su2f_element* x, const su2f_element* y, su2f_element* out) {
  return guard([&] { put(out, to_c(from_c(x) * from_c(y))); });
}

su2f_status su2f_inverse(const su2f_element* x, su2f_element* out) {
  return guard([&] { put(out, to_c(from_c(x).inverse())); });
}

su2f_status su2f_conj_angle(const su2f_element* x, double* out) {
  return guard([&] { put(out, su2f::conj_angle(from_c(x))); });
}

su2f_status su2f_metric(const su2f_element* x, const su2f_element* y, double* out) {
  return guard([&] { put(out, su2f::metric_d(from_c(x), from_c(y))); });
}

su2f_status su2f_exp(double c, double beta_re, double beta_im, su2f_element* out) {
  return guard([&] { put(out, to_c(su2f::exp_map(su2f::LieVector{c, {beta_re, beta_im}}))); });
}

su2f_status su2f_random_elements(uint64_t seed, size_t count, su2f_element* out) {
  return guard([&] {
    if (count > 0) require(out, "output");
    std::mt19937_64 rng = su2f::seeded_stream(seed, 0);
    for (size_t i = 0; i < count; ++i) out[i] = to_c(su2f::random_element(rng));
  });
}

su2f_status su2f_char(int n, double theta, double* out) {
  return guard([&] { put(out, su2f::char_eval(n, theta)); });
}

su2f_status su2f_repr_matrix(int n, const su2f_element* x, double* out, size_t capacity) {
  return guard([&] {
    const Eigen::MatrixXcd m = su2f::repr_matrix(n, from_c(x));
    const size_t need = 2 * static_cast<size_t>(m.rows() * m.cols());
    require(out, "output");
    if (capacity < need) throw su2f::Error(su2f::ErrorCode::out_of_range, "repr_matrix: output buffer too small");
    size_t i = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        out[i++] = m(r, c).real();
        out[i++] = m(r, c).imag();
      }
  });
}

su2f_status su2f_dirichlet_direct(int N, double theta, double* out) {
  return guard([&] { put(out, su2f::dirichlet_direct(N, theta)); });
}

su2f_status su2f_dirichlet_closed(int N, double theta, double* out) {
  return guard([&] { put(out, su2f::dirichlet_closed(N, theta)); });
}

su2f_status su2f_lebesgue(int n, double* out) {
  return guard([&] { put(out, su2f::lebesgue_constant(n)); });
}

su2f_status su2f_series_from_spec(const char* spec, int n_max, su2f_series** out) {
  return guard([&] {
    require(spec, "spec");
    require(out, "output");
    *out = make_series(spec, n_max);
  });
}

su2f_status su2f_series_from_coeffs(const double* coeffs, size_t count, su2f_series** out) {
  return guard([&] {
    require(out, "output");
    if (count == 0) throw su2f::Error(su2f::ErrorCode::invalid_argument, "need at least one coefficient");
    require(coeffs, "coeffs");
    su2f::CentralSeries s = su2f::CentralSeries::band_limited_from(std::vector<double>(coeffs, coeffs + count));
    su2f::CentralFn f([s](double t) { return s.partial_sum(s.n_max(), su2f::TruncationMode::polyhedral, t); },
                      "coeffs");
    *out = new su2f_series{std::move(f), std::move(s)};
  });
}

void su2f_series_free(su2f_series* s) { delete s; }

su2f_status su2f_series_n_max(const su2f_series* s, int* out) {
  return guard([&] { put(out, deref(s).series.n_max()); });
}

su2f_status su2f_series_coeffs(const su2f_series* s, double* out, size_t capacity) {
  return guard([&] {
    const auto& c = deref(s).series.coeffs;
    require(out, "output");
    if (capacity < c.size()) throw su2f::Error(su2f::ErrorCode::out_of_range, "coefficient buffer too small");
    std::memcpy(out, c.data(), c.size() * sizeof(double));
  });
}

su2f_status su2f_series_norm_sq(const su2f_series* s, double* out) {
  return guard([&] { put(out, deref(s).series.norm_sq); });
}

su2f_status su2f_series_eval(const su2f_series* s, double theta, double* out) {
  return guard([&] { put(out, deref(s).fn(theta)); });
}

su2f_status su2f_series_partial_sum(const su2f_series* s, int N, su2f_mode mode, double theta, double* out) {
  return guard([&] { put(out, deref(s).series.partial_sum(N, to_mode(mode), theta)); });
}

su2f_status su2f_series_best_approx(const su2f_series* s, int M, double* out) {
  return guard([&] { put(out, su2f::best_approx(deref(s).series, M)); });
}

su2f_status su2f_series_rm_sum(const su2f_series* s, int J, double* out) {
  return guard([&] { put(out, su2f::rm_weighted_sum(deref(s).series, J)); });
}

su2f_status su2f_series_uniform_error(const su2f_series* s, int N, double delta, size_t grid_points, double* out) {
  return guard([&] {
    const su2f_series& h = deref(s);
    put(out, su2f::uniform_error_central(h.fn, h.series, N, delta, grid_points));
  });
}

su2f_status su2f_modulus(const su2f_series* s, double t, size_t samples, uint64_t seed, size_t haar_order,
                         double* out) {
  return guard([&] { put(out, su2f::modulus(translation_norm(deref(s), haar_order), t, samples, seed)); });
}

su2f_status su2f_modulus_profile_length(double t_min, double t_max, int points_per_decade, size_t* out) {
  return guard([&] {
    if (!(t_min > 0.0 && t_min < t_max) || points_per_decade < 1)
      throw su2f::Error(su2f::ErrorCode::invalid_argument, "need 0 < t_min < t_max and points_per_decade >= 1");
    put(out, static_cast<size_t>(std::ceil(std::log10(t_max / t_min) * points_per_decade)) + 1);
  });
}

su2f_status su2f_modulus_profile(const su2f_series* s, double t_min, double t_max, int points_per_decade,
                                 size_t samples, uint64_t seed, double* t_out, double* omega_out, size_t capacity,
                                 size_t* count) {
  return guard([&] {
    const su2f::ModulusProfile p = su2f::modulus_profile(su2f::spectral_translation_norm(deref(s).series), t_min,
                                                         t_max, points_per_decade, samples, seed);
    put(count, p.t_values.size());
    if (capacity < p.t_values.size())
      throw su2f::Error(su2f::ErrorCode::out_of_range, "profile buffer too small");
    require(t_out, "t_out");
    require(omega_out, "omega_out");
    std::copy(p.t_values.begin(), p.t_values.end(), t_out);
    std::copy(p.omega_values.begin(), p.omega_values.end(), omega_out);
  });
}

su2f_status su2f_dini_integral(const double* t_values, const double* omega_values, size_t count, double t_min,
                               double* out) {
  return guard([&] {
    require(t_values, "t_values");
    require(omega_values, "omega_values");
    su2f::ModulusProfile p;
    p.t_values.assign(t_values, t_values + count);
    p.omega_values.assign(omega_values, omega_values + count);
    put(out, su2f::dini_integral(p, t_min));
  });
}

su2f_status su2f_jackson_ratio(const su2f_series* s, int k, size_t samples, uint64_t seed, double* out) {
  return guard([&] {
    const su2f_series& h = deref(s);
    put(out, su2f::jackson_ratio(h.series, su2f::spectral_translation_norm(h.series), k, samples, seed));
  });
}

su2f_status su2f_holder_estimate(const su2f_series* s, double alpha, size_t samples, uint64_t seed, double* out) {
  return guard([&] { put(out, su2f::holder_quotient_estimate(deref(s).fn, alpha, samples, seed)); });
}

su2f_status su2f_holder_bound(int n, double alpha, double* out) {
  return guard([&] { put(out, su2f::holder_bound(n, alpha)); });
}

su2f_status su2f_sawtooth_seminorm(int n, double alpha, double* out) {
  return guard([&] { put(out, su2f::sawtooth_holder_seminorm(n, alpha)); });
}

su2f_status su2f_sawtooth_identity_sum(int n, double* out) {
  return guard([&] { put(out, su2f::sawtooth_partial_sum_at_identity(n)); });
}

su2f_status su2f_phi(int n, double* term1, double* term2, double* phi) {
  return guard([&] {
    const su2f::PhiDecomposition d = su2f::phi_decomposition(n);
    put(term1, d.term1);
    put(term2, d.term2);
    put(phi, d.phi);
  });
}

su2f_status su2f_chain_verify(int n, double alpha, su2f_chain** out) {
  return guard([&] {
    require(out, "output");
    auto c = std::make_unique<su2f_chain>(su2f_chain{su2f::chain_verify(n, alpha)});
    *out = c.release();
  });
}

void su2f_chain_free(su2f_chain* c) { delete c; }

su2f_status su2f_chain_summary_get(const su2f_chain* c, su2f_chain_summary* out) {
  return guard([&] {
    require(c, "chain");
    const su2f::ChainReport& r = c->report;
    su2f_chain_summary s{};
    s.n = r.n;
    s.alpha = r.alpha;
    s.tail_integral = r.tail_integral;
    s.oscillatory_integral = r.oscillatory_integral;
    s.summed_bound = r.summed_bound;
    s.cosine_sum = r.cosine_sum;
    s.identity_error = r.identity_error;
    s.dirichlet_value = r.dirichlet_value;
    s.dirichlet_floor = r.dirichlet_floor;
    s.term1 = r.term1;
    s.term2 = r.term2;
    s.phi_value = r.phi_value;
    s.lebesgue = r.lebesgue;
    s.final_lower_bound = r.final_lower_bound;
    s.doubled_bound = r.doubled_bound;
    s.lipalpha_norm = r.lipalpha_norm;
    s.functional_ratio = r.functional_ratio;
    s.min_margin = r.min_margin();
    s.doubled_bound_met = r.doubled_bound_met();
    s.dirichlet_floor_holds = r.dirichlet_floor_holds();
    s.passed = r.passed();
    put(out, s);
  });
}

su2f_status su2f_chain_interval_count(const su2f_chain* c, size_t* out) {
  return guard([&] {
    require(c, "chain");
    put(out, c->report.per_interval.size());
  });
}

su2f_status su2f_chain_interval(const su2f_chain* c, size_t index, su2f_interval* out) {
  return guard([&] {
    require(c, "chain");
    if (index >= c->report.per_interval.size())
      throw su2f::Error(su2f::ErrorCode::out_of_range, "interval index past the end");
    const su2f::IntervalBound& b = c->report.per_interval[index];
    put(out, su2f_interval{b.k, b.lhs, b.weighted_square, b.frozen_cosine, b.rhs, b.margin()});
  });
}

su2f_status su2f_divergence(const su2f_element* z, int n, size_t haar_order, su2f_divergence_row* out) {
  return guard([&] {
    const su2f::DivergenceRow r = su2f::divergence_row(from_c(z), n, haar_order);
    put(out, su2f_divergence_row{to_c(r.z), r.n, r.general_abs, r.central_abs, r.relative_gap, r.growth});
  });
}

}  // extern "C"
