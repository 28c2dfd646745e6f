#ifndef SU2F_H
#define SU2F_H

#include <stddef.h>
#include <stdint.h>

#if defined(SU2F_BUILDING)
#define SU2F_API __attribute__((visibility("default")))
#else
#define SU2F_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum su2f_status {
  SU2F_OK = 0,
  SU2F_INVALID_ARGUMENT = 1,
  SU2F_NOT_NORMALIZED = 2,
  SU2F_OUT_OF_RANGE = 3,
  SU2F_DEGENERATE = 4,
  SU2F_INTERNAL = 5
} su2f_status;

typedef enum su2f_mode { SU2F_POLYHEDRAL = 0, SU2F_SPHERICAL = 1 } su2f_mode;

SU2F_API const char* su2f_version(void);
SU2F_API const char* su2f_status_string(su2f_status status);
/* Message of the last failing call on this thread; "" when none. */
SU2F_API const char* su2f_last_error(void);

/* [[a, b], [-conj(b), conj(a)]] */
typedef struct su2f_element {
  double a_re, a_im, b_re, b_im;
} su2f_element;

SU2F_API su2f_status su2f_element_make(double a_re, double a_im, double b_re, double b_im, su2f_element* out);
SU2F_API su2f_status su2f_identity(su2f_element* out);
SU2F_API su2f_status su2f_torus(double theta, su2f_element* out);
SU2F_API su2f_status su2f_euler(double alpha, double beta, double gamma, su2f_element* out);
SU2F_API su2f_status su2f_mul(const su2f_element* x, const su2f_element* y, su2f_element* out);
SU2F_API su2f_status su2f_inverse(const su2f_element* x, su2f_element* out);
SU2F_API su2f_status su2f_conj_angle(const su2f_element* x, double* out);
SU2F_API su2f_status su2f_metric(const su2f_element* x, const su2f_element* y, double* out);
/* exp of the Lie algebra element [[i c, beta], [-conj(beta), -i c]] */
SU2F_API su2f_status su2f_exp(double c, double beta_re, double beta_im, su2f_element* out);
/* `count` Haar-random elements from stream 0 of `seed`. */
SU2F_API su2f_status su2f_random_elements(uint64_t seed, size_t count, su2f_element* out);

SU2F_API su2f_status su2f_char(int n, double theta, double* out);
/* Row-major (n+1)^2 entries, real and imaginary parts interleaved: 2 (n+1)^2 doubles. */
SU2F_API su2f_status su2f_repr_matrix(int n, const su2f_element* x, double* out, size_t capacity);

SU2F_API su2f_status su2f_dirichlet_direct(int N, double theta, double* out);
SU2F_API su2f_status su2f_dirichlet_closed(int N, double theta, double* out);
SU2F_API su2f_status su2f_lebesgue(int n, double* out);

/* Central function together with its coefficients c_0..c_{n_max}. */
typedef struct su2f_series su2f_series;

/* spec: "sawtooth:<n>", "char:<k>", "cos-power:<alpha>", "cusp:<alpha>", "const:<c>" */
SU2F_API su2f_status su2f_series_from_spec(const char* spec, int n_max, su2f_series** out);
/* Band-limited series with the given coefficients. */
SU2F_API su2f_status su2f_series_from_coeffs(const double* coeffs, size_t count, su2f_series** out);
SU2F_API void su2f_series_free(su2f_series* s);

SU2F_API su2f_status su2f_series_n_max(const su2f_series* s, int* out);
SU2F_API su2f_status su2f_series_coeffs(const su2f_series* s, double* out, size_t capacity);
SU2F_API su2f_status su2f_series_norm_sq(const su2f_series* s, double* out);
SU2F_API su2f_status su2f_series_eval(const su2f_series* s, double theta, double* out);
SU2F_API su2f_status su2f_series_partial_sum(const su2f_series* s, int N, su2f_mode mode, double theta, double* out);
SU2F_API su2f_status su2f_series_best_approx(const su2f_series* s, int M, double* out);
SU2F_API su2f_status su2f_series_rm_sum(const su2f_series* s, int J, double* out);
SU2F_API su2f_status su2f_series_uniform_error(const su2f_series* s, int N, double delta, size_t grid_points,
                                               double* out);

/* Omega(f, t) from the coefficients (haar_order == 0) or from Haar quadrature. */
SU2F_API su2f_status su2f_modulus(const su2f_series* s, double t, size_t samples, uint64_t seed, size_t haar_order,
                                  double* out);
/* Number of radii su2f_modulus_profile produces for these arguments. */
SU2F_API su2f_status su2f_modulus_profile_length(double t_min, double t_max, int points_per_decade, size_t* out);
/* Writes at most `capacity` radii and values, decreasing in t; `count` gets the profile length. */
SU2F_API su2f_status su2f_modulus_profile(const su2f_series* s, double t_min, double t_max, int points_per_decade,
                                          size_t samples, uint64_t seed, double* t_out, double* omega_out,
                                          size_t capacity, size_t* count);
SU2F_API su2f_status su2f_dini_integral(const double* t_values, const double* omega_values, size_t count,
                                        double t_min, double* out);
/* SU2F_DEGENERATE when Omega(f, 2^-k) vanishes. */
SU2F_API su2f_status su2f_jackson_ratio(const su2f_series* s, int k, size_t samples, uint64_t seed, double* out);
SU2F_API su2f_status su2f_holder_estimate(const su2f_series* s, double alpha, size_t samples, uint64_t seed,
                                          double* out);

SU2F_API su2f_status su2f_holder_bound(int n, double alpha, double* out);
SU2F_API su2f_status su2f_sawtooth_seminorm(int n, double alpha, double* out);
SU2F_API su2f_status su2f_sawtooth_identity_sum(int n, double* out);
SU2F_API su2f_status su2f_phi(int n, double* term1, double* term2, double* phi);

typedef struct su2f_chain su2f_chain;

typedef struct su2f_chain_summary {
  int n;
  double alpha;
  double tail_integral;
  double oscillatory_integral;
  double summed_bound;
  double cosine_sum;
  double identity_error;
  double dirichlet_value;
  double dirichlet_floor;
  double term1;
  double term2;
  double phi_value;
  double lebesgue;
  double final_lower_bound;
  double doubled_bound;
  double lipalpha_norm;
  double functional_ratio;
  double min_margin;
  int doubled_bound_met;
  int dirichlet_floor_holds;
  int passed;
} su2f_chain_summary;

typedef struct su2f_interval {
  int k;
  double lhs;
  double weighted_square;
  double frozen_cosine;
  double rhs;
  double margin;
} su2f_interval;

SU2F_API su2f_status su2f_chain_verify(int n, double alpha, su2f_chain** out);
SU2F_API void su2f_chain_free(su2f_chain* c);
SU2F_API su2f_status su2f_chain_summary_get(const su2f_chain* c, su2f_chain_summary* out);
SU2F_API su2f_status su2f_chain_interval_count(const su2f_chain* c, size_t* out);
SU2F_API su2f_status su2f_chain_interval(const su2f_chain* c, size_t index, su2f_interval* out);

typedef struct su2f_divergence_row {
  su2f_element z;
  int n;
  double general_abs;
  double central_abs;
  double relative_gap;
  double growth;
} su2f_divergence_row;

SU2F_API su2f_status su2f_divergence(const su2f_element* z, int n, size_t haar_order, su2f_divergence_row* out);

#ifdef __cplusplus
}
#endif

#endif /* SU2F_H */
