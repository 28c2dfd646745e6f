#include "su2f/repr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "su2f/error.hpp"

namespace su2f {

namespace {

using lcomplex = std::complex<long double>;

// Pascal's triangle in long double; exact for n <= 64.
const std::vector<std::vector<long double>>& binomials() {
  static const auto table = [] {
    std::vector<std::vector<long double>> c(kMaxReprIndex + 1);
    for (int n = 0; n <= kMaxReprIndex; ++n) {
      c[n].assign(n + 1, 1.0L);
      for (int k = 1; k < n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
  }();
  return table;
}

}  // namespace

double char_eval(int n, double theta) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "char_eval: n must be nonnegative");
  // chi_n is even, 2 pi periodic, and chi_n(pi - u) = (-1)^n chi_n(u)
  double u = std::abs(std::remainder(theta, 2.0 * std::numbers::pi));
  double sign = 1.0;
  if (u > 0.5 * std::numbers::pi) {
    u = std::numbers::pi - u;
    if (n % 2 != 0) sign = -1.0;
  }
  if (u == 0.0) return sign * (n + 1);
  return sign * std::sin((n + 1) * u) / std::sin(u);
}

Eigen::MatrixXcd repr_matrix(int n, const GroupElement& x) {
  if (n < 0 || n > kMaxReprIndex)
    throw Error(ErrorCode::out_of_range, "repr_matrix: n must lie in [0, 64]");
  const auto& C = binomials();
  const lcomplex a(x.a().real(), x.a().imag());
  const lcomplex b(x.b().real(), x.b().imag());
  const lcomplex mb = -std::conj(b);
  const lcomplex ac = std::conj(a);

  std::vector<lcomplex> pa(n + 1), pmb(n + 1), pb(n + 1), pac(n + 1);
  pa[0] = pmb[0] = pb[0] = pac[0] = 1.0L;
  for (int i = 1; i <= n; ++i) {
    pa[i] = pa[i - 1] * a;
    pmb[i] = pmb[i - 1] * mb;
    pb[i] = pb[i - 1] * b;
    pac[i] = pac[i - 1] * ac;
  }

  // e_k(v g) = (x a - y conj b)^{n-k} (x b + y conj a)^k; collect x^{n-j} y^j
  Eigen::MatrixXcd M(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= n; ++j) {
      const int xdeg = n - j;
      lcomplex sum = 0.0L;
      const int p_lo = std::max(0, xdeg - k);
      const int p_hi = std::min(n - k, xdeg);
      for (int p = p_lo; p <= p_hi; ++p) {
        const int q = xdeg - p;
        sum += C[n - k][p] * C[k][q] * pa[p] * pmb[n - k - p] * pb[q] * pac[k - q];
      }
      const long double norm = std::sqrt(C[n][k] / C[n][j]);
      const lcomplex v = sum * norm;
      M(j, k) = std::complex<double>(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
  }
  return M;
}

bool TruncationSet::contains(int n) const { return std::binary_search(members.begin(), members.end(), n); }

TruncationSet truncation_set(TruncationMode mode, int N) {
  if (N < 0) throw Error(ErrorCode::invalid_argument, "truncation_set: N must be nonnegative");
  TruncationSet set;
  set.mode = mode;
  set.N = N;
  set.blocks.resize(N + 1);
  if (mode == TruncationMode::polyhedral) {
    for (int j = 0; j <= N; ++j) {
      set.members.push_back(j);
      set.blocks[j] = {j};
    }
    return set;
  }
  for (int m = 0; m <= N + 1; ++m)
    if (std::abs(m - 1) <= N) set.members.push_back(m);
  set.blocks[0] = {1};
  if (N >= 1) set.blocks[1] = {0, 2};
  for (int j = 2; j <= N; ++j) set.blocks[j] = {j + 1};
  return set;
}

}  // namespace su2f
