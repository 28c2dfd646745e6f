#ifndef SU2F_REPR_HPP
#define SU2F_REPR_HPP

#include <Eigen/Dense>
#include <vector>

#include "su2f/group.hpp"

namespace su2f {

/// Largest n accepted by repr_matrix.
inline constexpr int kMaxReprIndex = 64;

/// Character of pi_n at the torus element of angle theta: sin((n+1) theta) / sin(theta).
/// Reduced to [0, pi/2] by parity first, so there is no cancellation near theta = pi;
/// returns the limits n + 1 and (-1)^n (n + 1) at the poles.
double char_eval(int n, double theta);

/// Matrix of pi_n (dimension n + 1) acting on degree-n homogeneous polynomials
/// in two variables, orthonormal basis x^{n-j} y^j / sqrt((n-j)! j!).
/// pi_1(x) is the defining 2x2 matrix of x.
Eigen::MatrixXcd repr_matrix(int n, const GroupElement& x);

enum class TruncationMode { polyhedral, spherical };

/// Index set of a truncated Fourier series.
///
/// For SU(2) with the fundamental weight as omega, the polyhedral set is
/// {0..N}. The spherical set {m : ||lambda_m - rho|| <= N} is taken with the
/// lattice normalized so that ||lambda_m - rho|| = |m - 1|.
struct TruncationSet {
  TruncationMode mode = TruncationMode::polyhedral;
  int N = 0;
  std::vector<int> members;              // sorted
  std::vector<std::vector<int>> blocks;  // blocks[j] are the indices in Gamma_j, j = 0..N

  bool contains(int n) const;
  int max_index() const { return members.empty() ? -1 : members.back(); }
};

TruncationSet truncation_set(TruncationMode mode, int N);

}  // namespace su2f

#endif  // SU2F_REPR_HPP
