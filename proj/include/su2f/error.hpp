#ifndef SU2F_ERROR_HPP
#define SU2F_ERROR_HPP

#include <stdexcept>
#include <string>

namespace su2f {

enum class ErrorCode {
  invalid_argument = 1,
  not_normalized = 2,
  out_of_range = 3,
  degenerate = 4,
};

// Thrown by the core library; the C layer maps `code()` onto su2f_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace su2f

#endif  // SU2F_ERROR_HPP
