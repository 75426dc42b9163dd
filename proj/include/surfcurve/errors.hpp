#pragma once

#include <stdexcept>
#include <string>

namespace surfcurve {

// Exit-code classes used by the command line front end.
enum class ErrorClass { InvalidInput = 2, Infeasible = 3, Internal = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorClass cls, std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), cls_(cls), kind_(std::move(kind)) {}

  ErrorClass error_class() const noexcept { return cls_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorClass cls_;
  std::string kind_;
};

inline Error input_error(const std::string& kind, const std::string& what) {
  return Error(ErrorClass::InvalidInput, kind, what);
}
inline Error infeasible(const std::string& what) {
  return Error(ErrorClass::Infeasible, "InfeasibleGoal", what);
}
inline Error internal_error(const std::string& kind, const std::string& what) {
  return Error(ErrorClass::Internal, kind, what);
}

#define SURFCURVE_CHECK(cond, kind, msg)                         \
  do {                                                           \
    if (!(cond)) throw ::surfcurve::internal_error(kind, msg);   \
  } while (0)

}  // namespace surfcurve
