#pragma once

#include <stdexcept>
#include <string>

namespace ssav {

/// Base of every mathematical domain error raised by the library. `name()`
/// is the stable identifier the CLI prints.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SSAV_DEFINE_ERROR(Type)                                        \
  class Type : public Error {                                          \
   public:                                                             \
    explicit Type(const std::string& what) : Error(#Type, what) {}     \
  }

SSAV_DEFINE_ERROR(BadArguments);
SSAV_DEFINE_ERROR(OutOfRange);
SSAV_DEFINE_ERROR(NotPrime);
SSAV_DEFINE_ERROR(InexactDivision);
SSAV_DEFINE_ERROR(DivisionByZero);
SSAV_DEFINE_ERROR(NotCoprime);
SSAV_DEFINE_ERROR(EvenArgument);
SSAV_DEFINE_ERROR(LevelMismatch);
SSAV_DEFINE_ERROR(NotDivisible);
SSAV_DEFINE_ERROR(NotInQuadraticSubring);
SSAV_DEFINE_ERROR(NonIntegralScaling);
SSAV_DEFINE_ERROR(OddDegree);
SSAV_DEFINE_ERROR(UnsupportedDegree);
SSAV_DEFINE_ERROR(NoConvergence);

#undef SSAV_DEFINE_ERROR

}  // namespace ssav
