#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realiz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define REALIZ_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

REALIZ_DEFINE_ERROR(InvalidPartition);
REALIZ_DEFINE_ERROR(NotAPartition);
REALIZ_DEFINE_ERROR(InvalidSpace);
REALIZ_DEFINE_ERROR(SpaceMismatch);
REALIZ_DEFINE_ERROR(SpecMismatch);
REALIZ_DEFINE_ERROR(DegreeMismatch);
REALIZ_DEFINE_ERROR(NotHomogeneous);
REALIZ_DEFINE_ERROR(ZeroClass);
REALIZ_DEFINE_ERROR(Unreachable);
REALIZ_DEFINE_ERROR(NotStrict);
REALIZ_DEFINE_ERROR(ExponentOutOfRange);
REALIZ_DEFINE_ERROR(NotSymmetric);

#undef REALIZ_DEFINE_ERROR

/// Malformed class text; `position()` is the byte offset of the problem.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace realiz
