#ifndef RABKIT_ERRORS_HPP
#define RABKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (JSON, word text, flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An exact computation was requested beyond its configured size limit.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidSyllable : public Error {
 public:
  using Error::Error;
};

class PresentationMismatch : public Error {
 public:
  using Error::Error;
};

/// Infinite panels cannot be enumerated without a colour window.
class WindowRequired : public Error {
 public:
  using Error::Error;
};

class NotABijection : public Error {
 public:
  using Error::Error;
};

class NonComputablePanel : public Error {
 public:
  using Error::Error;
};

class UnsupportedSymbolicGroup : public Error {
 public:
  using Error::Error;
};

/// The vertex group has no homomorphism onto Z/2 sending generators to the involution.
class NoParityMap : public Error {
 public:
  using Error::Error;
};

class RegionTooSmall : public Error {
 public:
  using Error::Error;
};

class DihedralRequired : public Error {
 public:
  using Error::Error;
};

/// Internal assertion failures: these indicate a bug or a violated hypothesis.
class InconsistentImplosion : public Error {
 public:
  using Error::Error;
};

class InconsistentPropagation : public Error {
 public:
  using Error::Error;
};

class NotWellDefined : public Error {
 public:
  using Error::Error;
};

}  // namespace rab

#endif  // RABKIT_ERRORS_HPP
