// Exception types thrown across the library.
//
// Input problems and violated preconditions are reported by exception; the
// outcome of a mathematical check (axioms, cocycle, cross-checks) is a value.

#ifndef CELLALG_ERRORS_HPP_
#define CELLALG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cellalg {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class FieldMismatch : public Error {
   public:
    using Error::Error;
  };

  class NotAssociative : public Error {
   public:
    NotAssociative(std::size_t x, std::size_t y, std::size_t z)
        : Error("table is not associative: (xy)z != x(yz) for x = "
                + std::to_string(x) + ", y = " + std::to_string(y)
                + ", z = " + std::to_string(z)),
          x(x),
          y(y),
          z(z) {}
    std::size_t x, y, z;
  };

  class BadIdentity : public Error {
   public:
    explicit BadIdentity(std::size_t x)
        : Error("identity law fails at element " + std::to_string(x)), x(x) {}
    std::size_t x;
  };

  class SizeCapExceeded : public Error {
   public:
    using Error::Error;
  };

  class TranslationNotFound : public Error {
   public:
    using Error::Error;
  };

  class InvalidCell : public Error {
   public:
    using Error::Error;
  };

  class NotABasis : public Error {
   public:
    using Error::Error;
  };

  class AxiomViolation : public Error {
   public:
    using Error::Error;
  };

  class GroupMismatch : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedGroup : public Error {
   public:
    using Error::Error;
  };

  class IncompatibleTwisting : public Error {
   public:
    using Error::Error;
  };

  class WrongCharacteristic : public Error {
   public:
    using Error::Error;
  };

  class FormatError : public Error {
   public:
    using Error::Error;
  };

}  // namespace cellalg

#endif  // CELLALG_ERRORS_HPP_
