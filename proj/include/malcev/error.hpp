#pragma once

#include <stdexcept>
#include <string>

namespace malcev {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class NonAssociative : public Error {
   public:
    NonAssociative(int x, int y, int z)
        : Error("non-associative at (" + std::to_string(x) + ","
                + std::to_string(y) + "," + std::to_string(z) + ")"),
          x(x),
          y(y),
          z(z) {}
    int x, y, z;
  };

  class OutOfRangeEntry : public Error {
    using Error::Error;
  };
  class NotIdempotent : public Error {
    using Error::Error;
  };
  class IncompatiblePartition : public Error {
    using Error::Error;
  };
  class BudgetExceeded : public Error {
    using Error::Error;
  };
  class UnknownName : public Error {
    using Error::Error;
  };
  class UnboundLetter : public Error {
    using Error::Error;
  };
  class UnsupportedShape : public Error {
    using Error::Error;
  };
  class PreconditionViolated : public Error {
    using Error::Error;
  };
  class NotRegular : public Error {
    using Error::Error;
  };
  class UnsupportedZ : public Error {
    using Error::Error;
  };
  class WrongAlphabet : public Error {
    using Error::Error;
  };
  class FormatError : public Error {
    using Error::Error;
  };

  class SyntaxError : public Error {
   public:
    SyntaxError(std::string const& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    size_t pos;
  };

}  // namespace malcev
