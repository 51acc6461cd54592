#ifndef CLPA_ERROR_HPP_
#define CLPA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace clpa {

  /// Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define CLPA_DEFINE_ERROR(Name)           \
  class Name : public Error {             \
   public:                                \
    using Error::Error;                   \
  }

  CLPA_DEFINE_ERROR(FieldMismatch);
  CLPA_DEFINE_ERROR(DivisionByZero);
  CLPA_DEFINE_ERROR(PeriodMismatch);
  CLPA_DEFINE_ERROR(InvalidGraph);
  CLPA_DEFINE_ERROR(NonFiniteEnumeration);
  CLPA_DEFINE_ERROR(NotASubgraph);
  CLPA_DEFINE_ERROR(ContextMismatch);
  CLPA_DEFINE_ERROR(IncompleteMap);
  CLPA_DEFINE_ERROR(AlgebraMismatch);
  CLPA_DEFINE_ERROR(OracleScaleExceeded);
  CLPA_DEFINE_ERROR(NotNoExitObject);
  CLPA_DEFINE_ERROR(NotAnExit);
  CLPA_DEFINE_ERROR(NoCycle);

  // Raised when an internal verification fails. Never a valid state.
  CLPA_DEFINE_ERROR(ClassificationBug);

#undef CLPA_DEFINE_ERROR

  /// Malformed text input; `position` is a byte offset into the input.
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace clpa

#endif  // CLPA_ERROR_HPP_
