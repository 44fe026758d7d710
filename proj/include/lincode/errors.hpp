#ifndef LINCODE_ERRORS_HPP
#define LINCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lincode {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct RankDeficient : Error { using Error::Error; };
struct NotACodeword : Error { using Error::Error; };
struct WrongField : Error { using Error::Error; };
struct EmptyJd : Error { using Error::Error; };
struct ResourceLimit : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct SymbolOutOfRange : Error { using Error::Error; };

}  // namespace lincode

#endif
