// Exact rational arithmetic helpers shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circarc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a number or a document cannot be parsed; message carries position info.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts "p/q", "-p/q", integer strings, and decimal strings ("0.25").
// Decimal inputs are converted exactly, never rounded.
Rational parse_rational(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string rational_to_string(const Rational& x);

// Floor division for integers (C++ '/' truncates toward zero).
BigInt floor_div(const BigInt& a, const BigInt& b);

// x reduced mod 1 into [0, 1).
Rational mod_one(const Rational& x);

namespace detail {
[[noreturn]] void check_failed(const char* what, const char* file, int line);
}

}  // namespace circarc

// Hard invariant check, always on. Used where the algorithms assert structural
// facts (alternation, constant offsets, solvability) that must never fail.
#define CIRCARC_CHECK(cond, what)                                         \
    (static_cast<bool>(cond) ? void(0)                                    \
                             : ::circarc::detail::check_failed((what), __FILE__, __LINE__))
