#include "circarc/rational.hpp"

#include <cctype>

namespace circarc {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_digits(std::string_view s, std::string_view whole) {
    if (!all_digits(s))
        throw ParseError("invalid number '" + std::string(whole) + "'");
    return BigInt(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    if (s.empty()) throw ParseError("empty number");
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw ParseError("invalid number '" + std::string(text) + "'");

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_digits(s.substr(0, slash), text);
        BigInt den = parse_digits(s.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rational(num, den);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty())
            throw ParseError("invalid number '" + std::string(text) + "'");
        BigInt num = ip.empty() ? BigInt(0) : parse_digits(ip, text);
        BigInt den = 1;
        if (!fp.empty()) {
            BigInt frac = parse_digits(fp, text);
            for (size_t i = 0; i < fp.size(); ++i) den *= 10;
            num = num * den + frac;
        }
        value = Rational(num, den);
    } else {
        value = Rational(parse_digits(s, text));
    }
    return negative ? -value : value;
}

std::string rational_to_string(const Rational& x) {
    std::string out = numerator(x).str();
    if (denominator(x) != 1) {
        out += '/';
        out += denominator(x).str();
    }
    return out;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

Rational mod_one(const Rational& x) {
    BigInt fl = floor_div(numerator(x), denominator(x));
    return x - Rational(fl);
}

namespace detail {
void check_failed(const char* what, const char* file, int line) {
    throw std::logic_error(std::string("invariant violated: ") + what + " (" + file + ":" +
                           std::to_string(line) + ")");
}
}  // namespace detail

}  // namespace circarc
