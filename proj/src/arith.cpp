#include "bv/arith.hpp"

#include "bv/errors.hpp"

#include <boost/multiprecision/integer.hpp>
#include <limits>

namespace bv {

BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    BigInt g = gcd(a, b);
    BigInt r = (a / g) * b;
    return r < 0 ? BigInt(-r) : r;
}

BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

std::string to_fraction_string(const Rational& r) {
    return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace {

BigInt parse_integer(const std::string& text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i >= text.size()) throw Error(ErrorCode::InvalidInput, "expected an integer, got '" + text + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw Error(ErrorCode::InvalidInput, "expected an integer, got '" + text + "'");
    }
    BigInt v(text.substr(i));
    return text[0] == '-' ? BigInt(-v) : v;
}

}  // namespace

Rational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw Error(ErrorCode::Overflow, "integer " + v.str() + " exceeds the 64-bit range");
    return static_cast<std::int64_t>(v);
}

std::size_t to_size(const BigInt& v) {
    if (v < 0 || v > std::numeric_limits<std::size_t>::max())
        throw Error(ErrorCode::Overflow, "value " + v.str() + " does not fit a size");
    return static_cast<std::size_t>(v);
}

std::vector<BigInt> parse_int_list(const std::string& text) {
    std::vector<BigInt> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_integer(item));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace bv
