#include "bv/supernatural.hpp"

#include "bv/errors.hpp"

namespace bv {

std::map<std::uint64_t, std::uint64_t> factorize(const BigInt& n, std::uint64_t bound) {
    if (n <= 0) throw Error(ErrorCode::InvalidInput, "can only factor positive integers, got " + n.str());
    std::map<std::uint64_t, std::uint64_t> out;
    BigInt rest = n;
    for (std::uint64_t d = 2; d <= bound && BigInt(d) * d <= rest; d += (d == 2 ? 1 : 2)) {
        while (rest % d == 0) {
            rest /= d;
            ++out[d];
        }
    }
    if (rest > 1) {
        BigInt limit = BigInt(bound) * bound;
        if (rest > limit)
            throw Error(ErrorCode::FactorBoundExceeded,
                        "cofactor " + rest.str() + " of " + n.str() + " exceeds the trial-division bound squared");
        ++out[static_cast<std::uint64_t>(rest)];
    }
    return out;
}

SupernaturalNumber SupernaturalNumber::from_integer(const BigInt& n, std::uint64_t bound) {
    SupernaturalNumber s;
    for (auto [p, k] : factorize(n, bound)) s.add_finite(p, k);
    return s;
}

SupernaturalNumber SupernaturalNumber::infinite_power(std::uint64_t prime) {
    SupernaturalNumber s;
    s.add_infinite(prime);
    return s;
}

void SupernaturalNumber::add_finite(std::uint64_t prime, std::uint64_t exponent) {
    if (exponent == 0 || infinite_.count(prime)) return;
    finite_[prime] += exponent;
}

void SupernaturalNumber::add_infinite(std::uint64_t prime) {
    finite_.erase(prime);
    infinite_.insert(prime);
}

std::optional<std::uint64_t> SupernaturalNumber::exponent(std::uint64_t prime) const {
    if (infinite_.count(prime)) return std::nullopt;
    auto it = finite_.find(prime);
    return it == finite_.end() ? 0 : it->second;
}

std::string SupernaturalNumber::to_string() const {
    // merge both key sets in ascending prime order
    std::map<std::uint64_t, std::string> parts;
    for (auto [p, k] : finite_) parts[p] = std::to_string(p) + (k == 1 ? "" : "^" + std::to_string(k));
    for (auto p : infinite_) parts[p] = std::to_string(p) + "^inf";
    if (parts.empty()) return "1";
    std::string out;
    for (const auto& [p, s] : parts) {
        if (!out.empty()) out += "*";
        out += s;
    }
    return out;
}

SupernaturalNumber sn_mul(const SupernaturalNumber& a, const SupernaturalNumber& b) {
    SupernaturalNumber out = a;
    for (auto p : b.infinite_primes()) out.add_infinite(p);
    for (auto [p, k] : b.finite_exponents()) out.add_finite(p, k);
    return out;
}

bool sn_divides(const SupernaturalNumber& m, const SupernaturalNumber& n) {
    for (auto p : m.infinite_primes())
        if (n.exponent(p).has_value()) return false;
    for (auto [p, k] : m.finite_exponents()) {
        auto e = n.exponent(p);
        if (e.has_value() && *e < k) return false;
    }
    return true;
}

bool sn_equiv(const SupernaturalNumber& m, const SupernaturalNumber& n) {
    return m.infinite_primes() == n.infinite_primes();
}

}  // namespace bv
