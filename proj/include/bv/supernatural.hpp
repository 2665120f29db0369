#pragma once

#include "bv/arith.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace bv {

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000;

/// Prime factorization by trial division up to `bound`. A leftover cofactor is
/// accepted as prime only when it is at most bound^2; otherwise
/// Error(FactorBoundExceeded). n must be positive.
std::map<std::uint64_t, std::uint64_t> factorize(const BigInt& n,
                                                 std::uint64_t bound = kDefaultFactorBound);

/// Formal product p1^k1 p2^k2 ... with exponents in N u {inf}. Canonical: no
/// zero exponents stored, a prime is either finite or infinite, never both.
class SupernaturalNumber {
public:
    SupernaturalNumber() = default;

    static SupernaturalNumber from_integer(const BigInt& n,
                                           std::uint64_t bound = kDefaultFactorBound);
    static SupernaturalNumber infinite_power(std::uint64_t prime);

    /// Multiplies in p^k (k == 0 is a no-op).
    void add_finite(std::uint64_t prime, std::uint64_t exponent);
    void add_infinite(std::uint64_t prime);

    const std::map<std::uint64_t, std::uint64_t>& finite_exponents() const noexcept { return finite_; }
    const std::set<std::uint64_t>& infinite_primes() const noexcept { return infinite_; }

    /// nullopt means infinite exponent.
    std::optional<std::uint64_t> exponent(std::uint64_t prime) const;
    bool is_natural() const noexcept { return infinite_.empty(); }

    /// e.g. "2^2*3^inf", "1" for the empty product.
    std::string to_string() const;

    friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;

private:
    std::map<std::uint64_t, std::uint64_t> finite_;
    std::set<std::uint64_t> infinite_;
};

/// Exponentwise sum, infinity absorbing.
SupernaturalNumber sn_mul(const SupernaturalNumber& a, const SupernaturalNumber& b);

/// m | n iff every exponent of m is at most the matching exponent of n.
bool sn_divides(const SupernaturalNumber& m, const SupernaturalNumber& n);

/// G(m) and G(n) are isomorphic iff a*n = b*m for some naturals a, b, i.e.
/// the infinite-prime sets coincide.
bool sn_equiv(const SupernaturalNumber& m, const SupernaturalNumber& n);

}  // namespace bv
