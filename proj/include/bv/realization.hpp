// Explicit diagram families: odometers, the continued-fraction ERS
// realization of Q + Q*alpha, and 2-symmetric diagrams.
#pragma once

#include "bv/arith.hpp"
#include "bv/k0.hpp"
#include "bv/matrix.hpp"
#include "bv/ordered.hpp"

#include <utility>
#include <vector>

namespace bv {

/// Single vertex per level, base[n] parallel edges, left-right order. `tail`
/// repeats forever after `prefix`. Throws BaseTooSmall, EmptyInput.
OrderedDiagram odometer_diagram(const std::vector<BigInt>& prefix, const std::vector<BigInt>& tail = {});

/// Output of the continued-fraction procedure. Levels are numbered from 1 to
/// level_count(); A_1 = (a_0, 1)^t and A_i = [[a_{i-1}, 1], [1, 0]].
class CFRealization {
public:
    std::size_t level_count() const noexcept { return A_.size(); }
    const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

    const Matrix& A(std::size_t n) const { return A_.at(n - 1); }
    const Matrix& B(std::size_t n) const { return B_.at(n - 1); }
    /// Diagonals of J'_n and J_n, n >= 0 (J_0 = (1), J_1 = identity).
    const std::vector<Rational>& J_prime(std::size_t n) const { return J_prime_.at(n); }
    const std::vector<Rational>& J(std::size_t n) const { return J_.at(n); }
    /// m_n and k_n = n*m_n for n >= 2.
    const BigInt& m(std::size_t n) const { return m_.at(n - 2); }
    const BigInt& k(std::size_t n) const { return k_.at(n - 2); }

    /// Diagram with incidence matrices B_1, B_2, ...
    BratteliDiagram diagram() const;

    friend CFRealization cf_to_ers(const std::vector<BigInt>& coefficients);

private:
    std::vector<BigInt> coefficients_;
    std::vector<Matrix> A_;
    std::vector<Matrix> B_;
    std::vector<std::vector<Rational>> J_prime_;
    std::vector<std::vector<Rational>> J_;
    std::vector<BigInt> m_;
    std::vector<BigInt> k_;
};

/// `coefficients` = (a_0, a_1, ..., a_T) with a_0 = 1, a_i >= 1 and T >= 2.
/// Runs the normalization J'_n, m_n = lcm of denominators of J'_n A_n J_{n-1}^-1,
/// k_n = n m_n, J_n = k_n J'_n, B_n = J_n A_n J_{n-1}^-1, and verifies that B_n
/// is a nonnegative integer matrix with row sums k_n, every entry divisible by
/// n, and B_n J_{n-1} = J_n A_n. Throws InvalidCoefficients.
CFRealization cf_to_ers(const std::vector<BigInt>& coefficients);

/// Pairs (l_n, k_n), n >= 2, for M_n = [[l_n, k_n], [k_n, l_n]]; M_1 = (1,1)^t.
class TwoSymmetricSpec {
public:
    using Pair = std::pair<BigInt, BigInt>;

    /// Throws InvalidPairs unless 1 <= k_n < l_n for every pair and at least
    /// one pair is given.
    TwoSymmetricSpec(std::vector<Pair> prefix, std::vector<Pair> tail = {});
    /// From q_n = l_n + k_n and r_n = l_n - k_n (same parity required).
    static TwoSymmetricSpec from_qr(const std::vector<BigInt>& q, const std::vector<BigInt>& r, bool repeat);

    const std::vector<Pair>& prefix() const noexcept { return prefix_; }
    const std::vector<Pair>& tail() const noexcept { return tail_; }
    bool has_tail() const noexcept { return !tail_.empty(); }
    /// Last level n with a defined M_n (unbounded with a tail).
    bool defines_level(std::size_t n) const noexcept;

    /// (l_n, k_n); throws LevelBeyondSpec.
    const Pair& pair(std::size_t n) const;
    BigInt q(std::size_t n) const;  // q_1 = 2 by convention
    BigInt r(std::size_t n) const;

private:
    std::vector<Pair> prefix_;
    std::vector<Pair> tail_;
};

OrderedDiagram two_symmetric(const TwoSymmetricSpec& spec);

/// M_n ... M_2 = 1/2 [[s+t, s-t], [s-t, s+t]], s = prod q_i, t = prod r_i.
Matrix two_symmetric_product(const TwoSymmetricSpec& spec, std::size_t n);

/// tau(v) = (1,1).v / (q_1 ... q_n) with q_1 = 2. Only defined in the unique
/// state regime, which needs a tail to certify (NotUniqueState otherwise).
Rational two_symmetric_tau(const TwoSymmetricSpec& spec, const K0Element& g);

struct AlphaReport {
    enum class Kind { Divergent, Finite, Unknown };
    Rational partial_product;  // prod_{i=2}^n q_i / r_i
    Rational reciprocal;
    Kind classification = Kind::Unknown;

    std::string classification_string() const;
};

AlphaReport two_symmetric_alpha(const TwoSymmetricSpec& spec, std::size_t n);

}  // namespace bv
