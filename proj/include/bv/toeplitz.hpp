// Toeplitz sequences read off ERS-ordered diagrams: tower words, windows,
// Per-sets and skeletons, periodic structure, and word-complexity entropy.
#pragma once

#include "bv/arith.hpp"
#include "bv/decision.hpp"
#include "bv/ordered.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace bv {

/// Index of an E_1 edge: vertices in order, parallel copies consecutive.
using Symbol = std::uint32_t;
inline constexpr Symbol kStar = std::numeric_limits<Symbol>::max();

/// Largest tower word that will be materialized.
inline constexpr std::size_t kMaxWordLength = std::size_t{1} << 26;
/// Window length (levels) used when a proper-ordering certificate is needed.
inline constexpr std::size_t kDefaultOrderDepth = 32;

struct SymbolWindow {
    std::int64_t offset = 0;  // position of symbols[0]
    std::vector<Symbol> symbols;

    std::int64_t last() const noexcept { return offset + static_cast<std::int64_t>(symbols.size()) - 1; }
    Symbol at(std::int64_t position) const { return symbols.at(static_cast<std::size_t>(position - offset)); }
};

/// The p-skeleton: letters[a] is the symbol at every position = a (mod p) when
/// those positions agree, kStar otherwise.
struct Skeleton {
    std::size_t period = 0;
    std::vector<Symbol> letters;

    std::vector<std::size_t> periodic_offsets() const;
    /// Per_p(eta, sigma) mod p.
    std::vector<std::size_t> offsets_of(Symbol sigma) const;
};

struct PeriodEntry {
    std::size_t level = 0;
    std::size_t period = 0;
    std::vector<std::size_t> per_offsets;
    Rational density;
    bool essential = false;
};

struct PeriodReport {
    std::vector<PeriodEntry> entries;
    Decision coverage = Decision::unknown(0);
    /// Residues mod p_depth not yet periodic; empty when coverage is Yes.
    std::vector<std::size_t> uncovered;
    Rational limit_estimate;
    Decision certified_regular = Decision::unknown(0);
};

Symbol edge_symbol(const BratteliDiagram& diagram, std::size_t vertex, std::size_t copy);
std::string symbol_label(const BratteliDiagram& diagram, Symbol s);
std::string render(const BratteliDiagram& diagram, const std::vector<Symbol>& symbols);
std::string render(const Skeleton& sk, const BratteliDiagram& diagram);

/// w(v) for every vertex at level n: the first-edge symbols of the paths into
/// v in lexicographic order. Throws DepthExhausted past kMaxWordLength.
std::vector<std::vector<Symbol>> tower_words(const OrderedDiagram& ordered, std::size_t n);
SymbolWindow tower_word(const OrderedDiagram& ordered, std::size_t n, std::size_t vertex);

/// Smallest level whose tower height exceeds `radius`.
std::size_t working_level(const OrderedDiagram& ordered, std::size_t radius);

/// eta restricted to [-N, N], eta(j) = first edge of T^j x_min. Throws
/// NotERS, NotProperlyOrdered (with the decision), DepthExhausted.
SymbolWindow generate_window(const OrderedDiagram& ordered, std::size_t radius,
                             std::size_t order_depth = kDefaultOrderDepth);

/// Exact Per_{p_i} of the bi-infinite sequence, from the level-i tower words.
Skeleton per_set(const OrderedDiagram& ordered, std::size_t level,
                 std::size_t order_depth = kDefaultOrderDepth);

/// No proper divisor q of p leaves the skeleton (with * as a letter)
/// invariant. An all-* skeleton carries no period and is never essential.
bool is_essential(const Skeleton& sk);

PeriodReport periodic_structure(const OrderedDiagram& ordered, std::size_t depth,
                                std::size_t order_depth = kDefaultOrderDepth);

/// Fraction of [-N, N] lying in some Per_{p_i}, i <= depth. Every covered
/// position is checked against the skeleton letter; a disagreement throws
/// SkeletonMismatch.
Rational verify_toeplitz_window(const OrderedDiagram& ordered, std::size_t radius, std::size_t depth,
                                std::size_t order_depth = kDefaultOrderDepth);

/// Number of distinct length-m factors. Throws WindowTooShort when m exceeds
/// the window length or m == 0.
std::size_t word_complexity(const SymbolWindow& window, std::size_t m);

struct EntropyBound {
    std::size_t towers = 0;  // k = |V_n|
    BigInt shortest;         // l_n
    BigInt longest;
    /// |B_m(W_n)| <= k^exponent with exponent = m/l_n + 3.
    Rational exponent;
    /// (1/l_n + 3/m): the entropy bound as a multiple of log k.
    Rational log_k_coefficient;
    /// longest * k^(ceil(m/l_n) + 1): counts the start offset inside the first
    /// concatenated word, which the k^exponent form leaves out.
    BigInt offset_aware_count;
};

EntropyBound entropy_upper_bound(const OrderedDiagram& ordered, std::size_t level, std::size_t m);

/// (1/m) ln(word_complexity(window, m)). Biased low as an estimate of the
/// topological entropy: a finite window misses factors. Requires a window of
/// at least 4m symbols.
double empirical_entropy(const SymbolWindow& window, std::size_t m);

}  // namespace bv
