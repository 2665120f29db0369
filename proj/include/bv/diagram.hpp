// Bratteli diagrams as a finite prefix of incidence matrices plus an optional
// periodic tail, together with telescoping, simplicity, ERS data and path counts.
#pragma once

#include "bv/arith.hpp"
#include "bv/decision.hpp"
#include "bv/matrix.hpp"
#include "bv/supernatural.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace bv {

inline constexpr std::size_t kDefaultMaxUnroll = 1'000'000;

class BratteliDiagram {
public:
    /// Validates the chain: M_1 has one column, column count of M_n equals the
    /// row count of M_{n-1}, and the tail is cyclically consistent with itself
    /// and with the last explicit level. Throws EmptyInput, DimensionMismatch
    /// or InvalidInput (alphabet length).
    BratteliDiagram(std::vector<IncidenceMatrix> levels,
                    std::vector<IncidenceMatrix> tail = {},
                    std::vector<std::string> alphabet = {});

    const std::vector<IncidenceMatrix>& explicit_levels() const noexcept { return levels_; }
    const std::vector<IncidenceMatrix>& tail() const noexcept { return tail_; }
    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
    bool has_tail() const noexcept { return !tail_.empty(); }

    /// Deepest level that may be requested: the prefix length for finite
    /// diagrams, the unroll limit otherwise.
    std::size_t max_level() const noexcept;
    bool has_level(std::size_t n) const noexcept { return n <= max_level(); }

    /// M_n for n >= 1, unrolling the tail on demand. Throws UnrollLimit past
    /// max_level().
    const IncidenceMatrix& level_matrix(std::size_t n) const;
    std::size_t vertex_count(std::size_t n) const;

    /// Number of E_1 edges (total multiplicity of M_1).
    std::size_t first_level_edges() const;

    BratteliDiagram with_unroll_limit(std::size_t limit) const;
    std::size_t unroll_limit() const noexcept { return max_unroll_; }

    /// Semantic equality: same level sequence (and alphabet). Diagrams with
    /// tails are compared over prefix + lcm of the tail periods.
    friend bool operator==(const BratteliDiagram& a, const BratteliDiagram& b);

private:
    std::vector<IncidenceMatrix> levels_;
    std::vector<IncidenceMatrix> tail_;
    std::vector<std::string> alphabet_;
    std::size_t max_unroll_ = kDefaultMaxUnroll;
};

/// Telescopes to the levels 0 = m_0 < m_1 < ... < m_K given by `cuts`; every
/// level after m_K is kept as is (remaining prefix, then the rotated tail).
/// Throws NotIncreasing or CutsOutOfRange.
BratteliDiagram telescope(const BratteliDiagram& diagram, const std::vector<std::size_t>& cuts);

/// Exact product M_to * ... * M_{from+1} (identity when from == to).
Matrix level_product(const BratteliDiagram& diagram, std::size_t from, std::size_t to);

/// Yes when from every start level some product of at most `depth` consecutive
/// matrices is strictly positive (certified for all levels through the tail);
/// No when the boolean product states over the tail cycle without ever
/// becoming positive; Unknown(depth) otherwise.
Decision is_simple(const BratteliDiagram& diagram, std::size_t depth);

struct ErsReport {
    /// r_1..r_depth when every checked level has constant row sums.
    std::optional<IntVector> row_sums;
    /// First level whose row sums differ.
    std::optional<std::size_t> violation_level;
    /// True when the check covers all levels (prefix + one tail period, or the
    /// whole finite diagram).
    bool certified_all_levels = false;

    bool is_ers() const noexcept { return row_sums.has_value(); }
};

ErsReport ers_row_sums(const BratteliDiagram& diagram, std::size_t depth);

/// True when every level of the diagram has constant row sums.
bool is_ers(const BratteliDiagram& diagram);

/// The constant row sum r_n of M_n; throws NotERS.
BigInt ers_row_sum(const BratteliDiagram& diagram, std::size_t n);

/// prod r_n, a prime getting infinite exponent iff it divides a tail row sum.
/// Throws NoTail, NotERS, FactorBoundExceeded.
SupernaturalNumber supernatural_of(const BratteliDiagram& diagram,
                                   std::uint64_t factor_bound = kDefaultFactorBound);

/// Per-vertex path counts M_n ... M_1 (1); these are the tower heights.
IntVector count_paths(const BratteliDiagram& diagram, std::size_t n);

}  // namespace bv
