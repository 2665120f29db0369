// Ordered Bratteli diagrams and the lexicographic (Vershik) map on finite paths.
#pragma once

#include "bv/arith.hpp"
#include "bv/decision.hpp"
#include "bv/diagram.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace bv {

/// One edge into a vertex: which vertex of the previous level it comes from,
/// and which of the parallel copies it is.
struct EdgeSlot {
    std::size_t source = 0;
    std::size_t copy = 0;
    friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

/// Slots into one vertex, smallest first.
using VertexOrder = std::vector<EdgeSlot>;
/// One VertexOrder per vertex of a level.
using LevelOrder = std::vector<VertexOrder>;

class OrderedDiagram {
public:
    /// `explicit_orders` matches diagram.explicit_levels() one to one and
    /// `tail_orders` matches diagram.tail(). Throws InvalidOrder when a vertex's
    /// slot list is not a permutation of its incoming edges.
    OrderedDiagram(BratteliDiagram diagram, std::vector<LevelOrder> explicit_orders,
                   std::vector<LevelOrder> tail_orders);

    const BratteliDiagram& diagram() const noexcept { return diagram_; }
    const std::vector<LevelOrder>& explicit_orders() const noexcept { return explicit_orders_; }
    const std::vector<LevelOrder>& tail_orders() const noexcept { return tail_orders_; }

    const VertexOrder& order(std::size_t level, std::size_t vertex) const;
    std::size_t position(std::size_t level, std::size_t vertex, const EdgeSlot& slot) const;
    const EdgeSlot& min_slot(std::size_t level, std::size_t vertex) const { return order(level, vertex).front(); }
    const EdgeSlot& max_slot(std::size_t level, std::size_t vertex) const { return order(level, vertex).back(); }

    friend bool operator==(const OrderedDiagram&, const OrderedDiagram&) = default;

private:
    const LevelOrder& level_order(std::size_t level) const;

    BratteliDiagram diagram_;
    std::vector<LevelOrder> explicit_orders_;
    std::vector<LevelOrder> tail_orders_;
};

/// Each vertex's slots sorted by source index, parallel copies adjacent.
LevelOrder left_right_level_order(const IncidenceMatrix& m);
OrderedDiagram order_left_right(const BratteliDiagram& diagram);

struct PathEdge {
    std::size_t range = 0;  // vertex at this edge's level
    EdgeSlot slot;          // slot.source is the vertex one level up
    friend bool operator==(const PathEdge&, const PathEdge&) = default;
};

/// A path from v_0 down to some vertex; edges[i] lies in E_{i+1}.
struct FinitePath {
    std::vector<PathEdge> edges;

    std::size_t level() const noexcept { return edges.size(); }
    std::size_t terminal() const noexcept { return edges.empty() ? 0 : edges.back().range; }
    friend bool operator==(const FinitePath&, const FinitePath&) = default;
};

/// A path identified by its lexicographic position among the paths into
/// `vertex` at `level`.
struct PathRank {
    std::size_t level = 0;
    std::size_t vertex = 0;
    BigInt rank = 0;
    friend bool operator==(const PathRank&, const PathRank&) = default;
};

/// Tower heights h_0..h_n; h_k[v] = number of paths from v_0 to v in V_k.
std::vector<IntVector> tower_heights(const BratteliDiagram& diagram, std::size_t n);

/// Throws InvalidPath when the edges do not chain or a copy index is out of range.
void validate_path(const OrderedDiagram& ordered, const FinitePath& path);

PathRank rank_of(const OrderedDiagram& ordered, const FinitePath& path);
FinitePath path_of_rank(const OrderedDiagram& ordered, const PathRank& pr);

/// rank + 1 inside the same tower; throws MaxOfTower at the top.
PathRank successor(const OrderedDiagram& ordered, const PathRank& pr);
/// rank - 1 inside the same tower; throws MinOfTower at rank 0.
PathRank predecessor(const OrderedDiagram& ordered, const PathRank& pr);

/// Slot-level lexicographic successor: advance the lowest non-maximal edge and
/// reset everything above it to the minimal path into the new edge's source.
/// Throws MaxOfTower when every edge is maximal.
FinitePath successor_path(const OrderedDiagram& ordered, const FinitePath& path);
FinitePath predecessor_path(const OrderedDiagram& ordered, const FinitePath& path);

/// Minimal (maximal) path from v_0 into a given vertex.
FinitePath min_path_into(const OrderedDiagram& ordered, std::size_t level, std::size_t vertex);
FinitePath max_path_into(const OrderedDiagram& ordered, std::size_t level, std::size_t vertex);

struct ExtremalPath {
    FinitePath path;
    std::size_t terminal = 0;
    /// Several level-n vertices still carry all-min (all-max) chains after
    /// the lookahead; `terminal` is then the lowest candidate.
    bool ambiguous = false;
};

inline constexpr std::size_t kDefaultLookahead = 64;

/// Prefix of x_min (x_max) up to level n. The terminal vertex is found by
/// following min (max) edges back from up to `lookahead` levels deeper.
ExtremalPath min_path(const OrderedDiagram& ordered, std::size_t n,
                      std::size_t lookahead = kDefaultLookahead);
ExtremalPath max_path(const OrderedDiagram& ordered, std::size_t n,
                      std::size_t lookahead = kDefaultLookahead);

/// Backward-contraction test on min and max threads: Yes when from every
/// start level the composed min (and max) source maps become constant within
/// `depth` levels, certified through the periodic tail; No when a composed
/// map over the tail cycles without contracting; Unknown(depth) otherwise.
Decision is_properly_ordered(const OrderedDiagram& ordered, std::size_t depth);

/// Digit n is the position of the path's level-n edge in its vertex's order.
/// Requires constant row sums up to the path's level (NotERS otherwise).
std::vector<std::size_t> factor_to_odometer(const OrderedDiagram& ordered, const FinitePath& path);

}  // namespace bv
