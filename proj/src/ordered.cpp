#include "bv/ordered.hpp"

#include "bv/errors.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <utility>

namespace bv {

namespace {

void validate_level_order(const IncidenceMatrix& m, const LevelOrder& order, const std::string& where) {
    if (order.size() != m.rows())
        throw Error(ErrorCode::InvalidOrder, where + ": expected " + std::to_string(m.rows()) +
                                                 " vertex orders, got " + std::to_string(order.size()));
    for (std::size_t v = 0; v < m.rows(); ++v) {
        std::vector<EdgeSlot> sorted = order[v];
        std::sort(sorted.begin(), sorted.end());
        std::vector<EdgeSlot> expected;
        for (std::size_t s = 0; s < m.cols(); ++s) {
            auto mult = to_size(m(v, s));
            for (std::size_t c = 0; c < mult; ++c) expected.push_back({s, c});
        }
        if (sorted != expected)
            throw Error(ErrorCode::InvalidOrder,
                        where + ", vertex " + std::to_string(v) + ": slots do not match the incidence row");
    }
}

}  // namespace

OrderedDiagram::OrderedDiagram(BratteliDiagram diagram, std::vector<LevelOrder> explicit_orders,
                               std::vector<LevelOrder> tail_orders)
    : diagram_(std::move(diagram)),
      explicit_orders_(std::move(explicit_orders)),
      tail_orders_(std::move(tail_orders)) {
    const auto& levels = diagram_.explicit_levels();
    const auto& tail = diagram_.tail();
    if (explicit_orders_.size() != levels.size() || tail_orders_.size() != tail.size())
        throw Error(ErrorCode::InvalidOrder, "orders do not match the diagram's levels");
    for (std::size_t i = 0; i < levels.size(); ++i)
        validate_level_order(levels[i], explicit_orders_[i], "level " + std::to_string(i + 1));
    for (std::size_t i = 0; i < tail.size(); ++i)
        validate_level_order(tail[i], tail_orders_[i], "tail entry " + std::to_string(i));
}

const LevelOrder& OrderedDiagram::level_order(std::size_t level) const {
    diagram_.level_matrix(level);  // range checks
    const auto prefix = explicit_orders_.size();
    if (level <= prefix) return explicit_orders_[level - 1];
    return tail_orders_[(level - prefix - 1) % tail_orders_.size()];
}

const VertexOrder& OrderedDiagram::order(std::size_t level, std::size_t vertex) const {
    const auto& lo = level_order(level);
    if (vertex >= lo.size())
        throw Error(ErrorCode::InvalidPath, "vertex " + std::to_string(vertex) + " does not exist at level " +
                                                std::to_string(level));
    return lo[vertex];
}

std::size_t OrderedDiagram::position(std::size_t level, std::size_t vertex, const EdgeSlot& slot) const {
    const auto& o = order(level, vertex);
    auto it = std::find(o.begin(), o.end(), slot);
    if (it == o.end())
        throw Error(ErrorCode::InvalidPath, "slot (" + std::to_string(slot.source) + "," +
                                                std::to_string(slot.copy) + ") does not enter vertex " +
                                                std::to_string(vertex) + " at level " + std::to_string(level));
    return static_cast<std::size_t>(it - o.begin());
}

LevelOrder left_right_level_order(const IncidenceMatrix& m) {
    LevelOrder out(m.rows());
    for (std::size_t v = 0; v < m.rows(); ++v)
        for (std::size_t s = 0; s < m.cols(); ++s) {
            auto mult = to_size(m(v, s));
            for (std::size_t c = 0; c < mult; ++c) out[v].push_back({s, c});
        }
    return out;
}

OrderedDiagram order_left_right(const BratteliDiagram& diagram) {
    std::vector<LevelOrder> explicit_orders, tail_orders;
    for (const auto& m : diagram.explicit_levels()) explicit_orders.push_back(left_right_level_order(m));
    for (const auto& m : diagram.tail()) tail_orders.push_back(left_right_level_order(m));
    return OrderedDiagram(diagram, std::move(explicit_orders), std::move(tail_orders));
}

std::vector<IntVector> tower_heights(const BratteliDiagram& diagram, std::size_t n) {
    std::vector<IntVector> h;
    h.reserve(n + 1);
    h.push_back(IntVector{1});
    for (std::size_t level = 1; level <= n; ++level)
        h.push_back(diagram.level_matrix(level).matrix() * h.back());
    return h;
}

void validate_path(const OrderedDiagram& ordered, const FinitePath& path) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        const auto& e = path.edges[i];
        const auto& m = ordered.diagram().level_matrix(i + 1);
        if (e.slot.source != prev || e.range >= m.rows() || e.slot.source >= m.cols() ||
            BigInt(e.slot.copy) >= m(e.range, e.slot.source))
            throw Error(ErrorCode::InvalidPath, "edge at level " + std::to_string(i + 1) + " does not chain");
        prev = e.range;
    }
}

PathRank rank_of(const OrderedDiagram& ordered, const FinitePath& path) {
    validate_path(ordered, path);
    const auto n = path.level();
    if (n == 0) return PathRank{0, 0, 0};
    auto heights = tower_heights(ordered.diagram(), n - 1);
    BigInt rank = 0;
    for (std::size_t level = 1; level <= n; ++level) {
        const auto& e = path.edges[level - 1];
        const auto& o = ordered.order(level, e.range);
        for (const auto& s : o) {
            if (s == e.slot) break;
            rank += heights[level - 1][s.source];
        }
    }
    return PathRank{n, path.terminal(), rank};
}

namespace {

void check_rank(const std::vector<IntVector>& heights, const PathRank& pr) {
    const auto& top = heights[pr.level];
    if (pr.vertex >= top.size())
        throw Error(ErrorCode::RankOutOfBounds, "vertex " + std::to_string(pr.vertex) + " does not exist at level " +
                                                    std::to_string(pr.level));
    if (pr.rank < 0 || pr.rank >= top[pr.vertex])
        throw Error(ErrorCode::RankOutOfBounds, "rank " + pr.rank.str() + " outside [0," +
                                                    top[pr.vertex].str() + ")");
}

}  // namespace

FinitePath path_of_rank(const OrderedDiagram& ordered, const PathRank& pr) {
    auto heights = tower_heights(ordered.diagram(), pr.level);
    check_rank(heights, pr);
    FinitePath path;
    path.edges.resize(pr.level);
    BigInt rest = pr.rank;
    std::size_t vertex = pr.vertex;
    for (std::size_t level = pr.level; level >= 1; --level) {
        const auto& o = ordered.order(level, vertex);
        const EdgeSlot* chosen = nullptr;
        for (const auto& s : o) {
            const auto& h = heights[level - 1][s.source];
            if (rest < h) {
                chosen = &s;
                break;
            }
            rest -= h;
        }
        if (!chosen) throw Error(ErrorCode::InternalInvariant, "rank decomposition overran the tower");
        path.edges[level - 1] = PathEdge{vertex, *chosen};
        vertex = chosen->source;
    }
    return path;
}

PathRank successor(const OrderedDiagram& ordered, const PathRank& pr) {
    auto heights = tower_heights(ordered.diagram(), pr.level);
    check_rank(heights, pr);
    if (pr.rank + 1 == heights[pr.level][pr.vertex])
        throw Error(ErrorCode::MaxOfTower, "rank " + pr.rank.str() + " is the top of its tower");
    return PathRank{pr.level, pr.vertex, pr.rank + 1};
}

PathRank predecessor(const OrderedDiagram& ordered, const PathRank& pr) {
    auto heights = tower_heights(ordered.diagram(), pr.level);
    check_rank(heights, pr);
    if (pr.rank == 0) throw Error(ErrorCode::MinOfTower, "rank 0 is the bottom of its tower");
    return PathRank{pr.level, pr.vertex, pr.rank - 1};
}

namespace {

// Fills edges[0..level) with the min (max) chain ending at `vertex`.
void fill_extremal(const OrderedDiagram& ordered, FinitePath& path, std::size_t level, std::size_t vertex,
                   bool use_max) {
    for (std::size_t l = level; l >= 1; --l) {
        const auto& slot = use_max ? ordered.max_slot(l, vertex) : ordered.min_slot(l, vertex);
        path.edges[l - 1] = PathEdge{vertex, slot};
        vertex = slot.source;
    }
}

FinitePath step_path(const OrderedDiagram& ordered, const FinitePath& path, bool forward) {
    validate_path(ordered, path);
    FinitePath out = path;
    for (std::size_t i = 0; i < out.edges.size(); ++i) {
        const auto level = i + 1;
        auto& e = out.edges[i];
        const auto& o = ordered.order(level, e.range);
        auto pos = ordered.position(level, e.range, e.slot);
        if (forward ? pos + 1 < o.size() : pos > 0) {
            e.slot = o[forward ? pos + 1 : pos - 1];
            fill_extremal(ordered, out, level - 1, e.slot.source, !forward);
            return out;
        }
    }
    if (forward) throw Error(ErrorCode::MaxOfTower, "every edge of the path is maximal");
    throw Error(ErrorCode::MinOfTower, "every edge of the path is minimal");
}

}  // namespace

FinitePath successor_path(const OrderedDiagram& ordered, const FinitePath& path) {
    return step_path(ordered, path, true);
}

FinitePath predecessor_path(const OrderedDiagram& ordered, const FinitePath& path) {
    return step_path(ordered, path, false);
}

FinitePath min_path_into(const OrderedDiagram& ordered, std::size_t level, std::size_t vertex) {
    FinitePath p;
    p.edges.resize(level);
    fill_extremal(ordered, p, level, vertex, false);
    return p;
}

FinitePath max_path_into(const OrderedDiagram& ordered, std::size_t level, std::size_t vertex) {
    FinitePath p;
    p.edges.resize(level);
    fill_extremal(ordered, p, level, vertex, true);
    return p;
}

namespace {

// Source map of the min (max) slots at one level: V_level -> V_{level-1}.
std::vector<std::size_t> extremal_sources(const OrderedDiagram& ordered, std::size_t level, bool use_max) {
    const auto count = ordered.diagram().vertex_count(level);
    std::vector<std::size_t> out(count);
    for (std::size_t v = 0; v < count; ++v)
        out[v] = (use_max ? ordered.max_slot(level, v) : ordered.min_slot(level, v)).source;
    return out;
}

bool is_constant(const std::vector<std::size_t>& f) {
    return std::all_of(f.begin(), f.end(), [&](std::size_t x) { return x == f.front(); });
}

ExtremalPath extremal_path(const OrderedDiagram& ordered, std::size_t n, std::size_t lookahead, bool use_max) {
    const auto& d = ordered.diagram();
    // composed: V_m -> V_n, starting with the identity at m = n
    std::vector<std::size_t> composed(d.vertex_count(n));
    for (std::size_t v = 0; v < composed.size(); ++v) composed[v] = v;
    for (std::size_t m = n + 1; m <= n + lookahead && d.has_level(m) && !is_constant(composed); ++m) {
        auto step = extremal_sources(ordered, m, use_max);
        std::vector<std::size_t> next(step.size());
        for (std::size_t v = 0; v < step.size(); ++v) next[v] = composed[step[v]];
        composed = std::move(next);
    }
    ExtremalPath out;
    out.ambiguous = !is_constant(composed);
    out.terminal = *std::min_element(composed.begin(), composed.end());
    out.path.edges.resize(n);
    fill_extremal(ordered, out.path, n, out.terminal, use_max);
    return out;
}

constexpr std::size_t kCertificateSteps = 4096;

// nullopt: certificate of a persistent second thread; otherwise whether every
// start contracted within depth.
std::optional<bool> contraction_within(const OrderedDiagram& ordered, std::size_t depth, bool use_max) {
    const auto& d = ordered.diagram();
    const std::size_t prefix = d.explicit_levels().size();
    const std::size_t period = d.tail().size();
    const std::size_t budget = std::max(depth, kCertificateSteps);
    bool all_within = true;
    for (std::size_t start = 0; start < prefix + period; ++start) {
        std::vector<std::size_t> composed(d.vertex_count(start));
        for (std::size_t v = 0; v < composed.size(); ++v) composed[v] = v;
        std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen;
        std::optional<std::size_t> found = is_constant(composed) ? std::optional<std::size_t>(0) : std::nullopt;
        for (std::size_t m = start + 1; !found && m <= start + budget && d.has_level(m); ++m) {
            auto step = extremal_sources(ordered, m, use_max);
            std::vector<std::size_t> next(step.size());
            for (std::size_t v = 0; v < step.size(); ++v) next[v] = composed[step[v]];
            composed = std::move(next);
            if (is_constant(composed)) {
                found = m - start;
                break;
            }
            if (m > prefix && !seen.emplace((m - prefix - 1) % period, composed).second) return std::nullopt;
        }
        if (!found || *found > depth) all_within = false;
    }
    return all_within;
}

}  // namespace

ExtremalPath min_path(const OrderedDiagram& ordered, std::size_t n, std::size_t lookahead) {
    return extremal_path(ordered, n, lookahead, false);
}

ExtremalPath max_path(const OrderedDiagram& ordered, std::size_t n, std::size_t lookahead) {
    return extremal_path(ordered, n, lookahead, true);
}

Decision is_properly_ordered(const OrderedDiagram& ordered, std::size_t depth) {
    if (!ordered.diagram().has_tail()) return Decision::unknown(depth);
    auto mins = contraction_within(ordered, depth, false);
    auto maxs = contraction_within(ordered, depth, true);
    if (!mins || !maxs) return Decision::no();
    return (*mins && *maxs) ? Decision::yes() : Decision::unknown(depth);
}

std::vector<std::size_t> factor_to_odometer(const OrderedDiagram& ordered, const FinitePath& path) {
    validate_path(ordered, path);
    std::vector<std::size_t> digits;
    digits.reserve(path.level());
    for (std::size_t level = 1; level <= path.level(); ++level) {
        ers_row_sum(ordered.diagram(), level);  // throws NotERS
        const auto& e = path.edges[level - 1];
        digits.push_back(ordered.position(level, e.range, e.slot));
    }
    return digits;
}

}  // namespace bv
