#include "bv/diagram.hpp"

#include "bv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace bv {

BratteliDiagram::BratteliDiagram(std::vector<IncidenceMatrix> levels,
                                 std::vector<IncidenceMatrix> tail,
                                 std::vector<std::string> alphabet)
    : levels_(std::move(levels)), tail_(std::move(tail)), alphabet_(std::move(alphabet)) {
    if (levels_.empty()) throw Error(ErrorCode::EmptyInput, "a diagram needs at least one level");
    if (levels_.front().cols() != 1)
        throw Error(ErrorCode::DimensionMismatch, "the first matrix must have exactly one column");
    for (std::size_t i = 1; i < levels_.size(); ++i) {
        if (levels_[i].cols() != levels_[i - 1].rows())
            throw Error(ErrorCode::DimensionMismatch,
                        "level " + std::to_string(i + 1) + " has " + std::to_string(levels_[i].cols()) +
                            " columns but level " + std::to_string(i) + " has " +
                            std::to_string(levels_[i - 1].rows()) + " rows");
    }
    if (!tail_.empty()) {
        if (tail_.front().cols() != levels_.back().rows())
            throw Error(ErrorCode::DimensionMismatch, "tail does not chain onto the last explicit level");
        for (std::size_t i = 0; i < tail_.size(); ++i) {
            const auto& prev = tail_[(i + tail_.size() - 1) % tail_.size()];
            if (tail_[i].cols() != prev.rows())
                throw Error(ErrorCode::DimensionMismatch, "tail is not cyclically consistent");
        }
    }
    if (!alphabet_.empty() && alphabet_.size() != first_level_edges())
        throw Error(ErrorCode::InvalidInput, "alphabet has " + std::to_string(alphabet_.size()) +
                                                 " labels but E_1 has " +
                                                 std::to_string(first_level_edges()) + " edges");
}

std::size_t BratteliDiagram::max_level() const noexcept {
    return tail_.empty() ? levels_.size() : std::max(max_unroll_, levels_.size());
}

const IncidenceMatrix& BratteliDiagram::level_matrix(std::size_t n) const {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "level matrices start at level 1");
    if (n <= levels_.size()) return levels_[n - 1];
    if (tail_.empty())
        throw Error(ErrorCode::DepthExhausted, "finite diagram has only " + std::to_string(levels_.size()) +
                                                   " levels, level " + std::to_string(n) + " requested");
    if (n > max_level())
        throw Error(ErrorCode::UnrollLimit, "level " + std::to_string(n) + " exceeds the unroll limit " +
                                                std::to_string(max_unroll_));
    return tail_[(n - levels_.size() - 1) % tail_.size()];
}

std::size_t BratteliDiagram::vertex_count(std::size_t n) const {
    return n == 0 ? 1 : level_matrix(n).rows();
}

std::size_t BratteliDiagram::first_level_edges() const {
    return to_size(levels_.front().matrix().col_sums()[0]);
}

BratteliDiagram BratteliDiagram::with_unroll_limit(std::size_t limit) const {
    BratteliDiagram copy = *this;
    copy.max_unroll_ = limit;
    return copy;
}

bool operator==(const BratteliDiagram& a, const BratteliDiagram& b) {
    if (a.alphabet_ != b.alphabet_ || a.has_tail() != b.has_tail()) return false;
    if (!a.has_tail()) return a.levels_ == b.levels_;
    std::size_t horizon = std::max(a.levels_.size(), b.levels_.size()) +
                          std::lcm(a.tail_.size(), b.tail_.size());
    for (std::size_t n = 1; n <= horizon; ++n) {
        const auto& ma = n <= a.levels_.size() ? a.levels_[n - 1]
                                               : a.tail_[(n - a.levels_.size() - 1) % a.tail_.size()];
        const auto& mb = n <= b.levels_.size() ? b.levels_[n - 1]
                                               : b.tail_[(n - b.levels_.size() - 1) % b.tail_.size()];
        if (!(ma == mb)) return false;
    }
    return true;
}

Matrix level_product(const BratteliDiagram& diagram, std::size_t from, std::size_t to) {
    if (to < from) throw Error(ErrorCode::InvalidInput, "level_product needs from <= to");
    Matrix acc = Matrix::identity(diagram.vertex_count(from));
    for (std::size_t n = from + 1; n <= to; ++n) acc = diagram.level_matrix(n).matrix() * acc;
    return acc;
}

BratteliDiagram telescope(const BratteliDiagram& diagram, const std::vector<std::size_t>& cuts) {
    if (cuts.empty()) return diagram;
    if (cuts.front() == 0) throw Error(ErrorCode::NotIncreasing, "cuts must start above level 0");
    for (std::size_t i = 1; i < cuts.size(); ++i)
        if (cuts[i] <= cuts[i - 1]) throw Error(ErrorCode::NotIncreasing, "cuts must be strictly increasing");
    if (cuts.back() > diagram.max_level())
        throw Error(ErrorCode::CutsOutOfRange, "cut " + std::to_string(cuts.back()) +
                                                   " is beyond the deepest reachable level " +
                                                   std::to_string(diagram.max_level()));

    std::vector<IncidenceMatrix> levels;
    std::size_t prev = 0;
    for (auto cut : cuts) {
        levels.emplace_back(level_product(diagram, prev, cut));
        prev = cut;
    }
    const auto& old = diagram.explicit_levels();
    std::vector<IncidenceMatrix> tail;
    if (prev < old.size()) {
        levels.insert(levels.end(), old.begin() + static_cast<std::ptrdiff_t>(prev), old.end());
        tail = diagram.tail();
    } else if (diagram.has_tail()) {
        tail = diagram.tail();
        auto shift = (prev - old.size()) % tail.size();
        std::rotate(tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(shift), tail.end());
    }
    // E_1 labels survive only when level 1 is untouched
    std::vector<std::string> alphabet = cuts.front() == 1 ? diagram.alphabet() : std::vector<std::string>{};
    return BratteliDiagram(std::move(levels), std::move(tail), std::move(alphabet))
        .with_unroll_limit(diagram.unroll_limit());
}

namespace {

using BoolMatrix = std::vector<std::uint8_t>;

// Boolean product of the support of M (rows x cols) with Q (cols x width).
BoolMatrix bool_product(const IncidenceMatrix& m, const BoolMatrix& q, std::size_t width) {
    BoolMatrix out(m.rows() * width, 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < m.cols(); ++k) {
            if (m(i, k) == 0) continue;
            for (std::size_t j = 0; j < width; ++j)
                if (q[k * width + j]) out[i * width + j] = 1;
        }
    return out;
}

constexpr std::size_t kCertificateSteps = 4096;

}  // namespace

Decision is_simple(const BratteliDiagram& diagram, std::size_t depth) {
    if (!diagram.has_tail()) return Decision::unknown(depth);
    const std::size_t prefix = diagram.explicit_levels().size();
    const std::size_t period = diagram.tail().size();
    const std::size_t budget = std::max(depth, kCertificateSteps);
    bool all_within_depth = true;

    for (std::size_t start = 0; start < prefix + period; ++start) {
        const std::size_t width = diagram.vertex_count(start);
        BoolMatrix q(width * width, 0);
        for (std::size_t i = 0; i < width; ++i) q[i * width + i] = 1;
        std::set<std::pair<std::size_t, BoolMatrix>> seen;
        std::optional<std::size_t> found;
        for (std::size_t m = start + 1; m <= start + budget && diagram.has_level(m); ++m) {
            q = bool_product(diagram.level_matrix(m), q, width);
            if (std::all_of(q.begin(), q.end(), [](std::uint8_t b) { return b != 0; })) {
                found = m - start;
                break;
            }
            if (m > prefix) {
                auto phase = (m - prefix - 1) % period;
                if (!seen.emplace(phase, q).second) return Decision::no();
            }
        }
        if (!found || *found > depth) all_within_depth = false;
    }
    return all_within_depth ? Decision::yes() : Decision::unknown(depth);
}

namespace {

std::optional<BigInt> constant_row_sum(const IncidenceMatrix& m) {
    auto sums = m.matrix().row_sums();
    for (const auto& s : sums)
        if (s != sums.front()) return std::nullopt;
    return sums.front();
}

std::size_t certification_horizon(const BratteliDiagram& d) {
    return d.explicit_levels().size() + d.tail().size();
}

}  // namespace

ErsReport ers_row_sums(const BratteliDiagram& diagram, std::size_t depth) {
    ErsReport report;
    IntVector sums;
    const std::size_t wanted = std::min(depth, diagram.max_level());
    for (std::size_t n = 1; n <= wanted; ++n) {
        auto r = constant_row_sum(diagram.level_matrix(n));
        if (!r) {
            report.violation_level = n;
            return report;
        }
        sums.push_back(*r);
    }
    report.row_sums = std::move(sums);
    const std::size_t horizon = certification_horizon(diagram);
    for (std::size_t n = wanted + 1; n <= horizon; ++n) {
        if (!constant_row_sum(diagram.level_matrix(n))) {
            report.violation_level = n;
            return report;
        }
    }
    report.certified_all_levels = true;
    return report;
}

bool is_ers(const BratteliDiagram& diagram) {
    return ers_row_sums(diagram, 1).certified_all_levels;
}

BigInt ers_row_sum(const BratteliDiagram& diagram, std::size_t n) {
    auto r = constant_row_sum(diagram.level_matrix(n));
    if (!r) throw Error(ErrorCode::NotERS, "level " + std::to_string(n) + " has unequal row sums");
    return *r;
}

SupernaturalNumber supernatural_of(const BratteliDiagram& diagram, std::uint64_t factor_bound) {
    if (!diagram.has_tail())
        throw Error(ErrorCode::NoTail, "a finite prefix does not determine the infinite product");
    auto report = ers_row_sums(diagram, 1);
    if (!report.certified_all_levels)
        throw Error(ErrorCode::NotERS, "row sums differ at level " +
                                           std::to_string(report.violation_level.value_or(0)));
    SupernaturalNumber out;
    for (const auto& m : diagram.tail())
        for (auto [p, k] : factorize(*constant_row_sum(m), factor_bound)) out.add_infinite(p);
    for (const auto& m : diagram.explicit_levels())
        for (auto [p, k] : factorize(*constant_row_sum(m), factor_bound)) out.add_finite(p, k);
    return out;
}

IntVector count_paths(const BratteliDiagram& diagram, std::size_t n) {
    IntVector counts{1};
    for (std::size_t level = 1; level <= n; ++level) counts = diagram.level_matrix(level).matrix() * counts;
    return counts;
}

}  // namespace bv
