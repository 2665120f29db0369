#include "bv/toeplitz.hpp"

#include "bv/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <unordered_set>

namespace bv {

std::vector<std::size_t> Skeleton::periodic_offsets() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < letters.size(); ++a)
        if (letters[a] != kStar) out.push_back(a);
    return out;
}

std::vector<std::size_t> Skeleton::offsets_of(Symbol sigma) const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < letters.size(); ++a)
        if (letters[a] == sigma) out.push_back(a);
    return out;
}

Symbol edge_symbol(const BratteliDiagram& diagram, std::size_t vertex, std::size_t copy) {
    const auto& m1 = diagram.level_matrix(1);
    std::size_t index = 0;
    for (std::size_t u = 0; u < vertex; ++u) index += to_size(m1(u, 0));
    return static_cast<Symbol>(index + copy);
}

std::string symbol_label(const BratteliDiagram& diagram, Symbol s) {
    if (s == kStar) return "*";
    if (!diagram.alphabet().empty()) return diagram.alphabet().at(s);
    if (s < 26) return std::string(1, static_cast<char>('a' + s));
    if (s < 52) return std::string(1, static_cast<char>('A' + (s - 26)));
    return "[" + std::to_string(s) + "]";
}

std::string render(const BratteliDiagram& diagram, const std::vector<Symbol>& symbols) {
    std::string out;
    for (auto s : symbols) out += symbol_label(diagram, s);
    return out;
}

std::string render(const Skeleton& sk, const BratteliDiagram& diagram) {
    return render(diagram, sk.letters);
}

namespace {

std::vector<std::vector<Symbol>> first_level_words(const OrderedDiagram& ordered) {
    const auto& d = ordered.diagram();
    std::vector<std::vector<Symbol>> words(d.vertex_count(1));
    for (std::size_t v = 0; v < words.size(); ++v)
        for (const auto& slot : ordered.order(1, v)) words[v].push_back(edge_symbol(d, v, slot.copy));
    return words;
}

std::vector<std::vector<Symbol>> next_level_words(const OrderedDiagram& ordered, std::size_t level,
                                                  const std::vector<std::vector<Symbol>>& prev) {
    std::vector<std::vector<Symbol>> words(ordered.diagram().vertex_count(level));
    for (std::size_t v = 0; v < words.size(); ++v) {
        std::size_t length = 0;
        for (const auto& slot : ordered.order(level, v)) length += prev[slot.source].size();
        if (length > kMaxWordLength)
            throw Error(ErrorCode::DepthExhausted, "tower word at level " + std::to_string(level) +
                                                       " would exceed " + std::to_string(kMaxWordLength) +
                                                       " symbols");
        words[v].reserve(length);
        for (const auto& slot : ordered.order(level, v))
            words[v].insert(words[v].end(), prev[slot.source].begin(), prev[slot.source].end());
    }
    return words;
}

void require_ers(const OrderedDiagram& ordered) {
    auto report = ers_row_sums(ordered.diagram(), 1);
    if (!report.certified_all_levels)
        throw Error(ErrorCode::NotERS,
                    "row sums differ at level " + std::to_string(report.violation_level.value_or(0)));
}

void require_proper(const OrderedDiagram& ordered, std::size_t order_depth) {
    auto proper = is_properly_ordered(ordered, order_depth);
    if (!proper.is_yes())
        throw Error(ErrorCode::NotProperlyOrdered, "proper ordering is " + proper.to_string(), proper);
}

std::size_t word_length(const BigInt& h) {
    if (h > kMaxWordLength)
        throw Error(ErrorCode::DepthExhausted, "tower height " + h.str() + " is too large to materialize");
    return to_size(h);
}

Skeleton skeleton_of(const std::vector<std::vector<Symbol>>& words) {
    Skeleton sk;
    sk.period = words.front().size();
    sk.letters = words.front();
    for (const auto& w : words) {
        if (w.size() != sk.period)
            throw Error(ErrorCode::NotERS, "towers of one level have different heights");
        for (std::size_t a = 0; a < sk.period; ++a)
            if (w[a] != sk.letters[a]) sk.letters[a] = kStar;
    }
    return sk;
}

std::int64_t floor_mod(std::int64_t j, std::size_t p) {
    auto m = j % static_cast<std::int64_t>(p);
    return m < 0 ? m + static_cast<std::int64_t>(p) : m;
}

}  // namespace

std::vector<std::vector<Symbol>> tower_words(const OrderedDiagram& ordered, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::InvalidInput, "tower words start at level 1");
    auto words = first_level_words(ordered);
    for (std::size_t level = 2; level <= n; ++level) words = next_level_words(ordered, level, words);
    return words;
}

SymbolWindow tower_word(const OrderedDiagram& ordered, std::size_t n, std::size_t vertex) {
    auto words = tower_words(ordered, n);
    if (vertex >= words.size())
        throw Error(ErrorCode::InvalidInput, "vertex " + std::to_string(vertex) + " does not exist at level " +
                                                 std::to_string(n));
    return SymbolWindow{0, std::move(words[vertex])};
}

std::size_t working_level(const OrderedDiagram& ordered, std::size_t radius) {
    const auto& d = ordered.diagram();
    const std::size_t stall_horizon = d.explicit_levels().size() + d.tail().size();
    IntVector heights{1};
    BigInt last_growth_height = 1;
    std::size_t last_growth = 0;
    for (std::size_t n = 1; d.has_level(n); ++n) {
        heights = d.level_matrix(n).matrix() * heights;
        const BigInt shortest = *std::min_element(heights.begin(), heights.end());
        if (shortest > radius) return n;
        if (shortest > last_growth_height) {
            last_growth_height = shortest;
            last_growth = n;
        }
        // a full tail period without growth never grows again
        if (n > stall_horizon && n - last_growth > d.tail().size())
            break;
    }
    throw Error(ErrorCode::DepthExhausted, "no level has towers taller than " + std::to_string(radius));
}

SymbolWindow generate_window(const OrderedDiagram& ordered, std::size_t radius, std::size_t order_depth) {
    require_ers(ordered);
    require_proper(ordered, order_depth);
    const auto n = working_level(ordered, radius);
    const auto lookahead = std::max(order_depth, kDefaultLookahead);
    const auto lo = min_path(ordered, n, lookahead);
    const auto hi = max_path(ordered, n, lookahead);
    if (lo.ambiguous || hi.ambiguous)
        throw Error(ErrorCode::NotProperlyOrdered, "extremal path at level " + std::to_string(n) + " is ambiguous",
                    Decision::unknown(lookahead));
    auto words = tower_words(ordered, n);
    const auto& up = words[lo.terminal];
    const auto& down = words[hi.terminal];
    SymbolWindow w;
    w.offset = -static_cast<std::int64_t>(radius);
    w.symbols.reserve(2 * radius + 1);
    for (std::size_t k = radius; k >= 1; --k) w.symbols.push_back(down[down.size() - k]);
    for (std::size_t j = 0; j <= radius; ++j) w.symbols.push_back(up[j]);
    return w;
}

Skeleton per_set(const OrderedDiagram& ordered, std::size_t level, std::size_t order_depth) {
    require_ers(ordered);
    require_proper(ordered, order_depth);
    word_length(count_paths(ordered.diagram(), level).front());
    return skeleton_of(tower_words(ordered, level));
}

bool is_essential(const Skeleton& sk) {
    const auto p = sk.period;
    if (std::all_of(sk.letters.begin(), sk.letters.end(), [](Symbol s) { return s == kStar; })) return false;
    for (std::size_t q = 1; q < p; ++q) {
        if (p % q != 0) continue;
        bool invariant = true;
        for (std::size_t a = 0; a < p && invariant; ++a) invariant = sk.letters[a] == sk.letters[(a + q) % p];
        if (invariant) return false;
    }
    return true;
}

PeriodReport periodic_structure(const OrderedDiagram& ordered, std::size_t depth, std::size_t order_depth) {
    if (depth == 0) throw Error(ErrorCode::InvalidInput, "depth must be positive");
    require_ers(ordered);
    require_proper(ordered, order_depth);
    word_length(count_paths(ordered.diagram(), depth).front());

    PeriodReport report;
    std::vector<std::vector<Symbol>> words;
    Skeleton last;
    bool regular = false;
    for (std::size_t i = 1; i <= depth; ++i) {
        words = i == 1 ? first_level_words(ordered) : next_level_words(ordered, i, words);
        last = skeleton_of(words);
        PeriodEntry e;
        e.level = i;
        e.period = last.period;
        e.per_offsets = last.periodic_offsets();
        e.density = Rational(e.per_offsets.size(), e.period);
        e.essential = is_essential(last);
        regular = regular || e.density == 1;
        report.entries.push_back(std::move(e));
    }
    report.limit_estimate = report.entries.back().density;
    for (std::size_t a = 0; a < last.period; ++a)
        if (last.letters[a] == kStar) report.uncovered.push_back(a);
    report.coverage = report.uncovered.empty() ? Decision::yes() : Decision::unknown(depth);
    report.certified_regular = regular ? Decision::yes() : Decision::unknown(depth);
    return report;
}

Rational verify_toeplitz_window(const OrderedDiagram& ordered, std::size_t radius, std::size_t depth,
                                std::size_t order_depth) {
    const auto window = generate_window(ordered, radius, order_depth);
    std::vector<Skeleton> skeletons;
    std::vector<std::vector<Symbol>> words;
    word_length(count_paths(ordered.diagram(), depth).front());
    for (std::size_t i = 1; i <= depth; ++i) {
        words = i == 1 ? first_level_words(ordered) : next_level_words(ordered, i, words);
        skeletons.push_back(skeleton_of(words));
    }
    std::size_t covered = 0;
    for (std::int64_t j = window.offset; j <= window.last(); ++j) {
        bool hit = false;
        for (const auto& sk : skeletons) {
            const auto letter = sk.letters[static_cast<std::size_t>(floor_mod(j, sk.period))];
            if (letter == kStar) continue;
            hit = true;
            if (window.at(j) != letter)
                throw Error(ErrorCode::SkeletonMismatch, "position " + std::to_string(j) + " disagrees with the " +
                                                             std::to_string(sk.period) + "-skeleton");
        }
        if (hit) ++covered;
    }
    return Rational(covered, window.symbols.size());
}

std::size_t word_complexity(const SymbolWindow& window, std::size_t m) {
    if (m == 0 || m > window.symbols.size())
        throw Error(ErrorCode::WindowTooShort, "factor length " + std::to_string(m) + " vs window length " +
                                                   std::to_string(window.symbols.size()));
    std::u32string text(window.symbols.begin(), window.symbols.end());
    std::u32string_view view(text);
    std::unordered_set<std::u32string_view> factors;
    factors.reserve(text.size() - m + 1);
    for (std::size_t i = 0; i + m <= text.size(); ++i) factors.insert(view.substr(i, m));
    return factors.size();
}

EntropyBound entropy_upper_bound(const OrderedDiagram& ordered, std::size_t level, std::size_t m) {
    if (level == 0 || m == 0) throw Error(ErrorCode::InvalidInput, "level and m must be positive");
    const auto heights = count_paths(ordered.diagram(), level);
    EntropyBound b;
    b.towers = heights.size();
    b.shortest = *std::min_element(heights.begin(), heights.end());
    b.longest = *std::max_element(heights.begin(), heights.end());
    b.exponent = Rational(BigInt(m), b.shortest) + 3;
    b.log_k_coefficient = Rational(BigInt(1), b.shortest) + Rational(3, m);
    const BigInt blocks = (BigInt(m) + b.shortest - 1) / b.shortest + 1;
    b.offset_aware_count = b.longest * boost::multiprecision::pow(BigInt(b.towers), static_cast<unsigned>(to_size(blocks)));
    return b;
}

double empirical_entropy(const SymbolWindow& window, std::size_t m) {
    if (m == 0 || window.symbols.size() < 4 * m)
        throw Error(ErrorCode::WindowTooShort, "empirical entropy needs a window of at least 4m symbols");
    return std::log(static_cast<double>(word_complexity(window, m))) / static_cast<double>(m);
}

}  // namespace bv
