#include "oracle.hpp"
#include "support.hpp"

#include "bv/ordered.hpp"
#include "bv/realization.hpp"

#include <doctest.h>

using namespace bv;
using support::code_of;

namespace {

constexpr std::size_t A = 0;
constexpr std::size_t B = 1;

FinitePath from_oracle(const oracle::Path& p) {
    FinitePath out;
    for (const auto& e : p) out.edges.push_back(PathEdge{e.range, EdgeSlot{e.source, e.copy}});
    return out;
}

// add one with carry in base (r_1, ..., r_n), digit 1 first
bool increment(std::vector<std::size_t>& digits, const std::vector<std::size_t>& base) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < base[i]) return true;
        digits[i] = 0;
    }
    return false;
}

}  // namespace

TEST_SUITE("ordering") {

TEST_CASE("left-right order") {
    auto o = oracle::d2sym();
    CHECK(o.order(2, A) == VertexOrder{{A, 0}, {A, 1}, {B, 0}});
    CHECK(o.order(2, B) == VertexOrder{{A, 0}, {B, 0}, {B, 1}});
    CHECK(left_right_level_order(IncidenceMatrix{{0, 3}, {1, 0}})[0] == VertexOrder{{B, 0}, {B, 1}, {B, 2}});
    CHECK(left_right_level_order(IncidenceMatrix{{4}})[0] == VertexOrder{{0, 0}, {0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("explicit orders must be permutations of the incoming edges") {
    BratteliDiagram d({IncidenceMatrix{{1}, {1}}}, {IncidenceMatrix{{2, 1}, {1, 2}}});
    auto lr = order_left_right(d);
    LevelOrder bad = lr.tail_orders()[0];
    bad[0][2] = EdgeSlot{A, 2};
    CHECK(code_of([&] { OrderedDiagram(d, lr.explicit_orders(), {bad}); }) == ErrorCode::InvalidOrder);
    bad = lr.tail_orders()[0];
    bad[0].pop_back();
    CHECK(code_of([&] { OrderedDiagram(d, lr.explicit_orders(), {bad}); }) == ErrorCode::InvalidOrder);
}

TEST_CASE("rank examples") {
    auto o = oracle::d2sym();
    auto p0 = path_of_rank(o, PathRank{2, A, 0});
    CHECK(p0.edges[1].slot == EdgeSlot{A, 0});
    CHECK(p0.edges[0].range == A);
    auto p2 = path_of_rank(o, PathRank{2, A, 2});
    CHECK(p2.edges[1].slot == EdgeSlot{B, 0});
    CHECK(p2.edges[0].range == B);
    CHECK(code_of([&] { path_of_rank(o, PathRank{2, A, 3}); }) == ErrorCode::RankOutOfBounds);

    FinitePath broken = p2;
    broken.edges[0].range = A;
    CHECK(code_of([&] { validate_path(o, broken); }) == ErrorCode::InvalidPath);
}

TEST_CASE("rank_of and path_of_rank are inverse and match the sorted enumeration") {
    std::vector<OrderedDiagram> cases{oracle::d2sym(), odometer_diagram({2, 3}, {2})};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 10; ++i) cases.push_back(order_left_right(oracle::random_ers_diagram(rng)));
    for (const auto& o : cases) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto heights = tower_heights(o.diagram(), n).back();
            for (std::size_t v = 0; v < heights.size(); ++v) {
                if (heights[v] > 100) continue;
                const auto sorted = oracle::sorted_paths_into(o, n, v);
                REQUIRE(BigInt(sorted.size()) == heights[v]);
                for (std::size_t r = 0; r < sorted.size(); ++r) {
                    const PathRank pr{n, v, BigInt(r)};
                    const auto path = path_of_rank(o, pr);
                    CHECK(path == from_oracle(sorted[r]));
                    CHECK(rank_of(o, path) == pr);
                }
            }
        }
    }
}

TEST_CASE("successor and predecessor on ranks") {
    auto o = oracle::d2sym();
    CHECK(successor(o, PathRank{2, A, 0}) == PathRank{2, A, 1});
    CHECK(code_of([&] { successor(o, PathRank{2, A, 2}); }) == ErrorCode::MaxOfTower);
    CHECK(predecessor(o, PathRank{2, A, 1}) == PathRank{2, A, 0});
    CHECK(code_of([&] { predecessor(o, PathRank{2, A, 0}); }) == ErrorCode::MinOfTower);
    for (std::size_t v : {A, B})
        for (int r = 0; r < 8; ++r) {
            PathRank pr{3, v, r};
            CHECK(predecessor(o, successor(o, pr)) == pr);
            PathRank up{3, v, r + 1};
            CHECK(successor(o, predecessor(o, up)) == up);
        }
}

TEST_CASE("slot-level successor walks each tower in rank order") {
    auto o = oracle::d2sym();
    for (std::size_t n = 1; n <= 5; ++n)
        for (std::size_t v : {A, B}) {
            auto path = min_path_into(o, n, v);
            CHECK(rank_of(o, path).rank == 0);
            BigInt expected = 0;
            for (;;) {
                CHECK(rank_of(o, path) == PathRank{n, v, expected});
                try {
                    auto next = successor_path(o, path);
                    CHECK(predecessor_path(o, next) == path);
                    path = next;
                    ++expected;
                } catch (const Error& e) {
                    CHECK(e.code() == ErrorCode::MaxOfTower);
                    break;
                }
            }
            CHECK(expected + 1 == count_paths(o.diagram(), n)[v]);
            CHECK(path == max_path_into(o, n, v));
        }
}

TEST_CASE("extremal paths") {
    auto o = oracle::d2sym();
    for (std::size_t n = 1; n <= 6; ++n) {
        auto mn = min_path(o, n);
        auto mx = max_path(o, n);
        CHECK(mn.terminal == A);
        CHECK(mx.terminal == B);
        CHECK_FALSE(mn.ambiguous);
        CHECK_FALSE(mx.ambiguous);
        for (const auto& e : mn.path.edges) CHECK(e.slot.copy == 0);
    }
    auto odo = odometer_diagram({}, {2, 3});
    for (const auto& e : min_path(odo, 5).path.edges) CHECK(e.slot == EdgeSlot{0, 0});
}

TEST_CASE("proper ordering") {
    CHECK(is_properly_ordered(oracle::d2sym(), 4).is_yes());
    auto threads = order_left_right(BratteliDiagram({IncidenceMatrix{{1}, {1}}}, {IncidenceMatrix{{1, 0}, {0, 1}}}));
    CHECK(is_properly_ordered(threads, 8).is_no());

    // A's minimal edge comes from A, B's from B: two min threads forever
    BratteliDiagram pos({IncidenceMatrix{{1}, {1}}}, {IncidenceMatrix{{2, 1}, {1, 2}}});
    LevelOrder adversarial{{{A, 0}, {B, 0}, {A, 1}}, {{B, 0}, {A, 0}, {B, 1}}};
    OrderedDiagram adv(pos, order_left_right(pos).explicit_orders(), {adversarial});
    CHECK(is_properly_ordered(adv, 8).is_no());
    CHECK(min_path(adv, 3).ambiguous);

    // prefix only: undetermined
    CHECK(is_properly_ordered(order_left_right(BratteliDiagram({IncidenceMatrix{{1}, {1}}})), 3).is_unknown());
}

TEST_CASE("factor_to_odometer reads slot positions") {
    auto o = oracle::d2sym();
    CHECK(factor_to_odometer(o, min_path(o, 4).path) == std::vector<std::size_t>{0, 0, 0, 0});
    CHECK(factor_to_odometer(o, path_of_rank(o, PathRank{2, A, 2})) == std::vector<std::size_t>{0, 2});

    BratteliDiagram non_ers({IncidenceMatrix{{1}, {2}}, IncidenceMatrix{{1, 1}, {2, 1}}});
    auto ne = order_left_right(non_ers);
    CHECK(code_of([&] { factor_to_odometer(ne, path_of_rank(ne, PathRank{2, 0, 0})); }) == ErrorCode::NotERS);
}

TEST_CASE("digits are the mixed-radix expansion of the rank and successor adds one") {
    std::mt19937_64 rng(17);
    std::vector<OrderedDiagram> cases{oracle::d2sym()};
    for (int i = 0; i < 6; ++i) cases.push_back(order_left_right(oracle::random_ers_diagram(rng)));
    for (const auto& o : cases) {
        const std::size_t n = 3;
        std::vector<std::size_t> base;
        for (std::size_t l = 1; l <= n; ++l) base.push_back(static_cast<std::size_t>(ers_row_sum(o.diagram(), l)));
        for (std::size_t v = 0; v < o.diagram().vertex_count(n); ++v) {
            PathRank pr{n, v, 0};
            auto digits = factor_to_odometer(o, path_of_rank(o, pr));
            for (;;) {
                BigInt value = 0, place = 1;
                for (std::size_t i = 0; i < digits.size(); ++i) {
                    value += place * digits[i];
                    place *= base[i];
                }
                CHECK(value == pr.rank);
                try {
                    pr = successor(o, pr);
                } catch (const Error&) {
                    break;
                }
                REQUIRE(increment(digits, base));
                CHECK(factor_to_odometer(o, path_of_rank(o, pr)) == digits);
            }
        }
    }
}

}  // TEST_SUITE
