#include "oracle.hpp"
#include "support.hpp"

#include "bv/k0.hpp"
#include "bv/realization.hpp"
#include "bv/supernatural.hpp"

#include <doctest.h>

using namespace bv;
using support::code_of;

namespace {

SupernaturalNumber sn(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> finite,
                      std::initializer_list<std::uint64_t> infinite) {
    SupernaturalNumber out;
    for (auto [p, k] : finite) out.add_finite(p, k);
    for (auto p : infinite) out.add_infinite(p);
    return out;
}

SupernaturalNumber random_sn(std::mt19937_64& rng) {
    static const std::uint64_t primes[] = {2, 3, 5, 7};
    SupernaturalNumber out;
    for (auto p : primes) {
        const int pick = std::uniform_int_distribution<int>(0, 3)(rng);
        if (pick == 3) out.add_infinite(p);
        else out.add_finite(p, static_cast<std::uint64_t>(pick));
    }
    return out;
}

BratteliDiagram d2sym() { return oracle::d2sym().diagram(); }

K0Element random_element(std::mt19937_64& rng, const BratteliDiagram& d, std::size_t max_level) {
    K0Element g;
    g.level = std::uniform_int_distribution<std::size_t>(0, max_level)(rng);
    for (std::size_t v = 0; v < d.vertex_count(g.level); ++v)
        g.vector.push_back(std::uniform_int_distribution<int>(-6, 6)(rng));
    return g;
}

}  // namespace

TEST_SUITE("k0") {

TEST_CASE("factorization") {
    auto f = factorize(BigInt(360));
    CHECK(f == std::map<std::uint64_t, std::uint64_t>{{2, 3}, {3, 2}, {5, 1}});
    CHECK(factorize(BigInt(1)).empty());
    CHECK(factorize(BigInt(1) << 50) == std::map<std::uint64_t, std::uint64_t>{{2, 50}});
    // 1000003 is prime; with bound 100 the cofactor exceeds 100^2
    CHECK(code_of([] { factorize(BigInt(1000003), 100); }) == ErrorCode::FactorBoundExceeded);
    CHECK(factorize(BigInt(9973), 100) == std::map<std::uint64_t, std::uint64_t>{{9973, 1}});
}

TEST_CASE("supernatural arithmetic") {
    CHECK(sn_mul(sn({{2, 2}}, {3}), sn({}, {2})) == sn({}, {2, 3}));
    CHECK(sn_mul(SupernaturalNumber::from_integer(6), SupernaturalNumber::from_integer(10)).to_string() ==
          "2^2*3*5");
    auto a = sn({{5, 1}}, {2});
    CHECK(sn_mul(a, SupernaturalNumber::from_integer(1)) == a);

    CHECK(sn_divides(SupernaturalNumber::from_integer(6), sn({}, {2, 3})));
    CHECK_FALSE(sn_divides(SupernaturalNumber::from_integer(5), sn({}, {2, 3})));
    CHECK(sn_divides(a, a));

    CHECK(sn_equiv(sn({{2, 3}}, {3}), sn({}, {3})));
    CHECK_FALSE(sn_equiv(sn({}, {2}), sn({}, {3})));
    CHECK(sn_equiv(SupernaturalNumber::from_integer(720), SupernaturalNumber::from_integer(1)));
    CHECK(SupernaturalNumber().to_string() == "1");
    CHECK(a.exponent(5) == 1u);
    CHECK_FALSE(a.exponent(2).has_value());
    CHECK(a.exponent(7) == 0u);
}

TEST_CASE("sn_equiv is an equivalence relation") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 200; ++i) {
        auto x = random_sn(rng), y = random_sn(rng), z = random_sn(rng);
        CHECK(sn_equiv(x, x));
        CHECK(sn_equiv(x, y) == sn_equiv(y, x));
        if (sn_equiv(x, y) && sn_equiv(y, z)) CHECK(sn_equiv(x, z));
    }
}

TEST_CASE("rational groups") {
    auto n = sn({}, {2, 3});
    CHECK(rational_group_contains(n, Rational(1, 6)));
    CHECK_FALSE(rational_group_contains(n, Rational(1, 5)));
    CHECK(rational_group_contains(SupernaturalNumber(), Rational(-7)));
    CHECK(rational_group_contains(sn({{2, 2}}, {}), Rational(3, 4)));
    CHECK_FALSE(rational_group_contains(sn({{2, 2}}, {}), Rational(1, 8)));
}

TEST_CASE("push, add, negate") {
    auto d = d2sym();
    CHECK(k0_push(d, K0Element::unit(), 2).vector == IntVector{3, 3});
    CHECK(k0_push(d, K0Element{2, {0, 0}}, 5).vector == IntVector{0, 0});
    CHECK(code_of([&] { k0_push(d, K0Element{3, {1, 1}}, 2); }) == ErrorCode::LevelTooLow);
    CHECK(code_of([&] { validate_element(d, K0Element{2, {1}}); }) == ErrorCode::DimensionMismatch);

    auto uu = k0_add(d, K0Element::unit(), K0Element::unit());
    CHECK(k0_push(d, uu, 2).vector == IntVector{6, 6});

    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        auto g = random_element(rng, d, 4);
        auto h = random_element(rng, d, 4);
        const std::size_t a = std::max(g.level, h.level) + 1;
        CHECK(k0_push(d, k0_push(d, g, a), a + 2) == k0_push(d, g, a + 2));
        CHECK(k0_push(d, k0_add(d, g, k0_neg(g)), a).vector == IntVector(d.vertex_count(a), 0));
        CHECK(k0_push(d, k0_add(d, g, h), a) == k0_push(d, k0_add(d, k0_push(d, g, a), h), a));
        CHECK(k0_equal(d, g, k0_push(d, g, a), 2).is_yes());
    }
}

TEST_CASE("positivity") {
    auto d = d2sym();
    CHECK(k0_positivity(d, K0Element::unit(), 4).kind == Positivity::Kind::Positive);
    for (std::size_t depth : {1u, 5u, 20u})
        CHECK(k0_positivity(d, K0Element{2, {1, -1}}, depth) == Positivity{Positivity::Kind::Unknown, depth});
    CHECK(k0_positivity(d, K0Element{2, {2, -1}}, 4).kind == Positivity::Kind::Positive);
    CHECK(k0_positivity(d, K0Element{2, {-2, 1}}, 4).kind == Positivity::Kind::Negative);
    CHECK(k0_positivity(d, K0Element{1, {0, 0}}, 4).kind == Positivity::Kind::Zero);
    CHECK(Positivity{Positivity::Kind::Unknown, 3}.to_string() == "unknown@3");
}

TEST_CASE("gamma") {
    auto d = d2sym();
    CHECK(gamma_rational(d, K0Element::unit(), 4).value == Rational(1));
    CHECK(gamma_rational(d, K0Element{2, {3, 3}}, 4).value == Rational(1));
    CHECK(gamma_rational(d, K0Element{2, {1, 1}}, 4).value == Rational(1, 3));
    auto none = gamma_rational(d, K0Element{2, {1, -1}}, 6);
    CHECK_FALSE(none.value);
    CHECK(none.explored_depth == 6);
    BratteliDiagram non_ers({IncidenceMatrix{{1}, {2}}});
    CHECK(code_of([&] { gamma_rational(non_ers, K0Element::unit(), 2); }) == ErrorCode::NotERS);
}

TEST_CASE("gamma is additive and order preserving") {
    std::mt19937_64 rng(47);
    std::vector<BratteliDiagram> cases{d2sym(), odometer_diagram({}, {2, 3}).diagram()};
    for (int i = 0; i < 4; ++i) cases.push_back(oracle::random_ers_diagram(rng));
    int resolved = 0;
    for (const auto& d : cases)
        for (int i = 0; i < 60; ++i) {
            auto g = random_element(rng, d, 3);
            auto h = random_element(rng, d, 3);
            auto gg = gamma_rational(d, g, 8);
            auto gh = gamma_rational(d, h, 8);
            auto gs = gamma_rational(d, k0_add(d, g, h), 8);
            if (gg.value && gh.value && gs.value) {
                ++resolved;
                CHECK(*gs.value == *gg.value + *gh.value);
            }
            if (gg.value) {
                auto pos = k0_positivity(d, g, 8).kind;
                if (*gg.value > 0) CHECK(pos != Positivity::Kind::Negative);
                if (*gg.value < 0) CHECK(pos != Positivity::Kind::Positive);
                if (*gg.value == 0) CHECK(pos == Positivity::Kind::Zero);
            }
        }
    CHECK(resolved > 20);
}

TEST_CASE("eigenvalues and the equicontinuous factor") {
    auto odo = odometer_diagram({}, {2, 3}).diagram();
    CHECK(eigenvalue_test(odo, 6));
    CHECK_FALSE(eigenvalue_test(odo, 5));
    CHECK(eigenvalue_test(d2sym(), 9));
    CHECK_FALSE(eigenvalue_test(d2sym(), 2));
    CHECK(code_of([&] { eigenvalue_test(odo, 1); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { eigenvalue_test(BratteliDiagram({IncidenceMatrix{{2}}}), 2); }) == ErrorCode::NoTail);

    CHECK(max_equicontinuous_factor(d2sym()).odometer.to_string() == "3^inf");
    auto f = max_equicontinuous_factor(odo);
    CHECK(f.odometer == sn({}, {2, 3}));
    CHECK(f.has_eigenvalue(Rational(5, 12)));
    CHECK_FALSE(f.has_eigenvalue(Rational(1, 10)));

    // same factor for diagrams with equivalent supernatural numbers
    auto other = BratteliDiagram({IncidenceMatrix{{4}}}, {IncidenceMatrix{{6}}});
    CHECK(sn_equiv(max_equicontinuous_factor(other).odometer, f.odometer));
}

TEST_CASE("eigenvalue tests respect the divisor lattice") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i) {
        auto d = oracle::random_ers_diagram(rng);
        for (int p = 2; p <= 12; ++p)
            for (int q = 2; q <= 12; ++q)
                if (std::gcd(p, q) == 1 && eigenvalue_test(d, p) && eigenvalue_test(d, q))
                    CHECK(eigenvalue_test(d, p * q));
    }
}

}  // TEST_SUITE
