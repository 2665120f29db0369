#include "oracle.hpp"
#include "support.hpp"

#include "bv/k0.hpp"
#include "bv/realization.hpp"

#include <doctest.h>

#include <cmath>

using namespace bv;
using support::code_of;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Rational> diag(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// Independent pass through the procedure with plain rational matrices.
void check_realization(const CFRealization& cf) {
    for (std::size_t n = 2; n <= cf.level_count(); ++n) {
        const auto& b = cf.B(n);
        const auto& a = cf.A(n);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            BigInt row = 0;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                CHECK(b(i, j) >= 0);
                CHECK(b(i, j) % n == 0);
                row += b(i, j);
                CHECK(Rational(b(i, j)) * cf.J(n - 1)[j] == cf.J(n)[i] * Rational(a(i, j)));
            }
            CHECK(row == cf.k(n));
        }
        CHECK(cf.k(n) == cf.m(n) * n);
        for (std::size_t i = 0; i < cf.J(n).size(); ++i) CHECK(cf.J(n)[i] == Rational(cf.k(n)) * cf.J_prime(n)[i]);
    }
}

}  // namespace

TEST_SUITE("realization") {

TEST_CASE("odometer diagrams") {
    auto odo = odometer_diagram({}, {2, 3});
    CHECK(ers_row_sums(odo.diagram(), 4).row_sums == IntVector{2, 3, 2, 3});
    CHECK(supernatural_of(odo.diagram()).to_string() == "2^inf*3^inf");
    CHECK(odo.order(1, 0).size() == 2);
    auto pref = odometer_diagram({5}, {2});
    CHECK(ers_row_sums(pref.diagram(), 3).row_sums == IntVector{5, 2, 2});
    CHECK(code_of([] { odometer_diagram({1}); }) == ErrorCode::BaseTooSmall);
    CHECK(code_of([] { odometer_diagram({}, {2, 0}); }) == ErrorCode::BaseTooSmall);
    CHECK(code_of([] { odometer_diagram({}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("continued fraction realization of the golden ratio") {
    auto cf = cf_to_ers(ints({1, 1, 1}));
    REQUIRE(cf.level_count() == 3);
    CHECK(cf.A(1) == Matrix{{1}, {1}});
    CHECK(cf.A(2) == Matrix{{1, 1}, {1, 0}});
    CHECK(cf.J_prime(2) == std::vector<Rational>{Rational(1, 2), 1});
    CHECK(cf.m(2) == 2);
    CHECK(cf.k(2) == 4);
    CHECK(cf.B(2) == Matrix{{2, 2}, {4, 0}});
    CHECK(cf.J_prime(3) == std::vector<Rational>{Rational(4, 3), 2});
    CHECK(cf.m(3) == 3);
    CHECK(cf.k(3) == 9);
    CHECK(cf.J(3) == diag({12, 18}));
    CHECK(cf.B(3) == Matrix{{6, 3}, {9, 0}});
    // B_3 J_2 = J_3 A_3 = [[12,12],[18,0]]
    Matrix j3a3(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) j3a3(i, j) = numerator_of(cf.J(3)[i] * Rational(cf.A(3)(i, j)));
    CHECK(j3a3 == Matrix{{12, 12}, {18, 0}});
    check_realization(cf);
    CHECK(ers_row_sums(cf.diagram(), 3).row_sums == IntVector{1, 4, 9});
}

TEST_CASE("continued fraction input validation") {
    CHECK(code_of([] { cf_to_ers(ints({1, 1})); }) == ErrorCode::InvalidCoefficients);
    CHECK(code_of([] { cf_to_ers(ints({2, 1, 1})); }) == ErrorCode::InvalidCoefficients);
    CHECK(code_of([] { cf_to_ers(ints({1, 0, 1})); }) == ErrorCode::InvalidCoefficients);
}

TEST_CASE("random continued fractions satisfy every invariant") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t t = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        std::vector<BigInt> coeffs{1};
        for (std::size_t i = 0; i < t; ++i) coeffs.push_back(std::uniform_int_distribution<int>(1, 5)(rng));
        auto cf = cf_to_ers(coeffs);
        CHECK(cf.level_count() == t + 1);
        check_realization(cf);
        auto rep = ers_row_sums(cf.diagram(), cf.level_count());
        REQUIRE(rep.is_ers());
        for (std::size_t n = 2; n <= cf.level_count(); ++n) CHECK((*rep.row_sums)[n - 1] == cf.k(n));
    }
}

TEST_CASE("two-symmetric spec validation") {
    using P = TwoSymmetricSpec::Pair;
    CHECK(code_of([] { TwoSymmetricSpec({P{2, 2}}); }) == ErrorCode::InvalidPairs);
    CHECK(code_of([] { TwoSymmetricSpec({P{2, 0}}); }) == ErrorCode::InvalidPairs);
    CHECK(code_of([] { TwoSymmetricSpec({}); }) == ErrorCode::InvalidPairs);
    CHECK(code_of([] { TwoSymmetricSpec::from_qr(ints({4}), ints({1}), false); }) == ErrorCode::InvalidPairs);
    auto s = TwoSymmetricSpec::from_qr(ints({3, 5}), ints({1, 1}), false);
    CHECK(s.pair(2) == P{2, 1});
    CHECK(s.pair(3) == P{3, 2});
    CHECK(code_of([&] { (void)s.pair(4); }) == ErrorCode::LevelBeyondSpec);
}

TEST_CASE("two-symmetric diagrams") {
    using P = TwoSymmetricSpec::Pair;
    TwoSymmetricSpec spec({}, {P{2, 1}});
    auto o = two_symmetric(spec);
    CHECK(o.diagram() == oracle::d2sym().diagram());
    CHECK(ers_row_sums(o.diagram(), 4).row_sums == IntVector{1, 3, 3, 3});
    CHECK(supernatural_of(o.diagram()).to_string() == "3^inf");

    auto finite = two_symmetric(TwoSymmetricSpec({P{3, 1}, P{2, 1}}));
    CHECK(ers_row_sums(finite.diagram(), 3).row_sums == IntVector{1, 4, 3});
}

TEST_CASE("two-symmetric product formula") {
    using P = TwoSymmetricSpec::Pair;
    TwoSymmetricSpec spec({P{2, 1}, P{2, 1}});
    CHECK(two_symmetric_product(spec, 3) == Matrix{{5, 4}, {4, 5}});
    CHECK(two_symmetric_product(spec, 2) == Matrix{{2, 1}, {1, 2}});

    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        auto s = oracle::random_twosym(rng, 7, trial % 2 == 0);
        auto d = two_symmetric(s).diagram();
        for (std::size_t n = 2; n <= 8; ++n)
            CHECK(oracle::to_mat(two_symmetric_product(s, n)) == oracle::iterated_product(d, 1, n));
    }
}

TEST_CASE("trace") {
    using P = TwoSymmetricSpec::Pair;
    TwoSymmetricSpec spec({}, {P{2, 1}});
    CHECK(two_symmetric_tau(spec, K0Element::unit()) == 1);
    CHECK(two_symmetric_tau(spec, K0Element{2, {1, -1}}) == 0);
    CHECK(two_symmetric_tau(spec, K0Element{2, {1, 0}}) == Rational(1, 6));

    CHECK(code_of([] { two_symmetric_tau(TwoSymmetricSpec({P{2, 1}}), K0Element{2, {1, 0}}); }) ==
          ErrorCode::NotUniqueState);
    CHECK(code_of([] { two_symmetric_tau(TwoSymmetricSpec({P{2, 1}}), K0Element{3, {1, 0}}); }) ==
          ErrorCode::LevelBeyondSpec);
}

TEST_CASE("trace is additive and invariant under pushforward") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = oracle::random_twosym(rng, 3, true);
        auto d = two_symmetric(s).diagram();
        K0Element g{std::uniform_int_distribution<std::size_t>(1, 4)(rng), {}};
        K0Element h{std::uniform_int_distribution<std::size_t>(1, 4)(rng), {}};
        for (int i = 0; i < 2; ++i) {
            g.vector.push_back(std::uniform_int_distribution<int>(-9, 9)(rng));
            h.vector.push_back(std::uniform_int_distribution<int>(-9, 9)(rng));
        }
        const std::size_t to = std::max(g.level, h.level) + 3;
        CHECK(two_symmetric_tau(s, k0_push(d, g, to)) == two_symmetric_tau(s, g));
        CHECK(two_symmetric_tau(s, k0_add(d, g, h)) == two_symmetric_tau(s, g) + two_symmetric_tau(s, h));
        CHECK(two_symmetric_tau(s, K0Element::unit()) == 1);
    }
}

TEST_CASE("with r_n = 1 the vector (1,-1) is fixed and has trace zero") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<BigInt> q, r;
        for (int i = 0; i < 3; ++i) {
            q.push_back(2 * std::uniform_int_distribution<int>(1, 4)(rng) + 1);
            r.push_back(1);
        }
        auto s = TwoSymmetricSpec::from_qr(q, r, true);
        auto d = two_symmetric(s).diagram();
        for (std::size_t n = 1; n <= 7; ++n) {
            K0Element e{n, {1, -1}};
            CHECK(k0_push(d, e, n + 1).vector == IntVector{1, -1});
            CHECK(two_symmetric_tau(s, e) == 0);
        }
    }
}

TEST_CASE("alpha partial products") {
    using P = TwoSymmetricSpec::Pair;
    TwoSymmetricSpec spec({}, {P{2, 1}});
    for (std::size_t n = 2; n <= 6; ++n) {
        auto a = two_symmetric_alpha(spec, n);
        CHECK(a.partial_product == Rational(static_cast<long>(std::pow(3, n - 1))));
        CHECK(a.reciprocal * a.partial_product == 1);
        CHECK(a.classification == AlphaReport::Kind::Divergent);
    }
    auto finite = two_symmetric_alpha(TwoSymmetricSpec({P{3, 1}, P{2, 1}}), 3);
    CHECK(finite.partial_product == Rational(2) * Rational(3));
    CHECK(finite.classification == AlphaReport::Kind::Unknown);
}

}  // TEST_SUITE
