#include "bv/k0.hpp"

#include "bv/errors.hpp"

#include <algorithm>

namespace bv {

void validate_element(const BratteliDiagram& diagram, const K0Element& g) {
    if (g.vector.size() != diagram.vertex_count(g.level))
        throw Error(ErrorCode::DimensionMismatch, "element at level " + std::to_string(g.level) + " has " +
                                                      std::to_string(g.vector.size()) + " entries, level has " +
                                                      std::to_string(diagram.vertex_count(g.level)) +
                                                      " vertices");
}

K0Element k0_push(const BratteliDiagram& diagram, const K0Element& g, std::size_t to_level) {
    validate_element(diagram, g);
    if (to_level < g.level)
        throw Error(ErrorCode::LevelTooLow, "cannot push from level " + std::to_string(g.level) + " down to " +
                                                std::to_string(to_level));
    K0Element out = g;
    for (std::size_t n = g.level + 1; n <= to_level; ++n) out.vector = diagram.level_matrix(n).matrix() * out.vector;
    out.level = to_level;
    return out;
}

K0Element k0_add(const BratteliDiagram& diagram, const K0Element& g, const K0Element& h) {
    const auto level = std::max(g.level, h.level);
    auto a = k0_push(diagram, g, level);
    const auto b = k0_push(diagram, h, level);
    for (std::size_t i = 0; i < a.vector.size(); ++i) a.vector[i] += b.vector[i];
    return a;
}

K0Element k0_neg(const K0Element& g) {
    K0Element out = g;
    for (auto& x : out.vector) x = -x;
    return out;
}

Decision k0_equal(const BratteliDiagram& diagram, const K0Element& g, const K0Element& h, std::size_t depth) {
    const auto base = std::max(g.level, h.level);
    auto a = k0_push(diagram, g, base);
    auto b = k0_push(diagram, h, base);
    for (std::size_t step = 0;; ++step) {
        if (a.vector == b.vector) return Decision::yes();
        if (step == depth || !diagram.has_level(a.level + 1)) break;
        a = k0_push(diagram, a, a.level + 1);
        b = k0_push(diagram, b, b.level + 1);
    }
    return Decision::unknown(depth);
}

std::string Positivity::to_string() const {
    switch (kind) {
        case Kind::Positive: return "positive";
        case Kind::Negative: return "negative";
        case Kind::Zero: return "zero";
        case Kind::Unknown: return "unknown@" + std::to_string(explored_depth);
    }
    return "unknown";
}

Positivity k0_positivity(const BratteliDiagram& diagram, const K0Element& g, std::size_t depth) {
    validate_element(diagram, g);
    K0Element cur = g;
    for (std::size_t step = 0;; ++step) {
        const auto& v = cur.vector;
        if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; }))
            return {Positivity::Kind::Zero, step};
        if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x > 0; }))
            return {Positivity::Kind::Positive, step};
        if (std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x < 0; }))
            return {Positivity::Kind::Negative, step};
        if (step == depth || !diagram.has_level(cur.level + 1)) break;
        cur = k0_push(diagram, cur, cur.level + 1);
    }
    return {Positivity::Kind::Unknown, depth};
}

GammaResult gamma_rational(const BratteliDiagram& diagram, const K0Element& g, std::size_t depth) {
    validate_element(diagram, g);
    if (!is_ers(diagram)) throw Error(ErrorCode::NotERS, "Gamma needs constant row sums at every level");
    BigInt p = 1;  // p_l = r_1 ... r_l
    for (std::size_t n = 1; n <= g.level; ++n) p *= ers_row_sum(diagram, n);
    K0Element cur = g;
    for (std::size_t step = 0;; ++step) {
        const auto& v = cur.vector;
        if (std::all_of(v.begin(), v.end(), [&](const BigInt& x) { return x == v.front(); }))
            return GammaResult{Rational(v.front(), p), step, cur.level};
        if (step == depth || !diagram.has_level(cur.level + 1)) break;
        p *= ers_row_sum(diagram, cur.level + 1);
        cur = k0_push(diagram, cur, cur.level + 1);
    }
    return GammaResult{std::nullopt, depth, std::nullopt};
}

bool rational_group_contains(const SupernaturalNumber& n, const Rational& x) {
    const BigInt den = denominator_of(x);
    if (den == 1) return true;
    return sn_divides(SupernaturalNumber::from_integer(den), n);
}

bool eigenvalue_test(const BratteliDiagram& diagram, const BigInt& p) {
    if (p < 2) throw Error(ErrorCode::InvalidInput, "eigenvalue test needs p >= 2");
    return sn_divides(SupernaturalNumber::from_integer(p), supernatural_of(diagram));
}

std::string EquicontinuousFactor::description() const {
    return "odometer of " + odometer.to_string() + "; eigenvalues exp(2*pi*i*s) for s in G(" +
           odometer.to_string() + ")";
}

EquicontinuousFactor max_equicontinuous_factor(const BratteliDiagram& diagram) {
    return EquicontinuousFactor{supernatural_of(diagram)};
}

}  // namespace bv
