// Finite-level arithmetic in the inductive-limit group K_0(V,E), rational
// groups G(n), the Gamma map on Q(G,u) and odometer eigenvalue data.
#pragma once

#include "bv/arith.hpp"
#include "bv/decision.hpp"
#include "bv/diagram.hpp"
#include "bv/supernatural.hpp"

#include <optional>
#include <string>

namespace bv {

/// Representative of an element of K_0(V,E): an integer vector at one level.
struct K0Element {
    std::size_t level = 0;
    IntVector vector;

    /// The canonical order unit [1] = (level 0, (1)).
    static K0Element unit() { return K0Element{0, IntVector{1}}; }
    friend bool operator==(const K0Element&, const K0Element&) = default;
};

/// Throws DimensionMismatch when the vector length is not |V_level|.
void validate_element(const BratteliDiagram& diagram, const K0Element& g);

/// g pushed to `to_level` by M_to ... M_{g.level+1}. Throws LevelTooLow.
K0Element k0_push(const BratteliDiagram& diagram, const K0Element& g, std::size_t to_level);
K0Element k0_add(const BratteliDiagram& diagram, const K0Element& g, const K0Element& h);
K0Element k0_neg(const K0Element& g);

/// Yes when the pushforwards of g and h coincide within `depth` levels past
/// the deeper of the two; Unknown(depth) otherwise.
Decision k0_equal(const BratteliDiagram& diagram, const K0Element& g, const K0Element& h, std::size_t depth);

struct Positivity {
    enum class Kind { Positive, Negative, Zero, Unknown };
    Kind kind = Kind::Unknown;
    std::size_t explored_depth = 0;

    /// "positive" | "negative" | "zero" | "unknown@d"
    std::string to_string() const;
    friend bool operator==(const Positivity&, const Positivity&) = default;
};

/// Pushes g forward up to `depth` levels: Zero on a zero vector, Positive
/// (Negative) on a strictly positive (negative) vector, Unknown otherwise.
Positivity k0_positivity(const BratteliDiagram& diagram, const K0Element& g, std::size_t depth);

struct GammaResult {
    std::optional<Rational> value;
    std::size_t explored_depth = 0;
    /// Level at which the pushforward became constant.
    std::optional<std::size_t> resolved_level;
};

/// Gamma(g) = c / p_l when the pushforward at level l is the constant vector
/// c(1,...,1), p_l = r_1 ... r_l. Throws NotERS.
GammaResult gamma_rational(const BratteliDiagram& diagram, const K0Element& g, std::size_t depth);

/// x in G(n) iff the reduced denominator of x divides n.
bool rational_group_contains(const SupernaturalNumber& n, const Rational& x);

/// exp(2 pi i / p) is a continuous eigenvalue iff p divides the supernatural
/// number of the diagram. Throws NotERS, NoTail, InvalidInput (p < 2).
bool eigenvalue_test(const BratteliDiagram& diagram, const BigInt& p);

struct EquicontinuousFactor {
    SupernaturalNumber odometer;

    /// exp(2 pi i s) is an eigenvalue iff s lies in G(odometer).
    bool has_eigenvalue(const Rational& s) const { return rational_group_contains(odometer, s); }
    std::string description() const;
};

EquicontinuousFactor max_equicontinuous_factor(const BratteliDiagram& diagram);

}  // namespace bv
