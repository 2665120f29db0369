#include "bv/realization.hpp"

#include "bv/errors.hpp"

#include <algorithm>
#include <string>

namespace bv {

OrderedDiagram odometer_diagram(const std::vector<BigInt>& prefix, const std::vector<BigInt>& tail) {
    if (prefix.empty() && tail.empty()) throw Error(ErrorCode::EmptyInput, "odometer needs at least one base");
    auto level = [](const BigInt& b) {
        if (b < 2) throw Error(ErrorCode::BaseTooSmall, "odometer base must be >= 2, got " + b.str());
        Matrix m(1, 1, b);
        return IncidenceMatrix(std::move(m));
    };
    std::vector<IncidenceMatrix> levels;
    std::vector<IncidenceMatrix> tail_levels;
    for (const auto& b : prefix) levels.push_back(level(b));
    for (const auto& b : tail) tail_levels.push_back(level(b));
    if (levels.empty()) {
        // The tail alone defines every level; keep one explicit copy of its first matrix.
        levels.push_back(tail_levels.front());
        std::rotate(tail_levels.begin(), tail_levels.begin() + 1, tail_levels.end());
    }
    return order_left_right(BratteliDiagram(std::move(levels), std::move(tail_levels)));
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix scale_columns(const Matrix& a, const std::vector<Rational>& inv_diag) {
    RationalMatrix out(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = Rational(a(i, j)) * inv_diag[j];
    return out;
}

[[noreturn]] void invariant(std::size_t n, const std::string& what) {
    throw Error(ErrorCode::InternalInvariant, "cf_to_ers level " + std::to_string(n) + ": " + what);
}

}  // namespace

BratteliDiagram CFRealization::diagram() const {
    std::vector<IncidenceMatrix> levels;
    levels.reserve(B_.size());
    for (const auto& b : B_) levels.emplace_back(b);
    return BratteliDiagram(std::move(levels));
}

CFRealization cf_to_ers(const std::vector<BigInt>& coefficients) {
    if (coefficients.size() < 3)
        throw Error(ErrorCode::InvalidCoefficients, "need a_0, a_1, a_2 at least");
    if (coefficients.front() != 1)
        throw Error(ErrorCode::InvalidCoefficients, "a_0 must be 1, got " + coefficients.front().str());
    for (const auto& a : coefficients)
        if (a < 1) throw Error(ErrorCode::InvalidCoefficients, "coefficients must be >= 1, got " + a.str());

    CFRealization out;
    out.coefficients_ = coefficients;
    const std::size_t levels = coefficients.size();

    out.A_.push_back(Matrix::from_rows({{coefficients[0]}, {BigInt(1)}}));
    for (std::size_t i = 2; i <= levels; ++i)
        out.A_.push_back(Matrix::from_rows({{coefficients[i - 1], BigInt(1)}, {BigInt(1), BigInt(0)}}));

    out.J_prime_ = {{Rational(1)}, {Rational(1), Rational(1)}};
    out.J_ = out.J_prime_;
    out.B_.push_back(out.A_.front());

    for (std::size_t n = 2; n <= levels; ++n) {
        const Matrix& a = out.A(n);
        const auto& j_prev = out.J_[n - 1];
        std::vector<Rational> inv(j_prev.size());
        for (std::size_t j = 0; j < inv.size(); ++j) inv[j] = 1 / j_prev[j];

        RationalMatrix scaled = scale_columns(a, inv);
        std::vector<Rational> jp(a.rows());
        BigInt m = 1;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Rational rs = 0;
            for (const auto& x : scaled[i]) rs += x;
            if (rs <= 0) invariant(n, "nonpositive row sum");
            jp[i] = 1 / rs;
            for (const auto& x : scaled[i]) m = lcm(m, denominator_of(jp[i] * x));
        }
        const BigInt k = m * n;
        std::vector<Rational> jn(jp.size());
        for (std::size_t i = 0; i < jp.size(); ++i) jn[i] = Rational(k) * jp[i];

        Matrix b(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            BigInt row = 0;
            for (std::size_t j = 0; j < a.cols(); ++j) {
                Rational x = jn[i] * scaled[i][j];
                if (denominator_of(x) != 1) invariant(n, "B entry is not an integer");
                b(i, j) = numerator_of(x);
                if (b(i, j) < 0) invariant(n, "negative B entry");
                if (b(i, j) % n != 0) invariant(n, "B entry not divisible by n");
                row += b(i, j);
                // B_n J_{n-1} = J_n A_n, entrywise
                if (Rational(b(i, j)) * j_prev[j] != jn[i] * Rational(a(i, j))) invariant(n, "intertwining fails");
            }
            if (row != k) invariant(n, "row sum differs from k_n");
        }

        out.J_prime_.push_back(std::move(jp));
        out.J_.push_back(std::move(jn));
        out.m_.push_back(m);
        out.k_.push_back(k);
        out.B_.push_back(std::move(b));
    }
    return out;
}

TwoSymmetricSpec::TwoSymmetricSpec(std::vector<Pair> prefix, std::vector<Pair> tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
    if (prefix_.empty() && tail_.empty()) throw Error(ErrorCode::InvalidPairs, "no (l,k) pairs given");
    auto check = [](const Pair& p) {
        if (!(p.second >= 1 && p.second < p.first))
            throw Error(ErrorCode::InvalidPairs,
                        "need 1 <= k < l, got (l,k) = (" + p.first.str() + "," + p.second.str() + ")");
    };
    for (const auto& p : prefix_) check(p);
    for (const auto& p : tail_) check(p);
}

TwoSymmetricSpec TwoSymmetricSpec::from_qr(const std::vector<BigInt>& q, const std::vector<BigInt>& r, bool repeat) {
    if (q.size() != r.size()) throw Error(ErrorCode::InvalidPairs, "q and r lists differ in length");
    std::vector<Pair> pairs;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if ((q[i] - r[i]) % 2 != 0)
            throw Error(ErrorCode::InvalidPairs, "q_n and r_n must have the same parity");
        pairs.emplace_back((q[i] + r[i]) / 2, (q[i] - r[i]) / 2);
    }
    return repeat ? TwoSymmetricSpec({}, std::move(pairs)) : TwoSymmetricSpec(std::move(pairs));
}

bool TwoSymmetricSpec::defines_level(std::size_t n) const noexcept {
    if (n < 2) return true;
    return has_tail() || n - 2 < prefix_.size();
}

const TwoSymmetricSpec::Pair& TwoSymmetricSpec::pair(std::size_t n) const {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "pairs start at level 2");
    if (!defines_level(n))
        throw Error(ErrorCode::LevelBeyondSpec, "level " + std::to_string(n) + " is beyond the given pairs");
    const std::size_t i = n - 2;
    if (i < prefix_.size()) return prefix_[i];
    return tail_[(i - prefix_.size()) % tail_.size()];
}

BigInt TwoSymmetricSpec::q(std::size_t n) const {
    if (n == 1) return 2;
    const auto& p = pair(n);
    return p.first + p.second;
}

BigInt TwoSymmetricSpec::r(std::size_t n) const {
    if (n == 1) return 0;
    const auto& p = pair(n);
    return p.first - p.second;
}

OrderedDiagram two_symmetric(const TwoSymmetricSpec& spec) {
    auto level = [](const TwoSymmetricSpec::Pair& p) {
        return IncidenceMatrix(Matrix::from_rows({{p.first, p.second}, {p.second, p.first}}));
    };
    std::vector<IncidenceMatrix> levels{IncidenceMatrix{{1}, {1}}};
    std::vector<IncidenceMatrix> tail;
    for (const auto& p : spec.prefix()) levels.push_back(level(p));
    for (const auto& p : spec.tail()) tail.push_back(level(p));
    return order_left_right(BratteliDiagram(std::move(levels), std::move(tail)));
}

Matrix two_symmetric_product(const TwoSymmetricSpec& spec, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "product starts at level 2");
    BigInt s = 1;
    BigInt t = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        s *= spec.q(i);
        t *= spec.r(i);
    }
    const BigInt d = (s + t) / 2;
    const BigInt o = (s - t) / 2;
    return Matrix::from_rows({{d, o}, {o, d}});
}

namespace {

// prod q/r over one tail period
Rational tail_ratio(const TwoSymmetricSpec& spec) {
    Rational ratio = 1;
    for (const auto& p : spec.tail()) ratio *= Rational(p.first + p.second, p.first - p.second);
    return ratio;
}

}  // namespace

Rational two_symmetric_tau(const TwoSymmetricSpec& spec, const K0Element& g) {
    if (!spec.defines_level(g.level))
        throw Error(ErrorCode::LevelBeyondSpec, "level " + std::to_string(g.level) + " is beyond the given pairs");
    const std::size_t expected = g.level == 0 ? 1 : 2;
    if (g.vector.size() != expected)
        throw Error(ErrorCode::DimensionMismatch, "expected a vector of length " + std::to_string(expected));
    if (!spec.has_tail() || tail_ratio(spec) <= 1)
        throw Error(ErrorCode::NotUniqueState,
                    "the trace is unique only when prod q/r diverges; give a tail to certify it");
    BigInt sum = 0;
    for (const auto& x : g.vector) sum += x;
    BigInt denom = 1;
    for (std::size_t i = 1; i <= g.level; ++i) denom *= spec.q(i);
    return Rational(sum, denom);
}

std::string AlphaReport::classification_string() const {
    switch (classification) {
    case Kind::Divergent: return "divergent";
    case Kind::Finite: return "finite";
    case Kind::Unknown: break;
    }
    return "unknown";
}

AlphaReport two_symmetric_alpha(const TwoSymmetricSpec& spec, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "the product starts at level 2");
    AlphaReport out;
    out.partial_product = 1;
    for (std::size_t i = 2; i <= n; ++i) out.partial_product *= Rational(spec.q(i), spec.r(i));
    out.reciprocal = 1 / out.partial_product;
    if (spec.has_tail()) {
        const Rational ratio = tail_ratio(spec);
        out.classification = ratio > 1 ? AlphaReport::Kind::Divergent : AlphaReport::Kind::Finite;
    }
    return out;
}

}  // namespace bv
