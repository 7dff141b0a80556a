#pragma once

// Balanced-divisor representation: a class is a triple (u, v, n) with u monic,
// deg v < deg u, u | f - v^2, deg u <= g and 0 <= n <= g - deg u. The same
// triple with the relaxed bounds deg u <= 2g, 0 <= n <= 2g - deg u is the
// semi-reduced intermediate form used between compose and reduce.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hec/curve.hpp"
#include "hec/fp.hpp"
#include "hec/poly.hpp"
#include "hec/rng.hpp"

namespace hec {

struct BalancedDivisor {
    Poly u;
    Poly v;
    int n = 0;

    friend bool operator==(const BalancedDivisor& a, const BalancedDivisor& b) {
        return a.u == b.u && a.v == b.v && a.n == b.n;
    }
    friend bool operator!=(const BalancedDivisor& a, const BalancedDivisor& b) { return !(a == b); }
};

// Semi-reduced divisors share the layout; the kind only matters to validate().
using SemiReducedDivisor = BalancedDivisor;

enum class DivisorKind { Reduced, SemiReduced };

class BadDivisor : public std::runtime_error {
public:
    explicit BadDivisor(const std::string& what) : std::runtime_error(what) {}
};

// div[1, 0, ceil(g/2)], the unique representative of the trivial class.
inline BalancedDivisor identity(const CurveModel& c) {
    return BalancedDivisor{Poly::constant(1), Poly::zero(), (c.genus() + 1) / 2};
}

inline std::vector<std::string> validate(const BalancedDivisor& d, const CurveModel& c,
                                         DivisorKind kind = DivisorKind::Reduced) {
    std::vector<std::string> bad;
    const int g = c.genus();
    const int degcap = kind == DivisorKind::Reduced ? g : 2 * g;
    if (d.u.is_zero() || !d.u.is_monic()) bad.push_back("u is not monic");
    if (d.u.degree() > degcap) bad.push_back("deg u exceeds " + std::to_string(degcap));
    if (d.v.degree() >= d.u.degree() && !(d.v.is_zero() && d.u.degree() == 0))
        bad.push_back("deg v not below deg u");
    if (d.n < 0 || d.n > degcap - d.u.degree())
        bad.push_back("n out of range [0, " + std::to_string(degcap - d.u.degree()) + "]");
    if (!d.u.is_zero()) {
        OpCount scratch;
        Poly rem = mod(sub(c.f(), mul(d.v, d.v, c.field(), scratch), c.field(), scratch), d.u,
                       c.field(), scratch);
        if (!rem.is_zero()) bad.push_back("u does not divide f - v^2");
    }
    return bad;
}

// Companion to normalize(): carries a divisor from the pre-normalization
// model to the shifted one. Affine x-coordinates move by +t, so u and v pick
// up the substitution x -> x - t; the points at infinity (and hence n) are
// fixed by any x-translation.
inline BalancedDivisor transport_divisor(const BalancedDivisor& d, Fp shift, const FieldCtx& F) {
    if (shift == 0) return d;
    OpCount scratch;
    return BalancedDivisor{compose_x_minus(d.u, shift, F, scratch),
                           compose_x_minus(d.v, shift, F, scratch), d.n};
}

// Mumford representation of <= g affine points with pairwise distinct x.
inline BalancedDivisor from_points(const std::vector<std::pair<Fp, Fp>>& points, const CurveModel& c) {
    const FieldCtx& F = c.field();
    OpCount scratch;
    if (points.size() > static_cast<std::size_t>(c.genus()))
        throw BadDivisor("too many points (limit is g)");
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto [x, y] = points[i];
        if (F.mul(y, y) != eval(c.f(), x, F, scratch)) throw BadDivisor("PointNotOnCurve");
        for (std::size_t j = 0; j < i; ++j) {
            if (points[j].first == x) {
                if (points[j].second == F.neg(y) && y != points[j].second)
                    throw BadDivisor("ConjugatePair");
                throw BadDivisor("DuplicateX");
            }
        }
    }
    Poly u = Poly::constant(1);
    for (auto [x, y] : points) u = mul(u, Poly{{F.neg(x), 1}}, F, scratch);
    // Lagrange interpolation through (x_i, y_i).
    Poly v = Poly::zero();
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis = Poly::constant(1);
        Fp denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = mul(basis, Poly{{F.neg(points[j].first), 1}}, F, scratch);
            denom = F.mul(denom, F.sub(points[i].first, points[j].first));
        }
        v = add(v, scale(basis, F.mul(points[i].second, F.inv(denom)), F, scratch), F, scratch);
    }
    BalancedDivisor d{u, v, 0};
    auto bad = validate(d, c);
    if (!bad.empty()) throw BadDivisor("from_points produced invalid divisor: " + bad.front());
    return d;
}

// Random divisor class built from g affine points whose x-coordinates land on
// the curve; falls back to fewer points if sampling keeps missing squares.
inline BalancedDivisor random_element(const CurveModel& c, SplitMix64& rng) {
    const FieldCtx& F = c.field();
    OpCount scratch;
    for (int want = c.genus(); want >= 0; --want) {
        for (int attempt = 0; attempt < 400; ++attempt) {
            std::vector<std::pair<Fp, Fp>> pts;
            while (static_cast<int>(pts.size()) < want) {
                Fp x = rng.below(F.p());
                bool dup = false;
                for (auto& q : pts) dup = dup || q.first == x;
                if (dup) break;
                Fp fx = eval(c.f(), x, F, scratch);
                if (!F.is_square(fx)) break;
                Fp y = F.sqrt(fx);
                if (rng.next() & 1) y = F.neg(y);
                pts.emplace_back(x, y);
            }
            if (static_cast<int>(pts.size()) != want) continue;
            try {
                return from_points(pts, c);
            } catch (const BadDivisor&) {
                continue;
            }
        }
    }
    return identity(c);  // unreachable for any real curve
}

}  // namespace hec
