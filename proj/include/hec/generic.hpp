#pragma once

// Fully general balanced-divisor arithmetic for any genus g >= 2: compose,
// reduce, adjust, addition, negation and double-and-add scalar multiples.
// This path favors obvious correctness over speed and serves as the oracle
// for the optimized genus-3 formulas.

#include <stdexcept>
#include <string>

#include "hec/curve.hpp"
#include "hec/divisor.hpp"
#include "hec/fp.hpp"
#include "hec/poly.hpp"

namespace hec {

class PreconditionViolated : public std::runtime_error {
public:
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

namespace generic {

// Cantor composition: u3 = u1*u2/w^2, v3 = (c1*u1*v2 + c2*u2*v1 +
// c3*(v1*v2 + f))/w mod u3 with w = gcd(u1, u2, v1 + v2).
inline SemiReducedDivisor compose(const BalancedDivisor& d1, const BalancedDivisor& d2,
                                  const CurveModel& c, OpCount& ctr) {
    const FieldCtx& F = c.field();
    auto cert = xgcd3(d1.u, d2.u, add(d1.v, d2.v, F, ctr), F, ctr);
    const Poly& w = cert.w;
    Poly u3 = exact_div(mul(d1.u, d2.u, F, ctr), mul(w, w, F, ctr), F, ctr);
    Poly num = add(mul(cert.c1, mul(d1.u, d2.v, F, ctr), F, ctr),
                   mul(cert.c2, mul(d2.u, d1.v, F, ctr), F, ctr), F, ctr);
    num = add(num, mul(cert.c3, add(mul(d1.v, d2.v, F, ctr), c.f(), F, ctr), F, ctr), F, ctr);
    Poly v3 = mod(exact_div(num, w, F, ctr), u3, F, ctr);
    return SemiReducedDivisor{u3, v3, d1.n + d2.n + w.degree()};
}

// One reduction step: requires deg u > g+1, drops deg u by at least 2.
inline SemiReducedDivisor reduce_step(const SemiReducedDivisor& d, const CurveModel& c, OpCount& ctr) {
    const FieldCtx& F = c.field();
    const int g = c.genus();
    if (d.u.degree() <= g + 1) throw PreconditionViolated("reduce_step: deg u <= g+1");
    Poly raw = exact_div(sub(c.f(), mul(d.v, d.v, F, ctr), F, ctr), d.u, F, ctr);
    auto [lcinv, u2] = make_monic(raw, F, ctr);
    (void)lcinv;
    Poly v2 = mod(neg(d.v, F, ctr), u2, F, ctr);
    int delta;
    if (d.v.degree() == g + 1 && d.v.lc() == 1)
        delta = d.u.degree() - (g + 1);
    else if (d.v.degree() == g + 1 && d.v.lc() == F.p() - 1)
        delta = g + 1 - u2.degree();
    else
        delta = (d.u.degree() - u2.degree()) / 2;
    return SemiReducedDivisor{u2, v2, d.n + delta};
}

// Rebalances the infinity weight until ceil(g/2) <= n <= ceil(3g/2) - deg u,
// then strips the *-offset. Requires deg u <= g+1; terminates in at most
// ceil(g/2)+1 non-trivial passes (guarded).
inline BalancedDivisor adjust(SemiReducedDivisor d, const CurveModel& c, OpCount& ctr,
                              int* passes_out = nullptr) {
    const FieldCtx& F = c.field();
    const int g = c.genus();
    const int half = (g + 1) / 2;        // ceil(g/2)
    const int cap3g2 = (3 * g + 1) / 2;  // ceil(3g/2)
    if (d.u.degree() > g + 1) throw PreconditionViolated("adjust: deg u > g+1");
    int passes = 0;
    while (true) {
        if (half <= d.n && d.n <= cap3g2 - d.u.degree()) {
            if (passes_out) *passes_out = passes;
            return BalancedDivisor{d.u, d.v, d.n - half};
        }
        if (++passes > half + 2)
            throw std::logic_error("adjust: pass bound exceeded (implementation bug)");
        Poly vmod = mod(c.V(), d.u, F, ctr);
        Poly vhat;
        int n2;
        if (d.n < half) {
            vhat = add(sub(d.v, c.V(), F, ctr), vmod, F, ctr);
            // n2 is fixed after u2 below: n1 + g + 1 - deg u2
            Poly raw = exact_div(sub(c.f(), mul(vhat, vhat, F, ctr), F, ctr), d.u, F, ctr);
            auto [lcinv, u2] = make_monic(raw, F, ctr);
            (void)lcinv;
            n2 = d.n + g + 1 - u2.degree();
            d = SemiReducedDivisor{u2, mod(neg(vhat, F, ctr), u2, F, ctr), n2};
        } else {
            vhat = sub(add(d.v, c.V(), F, ctr), vmod, F, ctr);
            Poly raw = exact_div(sub(c.f(), mul(vhat, vhat, F, ctr), F, ctr), d.u, F, ctr);
            int degu1 = d.u.degree();
            auto [lcinv, u2] = make_monic(raw, F, ctr);
            (void)lcinv;
            n2 = d.n + degu1 - (g + 1);
            d = SemiReducedDivisor{u2, mod(neg(vhat, F, ctr), u2, F, ctr), n2};
        }
    }
}

inline BalancedDivisor addition(const BalancedDivisor& d1, const BalancedDivisor& d2,
                                const CurveModel& c, OpCount& ctr) {
    SemiReducedDivisor d = compose(d1, d2, c, ctr);
    while (d.u.degree() > c.genus() + 1) d = reduce_step(d, c, ctr);
    return adjust(d, c, ctr);
}

// Footnote-corrected three-branch negation.
inline BalancedDivisor negation(const BalancedDivisor& d, const CurveModel& c, OpCount& ctr) {
    const FieldCtx& F = c.field();
    const int g = c.genus();
    Poly nv = neg(d.v, F, ctr);
    if (g % 2 == 0) return BalancedDivisor{d.u, nv, g - d.u.degree() - d.n};
    if (d.n > 0) return BalancedDivisor{d.u, nv, g - d.u.degree() - d.n + 1};
    const int cap3g2 = (3 * g + 1) / 2;
    return adjust(SemiReducedDivisor{d.u, nv, cap3g2 - d.u.degree() + 1}, c, ctr);
}

inline BalancedDivisor scalar_mul(std::uint64_t k, const BalancedDivisor& d, const CurveModel& c,
                                  OpCount& ctr) {
    BalancedDivisor acc = identity(c);
    if (k == 0) return acc;
    int top = 63;
    while (top > 0 && !((k >> top) & 1)) --top;
    for (int i = top; i >= 0; --i) {
        acc = addition(acc, acc, c, ctr);
        if ((k >> i) & 1) acc = addition(acc, d, c, ctr);
    }
    return acc;
}

}  // namespace generic
}  // namespace hec
