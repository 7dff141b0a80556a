#pragma once

// Optimized genus-3 straight-line formulas for typical divisors (deg u = 3,
// n = 0) on a normalized curve (f monic of degree 8, f7 = 0), with the exact
// per-step field-operation costs:
//
//   addition  I+79M+127A   doubling  I+82M+127A   negation  I+14M+24A
//
// Each formula has a single exit point: atypical inputs (common factor,
// deg s < 2, vanishing leading coefficient) are discovered mid-formula and
// revert to the general algorithms. The three needed inverses are combined
// into one field inversion with Montgomery's trick, interleaved with the
// reconstruction products exactly as transcribed.

#include <vector>

#include "hec/curve.hpp"
#include "hec/divisor.hpp"
#include "hec/fp.hpp"
#include "hec/generic.hpp"
#include "hec/poly.hpp"

namespace hec {
namespace explicit3 {

struct TypicalResult {
    BalancedDivisor result;
    bool used_fast_path = false;
    std::vector<OpCount> step_costs;  // empty on the fallback path
    // Fast-path intermediates from the combined-inversion step, exposed so
    // the early vt43 can be cross-checked against its closed form.
    Fp s0 = 0, s1 = 0, c = 0, vt43 = 0;
};

namespace detail {

inline bool typical_shape(const BalancedDivisor& d) { return d.u.degree() == 3 && d.n == 0; }

inline bool curve_ok(const CurveModel& c) { return c.genus() == 3 && c.normalized(); }

class StepTracker {
public:
    StepTracker(std::vector<OpCount>& out, const OpCount& ctr) : out_(out), ctr_(ctr), mark_(ctr) {}
    void cut() {
        out_.push_back(ctr_ - mark_);
        mark_ = ctr_;
    }

private:
    std::vector<OpCount>& out_;
    const OpCount& ctr_;
    OpCount mark_;
};

}  // namespace detail

inline TypicalResult typical_addition(const BalancedDivisor& d1, const BalancedDivisor& d2,
                                      const CurveModel& c, OpCount& ctr) {
    if (!detail::curve_ok(c) || !detail::typical_shape(d1) || !detail::typical_shape(d2))
        return TypicalResult{generic::addition(d1, d2, c, ctr), false, {}};

    const FieldCtx& F = c.field();
    CountedField k(F, ctr);
    TypicalResult res;
    detail::StepTracker step(res.step_costs, ctr);

    const Fp u10 = d1.u.coeff(0), u11 = d1.u.coeff(1), u12 = d1.u.coeff(2);
    const Fp u20 = d2.u.coeff(0), u21 = d2.u.coeff(1), u22 = d2.u.coeff(2);
    const Fp v10 = d1.v.coeff(0), v11 = d1.v.coeff(1), v12 = d1.v.coeff(2);
    const Fp v20 = d2.v.coeff(0), v21 = d2.v.coeff(1), v22 = d2.v.coeff(2);
    const Fp f4 = c.f().coeff(4), f5 = c.f().coeff(5), f6 = c.f().coeff(6);

    // 1. r = Res(u1, u2) and i = r*u1^-1 mod u2.                   [15M+12A]
    Fp t1 = k.sub(u10, u20);
    Fp t2 = k.sub(u11, u21);
    const Fp w0 = k.sub(u12, u22);
    Fp t3 = k.sub(t2, k.mul(u22, w0));
    Fp t4 = k.sub(t1, k.mul(u21, w0));
    Fp t5 = k.sub(k.mul(u22, t3), t4);
    Fp t6 = k.add(k.mul(u20, w0), k.mul(u21, t3));
    const Fp i0 = k.sub(k.mul(t4, t5), k.mul(t3, t6));
    const Fp i1 = k.sub(k.mul(w0, t6), k.mul(t2, t5));
    const Fp i2 = k.sub(k.mul(w0, t4), k.mul(t2, t3));
    const Fp r = k.sub(k.mul(t1, i0), k.mul(u20, k.add(k.mul(t3, i2), k.mul(w0, i1))));
    step.cut();

    // 2. q = r*(v2 - v1)*u1^-1 mod u2.                             [10M+30A]
    t1 = k.sub(v20, v10);
    t2 = k.sub(v11, v21);
    t3 = k.sub(v12, v22);
    t4 = k.mul(t2, i1);
    t5 = k.mul(t1, i0);
    t6 = k.mul(t3, i2);
    const Fp t7 = k.mul(u22, t6);
    const Fp t8 = k.sub(k.add(k.add(t4, t6), t7), k.mul(k.add(t2, t3), k.add(i1, i2)));
    const Fp t9 = k.add(u20, u22);
    const Fp t10 = k.mul(k.add(t9, u21), k.sub(t8, t6));
    const Fp t11 = k.mul(k.sub(t9, u21), k.add(t8, t6));
    const Fp q0 = k.sub(t5, k.mul(u20, t8));
    const Fp q1 = k.add(k.sub(k.add(k.sub(t4, t5), k.hlv(k.sub(t11, t10))), t7),
                        k.mul(k.sub(t1, t2), k.add(i0, i1)));
    const Fp q2 = k.sub(k.add(k.sub(k.sub(t6, q0), t4), k.mul(k.sub(t1, t3), k.add(i0, i2))),
                        k.hlv(k.add(t10, t11)));
    step.cut();

    // 3. t1 = r*q2*vt43, then the three-way Montgomery inversion
    //    giving c^-1, c, c^2, (2*vt43)^-1, and s = x^2+s1*x+s0.  [I+18M+6A]
    t1 = k.add(k.sqr(k.add(r, q1)),
               k.mul(q2, k.sub(k.sub(k.add(k.mul(r, w0), k.mul(q2, u21)), k.mul(q1, u22)), q0)));
    t2 = k.dbl(t1);
    t3 = k.mul(r, q2);
    if (t2 == 0 || t3 == 0) {
        // atypical: gcd(u1,u2) != 1, deg s < 2, or vt43 = 0
        return TypicalResult{generic::addition(d1, d2, c, ctr), false, {}};
    }
    t4 = k.inv(k.mul(t2, t3));
    t5 = k.mul(t2, t4);
    t6 = k.mul(r, t5);
    const Fp w1 = k.mul(t5, k.sqr(q2));  // c^-1
    const Fp w2 = k.mul(r, t6);          // c
    const Fp w3 = k.sqr(w2);             // c^2
    const Fp w4 = k.mul(k.sqr(t3), t4);  // (2*vt43)^-1
    const Fp s0 = k.mul(t6, q0);
    const Fp s1 = k.mul(t6, q1);
    const Fp vt43 = k.mul(t1, t5);
    step.cut();

    // 4. z = s*u1.                                                  [4M+15A]
    t6 = k.add(s0, s1);
    t1 = k.add(u10, u12);
    t2 = k.mul(t6, k.add(t1, u11));
    t3 = k.mul(k.sub(t1, u11), k.sub(s0, s1));
    t4 = k.mul(u12, s1);
    const Fp z0 = k.mul(u10, s0);
    const Fp z1 = k.sub(k.hlv(k.sub(t2, t3)), t4);
    const Fp z2 = k.add(k.sub(k.hlv(k.add(t2, t3)), z0), u10);
    const Fp z3 = k.add(k.add(u11, s0), t4);
    const Fp z4 = k.add(u12, s1);
    step.cut();

    // 5. u4 = (s*(z + 2c*v1) - c^2*(f - v1^2)/u1)/u2.              [14M+31A]
    const Fp u43 = k.sub(k.add(z4, s1), u22);
    const Fp ta0 = k.mul(s1, z4);
    const Fp ta1 = k.mul(u22, u43);
    const Fp u42 = k.sub(k.sub(k.sub(k.add(k.add(z3, ta0), s0), w3), u21), ta1);
    const Fp ta2 = k.mul(u21, u42);
    const Fp ta3 = k.sub(k.sub(k.mul(k.add(u21, u22), k.add(u42, u43)), ta1), ta2);
    const Fp ta4 = k.dbl(w2);
    const Fp ta5 = k.mul(ta4, v12);
    const Fp ta6 = k.mul(s0, z3);
    const Fp ta7 = k.sub(k.sub(k.mul(k.add(s0, s1), k.add(z3, z4)), ta0), ta6);
    const Fp u41 = k.sub(k.sub(k.add(k.add(k.add(z2, ta7), ta5), k.mul(w3, u12)), u20), ta3);
    const Fp u40 =
        k.sub(k.sub(k.sub(k.sub(k.add(k.add(k.add(z1, k.mul(s1, k.add(ta5, z2))), ta6),
                                      k.mul(ta4, v11)),
                                k.mul(w3, k.sub(k.add(f6, k.sqr(u12)), u11))),
                          k.mul(u20, u43)),
                    ta2),
              k.mul(u22, u41));
    step.cut();

    // 6. vt4 = v1 + u4 + c^-1*(z mod u4), monic of degree 4.        [6M+10A]
    t1 = k.add(k.sub(u43, z4), w2);
    const Fp vt40 = k.add(v10, k.mul(w1, k.add(z0, k.mul(u40, t1))));
    const Fp vt41 = k.add(v11, k.mul(w1, k.add(k.sub(z1, u40), k.mul(u41, t1))));
    const Fp vt42 = k.add(v12, k.mul(w1, k.add(k.sub(z2, u41), k.mul(u42, t1))));
    step.cut();

    // 7. u5 = (2*vt43)^-1*(vt4^2 - f)/u4.                           [9M+17A]
    const Fp u52 = k.sub(k.add(k.hlv(vt43), k.mul(w4, k.sub(k.dbl(vt42), f6))), u43);
    const Fp u51 = k.sub(k.sub(k.mul(w4, k.sub(k.dbl(k.add(vt41, k.mul(vt43, vt42))), f5)),
                               k.mul(u52, u43)),
                         u42);
    const Fp u50 = k.sub(
        k.sub(k.sub(k.mul(w4, k.sub(k.add(k.sqr(vt42), k.dbl(k.add(vt40, k.mul(vt43, vt41)))), f4)),
                    k.mul(u51, u43)),
              k.mul(u52, u42)),
        u41);
    step.cut();

    // 8. v5 = vt4 mod u5.                                            [3M+6A]
    t1 = k.sub(u52, vt43);
    const Fp v50 = k.add(vt40, k.mul(t1, u50));
    const Fp v51 = k.add(k.sub(vt41, u50), k.mul(t1, u51));
    const Fp v52 = k.add(k.sub(vt42, u51), k.mul(t1, u52));
    step.cut();

    res.result = BalancedDivisor{Poly{{u50, u51, u52, 1}}, Poly{{v50, v51, v52}}, 0};
    res.used_fast_path = true;
    res.s0 = s0;
    res.s1 = s1;
    res.c = w2;
    res.vt43 = vt43;
    return res;
}

inline TypicalResult typical_doubling(const BalancedDivisor& d, const CurveModel& c, OpCount& ctr) {
    if (!detail::curve_ok(c) || !detail::typical_shape(d))
        return TypicalResult{generic::addition(d, d, c, ctr), false, {}};

    const FieldCtx& F = c.field();
    CountedField k(F, ctr);
    TypicalResult res;
    detail::StepTracker step(res.step_costs, ctr);

    const Fp u10 = d.u.coeff(0), u11 = d.u.coeff(1), u12 = d.u.coeff(2);
    const Fp v10 = d.v.coeff(0), v11 = d.v.coeff(1), v12 = d.v.coeff(2);
    const Fp f3 = c.f().coeff(3), f4 = c.f().coeff(4), f5 = c.f().coeff(5), f6 = c.f().coeff(6);

    // 1. r = Res(u1, v1) and i = r*v1^-1 mod u1.                    [15M+9A]
    const Fp w0 = k.sub(v11, k.mul(u12, v12));
    Fp t2 = k.sub(v10, k.mul(u11, v12));
    Fp t3 = k.sub(k.mul(u12, w0), t2);
    Fp t4 = k.add(k.mul(u10, v12), k.mul(u11, w0));
    const Fp i0 = k.sub(k.mul(w0, t4), k.mul(t2, t3));
    const Fp i1 = k.sub(k.mul(v11, t3), k.mul(v12, t4));
    const Fp i2 = k.sub(k.mul(v11, w0), k.mul(v12, t2));
    const Fp r = k.sub(k.mul(v10, i0), k.mul(u10, k.add(k.mul(w0, i2), k.mul(v12, i1))));
    step.cut();

    // 2. p = (f - v1^2)/u1 mod u1.                                 [11M+24A]
    const Fp w1 = k.sqr(u12);
    t2 = k.dbl(u10);
    t3 = k.tpl(u11);
    const Fp w2 = k.add(w1, f6);
    Fp t5 = k.sub(k.dbl(t2), f5);
    Fp t6 = k.dbl(u12);
    Fp t7 = k.sub(t3, w2);
    const Fp p2 = k.sub(k.add(f5, k.mul(t6, k.sub(t7, w1))), t2);
    const Fp p1 = k.sub(k.sub(k.sub(k.add(f4, k.mul(u12, t5)), k.sqr(v12)),
                              k.mul(u11, k.sub(k.dbl(f6), t3))),
                        k.mul(w1, k.add(t7, t3)));
    const Fp p0 = k.sub(k.sub(k.sub(k.sub(f3, k.mul(u11, k.sub(k.mul(w1, t6), t5))),
                                    k.mul(t2, w2)),
                              k.mul(u12, p1)),
                        k.dbl(k.mul(v11, v12)));
    step.cut();

    // 3. q = r*((f - v1^2)/u1)*v1^-1 mod u1.                       [10M+28A]
    Fp t1 = k.mul(i1, p1);
    t2 = k.mul(i0, p0);
    t3 = k.mul(i2, p2);
    t4 = k.mul(u12, t3);
    t5 = k.sub(k.sub(k.sub(k.mul(k.add(i1, i2), k.add(p1, p2)), t1), t3), t4);
    t6 = k.mul(u10, t5);
    t7 = k.add(u10, u12);
    const Fp w3 = k.add(t7, u11);
    const Fp w4 = k.sub(t7, u11);
    const Fp t10 = k.mul(w3, k.add(t3, t5));
    const Fp t11 = k.mul(w4, k.sub(t5, t3));
    const Fp q0 = k.sub(t2, t6);
    const Fp q1 = k.sub(k.sub(k.add(k.add(t4, k.mul(k.add(i0, i1), k.add(p0, p1))),
                                    k.hlv(k.sub(t11, t10))),
                              t1),
                        t2);
    const Fp q2 = k.sub(k.sub(k.sub(k.add(k.add(t1, t6), k.mul(k.add(i0, i2), k.add(p0, p2))),
                              t2),
                        t3),
                  k.hlv(k.add(t10, t11)));
    step.cut();

    // 4. t3 = 2*r*q2*vt43, Montgomery inversion giving c^-1, c,
    //    vt43^-1, and s = q/(2r) made monic.                      [I+17M+7A]
    const Fp t0 = k.dbl(r);
    t1 = k.sqr(t0);
    t2 = k.sqr(q2);
    t3 = k.add(k.add(k.sub(t1, k.mul(q0, q2)),
                     k.mul(q1, k.sub(k.add(k.dbl(t0), q1), k.mul(q2, u12)))),
               k.mul(t2, u11));
    if (t0 == 0 || q2 == 0 || t3 == 0) {
        // atypical: gcd(u1,v1) != 1, deg s < 2, or vt43 = 0
        return TypicalResult{generic::addition(d, d, c, ctr), false, {}};
    }
    t4 = k.inv(k.mul(k.mul(t0, q2), t3));
    t5 = k.mul(t3, t4);
    t6 = k.mul(t0, t5);
    const Fp w5 = k.mul(t2, t5);            // c^-1
    const Fp w6 = k.mul(t1, t5);            // c
    const Fp w7 = k.mul(k.mul(t1, t2), t4); // vt43^-1
    const Fp s0 = k.mul(t6, q0);
    const Fp s1 = k.mul(t6, q1);
    const Fp vt43 = k.mul(t3, t5);
    step.cut();

    // 5. z = s*u1.                                                  [4M+12A]
    t1 = k.mul(w3, k.add(s0, s1));
    t2 = k.mul(w4, k.sub(s0, s1));
    t3 = k.mul(u12, s1);
    const Fp z0 = k.mul(s0, u10);
    const Fp z1 = k.sub(k.hlv(k.sub(t1, t2)), t3);
    const Fp z2 = k.add(k.sub(k.hlv(k.add(t1, t2)), z0), u10);
    [[maybe_unused]] const Fp z3 = k.add(k.add(u11, s0), t3);  // tallied, not consumed
    const Fp z4 = k.add(u12, s1);
    step.cut();

    // 6. u4 = s^2 - (c^2*(f - v1^2)/u1 - 2c*s*v1)/u1.               [9M+14A]
    t1 = k.mul(v12, w6);
    t2 = k.sqr(w6);
    const Fp u43 = k.dbl(s1);
    const Fp u42 = k.sub(k.add(k.dbl(s0), k.sqr(s1)), t2);
    const Fp u41 = k.dbl(k.add(k.add(k.mul(s0, s1), k.mul(u12, t2)), t1));
    const Fp u40 = k.sub(k.add(k.sqr(s0), k.dbl(k.add(k.mul(w0, w6), k.mul(s1, t1)))),
                         k.mul(t2, k.add(w2, k.dbl(k.sub(w1, u11)))));
    step.cut();

    // 7. vt4 = v1 + u4 + c^-1*(z mod u4).                           [6M+10A]
    t1 = k.add(k.sub(u43, z4), w6);
    const Fp vt40 = k.add(v10, k.mul(w5, k.add(z0, k.mul(u40, t1))));
    const Fp vt41 = k.add(v11, k.mul(w5, k.add(k.sub(z1, u40), k.mul(u41, t1))));
    const Fp vt42 = k.add(v12, k.mul(w5, k.add(k.sub(z2, u41), k.mul(u42, t1))));
    step.cut();

    // 8. u5 = (2*vt43)^-1*(vt4^2 - f)/u4.                           [7M+17A]
    const Fp u52 = k.sub(k.add(k.hlv(vt43), k.mul(w7, k.sub(vt42, k.hlv(f6)))), u43);
    const Fp u51 = k.sub(k.sub(k.add(vt42, k.mul(w7, k.sub(vt41, k.hlv(f5)))),
                               k.mul(u52, u43)),
                         u42);
    const Fp u50 =
        k.sub(k.sub(k.sub(k.add(vt41, k.mul(w7, k.add(k.hlv(k.sub(k.sqr(vt42), f4)), vt40))),
                          k.mul(u51, u43)),
                    k.mul(u52, u42)),
              u41);
    step.cut();

    // 9. v5 = vt4 mod u5.                                            [3M+6A]
    t1 = k.sub(u52, vt43);
    const Fp v50 = k.add(vt40, k.mul(t1, u50));
    const Fp v51 = k.add(k.sub(vt41, u50), k.mul(t1, u51));
    const Fp v52 = k.add(k.sub(vt42, u51), k.mul(t1, u52));
    step.cut();

    res.result = BalancedDivisor{Poly{{u50, u51, u52, 1}}, Poly{{v50, v51, v52}}, 0};
    res.used_fast_path = true;
    res.s0 = s0;
    res.s1 = s1;
    res.c = w6;
    res.vt43 = vt43;
    return res;
}

inline TypicalResult typical_negation(const BalancedDivisor& d, const CurveModel& c, OpCount& ctr) {
    if (!detail::curve_ok(c) || !detail::typical_shape(d))
        return TypicalResult{generic::negation(d, c, ctr), false, {}};

    const FieldCtx& F = c.field();
    CountedField k(F, ctr);
    TypicalResult res;
    detail::StepTracker step(res.step_costs, ctr);

    const Fp u10 = d.u.coeff(0), u11 = d.u.coeff(1), u12 = d.u.coeff(2);
    const Fp v10 = d.v.coeff(0), v11 = d.v.coeff(1), v12 = d.v.coeff(2);
    const Fp f3 = c.f().coeff(3), f4 = c.f().coeff(4), f5 = c.f().coeff(5), f6 = c.f().coeff(6);

    // 1. vt1 = v1 - V + (V mod u1) = -x^4 + vt12*x^2 + vt11*x + vt10. [3M+5A]
    const Fp vt12 = k.add(k.sub(v12, u11), k.sqr(u12));
    const Fp vt11 = k.add(k.sub(v11, u10), k.mul(u11, u12));
    const Fp vt10 = k.add(v10, k.mul(u10, u12));
    step.cut();

    // 2. u2 = (f6 + 2*vt12)^-1*(f - vt1^2)/u1.                    [I+8M+14A]
    const Fp t1 = k.dbl(vt12);
    const Fp t2 = k.add(f6, t1);
    if (t2 == 0) {
        // atypical: the reduced quotient drops degree
        return TypicalResult{generic::negation(d, c, ctr), false, {}};
    }
    const Fp t3 = k.inv(t2);
    const Fp u22 = k.sub(k.mul(t3, k.add(f5, k.dbl(vt11))), u12);
    const Fp u21 = k.sub(k.sub(k.mul(t3, k.sub(k.add(f4, k.dbl(vt10)), k.sqr(vt12))), u11),
                         k.mul(u12, u22));
    const Fp u20 = k.sub(k.sub(k.sub(k.mul(t3, k.sub(f3, k.mul(t1, vt11))), u10),
                               k.mul(u11, u22)),
                         k.mul(u12, u21));
    step.cut();

    // 3. v2 = vt1 mod u2.                                            [3M+5A]
    const Fp v22 = k.add(k.sub(vt12, k.sqr(u22)), u21);
    const Fp v21 = k.add(k.sub(vt11, k.mul(u21, u22)), u20);
    const Fp v20 = k.sub(vt10, k.mul(u20, u22));
    step.cut();

    res.result = BalancedDivisor{Poly{{u20, u21, u22, 1}}, Poly{{v20, v21, v22}}, 0};
    res.used_fast_path = true;
    return res;
}

// Dispatcher: routes typical inputs to the straight-line programs and
// everything else (including mid-formula aborts) to the general algorithms.
inline BalancedDivisor add(const BalancedDivisor& d1, const BalancedDivisor& d2, const CurveModel& c,
                           OpCount& ctr) {
    if (d1 == d2) return typical_doubling(d1, c, ctr).result;
    return typical_addition(d1, d2, c, ctr).result;
}

inline BalancedDivisor negate(const BalancedDivisor& d, const CurveModel& c, OpCount& ctr) {
    return typical_negation(d, c, ctr).result;
}

inline BalancedDivisor scalar_mul(std::uint64_t k, const BalancedDivisor& d, const CurveModel& c,
                                  OpCount& ctr) {
    BalancedDivisor acc = identity(c);
    if (k == 0) return acc;
    int top = 63;
    while (top > 0 && !((k >> top) & 1)) --top;
    for (int i = top; i >= 0; --i) {
        acc = add(acc, acc, c, ctr);
        if ((k >> i) & 1) acc = add(acc, d, c, ctr);
    }
    return acc;
}

}  // namespace explicit3
}  // namespace hec
