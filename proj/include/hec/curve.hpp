#pragma once

// Curve model y^2 = f(x) with f monic separable of degree 2g+2 over an odd
// prime field, together with the precomputed monic V of degree g+1 satisfying
// deg(f - V^2) <= g, and the x-translation that clears the x^(2g+1) term.

#include <stdexcept>
#include <string>

#include "hec/fp.hpp"
#include "hec/poly.hpp"

namespace hec {

class BadCurve : public std::runtime_error {
public:
    explicit BadCurve(const std::string& what) : std::runtime_error(what) {}
};

// Recurrence for the monic V with deg(f - V^2) <= g. The coefficient of
// x^(g+1+i) in V^2 is 2*V_i + sum over the already-determined pairs, so the
// inner sum runs over j = i+1 .. g only.
inline Poly precompute_V(const Poly& f, int g, const FieldCtx& F, OpCount& ctr) {
    if (f.degree() != 2 * g + 2 || !f.is_monic()) throw BadCurve("precompute_V: f must be monic of degree 2g+2");
    std::vector<Fp> V(static_cast<std::size_t>(g) + 2, 0);
    V[g + 1] = 1;
    for (int i = g; i >= 0; --i) {
        Fp c = f.coeff(static_cast<std::size_t>(g) + 1 + i);
        for (int j = i + 1; j <= g; ++j)
            c = sub(c, mul(V[j], V[g + 1 + i - j], F, ctr), F, ctr);
        V[i] = halve(c, F, ctr);
    }
    return Poly(std::move(V));
}

class CurveModel {
public:
    CurveModel(FieldCtx ctx, int g, Poly f, Fp shift = 0)
        : ctx_(ctx), g_(g), f_(std::move(f)), shift_(shift) {
        if (g_ < 2) throw BadCurve("genus must be at least 2");
        if (f_.degree() != 2 * g_ + 2) throw BadCurve("BadDegree: f must have degree 2g+2");
        if (!f_.is_monic()) throw BadCurve("NotMonic: f must be monic");
        OpCount scratch;
        if (hec::gcd(f_, derivative(f_, ctx_), ctx_, scratch).degree() != 0)
            throw BadCurve("NotSeparable: gcd(f, f') != 1");
        V_ = precompute_V(f_, g_, ctx_, scratch);
    }

    const FieldCtx& field() const { return ctx_; }
    std::uint64_t p() const { return ctx_.p(); }
    int genus() const { return g_; }
    const Poly& f() const { return f_; }
    const Poly& V() const { return V_; }
    Fp shift() const { return shift_; }
    bool normalized() const { return f_.coeff(2 * static_cast<std::size_t>(g_) + 1) == 0; }

private:
    FieldCtx ctx_;
    int g_;
    Poly f_;
    Poly V_;
    Fp shift_ = 0;
};

inline CurveModel new_curve(const FieldCtx& ctx, int g, const std::vector<Fp>& coeffs) {
    if (coeffs.size() != static_cast<std::size_t>(2 * g + 3))
        throw BadCurve("BadDegree: expected 2g+3 coefficients");
    return CurveModel(ctx, g, Poly(coeffs));
}

// Isomorphic model with f_(2g+1) = 0 via x -> x - t, t = f_(2g+1)/(2g+2).
// The recorded shift transports divisors between the two models.
inline CurveModel normalize(const CurveModel& c) {
    const FieldCtx& F = c.field();
    const int g = c.genus();
    Fp top = c.f().coeff(2 * static_cast<std::size_t>(g) + 1);
    if (top == 0) return c;
    OpCount scratch;
    Fp t = F.mul(top, F.inv(F.reduce(2 * g + 2)));
    Poly fn = compose_x_minus(c.f(), t, F, scratch);
    return CurveModel(c.field(), g, fn, F.add(c.shift(), t));
}

}  // namespace hec
