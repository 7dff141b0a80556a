#pragma once

// Dense univariate polynomials over F_p. Coefficients are stored low-to-high
// with trailing zeros trimmed; the zero polynomial is the empty vector and
// reports degree -1. Schoolbook algorithms throughout: this layer is the
// correctness oracle for the straight-line genus-3 formulas, all degrees
// here are at most 2g+2 = 8.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "hec/fp.hpp"

namespace hec {

class DivisionByZeroPoly : public std::runtime_error {
public:
    DivisionByZeroPoly() : std::runtime_error("polynomial division by zero") {}
};

class InexactDivision : public std::runtime_error {
public:
    InexactDivision() : std::runtime_error("exact_div: nonzero remainder") {}
};

class NotCoprime : public std::runtime_error {
public:
    NotCoprime() : std::runtime_error("mod_inverse: inputs are not coprime") {}
};

class ZeroPolynomial : public std::runtime_error {
public:
    ZeroPolynomial() : std::runtime_error("zero polynomial not allowed here") {}
};

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Fp> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Fp> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly{}; }
    static Poly constant(Fp a) { return Poly{{a}}; }
    static Poly x_power(std::size_t k) {
        std::vector<Fp> c(k + 1, 0);
        c[k] = 1;
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    // -1 encodes degree(-infinity) of the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Fp coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Fp lc() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return lc() == 1; }
    const std::vector<Fp>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Fp> c_;
};

inline Poly add(const Poly& a, const Poly& b, const FieldCtx& F, OpCount& ctr) {
    std::vector<Fp> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = add(a.coeff(i), b.coeff(i), F, ctr);
    return Poly(std::move(c));
}

inline Poly sub(const Poly& a, const Poly& b, const FieldCtx& F, OpCount& ctr) {
    std::vector<Fp> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = sub(a.coeff(i), b.coeff(i), F, ctr);
    return Poly(std::move(c));
}

inline Poly neg(const Poly& a, const FieldCtx& F, OpCount& ctr) {
    return sub(Poly::zero(), a, F, ctr);
}

inline Poly scale(const Poly& a, Fp s, const FieldCtx& F, OpCount& ctr) {
    if (s == 0) return Poly::zero();
    std::vector<Fp> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = mul(a.coeff(i), s, F, ctr);
    return Poly(std::move(c));
}

inline Poly mul(const Poly& a, const Poly& b, const FieldCtx& F, OpCount& ctr) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    std::vector<Fp> c(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            c[i + j] = add(c[i + j], mul(a.coeff(i), b.coeff(j), F, ctr), F, ctr);
    return Poly(std::move(c));
}

// a = q*b + r with deg r < deg b; when deg b = 0 the remainder is zero.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, const FieldCtx& F, OpCount& ctr) {
    if (b.is_zero()) throw DivisionByZeroPoly();
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    const Fp lcinv = b.lc() == 1 ? 1 : inv(b.lc(), F, ctr);
    std::vector<Fp> rem(a.coeffs());
    std::vector<Fp> quo(a.coeffs().size() - b.coeffs().size() + 1, 0);
    for (std::size_t i = quo.size(); i-- > 0;) {
        Fp top = rem[i + b.coeffs().size() - 1];
        if (top == 0) continue;
        Fp qi = lcinv == 1 ? top : mul(top, lcinv, F, ctr);
        quo[i] = qi;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            rem[i + j] = sub(rem[i + j], mul(qi, b.coeff(j), F, ctr), F, ctr);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

inline Poly mod(const Poly& a, const Poly& b, const FieldCtx& F, OpCount& ctr) {
    return divrem(a, b, F, ctr).second;
}

// Quotient of an exact division; a nonzero remainder signals an upstream
// invariant violation and raises InexactDivision.
inline Poly exact_div(const Poly& a, const Poly& b, const FieldCtx& F, OpCount& ctr) {
    auto [q, r] = divrem(a, b, F, ctr);
    if (!r.is_zero()) throw InexactDivision();
    return q;
}

// (c, m) with m = c*a monic and c = lc(a)^-1.
inline std::pair<Fp, Poly> make_monic(const Poly& a, const FieldCtx& F, OpCount& ctr) {
    if (a.is_zero()) throw ZeroPolynomial();
    if (a.is_monic()) return {1, a};
    Fp c = inv(a.lc(), F, ctr);
    return {c, scale(a, c, F, ctr)};
}

// Extended Euclid: returns (g, s, t) with g = s*a + t*b, g monic (or zero).
inline std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b, const FieldCtx& F, OpCount& ctr) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1 = Poly::zero();
    Poly t0 = Poly::zero(), t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1, F, ctr);
        Poly s2 = sub(s0, mul(q, s1, F, ctr), F, ctr);
        Poly t2 = sub(t0, mul(q, t1, F, ctr), F, ctr);
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    if (r0.is_zero() || r0.is_monic()) return {r0, s0, t0};
    Fp c = inv(r0.lc(), F, ctr);
    return {scale(r0, c, F, ctr), scale(s0, c, F, ctr), scale(t0, c, F, ctr)};
}

inline Poly gcd(const Poly& a, const Poly& b, const FieldCtx& F, OpCount& ctr) {
    return std::get<0>(xgcd(a, b, F, ctr));
}

// Three-input extended gcd via two chained Euclidean passes:
// w = gcd(u1, u2, v12) monic, with w = c1*u1 + c2*u2 + c3*v12.
struct Xgcd3 {
    Poly w, c1, c2, c3;
};

inline Xgcd3 xgcd3(const Poly& u1, const Poly& u2, const Poly& v12, const FieldCtx& F, OpCount& ctr) {
    if (u1.is_zero() && u2.is_zero() && v12.is_zero()) throw ZeroPolynomial();
    auto [g1, a1, b1] = xgcd(u1, u2, F, ctr);
    auto [w, s, t] = xgcd(g1, v12, F, ctr);
    return Xgcd3{w, mul(s, a1, F, ctr), mul(s, b1, F, ctr), t};
}

// b with a*b = 1 (mod m), deg b < deg m.
inline Poly mod_inverse(const Poly& a, const Poly& m, const FieldCtx& F, OpCount& ctr) {
    auto [g, s, t] = xgcd(mod(a, m, F, ctr), m, F, ctr);
    (void)t;
    if (g.degree() != 0) throw NotCoprime();
    return mod(s, m, F, ctr);
}

inline Fp eval(const Poly& a, Fp x, const FieldCtx& F, OpCount& ctr) {
    Fp r = 0;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) r = add(mul(r, x, F, ctr), a.coeff(i), F, ctr);
    return r;
}

// a(x - t), computed by Horner over the linear factor. Monic stays monic.
inline Poly compose_x_minus(const Poly& a, Fp t, const FieldCtx& F, OpCount& ctr) {
    Poly lin{{F.neg(t), 1}};
    Poly r = Poly::zero();
    for (std::size_t i = a.coeffs().size(); i-- > 0;)
        r = add(mul(r, lin, F, ctr), Poly::constant(a.coeff(i)), F, ctr);
    return r;
}

inline Poly derivative(const Poly& a, const FieldCtx& F) {
    if (a.degree() < 1) return Poly::zero();
    std::vector<Fp> c(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i)
        c[i - 1] = F.mul(a.coeff(i), F.reduce(i));
    return Poly(std::move(c));
}

// r = Res(u1, u2) and i = r*u1^-1 mod u2 for monic cubics, straight-line,
// costing exactly 15M + 12A. r = 0 iff gcd(u1, u2) != 1; in that case i is
// meaningless and the caller falls back to the generic path.
struct ResultantCubics {
    Fp r;
    Poly i;
};

inline ResultantCubics resultant_cubics(const Poly& u1, const Poly& u2, const FieldCtx& F, OpCount& ctr) {
    CountedField k(F, ctr);
    const Fp u10 = u1.coeff(0), u11 = u1.coeff(1), u12 = u1.coeff(2);
    const Fp u20 = u2.coeff(0), u21 = u2.coeff(1), u22 = u2.coeff(2);
    const Fp t1 = k.sub(u10, u20);
    const Fp t2 = k.sub(u11, u21);
    const Fp w0 = k.sub(u12, u22);
    const Fp t3 = k.sub(t2, k.mul(u22, w0));
    const Fp t4 = k.sub(t1, k.mul(u21, w0));
    const Fp t5 = k.sub(k.mul(u22, t3), t4);
    const Fp t6 = k.add(k.mul(u20, w0), k.mul(u21, t3));
    const Fp i0 = k.sub(k.mul(t4, t5), k.mul(t3, t6));
    const Fp i1 = k.sub(k.mul(w0, t6), k.mul(t2, t5));
    const Fp i2 = k.sub(k.mul(w0, t4), k.mul(t2, t3));
    const Fp r = k.sub(k.mul(t1, i0), k.mul(u20, k.add(k.mul(t3, i2), k.mul(w0, i1))));
    return {r, Poly{{i0, i1, i2}}};
}

}  // namespace hec
