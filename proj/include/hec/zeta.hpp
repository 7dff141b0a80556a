#pragma once

// Desk-scale L-polynomial computation: brute-force point counts over F_p,
// F_{p^2}, F_{p^3}, the genus-3 L-polynomial via Newton's identities plus the
// functional equation, and a baby-step/giant-step annihilator search in the
// Jacobian.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "hec/curve.hpp"
#include "hec/divisor.hpp"
#include "hec/explicit3.hpp"
#include "hec/fp.hpp"
#include "hec/generic.hpp"
#include "hec/io.hpp"

namespace hec {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class NotFound : public std::runtime_error {
public:
    explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

// F_{p^r} for r in {1,2,3}, as F_p[x] modulo the lexicographically least monic
// irreducible of degree r (degree 2 and 3 irreducibility is root-freeness).
class ExtField {
public:
    using Elt = std::array<Fp, 3>;

    ExtField(const FieldCtx& base, int degree) : F_(base), r_(degree) {
        if (r_ < 1 || r_ > 3) throw std::invalid_argument("ExtField degree must be 1, 2 or 3");
        if (r_ > 1) scan_modulus();
    }

    const FieldCtx& base() const { return F_; }
    int degree() const { return r_; }
    // Non-leading coefficients of the modulus, low to high.
    const Elt& modulus_tail() const { return mod_; }

    std::uint64_t order() const {
        std::uint64_t q = 1;
        for (int i = 0; i < r_; ++i) q *= F_.p();
        return q;
    }

    Elt zero() const { return {0, 0, 0}; }
    Elt one() const { return {1, 0, 0}; }
    Elt from_base(Fp a) const { return {a, 0, 0}; }

    Elt from_index(std::uint64_t idx) const {
        Elt e{0, 0, 0};
        for (int i = 0; i < r_; ++i) {
            e[i] = idx % F_.p();
            idx /= F_.p();
        }
        return e;
    }

    std::uint64_t to_index(const Elt& e) const {
        std::uint64_t idx = 0;
        for (int i = r_; i-- > 0;) idx = idx * F_.p() + e[i];
        return idx;
    }

    bool is_zero(const Elt& e) const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }

    Elt add(const Elt& a, const Elt& b) const {
        return {F_.add(a[0], b[0]), F_.add(a[1], b[1]), F_.add(a[2], b[2])};
    }

    Elt mul(const Elt& a, const Elt& b) const {
        if (r_ == 1) return {F_.mul(a[0], b[0]), 0, 0};
        // schoolbook product, then reduce x^k for k >= r via the modulus
        std::array<Fp, 5> c{0, 0, 0, 0, 0};
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < r_; ++j)
                c[i + j] = F_.add(c[i + j], F_.mul(a[i], b[j]));
        for (int k = 2 * r_ - 2; k >= r_; --k) {
            Fp top = c[k];
            if (top == 0) continue;
            c[k] = 0;
            for (int i = 0; i < r_; ++i)
                c[k - r_ + i] = F_.sub(c[k - r_ + i], F_.mul(top, mod_[i]));
        }
        return {c[0], c[1], c[2]};
    }

    Elt pow(Elt a, std::uint64_t e) const {
        Elt res = one();
        while (e) {
            if (e & 1) res = mul(res, a);
            a = mul(a, a);
            e >>= 1;
        }
        return res;
    }

    // Quadratic character by Euler's criterion; chi(0) = 0.
    int chi_euler(const Elt& a) const {
        if (is_zero(a)) return 0;
        Elt t = pow(a, (order() - 1) / 2);
        return (t == one()) ? 1 : -1;
    }

private:
    // Lexicographic scan over (tail_{r-1}, ..., tail_0); first root-free
    // monic wins.
    void scan_modulus() {
        const std::uint64_t p = F_.p();
        if (r_ == 2) {
            for (std::uint64_t c1 = 0; c1 < p; ++c1)
                for (std::uint64_t c0 = 0; c0 < p; ++c0)
                    if (!has_root({c0, c1, 0})) {
                        mod_ = {c0, c1, 0};
                        return;
                    }
        } else {
            for (std::uint64_t c2 = 0; c2 < p; ++c2)
                for (std::uint64_t c1 = 0; c1 < p; ++c1)
                    for (std::uint64_t c0 = 0; c0 < p; ++c0)
                        if (!has_root({c0, c1, c2})) {
                            mod_ = {c0, c1, c2};
                            return;
                        }
        }
        throw std::logic_error("no irreducible modulus found");
    }

    bool has_root(const Elt& tail) const {
        for (Fp x = 0; x < F_.p(); ++x) {
            Fp v = 1;  // leading coefficient
            for (int i = r_; i-- > 0;) v = F_.add(F_.mul(v, x), tail[i]);
            if (v == 0) return true;
        }
        return false;
    }

    const FieldCtx& F_;
    int r_;
    Elt mod_{0, 0, 0};
};

enum class CharImpl { SquaresTable, Euler };

// #C(F_{p^r}) = 2 + sum over x of (1 + chi(f(x))): the model is monic of even
// degree with two rational points at infinity.
inline std::uint64_t count_points(const CurveModel& c, int r, CharImpl impl = CharImpl::SquaresTable,
                                  int threads = 1) {
    const FieldCtx& F = c.field();
    if (r < 1 || r > 3) throw BudgetExceeded("extension degree must be 1, 2 or 3");
    if (r == 3 && F.p() > 500) throw BudgetExceeded("p too large for degree-3 counting (limit 500)");
    if (r == 2 && F.p() > 100000) throw BudgetExceeded("p too large for degree-2 counting");
    ExtField E(F, r);
    const std::uint64_t q = E.order();

    std::vector<bool> squares;
    if (impl == CharImpl::SquaresTable) {
        squares.assign(q, false);
        for (std::uint64_t i = 0; i < q; ++i) {
            auto z = E.from_index(i);
            squares[E.to_index(E.mul(z, z))] = true;
        }
    }

    const auto& fc = c.f().coeffs();
    auto count_range = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t total = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto x = E.from_index(i);
            auto fx = E.zero();
            for (std::size_t j = fc.size(); j-- > 0;)
                fx = E.add(E.mul(fx, x), E.from_base(fc[j]));
            if (E.is_zero(fx)) {
                total += 1;
            } else if (impl == CharImpl::SquaresTable) {
                total += squares[E.to_index(fx)] ? 2 : 0;
            } else {
                total += E.chi_euler(fx) == 1 ? 2 : 0;
            }
        }
        return total;
    };

    std::uint64_t affine = 0;
    if (threads <= 1) {
        affine = count_range(0, q);
    } else {
        std::vector<std::uint64_t> partial(threads, 0);
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (q + threads - 1) / threads;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                std::uint64_t lo = t * chunk;
                std::uint64_t hi = std::min(q, lo + chunk);
                if (lo < hi) partial[t] = count_range(lo, hi);
            });
        for (auto& th : pool) th.join();
        for (auto v : partial) affine += v;
    }
    return affine + 2;
}

struct LPolynomial {
    // 1, a1, ..., a6 for genus 3.
    std::array<std::int64_t, 7> a{1, 0, 0, 0, 0, 0, 0};

    std::int64_t at(int i) const { return a[i]; }

    // L(1) = group order of the Jacobian.
    std::int64_t order() const {
        std::int64_t s = 0;
        for (auto v : a) s += v;
        return s;
    }

    bool functional_equation_ok(std::uint64_t p) const {
        const std::int64_t pi = static_cast<std::int64_t>(p);
        return a[6] == pi * pi * pi * a[0] && a[5] == pi * pi * a[1] && a[4] == pi * a[2];
    }
};

// Newton's identities on the Frobenius power sums s_r = p^r + 1 - #C(F_{p^r});
// a4..a6 come from the functional equation. All divisions are exact.
inline LPolynomial lpolynomial(const CurveModel& c, CharImpl impl = CharImpl::SquaresTable,
                               int threads = 1) {
    if (c.genus() != 3) throw BudgetExceeded("lpolynomial supports genus 3 only");
    const std::int64_t p = static_cast<std::int64_t>(c.p());
    std::array<std::int64_t, 4> s{0, 0, 0, 0};
    std::int64_t pr = 1;
    for (int r = 1; r <= 3; ++r) {
        pr *= p;
        s[r] = pr + 1 - static_cast<std::int64_t>(count_points(c, r, impl, threads));
    }
    const std::int64_t e1 = s[1];
    const std::int64_t e2 = (e1 * s[1] - s[2]) / 2;
    const std::int64_t e3 = (e2 * s[1] - e1 * s[2] + s[3]) / 3;
    LPolynomial L;
    L.a = {1, -e1, e2, -e3, p * e2, p * p * (-e1), p * p * p};
    return L;
}

// Least m in [lo, hi] with m*d = identity, by baby steps/giant steps keyed on
// the text serialization of (u, v, n). Group steps use the explicit3
// dispatcher; the result is re-verified with the generic scalar multiple.
inline std::uint64_t bsgs_annihilate(const BalancedDivisor& d, const CurveModel& c,
                                     std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi || hi - lo > 100000000ull) throw BudgetExceeded("bsgs interval too wide");
    OpCount ctr;
    const BalancedDivisor id = identity(c);
    const std::uint64_t width = hi - lo + 1;
    std::uint64_t s = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(width))));
    if (s == 0) s = 1;

    // baby steps: j*d for j = 0..s-1, keeping the least j per key
    std::unordered_map<std::string, std::uint64_t> baby;
    BalancedDivisor walk = id;
    for (std::uint64_t j = 0; j < s; ++j) {
        baby.emplace(format_divisor(walk), j);
        walk = explicit3::add(walk, d, c, ctr);
    }

    const BalancedDivisor giant_step = explicit3::scalar_mul(s, d, c, ctr);
    BalancedDivisor t = explicit3::scalar_mul(lo, d, c, ctr);
    for (std::uint64_t i = 0;; ++i) {
        const std::uint64_t base = lo + i * s;
        if (base > hi) break;
        // (base + j)*d = 0  <=>  -t = j*d
        auto it = baby.find(format_divisor(explicit3::negate(t, c, ctr)));
        if (it != baby.end()) {
            const std::uint64_t m = base + it->second;
            if (m >= lo && m <= hi) {
                OpCount check;
                if (generic::scalar_mul(m, d, c, check) == id) return m;
            }
        }
        t = explicit3::add(t, giant_step, c, ctr);
    }
    throw NotFound("no annihilator in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Weil interval [(sqrt(p)-1)^6, (sqrt(p)+1)^6] with a little slack for the
// floating-point endpoints.
inline std::pair<std::uint64_t, std::uint64_t> weil_interval(std::uint64_t p) {
    const double sp = std::sqrt(static_cast<double>(p));
    const double lo = std::pow(sp - 1.0, 6.0);
    const double hi = std::pow(sp + 1.0, 6.0);
    auto lo_i = static_cast<std::uint64_t>(std::max(0.0, std::floor(lo)));
    auto hi_i = static_cast<std::uint64_t>(std::ceil(hi)) + 1;
    return {lo_i, hi_i};
}

}  // namespace hec
