#pragma once

// Arithmetic in the prime field F_p for word-sized odd primes, with explicit
// operation accounting (I = inversions, M = multiplications incl. squarings,
// A = additions, subtractions, doublings, halvings, small-constant multiples).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hec {

using Fp = std::uint64_t;

struct OpCount {
    std::int64_t inv = 0;
    std::int64_t mul = 0;
    std::int64_t add = 0;

    OpCount& operator+=(const OpCount& o) {
        inv += o.inv;
        mul += o.mul;
        add += o.add;
        return *this;
    }
    friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
    friend OpCount operator-(const OpCount& a, const OpCount& b) {
        return OpCount{a.inv - b.inv, a.mul - b.mul, a.add - b.add};
    }
    friend bool operator==(const OpCount& a, const OpCount& b) {
        return a.inv == b.inv && a.mul == b.mul && a.add == b.add;
    }
    friend bool operator!=(const OpCount& a, const OpCount& b) { return !(a == b); }
};

class ZeroInverse : public std::runtime_error {
public:
    explicit ZeroInverse(const std::string& what) : std::runtime_error(what) {}
};

class BadField : public std::runtime_error {
public:
    explicit BadField(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

// Immutable field context; raw (uncounted) arithmetic lives here. The counted
// entry points below wrap these and tally into a caller-owned OpCount.
class FieldCtx {
public:
    explicit FieldCtx(std::uint64_t p) : p_(p) {
        if (p == 2) throw BadField("characteristic 2 is not supported");
        if (p >= (1ull << 62)) throw BadField("modulus too large (need p < 2^62)");
        if (!detail::is_prime_u64(p)) throw BadField("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t p() const { return p_; }

    Fp reduce(std::uint64_t a) const { return a % p_; }
    Fp add(Fp a, Fp b) const {
        Fp s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
    Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
    Fp mul(Fp a, Fp b) const { return detail::mulmod_u64(a, b, p_); }
    Fp halve(Fp a) const { return (a & 1) ? (a + p_) >> 1 : a >> 1; }
    Fp pow(Fp a, std::uint64_t e) const { return detail::powmod_u64(a, e, p_); }
    Fp inv(Fp a) const {
        if (a == 0) throw ZeroInverse("inverse of 0 mod " + std::to_string(p_));
        return pow(a, p_ - 2);
    }

    bool is_square(Fp a) const { return a == 0 || pow(a, (p_ - 1) / 2) == 1; }

    // Tonelli-Shanks; requires a to be a quadratic residue.
    Fp sqrt(Fp a) const {
        if (a == 0) return 0;
        if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
        std::uint64_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        Fp z = 2;
        while (is_square(z)) ++z;
        Fp m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
        while (t != 1) {
            Fp t2 = t;
            std::uint64_t i = 0;
            while (t2 != 1) {
                t2 = mul(t2, t2);
                ++i;
            }
            Fp b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
            m = i;
            c = mul(b, b);
            t = mul(t, c);
            r = mul(r, b);
        }
        return r;
    }

private:
    std::uint64_t p_;
};

// Counted operations (the public accounting surface).

inline Fp add(Fp a, Fp b, const FieldCtx& F, OpCount& c) {
    ++c.add;
    return F.add(a, b);
}
inline Fp sub(Fp a, Fp b, const FieldCtx& F, OpCount& c) {
    ++c.add;
    return F.sub(a, b);
}
inline Fp mul(Fp a, Fp b, const FieldCtx& F, OpCount& c) {
    ++c.mul;
    return F.mul(a, b);
}
inline Fp inv(Fp a, const FieldCtx& F, OpCount& c) {
    ++c.inv;
    return F.inv(a);
}
inline Fp halve(Fp a, const FieldCtx& F, OpCount& c) {
    ++c.add;
    return F.halve(a);
}
// c_small in {2, 3}; costs c_small - 1 additions.
inline Fp small_scale(Fp a, int c_small, const FieldCtx& F, OpCount& c) {
    Fp r = a;
    for (int i = 1; i < c_small; ++i) r = add(r, a, F, c);
    return r;
}

// Montgomery's trick: n inverses for 1 inversion and 3(n-1) multiplications.
inline std::vector<Fp> batch_invert(const std::vector<Fp>& vals, const FieldCtx& F, OpCount& c) {
    const std::size_t n = vals.size();
    for (std::size_t i = 0; i < n; ++i)
        if (vals[i] == 0) throw ZeroInverse("batch_invert: zero at index " + std::to_string(i));
    if (n == 0) return {};
    std::vector<Fp> prefix(n);
    prefix[0] = vals[0];
    for (std::size_t i = 1; i < n; ++i) prefix[i] = mul(prefix[i - 1], vals[i], F, c);
    Fp acc = inv(prefix[n - 1], F, c);
    std::vector<Fp> out(n);
    for (std::size_t i = n; i-- > 1;) {
        out[i] = mul(acc, prefix[i - 1], F, c);
        acc = mul(acc, vals[i], F, c);
    }
    out[0] = acc;
    return out;
}

// Terse counted view used by the straight-line formulas; every call tallies.
class CountedField {
public:
    CountedField(const FieldCtx& F, OpCount& c) : F_(F), c_(c) {}

    Fp add(Fp a, Fp b) { return hec::add(a, b, F_, c_); }
    Fp sub(Fp a, Fp b) { return hec::sub(a, b, F_, c_); }
    Fp mul(Fp a, Fp b) { return hec::mul(a, b, F_, c_); }
    Fp sqr(Fp a) { return hec::mul(a, a, F_, c_); }
    Fp inv(Fp a) { return hec::inv(a, F_, c_); }
    Fp hlv(Fp a) { return hec::halve(a, F_, c_); }
    Fp dbl(Fp a) { return hec::add(a, a, F_, c_); }
    Fp tpl(Fp a) { return hec::small_scale(a, 3, F_, c_); }

private:
    const FieldCtx& F_;
    OpCount& c_;
};

}  // namespace hec
