// Exact coefficient domains: ZZ (integers), QQ (rationals) and Fp (word-size
// prime fields with p not in {2,3,5}).  Rational-function fields live in
// ratfunc.hpp.  Each domain is a small context object exposing a common
// interface; elements are plain values (mpz_class, mpq_class, uint64_t) and
// every operation goes through the context, so mixed-modulus bugs cannot
// arise from stray elements.
//
// Context interface (duck-typed, used by upoly/multipoly/formparse):
//   using Elem;  static constexpr bool is_field;
//   zero(), one(), from_int(long), from_mpz(z), from_mpq(q)
//   add, sub, neg, mul, is_zero, is_one, eq
//   inv, div (fields), divexact (fields: plain division; ZZ: checked exact)
//   characteristic() -> uint64_t (0 in characteristic zero)
//   is_square(e) -> std::optional<Elem>
//   is_negative(e), abs_val(e)       (sign extraction for printing)
//   to_factor_string(e) -> string    (grammar-compatible literal/factor text)
//   same_ring(other) -> bool

#ifndef QUINTIC_RINGS_HPP
#define QUINTIC_RINGS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "quintic/errors.hpp"

namespace quintic {

namespace modarith {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin base set for 64-bit inputs
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Square root mod an odd prime via Tonelli-Shanks; returns the canonical root
// min(s, p-s), or nothing when a is a non-residue.
inline std::optional<uint64_t> sqrtmod(uint64_t a, uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    uint64_t s;
    if (p % 4 == 3) {
        s = powmod(a, (p + 1) / 4, p);
    } else {
        uint64_t q = p - 1;
        int e = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++e;
        }
        uint64_t z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        uint64_t c = powmod(z, q, p);
        uint64_t x = powmod(a, (q + 1) / 2, p);
        uint64_t t = powmod(a, q, p);
        int m = e;
        while (t != 1) {
            uint64_t tt = t;
            int i = 0;
            while (tt != 1) {
                tt = mulmod(tt, tt, p);
                ++i;
            }
            uint64_t b = c;
            for (int k = 0; k < m - i - 1; ++k) b = mulmod(b, b, p);
            x = mulmod(x, b, p);
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            m = i;
        }
        s = x;
    }
    return std::min(s, p - s);
}

}  // namespace modarith

// ---------------------------------------------------------------------------

struct ZZ {
    using Elem = mpz_class;
    static constexpr bool is_field = false;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from_mpz(const mpz_class& v) const { return v; }
    Elem from_mpq(const mpq_class& v) const {
        if (v.get_den() != 1) throw wrong_ring("rational constant in integer ring");
        return v.get_num();
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem divexact(const Elem& a, const Elem& b) const {
        if (b == 0) throw division_by_zero();
        if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
            throw internal_error("inexact integer division");
        Elem q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    uint64_t characteristic() const { return 0; }

    std::optional<Elem> is_square(const Elem& a) const {
        if (a < 0) return std::nullopt;
        if (!mpz_perfect_square_p(a.get_mpz_t())) return std::nullopt;
        Elem r;
        mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
        return r;
    }

    bool is_negative(const Elem& a) const { return a < 0; }
    Elem abs_val(const Elem& a) const { return abs(a); }
    std::string to_factor_string(const Elem& a) const { return a.get_str(); }
    bool same_ring(const ZZ&) const { return true; }
};

struct QQ {
    using Elem = mpq_class;
    static constexpr bool is_field = true;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from_mpz(const mpz_class& v) const { return Elem(v); }
    Elem from_mpq(const mpq_class& v) const { return v; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw division_by_zero();
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw division_by_zero();
        return a / b;
    }
    Elem divexact(const Elem& a, const Elem& b) const { return div(a, b); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    uint64_t characteristic() const { return 0; }

    std::optional<Elem> is_square(const Elem& a) const {
        if (a < 0) return std::nullopt;
        ZZ z;
        auto n = z.is_square(a.get_num());
        if (!n) return std::nullopt;
        auto d = z.is_square(a.get_den());
        if (!d) return std::nullopt;
        return Elem(*n) / Elem(*d);
    }

    bool is_negative(const Elem& a) const { return a < 0; }
    Elem abs_val(const Elem& a) const { return abs(a); }
    std::string to_factor_string(const Elem& a) const { return a.get_str(); }
    bool same_ring(const QQ&) const { return true; }
};

// Prime field with word-size modulus.  The characteristic restriction
// p not in {2,3,5} is enforced here, once, for the whole pipeline.
struct Fp {
    uint64_t p = 0;
    using Elem = uint64_t;
    static constexpr bool is_field = true;

    Fp() = default;
    explicit Fp(uint64_t prime) : p(prime) {
        if (p == 2 || p == 3 || p == 5)
            throw wrong_ring("characteristic 2, 3 and 5 are not supported");
        if (p >= (uint64_t(1) << 62) || !modarith::is_prime(p))
            throw wrong_ring("modulus must be a word-size prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elem>(r);
    }
    Elem from_mpz(const mpz_class& v) const {
        mpz_class r = v % mpz_class(static_cast<unsigned long>(p));
        if (r < 0) r += mpz_class(static_cast<unsigned long>(p));
        return r.get_ui();
    }
    Elem from_mpq(const mpq_class& v) const {
        Elem d = from_mpz(v.get_den());
        if (d == 0) throw division_by_zero();
        return mul(from_mpz(v.get_num()), inv(d));
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem mul(Elem a, Elem b) const { return modarith::mulmod(a, b, p); }
    Elem inv(Elem a) const {
        if (a == 0) throw division_by_zero();
        return modarith::powmod(a, p - 2, p);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem divexact(Elem a, Elem b) const { return div(a, b); }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool eq(Elem a, Elem b) const { return a == b; }
    uint64_t characteristic() const { return p; }

    std::optional<Elem> is_square(Elem a) const { return modarith::sqrtmod(a, p); }

    bool is_negative(Elem) const { return false; }
    Elem abs_val(Elem a) const { return a; }
    std::string to_factor_string(Elem a) const { return std::to_string(a); }
    bool same_ring(const Fp& other) const { return p == other.p; }
};

// ---------------------------------------------------------------------------

// Runtime selector for the coefficient domain.  Function fields nest exactly
// one level: a parameter over QQ or over a prime field.
struct RingDescriptor {
    enum class Kind { rational_field, prime_field, rational_function_field };

    Kind kind = Kind::rational_field;
    uint64_t p = 0;           // prime_field, or the base prime of a function field
    Kind base = Kind::rational_field;  // base of a rational_function_field
    std::string parameter;    // parameter symbol of a rational_function_field

    static RingDescriptor rationals() { return RingDescriptor{}; }

    static RingDescriptor prime(uint64_t p) {
        Fp check(p);  // validates primality and the excluded characteristics
        RingDescriptor r;
        r.kind = Kind::prime_field;
        r.p = p;
        return r;
    }

    static RingDescriptor rational_functions(const RingDescriptor& base, std::string param) {
        if (base.kind == Kind::rational_function_field)
            throw wrong_ring("function fields do not nest");
        if (param.empty()) throw wrong_ring("function field needs a parameter symbol");
        RingDescriptor r;
        r.kind = Kind::rational_function_field;
        r.base = base.kind;
        r.p = base.p;
        r.parameter = std::move(param);
        return r;
    }
};

}  // namespace quintic

#endif
