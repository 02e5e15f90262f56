// Dense univariate polynomials over a coefficient context, coefficient vector
// in ascending degree with no trailing zeros.  This is the workhorse under
// rational functions, Euclidean gcds, square roots of polynomials, and the
// finite-field factorization used by the Galois certificates.

#ifndef QUINTIC_UPOLY_HPP
#define QUINTIC_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "quintic/errors.hpp"

namespace quintic {

template <class F>
using UPoly = std::vector<typename F::Elem>;

namespace up {

template <class F>
void trim(const F& K, UPoly<F>& p) {
    while (!p.empty() && K.is_zero(p.back())) p.pop_back();
}

template <class T>
bool is_zero(const std::vector<T>& p) {
    return p.empty();
}

// degree of the zero polynomial is -1
template <class T>
int deg(const std::vector<T>& p) {
    return static_cast<int>(p.size()) - 1;
}

template <class F>
UPoly<F> constant(const F& K, typename F::Elem c) {
    UPoly<F> p;
    if (!K.is_zero(c)) p.push_back(std::move(c));
    return p;
}

template <class F>
UPoly<F> monomial(const F& K, typename F::Elem c, int degree) {
    UPoly<F> p;
    if (K.is_zero(c)) return p;
    p.resize(degree + 1, K.zero());
    p[degree] = std::move(c);
    return p;
}

template <class T>
const T& lc(const std::vector<T>& p) {
    if (p.empty()) throw internal_error("leading coefficient of zero polynomial");
    return p.back();
}

template <class F>
bool eq(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!K.eq(a[i], b[i])) return false;
    return true;
}

template <class F>
UPoly<F> add(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    UPoly<F> r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
    trim(K, r);
    return r;
}

template <class F>
UPoly<F> neg(const F& K, UPoly<F> a) {
    for (auto& c : a) c = K.neg(c);
    return a;
}

template <class F>
UPoly<F> sub(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    return add(K, a, neg(K, b));
}

template <class F>
UPoly<F> mul(const F& K, const UPoly<F>& a, const UPoly<F>& b) {
    if (a.empty() || b.empty()) return {};
    UPoly<F> r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    trim(K, r);
    return r;
}

template <class F>
UPoly<F> mul_scalar(const F& K, UPoly<F> a, const typename F::Elem& c) {
    if (K.is_zero(c)) return {};
    for (auto& x : a) x = K.mul(x, c);
    trim(K, a);
    return a;
}

template <class F>
UPoly<F> monic(const F& K, UPoly<F> a) {
    static_assert(F::is_field);
    if (a.empty()) return a;
    auto inv = K.inv(a.back());
    for (auto& x : a) x = K.mul(x, inv);
    return a;
}

// Euclidean division over a field.
template <class F>
std::pair<UPoly<F>, UPoly<F>> divrem(const F& K, UPoly<F> a, const UPoly<F>& b) {
    static_assert(F::is_field);
    if (b.empty()) throw division_by_zero();
    if (a.size() < b.size()) return {UPoly<F>{}, std::move(a)};
    UPoly<F> q(a.size() - b.size() + 1, K.zero());
    auto binv = K.inv(b.back());
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        if (K.is_zero(a[i])) continue;
        auto f = K.mul(a[i], binv);
        q[i - (b.size() - 1)] = f;
        for (size_t j = 0; j < b.size(); ++j) {
            size_t k = i - (b.size() - 1) + j;
            a[k] = K.sub(a[k], K.mul(f, b[j]));
        }
    }
    trim(K, a);
    trim(K, q);
    return {std::move(q), std::move(a)};
}

template <class F>
UPoly<F> rem(const F& K, UPoly<F> a, const UPoly<F>& b) {
    return divrem(K, std::move(a), b).second;
}

// monic gcd
template <class F>
UPoly<F> gcd(const F& K, UPoly<F> a, UPoly<F> b) {
    while (!b.empty()) {
        auto r = rem(K, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(K, std::move(a));
}

template <class F>
typename F::Elem eval(const F& K, const UPoly<F>& p, const typename F::Elem& x) {
    auto r = K.zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = K.add(K.mul(r, x), *it);
    return r;
}

template <class F>
UPoly<F> derivative(const F& K, const UPoly<F>& p) {
    UPoly<F> r;
    for (size_t i = 1; i < p.size(); ++i)
        r.push_back(K.mul(p[i], K.from_int(static_cast<long>(i))));
    trim(K, r);
    return r;
}

template <class F>
UPoly<F> pow(const F& K, UPoly<F> base, unsigned long e) {
    UPoly<F> r = constant(K, K.one());
    while (e) {
        if (e & 1) r = mul(K, r, base);
        e >>= 1;
        if (e) base = mul(K, base, base);
    }
    return r;
}

// base^e mod m with a big exponent; used for Frobenius powers x^(p^d) mod m.
template <class F>
UPoly<F> powmod(const F& K, UPoly<F> base, const mpz_class& e, const UPoly<F>& m) {
    UPoly<F> r = constant(K, K.one());
    base = rem(K, std::move(base), m);
    long bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (long i = bits - 1; i >= 0; --i) {
        r = rem(K, mul(K, r, r), m);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(K, mul(K, r, base), m);
    }
    return r;
}

// Exact polynomial square root.  Returns q with q*q == p, or nothing.  The
// leading coefficient of q is the principal square root of p's (positive over
// QQ, canonical min(s, p-s) over Fp).  Requires characteristic != 2.
template <class F>
std::optional<UPoly<F>> poly_sqrt(const F& K, const UPoly<F>& p) {
    static_assert(F::is_field);
    if (p.empty()) return UPoly<F>{};
    int n = deg(p);
    if (n % 2 != 0) return std::nullopt;
    int m = n / 2;
    auto s0 = K.is_square(p.back());
    if (!s0) return std::nullopt;
    UPoly<F> q(m + 1, K.zero());
    q[m] = *s0;
    auto twice_lc_inv = K.inv(K.add(*s0, *s0));
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of x^(m+k) in q^2, excluding the 2*q[m]*q[k] part
        auto acc = K.zero();
        for (int i = k + 1; i <= m; ++i) {
            int j = m + k - i;
            if (j <= k || j > m) continue;
            acc = K.add(acc, K.mul(q[i], q[j]));
        }
        auto target = (m + k <= n) ? p[m + k] : K.zero();
        q[k] = K.mul(K.sub(target, acc), twice_lc_inv);
    }
    if (!eq(K, mul(K, q, q), p)) return std::nullopt;
    return q;
}

// p(x) -> p(x + a)
template <class F>
UPoly<F> taylor_shift(const F& K, const UPoly<F>& p, const typename F::Elem& a) {
    UPoly<F> r;
    UPoly<F> xa{a, K.one()};  // x + a
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = add(K, mul(K, r, xa), constant(K, *it));
    return r;
}

// grammar-compatible text, descending powers; used for rational-function parts
template <class F>
std::string to_string(const F& K, const UPoly<F>& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    bool first = true;
    for (int i = deg(p); i >= 0; --i) {
        if (K.is_zero(p[i])) continue;
        auto c = p[i];
        if (K.is_negative(c)) {
            out += "-";
            c = K.abs_val(c);
        } else if (!first) {
            out += "+";
        }
        bool unit = K.is_one(c);
        if (!unit || i == 0) out += K.to_factor_string(c);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        first = false;
    }
    return out;
}

}  // namespace up
}  // namespace quintic

#endif
