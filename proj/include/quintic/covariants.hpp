// The covariant tower of the binary quintic.  The universal table is computed
// once over ZZ[a0..a5] by transvectants of the symbolic quintic
//   f = a0 x^5 + a1 x^4 y + ... + a5 y^5
// with the classical integer divisors, and every concrete evaluation is a
// substitution homomorphism into the target ring, so finite-characteristic
// values are literally the integer formulas reduced mod p.
//
//   i   = (f,f)^4 / 288      order 2  degree 2
//   H   = (f,f)^2 / 16       order 6  degree 2
//   j   = -(f,i)^2 / 12      order 3  degree 3
//   A   = (i,i)^2 / 32       order 0  degree 4
//   k   = (i,H)^2 / 12       order 4  degree 4
//   tau = (j,j)^2 / 16       order 2  degree 6
//   B   = (tau,i)^2 / 8      order 0  degree 8
//   Delta = (A^2 - 4B)/125   order 0  degree 8
//   C   = (tau,tau)^2 / 6    order 0  degree 12
//   M   = (-9C + 2000 A Delta + 1008 A^3)/25

#ifndef QUINTIC_COVARIANTS_HPP
#define QUINTIC_COVARIANTS_HPP

#include <array>
#include <string>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/multipoly.hpp"
#include "quintic/transvect.hpp"

namespace quintic {

struct CovariantEntry {
    std::string name;
    int order = 0;
    int degree = 0;
    MultiPoly<ZZ> poly{ZZ{}, {}};
};

struct CovariantTable {
    std::vector<CovariantEntry> entries;  // f, i, H, j, k, tau, A, B, Delta, C, M

    const CovariantEntry& entry(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return e;
        throw unknown_symbol(name);
    }
};

// full tower over ZZ[a0..a5]; throws construction_error when any division is
// inexact or any (order, degree) check fails
CovariantTable build_universal_table();

// lazily built shared table; honors the QUINTIC_TABLE_CACHE environment
// variable (path of a text cache that round-trips the table exactly)
const CovariantTable& universal_table();

std::string table_to_text(const CovariantTable& t);
CovariantTable table_from_text(const std::string& text);  // throws construction_error

// the constant disc(f(x,1)) / Delta in ZZ[a0..a5]
const mpz_class& discriminant_to_delta_ratio();

// ---------------------------------------------------------------------------

template <class F>
struct QuinticInvariantsT {
    typename F::Elem A, B, C, Delta, M;
    bool discOK = false;  // Delta != 0
};

template <class F>
struct AbsoluteInvariantsT {
    typename F::Elem delta, q;  // delta = 25 Delta / A^2,  q = A^3 / (8 M)
};

template <class F>
struct CovariantFormsT {
    MultiPoly<F> i, H, j, k, tau;  // dehomogenized, univariate in x
};

namespace detail {

// coefficients a0..a5 of the homogenization of a degree-5 polynomial in x
template <class F>
std::array<typename F::Elem, 6> quintic_coefficients(const F& K, const MultiPoly<F>& g) {
    if (degree_in(g, "x") != 5) throw degree_error("expected a polynomial of degree 5");
    std::array<typename F::Elem, 6> a{K.zero(), K.zero(), K.zero(), K.zero(), K.zero(), K.zero()};
    for (int t = 0; t <= 5; ++t) {
        auto c = coeff_in(g, "x", t);
        if (!c.is_constant()) throw wrong_ring("quintic must be univariate in x");
        a[5 - t] = c.constant_value();
    }
    return a;
}

// evaluate a table entry at concrete a0..a5 (a-power tables, y := 1),
// returning the coefficient of x^e for each e
template <class F>
std::vector<typename F::Elem> eval_entry(const F& K, const CovariantEntry& e,
                                         const std::array<typename F::Elem, 6>& a) {
    // table variable order is {x, y, a0..a5}
    std::array<std::vector<typename F::Elem>, 6> pows;
    for (int v = 0; v < 6; ++v) pows[v] = {K.one(), a[v]};
    std::vector<typename F::Elem> out(static_cast<size_t>(e.order) + 1, K.zero());
    for (const auto& [m, c] : e.poly.terms) {
        auto val = K.from_mpz(c);
        for (int v = 0; v < 6; ++v) {
            uint32_t exp = m[2 + v];
            auto& pw = pows[v];
            while (pw.size() <= exp) pw.push_back(K.mul(pw.back(), pw[1]));
            if (exp > 0) val = K.mul(val, pw[exp]);
        }
        out[m[0]] = K.add(out[m[0]], val);  // y := 1 drops m[1]
    }
    return out;
}

}  // namespace detail

template <class F>
QuinticInvariantsT<F> invariants(const F& K, const MultiPoly<F>& g) {
    auto a = detail::quintic_coefficients(K, g);
    const auto& T = universal_table();
    QuinticInvariantsT<F> r;
    r.A = detail::eval_entry(K, T.entry("A"), a)[0];
    r.B = detail::eval_entry(K, T.entry("B"), a)[0];
    r.C = detail::eval_entry(K, T.entry("C"), a)[0];
    r.Delta = detail::eval_entry(K, T.entry("Delta"), a)[0];
    r.M = detail::eval_entry(K, T.entry("M"), a)[0];
    r.discOK = !K.is_zero(r.Delta);
    // defining relations, exact in ZZ[a0..a5], revalidated per evaluation
    auto lhs1 = K.mul(K.from_int(125), r.Delta);
    auto rhs1 = K.sub(K.mul(r.A, r.A), K.mul(K.from_int(4), r.B));
    auto lhs2 = K.mul(K.from_int(25), r.M);
    auto rhs2 = K.add(K.mul(K.from_int(-9), r.C),
                      K.add(K.mul(K.from_int(2000), K.mul(r.A, r.Delta)),
                            K.mul(K.from_int(1008), K.mul(r.A, K.mul(r.A, r.A)))));
    if (!K.eq(lhs1, rhs1) || !K.eq(lhs2, rhs2))
        throw internal_error("invariant defining relations violated");
    return r;
}

template <class F>
CovariantFormsT<F> covariant_forms(const F& K, const MultiPoly<F>& g) {
    auto a = detail::quintic_coefficients(K, g);
    const auto& T = universal_table();
    auto build = [&](const char* name) {
        auto coeffs = detail::eval_entry(K, T.entry(name), a);
        MultiPoly<F> p(K, g.vars);
        int xi = p.var_index("x");
        for (size_t e = 0; e < coeffs.size(); ++e) {
            if (K.is_zero(coeffs[e])) continue;
            Mono m(g.vars.size(), 0);
            m[xi] = static_cast<uint32_t>(e);
            p.terms.emplace(std::move(m), coeffs[e]);
        }
        return p;
    };
    return CovariantFormsT<F>{build("i"), build("H"), build("j"), build("k"), build("tau")};
}

template <class F>
AbsoluteInvariantsT<F> absolute_invariants(const F& K, const QuinticInvariantsT<F>& inv) {
    if (K.is_zero(inv.A) || K.is_zero(inv.M))
        throw not_defined("absolute invariants need A != 0 and M != 0");
    AbsoluteInvariantsT<F> r;
    r.delta = K.div(K.mul(K.from_int(25), inv.Delta), K.mul(inv.A, inv.A));
    r.q = K.div(K.mul(inv.A, K.mul(inv.A, inv.A)), K.mul(K.from_int(8), inv.M));
    return r;
}

}  // namespace quintic

#endif
