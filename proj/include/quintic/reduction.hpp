// Reduction of a separable quintic to a specialization of the generic
// templates.  The element u = 3 k(alpha)/i(alpha)^2 + 1 is certified through
// one resultant: its characteristic polynomial is
//     Res_x(g(x), z den(x) - num(x))
// normalized monic, with num = 3k + i^2 and den = i^2.  When A or M vanishes
// a preliminary transformation from a fixed deterministic schedule replaces g
// first.  Everything is exact; no root is ever extracted.

#ifndef QUINTIC_REDUCTION_HPP
#define QUINTIC_REDUCTION_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quintic/covariants.hpp"
#include "quintic/errors.hpp"
#include "quintic/formparse.hpp"
#include "quintic/multipoly.hpp"
#include "quintic/templates.hpp"

namespace quintic {

template <class F>
MultiPoly<F> monicize(const MultiPoly<F>& p, const std::string& var) {
    if (p.is_zero()) throw degree_error("cannot monicize the zero polynomial");
    auto lead = leading_coeff_in(p, var);
    if (!lead.is_constant()) throw wrong_ring("polynomial is not univariate in " + var);
    auto c = lead.constant_value();
    if (p.ring.is_one(c)) return p;
    return mul_scalar(p, p.ring.inv(c));
}

// Monic polynomial whose roots are num(alpha)/den(alpha) over the roots alpha
// of g (with multiplicity; no deduplication).  Requires gcd(g, den) = 1.
template <class F>
MultiPoly<F> tschirnhausen_minpoly(const F& K, const MultiPoly<F>& g, const MultiPoly<F>& num,
                                   const MultiPoly<F>& den, const std::string& var = "x") {
    g.check_compatible(num);
    g.check_compatible(den);
    int n = degree_in(g, var);
    if (n < 1) throw degree_error("expected positive degree");
    if (den.is_zero()) throw not_invertible("zero denominator");
    if (degree_in(den, var) > 0) {
        auto common = gcd_univariate(g, den, var);
        if (degree_in(common, var) != 0)
            throw not_invertible("denominator shares a factor with the polynomial");
    }
    std::string tvar = g.has_var("z") ? "resultant_tmp" : "z";
    std::vector<std::string> ext;
    for (const auto& v : g.vars) ext.push_back(v);
    ext.push_back(tvar);
    ext = standard_vars(ext);
    auto h = MultiPoly<F>::variable(K, ext, tvar) * extend_vars(den, ext) - extend_vars(num, ext);
    auto r = resultant(extend_vars(g, ext), h, var);
    if (degree_in(r, tvar) != n) throw internal_error("transformed polynomial degree mismatch");
    auto out = rename_vars(r, {{tvar, var}}, g.vars);
    return monicize(out, var);
}

// monic polynomial with roots alpha^2
template <class F>
MultiPoly<F> squared_roots(const F& K, const MultiPoly<F>& g, const std::string& var = "x") {
    auto x = MultiPoly<F>::variable(K, g.vars, var);
    auto one = MultiPoly<F>::constant(K, g.vars, K.one());
    return tschirnhausen_minpoly(K, g, x * x, one, var);
}

template <class F>
struct PreliminaryResult {
    MultiPoly<F> transformed;   // monic quintic with A != 0, M != 0, gcd(g~, i) = 1
    MultiPoly<F> t_poly;        // integer-coefficient transformation t(x)
    std::string t_text;
    bool identity = false;
    QuinticInvariantsT<F> inv;  // invariants of `transformed`
    CovariantFormsT<F> forms;   // covariant forms of `transformed`
};

// Fixed deterministic candidate schedule: x; x^2; x^2+jx; x^3+jx.
inline std::string preliminary_candidate_text(int index) {
    if (index == 0) return "x";
    if (index == 1) return "x^2";
    int half = 49;
    if (index - 2 < half) return "x^2+" + std::to_string(index - 1) + "*x";
    return "x^3+" + std::to_string(index - 1 - half) + "*x";
}

template <class F>
PreliminaryResult<F> preliminary_search(const F& K, const MultiPoly<F>& g,
                                        const std::string& var = "x", int bound = 100) {
    if (degree_in(g, var) != 5) throw degree_error("expected a quintic");
    auto gm = monicize(g, var);
    if (K.is_zero(discriminant(gm, var).constant_value()))
        throw repeated_roots("input quintic has a repeated root");
    for (int idx = 0; idx < bound; ++idx) {
        std::string text = preliminary_candidate_text(idx);
        auto t = parse_poly(text, K, g.vars);
        MultiPoly<F> cand = idx == 0
                                ? gm
                                : tschirnhausen_minpoly(
                                      K, gm, t, MultiPoly<F>::constant(K, g.vars, K.one()), var);
        if (K.is_zero(discriminant(cand, var).constant_value())) continue;
        auto inv = invariants(K, cand);
        if (K.is_zero(inv.A) || K.is_zero(inv.M)) continue;
        auto forms = covariant_forms(K, cand);
        auto common = gcd_univariate(cand, forms.i, var);
        if (degree_in(common, var) != 0) continue;
        return PreliminaryResult<F>{std::move(cand), std::move(t), text, idx == 0,
                                    std::move(inv),  std::move(forms)};
    }
    throw search_failed("no preliminary transformation found within " + std::to_string(bound) +
                        " candidates");
}

template <class F>
struct ReductionCertificateT {
    MultiPoly<F> input;                   // monicized input quintic
    bool preliminary_applied = false;
    std::string preliminary;              // t(x) applied to the roots
    MultiPoly<F> transformed;
    QuinticInvariantsT<F> inv;
    AbsoluteInvariantsT<F> abs;
    bool a5_mode = false;
    std::optional<typename F::Elem> d;    // square witness for delta
    MultiPoly<F> specialized;             // monic generic quintic in u
    MultiPoly<F> u_minpoly;               // resultant route, monic in u
    bool minpoly_match = false;
    bool disc_square = false;

    ReductionCertificateT(const F& K, const std::vector<std::string>& vars)
        : input(K, vars),
          transformed(K, vars),
          inv{},
          abs{},
          specialized(K, {"u"}),
          u_minpoly(K, {"u"}) {}
};

template <class F>
ReductionCertificateT<F> reduce_extension(const F& K, const MultiPoly<F>& g,
                                          const std::string& var = "x") {
    ReductionCertificateT<F> cert(K, g.vars);
    cert.input = monicize(g, var);
    auto pre = preliminary_search(K, cert.input, var);
    cert.preliminary_applied = !pre.identity;
    cert.preliminary = pre.t_text;
    cert.transformed = pre.transformed;
    cert.inv = pre.inv;
    cert.abs = absolute_invariants(K, pre.inv);

    cert.d = K.is_square(cert.abs.delta);
    cert.a5_mode = cert.d.has_value();
    cert.specialized =
        cert.a5_mode
            ? specialize(K, TemplateId::P2_A5, {{"d", *cert.d}, {"q", cert.abs.q}}, true)
            : specialize(K, TemplateId::P2_S5, {{"delta", cert.abs.delta}, {"q", cert.abs.q}},
                         true);

    auto i2 = pre.forms.i * pre.forms.i;
    auto num = mul_scalar(pre.forms.k, K.from_int(3)) + i2;
    auto u_min = tschirnhausen_minpoly(K, pre.transformed, num, i2, var);
    cert.u_minpoly = rename_vars(u_min, {{var, "u"}}, {"u"});
    cert.minpoly_match = (cert.u_minpoly == cert.specialized);
    cert.disc_square =
        K.is_square(discriminant(cert.transformed, var).constant_value()).has_value();
    return cert;
}

// Sufficient certificate that h generates the same extension as g: h must
// equal the monic characteristic polynomial of a candidate element built from
// g's covariants (u = 3k/i^2 + 1, z = k/i^2, the preliminary image, or g
// itself).
template <class F>
bool certify_same_field(const F& K, const MultiPoly<F>& g, const MultiPoly<F>& h,
                        const std::string& var = "x") {
    if (degree_in(g, var) != 5 || degree_in(h, var) != 5)
        throw degree_error("expected quintics");
    auto gm = monicize(g, var);
    auto hm = monicize(h, var);
    if (hm == gm) return true;
    std::optional<PreliminaryResult<F>> pre;
    try {
        pre = preliminary_search(K, gm, var);
    } catch (const search_failed&) {
        return false;
    }
    if (hm == pre->transformed) return true;
    auto i2 = pre->forms.i * pre->forms.i;
    auto num_u = mul_scalar(pre->forms.k, K.from_int(3)) + i2;
    if (hm == tschirnhausen_minpoly(K, pre->transformed, num_u, i2, var)) return true;
    if (hm == tschirnhausen_minpoly(K, pre->transformed, pre->forms.k, i2, var)) return true;
    return false;
}

}  // namespace quintic

#endif
