// Galois-group evidence for separable quintics: quintic irreducibility, the
// discriminant square test, and irreducibility of the degree-10 two-root
// resolvent.  The resolvent comes from one resultant,
//     Res_y(g(y), g(x-y)) = 32 g(x/2) h(x)^2,
// with h monic of degree 10 recovered by exact division and an exact
// polynomial square root.
//
// Irreducibility is exact over prime fields (distinct-degree factorization).
// Over QQ it is certified through primes of good reduction: an irreducible
// modular image, or an empty intersection of modular factor-degree patterns,
// proves irreducibility; a repeated factor or a small rational root disproves
// it; otherwise the answer is an honest "inconclusive".  Over K(t) the same
// certificate runs on specializations of the parameter; for a monic input
// every specialization that keeps all coefficient denominators nonzero
// preserves the degrees of a hypothetical factorization (clear denominators
// and apply Gauss's lemma), so pattern intersection is sound there too.

#ifndef QUINTIC_GALOIS_HPP
#define QUINTIC_GALOIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/multipoly.hpp"
#include "quintic/ratfunc.hpp"
#include "quintic/reduction.hpp"

namespace quintic {

enum class Tri { yes, no, inconclusive };

inline std::string tri_to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no: return "no";
        case Tri::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

// ---------------------------------------------------------------------------
// factorization degree patterns over prime fields

namespace galois_detail {

// distinct-degree factorization degrees (with multiplicity) of a monic
// squarefree polynomial
inline std::vector<int> ddf_degrees(const Fp& K, UPoly<Fp> f) {
    std::vector<int> out;
    UPoly<Fp> x{0, 1};
    UPoly<Fp> h = x;
    mpz_class p(static_cast<unsigned long>(K.p));
    for (int d = 1; 2 * d <= up::deg(f); ++d) {
        h = up::powmod(K, h, p, f);
        auto g = up::gcd(K, up::sub(K, h, x), f);
        if (up::deg(g) > 0) {
            for (int c = 0; c < up::deg(g) / d; ++c) out.push_back(d);
            f = up::divrem(K, f, g).first;
            if (up::deg(f) == 0) return out;
            h = up::rem(K, h, f);
        }
    }
    if (up::deg(f) > 0) out.push_back(up::deg(f));
    return out;
}

// nullopt when not squarefree (pattern would need multiplicities)
inline std::optional<std::vector<int>> factor_pattern(const Fp& K, UPoly<Fp> f) {
    f = up::monic(K, std::move(f));
    auto df = up::derivative(K, f);
    if (up::is_zero(df)) return std::nullopt;
    if (up::deg(up::gcd(K, f, df)) > 0) return std::nullopt;
    return ddf_degrees(K, f);
}

inline uint64_t subset_sums(const std::vector<int>& degrees) {
    uint64_t m = 1;
    for (int d : degrees) m |= m << d;
    return m;
}

inline std::vector<uint64_t> small_primes(size_t count) {
    std::vector<uint64_t> out;
    for (uint64_t p = 7; out.size() < count; ++p)
        if (modarith::is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace galois_detail

// ---------------------------------------------------------------------------
// irreducibility

inline Tri irreducible_upoly(const Fp& K, UPoly<Fp> f) {
    int n = up::deg(f);
    if (n < 1) throw degree_error("irreducibility needs positive degree");
    if (n == 1) return Tri::yes;
    auto pat = galois_detail::factor_pattern(K, std::move(f));
    if (!pat) return Tri::no;  // repeated factor (or p-th power)
    return (pat->size() == 1 && (*pat)[0] == n) ? Tri::yes : Tri::no;
}

inline Tri irreducible_upoly(const QQ& K, const UPoly<QQ>& f) {
    int n = up::deg(f);
    if (n < 1) throw degree_error("irreducibility needs positive degree");
    if (n == 1) return Tri::yes;

    // integer model: clear denominators, divide out the content
    mpz_class den(1);
    for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> P;
    mpz_class cont(0);
    for (const auto& c : f) {
        mpq_class v = c * mpq_class(den);
        P.push_back(v.get_num());
        mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), P.back().get_mpz_t());
    }
    if (cont > 1)
        for (auto& c : P) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());

    if (P[0] == 0) return Tri::no;  // root at 0
    auto df = up::derivative(K, f);
    if (up::deg(up::gcd(K, f, df)) > 0) return Tri::no;  // repeated factor
    for (long r = -100; r <= 100; ++r) {               // small integer roots
        if (r == 0) continue;
        mpz_class acc(0);
        for (auto it = P.rbegin(); it != P.rend(); ++it) acc = acc * r + *it;
        if (acc == 0) return Tri::no;
    }

    uint64_t mask = ~0ull;
    const uint64_t want = 1ull | (1ull << n);
    int good = 0;
    for (uint64_t p : galois_detail::small_primes(25)) {
        Fp Kp(p);
        if (Kp.from_mpz(P.back()) == 0) continue;  // leading coefficient vanishes
        UPoly<Fp> im;
        for (const auto& c : P) im.push_back(Kp.from_mpz(c));
        auto pat = galois_detail::factor_pattern(Kp, std::move(im));
        if (!pat) continue;  // bad reduction
        if (pat->size() == 1 && (*pat)[0] == n) return Tri::yes;
        mask &= galois_detail::subset_sums(*pat);
        ++good;
        if (good >= 5 && mask == want) return Tri::yes;
    }
    return Tri::inconclusive;
}

inline Tri irreducible(const Fp& K, const MultiPoly<Fp>& p, const std::string& var = "x") {
    return irreducible_upoly(K, to_upoly(p, var));
}

inline Tri irreducible(const QQ& K, const MultiPoly<QQ>& p, const std::string& var = "x") {
    return irreducible_upoly(K, to_upoly(p, var));
}

template <class B>
Tri irreducible(const FuncField<B>& K, const MultiPoly<FuncField<B>>& poly,
                const std::string& var = "x") {
    int n = degree_in(poly, var);
    if (n < 1) throw degree_error("irreducibility needs positive degree");
    if (n == 1) return Tri::yes;
    auto f = to_upoly(monicize(poly, var), var);

    // explicit small roots give an exact "no"
    {
        std::vector<typename FuncField<B>::Elem> roots = {
            K.zero(),     K.one(),
            K.from_int(-1), K.from_int(2),  K.from_int(-2),
            K.parameter_elem(), K.neg(K.parameter_elem()),
            K.sub(K.parameter_elem(), K.one()), K.add(K.parameter_elem(), K.one())};
        for (const auto& r : roots)
            if (K.is_zero(up::eval(K, f, r))) return Tri::no;
    }
    auto df = up::derivative(K, f);
    if (up::is_zero(df)) return Tri::no;
    if (up::deg(up::gcd(K, f, df)) > 0) return Tri::no;

    // specializations of the parameter.  The input is monic, so a point where
    // every coefficient denominator is nonzero preserves factor degrees.
    auto specialize_at = [&](const typename B::Elem& c0) -> std::optional<UPoly<B>> {
        UPoly<B> im;
        for (const auto& coeff : f) {
            auto d = up::eval(K.base, coeff.den, c0);
            if (K.base.is_zero(d)) return std::nullopt;
            im.push_back(K.base.div(up::eval(K.base, coeff.num, c0), d));
        }
        up::trim(K.base, im);
        return im;
    };

    if constexpr (std::is_same_v<B, Fp>) {
        uint64_t mask = ~0ull;
        const uint64_t want = 1ull | (1ull << n);
        int good = 0;
        for (uint64_t c0 = 0; c0 < K.base.p; ++c0) {
            auto im = specialize_at(c0);
            if (!im) continue;
            auto pat = galois_detail::factor_pattern(K.base, std::move(*im));
            if (!pat) continue;
            if (pat->size() == 1 && (*pat)[0] == n) return Tri::yes;
            mask &= galois_detail::subset_sums(*pat);
            ++good;
            if (good >= 3 && mask == want) return Tri::yes;
        }
        return Tri::inconclusive;
    } else {
        for (long v = 0; v <= 20; ++v) {
            for (long s : {1L, -1L}) {
                if (v == 0 && s < 0) continue;
                auto im = specialize_at(K.base.from_int(s * v));
                if (!im) continue;
                if (irreducible_upoly(K.base, *im) == Tri::yes) return Tri::yes;
            }
        }
        return Tri::inconclusive;
    }
}

// ---------------------------------------------------------------------------
// two-root resolvent and the label

template <class F>
MultiPoly<F> resolvent_two_roots(const F& K, const MultiPoly<F>& g, const std::string& var = "x") {
    if (degree_in(g, var) != 5) throw degree_error("expected a quintic");
    auto gm = monicize(g, var);
    if (K.is_zero(discriminant(gm, var).constant_value()))
        throw repeated_roots("resolvent needs a separable quintic");

    std::string aux = var == "y" ? "y2" : "y";
    std::vector<std::string> ext;
    for (const auto& v : gm.vars) ext.push_back(v);
    ext.push_back(aux);
    ext = standard_vars(ext);
    auto gy = rename_vars(gm, {{var, aux}}, ext);
    auto shift = MultiPoly<F>::variable(K, ext, var) - MultiPoly<F>::variable(K, ext, aux);
    auto gxy = substitute(extend_vars(gm, ext), var, shift);
    auto res = resultant(gy, gxy, aux);
    auto sums = rename_vars(res, {{aux, var}}, gm.vars);  // aux occurs with exponent 0 only

    // diagonal part: 32 g(x/2) = sum c_t 2^(5-t) x^t
    MultiPoly<F> diag(K, gm.vars);
    for (int t = 0; t <= 5; ++t) {
        auto c = coeff_in(gm, var, t).constant_value();
        c = K.mul(c, K.from_int(1L << (5 - t)));
        diag = diag + mul_scalar(pow_poly(MultiPoly<F>::variable(K, gm.vars, var),
                                          static_cast<unsigned long>(t)),
                                 c);
    }
    auto square_part = divexact_poly(sums, diag);
    auto root = up::poly_sqrt(K, to_upoly(square_part, var));
    if (!root) throw internal_error("two-root resolvent: square extraction failed");
    return from_upoly(K, gm.vars, var, *root);
}

enum class GroupValue { S5, A5, inconclusive };

inline std::string group_value_to_string(GroupValue v) {
    switch (v) {
        case GroupValue::S5: return "S5";
        case GroupValue::A5: return "A5";
        case GroupValue::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

struct GroupEvidence {
    Tri irreducible_deg5 = Tri::inconclusive;
    bool disc_square = false;
    Tri resolvent10_irreducible = Tri::inconclusive;
};

struct GroupLabelResult {
    GroupValue value = GroupValue::inconclusive;
    GroupEvidence evidence;
};

template <class F>
GroupLabelResult group_label(const F& K, const MultiPoly<F>& g, const std::string& var = "x") {
    if (degree_in(g, var) != 5) throw degree_error("expected a quintic");
    auto gm = monicize(g, var);
    auto dsc = discriminant(gm, var).constant_value();
    if (K.is_zero(dsc)) throw repeated_roots("group label needs a separable quintic");

    GroupLabelResult r;
    r.evidence.irreducible_deg5 = irreducible(K, gm, var);
    r.evidence.disc_square = K.is_square(dsc).has_value();
    auto h = resolvent_two_roots(K, gm, var);
    r.evidence.resolvent10_irreducible = irreducible(K, h, var);

    if (r.evidence.irreducible_deg5 == Tri::yes &&
        r.evidence.resolvent10_irreducible == Tri::yes)
        r.value = r.evidence.disc_square ? GroupValue::A5 : GroupValue::S5;
    return r;
}

}  // namespace quintic

#endif
