// Sparse multivariate polynomials over any coefficient context, the carrier
// for binary forms, covariants and the generic templates.  Terms are held in
// a map ordered graded-lexicographically with respect to the declared
// variable order, so equal polynomials have equal representations.

#ifndef QUINTIC_MULTIPOLY_HPP
#define QUINTIC_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "quintic/errors.hpp"
#include "quintic/rings.hpp"
#include "quintic/upoly.hpp"

namespace quintic {

using Mono = std::vector<uint32_t>;

struct GrlexLess {
    bool operator()(const Mono& a, const Mono& b) const {
        unsigned long da = 0, db = 0;
        for (auto e : a) da += e;
        for (auto e : b) db += e;
        if (da != db) return da < db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Fixed global variable order; parameters and anything unknown sort last.
inline int standard_var_rank(const std::string& name) {
    static const std::vector<std::string> order = {
        "x", "y", "x1", "y1", "x2", "y2", "a0", "a1", "a2", "a3", "a4", "a5",
        "z", "u", "A", "Delta", "M", "delta", "q", "d", "D"};
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == name) return static_cast<int>(i);
    return static_cast<int>(order.size());
}

inline std::vector<std::string> standard_vars(std::vector<std::string> names) {
    std::stable_sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        int ra = standard_var_rank(a), rb = standard_var_rank(b);
        return ra != rb ? ra < rb : a < b;
    });
    return names;
}

template <class R>
class MultiPoly {
public:
    using Elem = typename R::Elem;
    using TermMap = std::map<Mono, Elem, GrlexLess>;

    R ring;
    std::vector<std::string> vars;
    TermMap terms;

    MultiPoly(R r, std::vector<std::string> v) : ring(std::move(r)), vars(std::move(v)) {}

    static MultiPoly constant(const R& r, const std::vector<std::string>& v, Elem c) {
        MultiPoly p(r, v);
        if (!r.is_zero(c)) p.terms.emplace(Mono(v.size(), 0), std::move(c));
        return p;
    }
    static MultiPoly variable(const R& r, const std::vector<std::string>& v, const std::string& name) {
        MultiPoly p(r, v);
        Mono m(v.size(), 0);
        m[p.var_index(name)] = 1;
        p.terms.emplace(std::move(m), r.one());
        return p;
    }
    static MultiPoly term(const R& r, const std::vector<std::string>& v, Mono m, Elem c) {
        MultiPoly p(r, v);
        if (!r.is_zero(c)) p.terms.emplace(std::move(m), std::move(c));
        return p;
    }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw unknown_symbol(name);
    }
    bool has_var(const std::string& name) const {
        return std::find(vars.begin(), vars.end(), name) != vars.end();
    }

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const {
        if (terms.empty()) return true;
        if (terms.size() > 1) return false;
        const Mono& m = terms.begin()->first;
        return std::all_of(m.begin(), m.end(), [](uint32_t e) { return e == 0; });
    }
    Elem constant_value() const {
        if (terms.empty()) return ring.zero();
        if (!is_constant()) throw internal_error("polynomial is not constant");
        return terms.begin()->second;
    }

    void add_term(const Mono& m, const Elem& c) {
        if (ring.is_zero(c)) return;
        auto it = terms.find(m);
        if (it == terms.end()) {
            terms.emplace(m, c);
        } else {
            it->second = ring.add(it->second, c);
            if (ring.is_zero(it->second)) terms.erase(it);
        }
    }

    void check_compatible(const MultiPoly& other) const {
        if (vars != other.vars || !ring.same_ring(other.ring))
            throw wrong_ring("polynomials from different contexts");
    }

    bool operator==(const MultiPoly& other) const {
        if (vars != other.vars || !ring.same_ring(other.ring)) return false;
        if (terms.size() != other.terms.size()) return false;
        auto it = other.terms.begin();
        for (const auto& [m, c] : terms) {
            if (m != it->first || !ring.eq(c, it->second)) return false;
            ++it;
        }
        return true;
    }
    bool operator!=(const MultiPoly& other) const { return !(*this == other); }
};

// --- arithmetic --------------------------------------------------------

template <class R>
MultiPoly<R> operator+(const MultiPoly<R>& a, const MultiPoly<R>& b) {
    a.check_compatible(b);
    MultiPoly<R> r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, c);
    return r;
}

template <class R>
MultiPoly<R> operator-(const MultiPoly<R>& a) {
    MultiPoly<R> r = a;
    for (auto& [m, c] : r.terms) c = r.ring.neg(c);
    return r;
}

template <class R>
MultiPoly<R> operator-(const MultiPoly<R>& a, const MultiPoly<R>& b) {
    a.check_compatible(b);
    MultiPoly<R> r = a;
    for (const auto& [m, c] : b.terms) r.add_term(m, b.ring.neg(c));
    return r;
}

template <class R>
MultiPoly<R> operator*(const MultiPoly<R>& a, const MultiPoly<R>& b) {
    a.check_compatible(b);
    MultiPoly<R> r(a.ring, a.vars);
    const size_t nv = a.vars.size();
    Mono m(nv);
    for (const auto& [ma, ca] : a.terms) {
        for (const auto& [mb, cb] : b.terms) {
            for (size_t i = 0; i < nv; ++i) m[i] = ma[i] + mb[i];
            r.add_term(m, a.ring.mul(ca, cb));
        }
    }
    return r;
}

template <class R>
MultiPoly<R> mul_scalar(const MultiPoly<R>& a, const typename R::Elem& c) {
    MultiPoly<R> r(a.ring, a.vars);
    if (a.ring.is_zero(c)) return r;
    for (const auto& [m, v] : a.terms) {
        auto prod = a.ring.mul(v, c);
        if (!a.ring.is_zero(prod)) r.terms.emplace(m, std::move(prod));
    }
    return r;
}

template <class R>
MultiPoly<R> divexact_scalar(const MultiPoly<R>& a, const typename R::Elem& c) {
    MultiPoly<R> r(a.ring, a.vars);
    for (const auto& [m, v] : a.terms) r.terms.emplace(m, a.ring.divexact(v, c));
    return r;
}

template <class R>
MultiPoly<R> pow_poly(const MultiPoly<R>& a, unsigned long e) {
    MultiPoly<R> r = MultiPoly<R>::constant(a.ring, a.vars, a.ring.one());
    MultiPoly<R> base = a;
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

// --- structure ---------------------------------------------------------

template <class R>
int degree_in(const MultiPoly<R>& p, const std::string& var) {
    int idx = p.var_index(var), d = -1;
    for (const auto& [m, c] : p.terms) d = std::max(d, static_cast<int>(m[idx]));
    return d;
}

template <class R>
int total_degree(const MultiPoly<R>& p) {
    int d = -1;
    for (const auto& [m, c] : p.terms) {
        int s = 0;
        for (auto e : m) s += e;
        d = std::max(d, s);
    }
    return d;
}

// coefficient of var^k, with var's exponent zeroed in the result
template <class R>
MultiPoly<R> coeff_in(const MultiPoly<R>& p, const std::string& var, int k) {
    int idx = p.var_index(var);
    MultiPoly<R> r(p.ring, p.vars);
    for (const auto& [m, c] : p.terms) {
        if (static_cast<int>(m[idx]) != k) continue;
        Mono mm = m;
        mm[idx] = 0;
        r.terms.emplace(std::move(mm), c);
    }
    return r;
}

template <class R>
MultiPoly<R> leading_coeff_in(const MultiPoly<R>& p, const std::string& var) {
    return coeff_in(p, var, degree_in(p, var));
}

// total degree over a subset of variables, when homogeneous there
template <class R>
std::optional<int> homogeneous_degree(const MultiPoly<R>& p, const std::vector<std::string>& subset) {
    std::vector<int> idx;
    for (const auto& v : subset) idx.push_back(p.var_index(v));
    std::optional<int> d;
    for (const auto& [m, c] : p.terms) {
        int s = 0;
        for (int i : idx) s += m[i];
        if (!d)
            d = s;
        else if (*d != s)
            return std::nullopt;
    }
    return d ? d : std::optional<int>(0);
}

template <class R>
MultiPoly<R> derivative(const MultiPoly<R>& p, const std::string& var) {
    int idx = p.var_index(var);
    MultiPoly<R> r(p.ring, p.vars);
    for (const auto& [m, c] : p.terms) {
        if (m[idx] == 0) continue;
        Mono mm = m;
        mm[idx] -= 1;
        auto cc = p.ring.mul(c, p.ring.from_int(static_cast<long>(m[idx])));
        if (!p.ring.is_zero(cc)) r.add_term(mm, cc);
    }
    return r;
}

// --- substitution ------------------------------------------------------

// simultaneous substitution of several variables by polynomials of the same context
template <class R>
MultiPoly<R> substitute_many(const MultiPoly<R>& p,
                             const std::vector<std::pair<std::string, MultiPoly<R>>>& repl) {
    std::vector<int> idx;
    std::vector<std::vector<MultiPoly<R>>> pows;  // pows[k][e] = repl[k]^e
    for (const auto& [name, q] : repl) {
        p.check_compatible(q);
        idx.push_back(p.var_index(name));
        pows.push_back({MultiPoly<R>::constant(p.ring, p.vars, p.ring.one()), q});
    }
    MultiPoly<R> out(p.ring, p.vars);
    for (const auto& [m, c] : p.terms) {
        Mono rest = m;
        std::vector<uint32_t> exps(repl.size());
        for (size_t k = 0; k < idx.size(); ++k) {
            exps[k] = m[idx[k]];
            rest[idx[k]] = 0;
        }
        MultiPoly<R> acc = MultiPoly<R>::term(p.ring, p.vars, rest, c);
        for (size_t k = 0; k < idx.size(); ++k) {
            while (pows[k].size() <= exps[k])
                pows[k].push_back(pows[k].back() * pows[k][1]);
            if (exps[k] > 0) acc = acc * pows[k][exps[k]];
        }
        for (const auto& [mm, cc] : acc.terms) out.add_term(mm, cc);
    }
    return out;
}

template <class R>
MultiPoly<R> substitute(const MultiPoly<R>& p, const std::string& var, const MultiPoly<R>& q) {
    return substitute_many(p, {{var, q}});
}

// bind a subset of variables to ring elements; unbound variables stay
template <class R>
MultiPoly<R> substitute_values(const MultiPoly<R>& p,
                               const std::vector<std::pair<std::string, typename R::Elem>>& vals) {
    std::vector<int> idx;
    std::vector<std::vector<typename R::Elem>> pows;
    for (const auto& [name, v] : vals) {
        idx.push_back(p.var_index(name));
        pows.push_back({p.ring.one(), v});
    }
    MultiPoly<R> out(p.ring, p.vars);
    for (const auto& [m, c] : p.terms) {
        auto cc = c;
        Mono rest = m;
        for (size_t k = 0; k < idx.size(); ++k) {
            uint32_t e = m[idx[k]];
            rest[idx[k]] = 0;
            while (pows[k].size() <= e) pows[k].push_back(p.ring.mul(pows[k].back(), pows[k][1]));
            if (e > 0) cc = p.ring.mul(cc, pows[k][e]);
        }
        out.add_term(rest, cc);
    }
    return out;
}

// full evaluation: every variable occurring in p must be bound
template <class R>
typename R::Elem eval_values(const MultiPoly<R>& p,
                             const std::vector<std::pair<std::string, typename R::Elem>>& vals) {
    auto q = substitute_values(p, vals);
    if (!q.is_constant()) throw unknown_symbol("unbound variable in evaluation");
    return q.constant_value();
}

// --- context changes ---------------------------------------------------

// embed into a superset variable context (same ring)
template <class R>
MultiPoly<R> extend_vars(const MultiPoly<R>& p, const std::vector<std::string>& newvars) {
    std::vector<int> where;
    for (const auto& v : p.vars) {
        auto it = std::find(newvars.begin(), newvars.end(), v);
        if (it == newvars.end()) throw unknown_symbol(v);
        where.push_back(static_cast<int>(it - newvars.begin()));
    }
    MultiPoly<R> r(p.ring, newvars);
    for (const auto& [m, c] : p.terms) {
        Mono mm(newvars.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) mm[where[i]] = m[i];
        r.terms.emplace(std::move(mm), c);
    }
    return r;
}

// rename variables into a target context; several sources may map onto one
// target, in which case exponents add (used to collapse x1,x2 -> x)
template <class R>
MultiPoly<R> rename_vars(const MultiPoly<R>& p,
                         const std::vector<std::pair<std::string, std::string>>& mapping,
                         const std::vector<std::string>& newvars) {
    MultiPoly<R> r(p.ring, newvars);
    std::vector<int> target(p.vars.size());
    for (size_t i = 0; i < p.vars.size(); ++i) {
        std::string name = p.vars[i];
        for (const auto& [from, to] : mapping)
            if (from == name) {
                name = to;
                break;
            }
        auto it = std::find(newvars.begin(), newvars.end(), name);
        if (it == newvars.end()) throw unknown_symbol(name);
        target[i] = static_cast<int>(it - newvars.begin());
    }
    for (const auto& [m, c] : p.terms) {
        Mono mm(newvars.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) mm[target[i]] += m[i];
        r.add_term(mm, c);
    }
    return r;
}

// map coefficients into another ring (e.g. the universal integer table into Fp)
template <class R2, class R, class Conv>
MultiPoly<R2> map_coeffs(const R2& ring2, const MultiPoly<R>& p, Conv&& conv) {
    MultiPoly<R2> r(ring2, p.vars);
    for (const auto& [m, c] : p.terms) {
        auto cc = conv(c);
        if (!ring2.is_zero(cc)) r.terms.emplace(m, std::move(cc));
    }
    return r;
}

// univariate view: p must involve no variable other than var
template <class R>
UPoly<R> to_upoly(const MultiPoly<R>& p, const std::string& var) {
    int idx = p.var_index(var);
    UPoly<R> r(static_cast<size_t>(degree_in(p, var) + 1), p.ring.zero());
    for (const auto& [m, c] : p.terms) {
        for (size_t i = 0; i < m.size(); ++i)
            if (static_cast<int>(i) != idx && m[i] != 0)
                throw internal_error("polynomial is not univariate in " + var);
        r[m[idx]] = c;
    }
    up::trim(p.ring, r);
    return r;
}

template <class R>
MultiPoly<R> from_upoly(const R& ring, const std::vector<std::string>& vars, const std::string& var,
                        const UPoly<R>& u) {
    MultiPoly<R> r(ring, vars);
    int idx = -1;
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == var) idx = static_cast<int>(i);
    if (idx < 0) throw unknown_symbol(var);
    for (size_t e = 0; e < u.size(); ++e) {
        if (ring.is_zero(u[e])) continue;
        Mono m(vars.size(), 0);
        m[idx] = static_cast<uint32_t>(e);
        r.terms.emplace(std::move(m), u[e]);
    }
    return r;
}

// --- content and exact division ----------------------------------------

inline mpz_class content(const MultiPoly<ZZ>& p) {
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline mpz_class content(const MultiPoly<QQ>& p) {
    mpz_class g = 0;
    for (const auto& [m, c] : p.terms) {
        if (c.get_den() != 1) throw wrong_ring("content of a non-integer polynomial");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// exact division by a nonzero polynomial; throws internal_error when not exact
template <class R>
MultiPoly<R> divexact_poly(const MultiPoly<R>& p, const MultiPoly<R>& d) {
    p.check_compatible(d);
    if (d.is_zero()) throw division_by_zero();
    if (d.is_constant()) return divexact_scalar(p, d.constant_value());
    MultiPoly<R> q(p.ring, p.vars);
    MultiPoly<R> r = p;
    const auto& dl = *d.terms.rbegin();
    const size_t nv = p.vars.size();
    while (!r.is_zero()) {
        const auto& rl = *r.terms.rbegin();
        Mono t(nv);
        for (size_t i = 0; i < nv; ++i) {
            if (rl.first[i] < dl.first[i]) throw internal_error("inexact polynomial division");
            t[i] = rl.first[i] - dl.first[i];
        }
        auto c = p.ring.divexact(rl.second, dl.second);
        q.add_term(t, c);
        // r -= (c * t) * d
        auto cneg = p.ring.neg(c);
        Mono m(nv);
        for (const auto& [md, cd] : d.terms) {
            for (size_t i = 0; i < nv; ++i) m[i] = md[i] + t[i];
            r.add_term(m, p.ring.mul(cneg, cd));
        }
    }
    return q;
}

// --- resultants --------------------------------------------------------

namespace detail {

// Bareiss fraction-free determinant of a matrix of polynomials.
template <class R>
MultiPoly<R> bareiss_det(std::vector<std::vector<MultiPoly<R>>>& m) {
    const size_t n = m.size();
    if (n == 0) throw internal_error("empty matrix");
    const R& ring = m[0][0].ring;
    const auto& vars = m[0][0].vars;
    MultiPoly<R> prev = MultiPoly<R>::constant(ring, vars, ring.one());
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k;
            for (size_t i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == k) return MultiPoly<R>(ring, vars);  // zero determinant
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact_poly(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
            m[i][k] = MultiPoly<R>(ring, vars);
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Sylvester determinant with prescribed formal degrees.
template <class R>
MultiPoly<R> sylvester_resultant(const MultiPoly<R>& f, int df, const MultiPoly<R>& g, int dg,
                                 const std::string& var) {
    const R& ring = f.ring;
    const auto& vars = f.vars;
    const int n = df + dg;
    if (n == 0) return MultiPoly<R>::constant(ring, vars, ring.one());
    std::vector<MultiPoly<R>> fc, gc;
    for (int k = 0; k <= df; ++k) fc.push_back(coeff_in(f, var, k));
    for (int k = 0; k <= dg; ++k) gc.push_back(coeff_in(g, var, k));
    std::vector<std::vector<MultiPoly<R>>> m(n, std::vector<MultiPoly<R>>(n, MultiPoly<R>(ring, vars)));
    for (int r = 0; r < dg; ++r)
        for (int j = 0; j <= df; ++j) m[r][r + j] = fc[df - j];
    for (int r = 0; r < df; ++r)
        for (int j = 0; j <= dg; ++j) m[dg + r][r + j] = gc[dg - j];
    return bareiss_det(m);
}

}  // namespace detail

template <class R>
MultiPoly<R> resultant(const MultiPoly<R>& f, const MultiPoly<R>& g, const std::string& var) {
    f.check_compatible(g);
    if (f.is_zero() || g.is_zero())
        throw undefined_operation("resultant needs nonzero inputs");
    int df = degree_in(f, var), dg = degree_in(g, var);
    return detail::sylvester_resultant(f, df, g, dg, var);
}

template <class R>
MultiPoly<R> discriminant(const MultiPoly<R>& g, const std::string& var) {
    int n = degree_in(g, var);
    if (n < 2) throw undefined_operation("discriminant needs degree >= 2");
    auto res = detail::sylvester_resultant(g, n, derivative(g, var), n - 1, var);
    auto d = divexact_poly(res, leading_coeff_in(g, var));
    return ((static_cast<long>(n) * (n - 1) / 2) % 2) ? -d : d;
}

// monic univariate gcd of two polynomials univariate in var (field ring)
template <class R>
MultiPoly<R> gcd_univariate(const MultiPoly<R>& a, const MultiPoly<R>& b, const std::string& var) {
    auto g = up::gcd(a.ring, to_upoly(a, var), to_upoly(b, var));
    return from_upoly(a.ring, a.vars, var, g);
}

}  // namespace quintic

#endif
