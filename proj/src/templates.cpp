#include "quintic/templates.hpp"

#include <random>

#include "quintic/formparse.hpp"

namespace quintic {

namespace {

struct P1Term {
    int ez;
    long long coeff;
    int eA, eDelta, eM;
};

// z-coefficients in (A, Delta, M); each monomial has weight 24 under
// (A:4, Delta:8, M:12).  The Delta*A^4 monomials of the z^4, z^3, z^2 rows
// are the corrected reading of the printed Delta^4 (weight 32); see
// verify_templates.
constexpr P1Term kP1Terms[] = {
    {5, 288, 0, 0, 2},

    {4, 279890625, 2, 2, 0},
    {4, 262154475, 4, 1, 0},
    {4, -3666000, 1, 1, 1},
    {4, -2041200, 3, 0, 1},
    {4, 59541075, 6, 0, 0},
    {4, 87890625, 0, 3, 0},
    {4, 14880, 0, 0, 2},

    {3, 3711849300, 4, 1, 0},
    {3, 6170437500, 2, 2, 0},
    {3, -83428000, 1, 1, 1},
    {3, -23781600, 3, 0, 1},
    {3, 538658100, 6, 0, 0},
    {3, -351562500, 0, 3, 0},
    {3, 259520, 0, 0, 2},

    {2, 15376579650, 4, 1, 0},
    {2, 22131843750, 2, 2, 0},
    {2, -372984000, 1, 1, 1},
    {2, -130420800, 3, 0, 1},
    {2, 2685964050, 6, 0, 0},
    {2, 527343750, 0, 3, 0},
    {2, 1583040, 0, 0, 2},

    {1, 9952607700, 4, 1, 0},
    {1, 15161437500, 2, 2, 0},
    {1, -243612000, 1, 1, 1},
    {1, -79322400, 3, 0, 1},
    {1, 1619910900, 6, 0, 0},
    {1, -351562500, 0, 3, 0},
    {1, 971040, 0, 0, 2},

    {0, -42806000, 1, 1, 1},
    {0, 1743266475, 4, 1, 0},
    {0, 2912390625, 2, 2, 0},
    {0, 157216, 0, 0, 2},
    {0, -12805200, 3, 0, 1},
    {0, 260745075, 6, 0, 0},
    {0, 87890625, 0, 3, 0},
};

MultiPoly<ZZ> build_p1() {
    ZZ zz;
    auto vars = standard_vars({"z", "A", "Delta", "M"});
    MultiPoly<ZZ> p(zz, vars);
    int iz = p.var_index("z"), iA = p.var_index("A"), iD = p.var_index("Delta"),
        iM = p.var_index("M");
    for (const auto& t : kP1Terms) {
        Mono m(vars.size(), 0);
        m[iz] = t.ez;
        m[iA] = t.eA;
        m[iD] = t.eDelta;
        m[iM] = t.eM;
        p.add_term(m, mpz_class(std::to_string(t.coeff)));
    }
    return p;
}

MultiPoly<ZZ> build_p2() {
    ZZ zz;
    auto vars = standard_vars({"u", "delta", "q"});
    auto P = [&](const std::string& s) { return parse_poly(s, zz, vars); };
    auto u = P("u");
    auto head = pow_poly(u, 2) * pow_poly(P("u+50"), 3);
    auto lin = P("611*delta*u^3+8505*u^3+39270*delta*u^2+263250*u^2"
                 "+4050000*u+438000*delta*u+100000*delta");
    auto quad = P("625*delta^2*u^4+44550*delta*u^4+793881*u^4+18370800*u^3"
                  "+3175200*delta*u^3-10000*delta^2*u^3+262440000*u^2"
                  "+60000*delta^2*u^2+25336800*delta*u^2-160000*delta^2*u"
                  "+12960000*delta*u+160000*delta^2");
    return head - mul_scalar(lin * u * P("q"), mpz_class(20)) +
           mul_scalar(P("25+3*delta") * quad * P("q^2"), mpz_class(2));
}

// Delta -> D^2 (or delta -> d^2): double the exponent, rename the variable
MultiPoly<ZZ> square_symbol(const MultiPoly<ZZ>& p, const std::string& from, const std::string& to) {
    std::vector<std::string> vars;
    for (const auto& v : p.vars) vars.push_back(v == from ? to : v);
    vars = standard_vars(vars);
    MultiPoly<ZZ> out(p.ring, vars);
    int src = p.var_index(from);
    for (const auto& [m, c] : p.terms) {
        Mono mm(vars.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            const std::string& name = (static_cast<int>(i) == src) ? to : p.vars[i];
            uint32_t e = (static_cast<int>(i) == src) ? 2 * m[i] : m[i];
            mm[out.var_index(name)] += e;
        }
        out.add_term(mm, c);
    }
    return out;
}

}  // namespace

TemplateId template_id_from_string(const std::string& s) {
    if (s == "P1_S5") return TemplateId::P1_S5;
    if (s == "P2_S5") return TemplateId::P2_S5;
    if (s == "P1_A5") return TemplateId::P1_A5;
    if (s == "P2_A5") return TemplateId::P2_A5;
    throw error("unknown template id: " + s);
}

std::string template_id_to_string(TemplateId id) {
    switch (id) {
        case TemplateId::P1_S5: return "P1_S5";
        case TemplateId::P2_S5: return "P2_S5";
        case TemplateId::P1_A5: return "P1_A5";
        case TemplateId::P2_A5: return "P2_A5";
    }
    throw internal_error("bad template id");
}

std::string template_main_var(TemplateId id) {
    return (id == TemplateId::P1_S5 || id == TemplateId::P1_A5) ? "z" : "u";
}

const MultiPoly<ZZ>& generic_template(TemplateId id) {
    static const MultiPoly<ZZ> p1 = build_p1();
    static const MultiPoly<ZZ> p2 = build_p2();
    static const MultiPoly<ZZ> p1a = square_symbol(p1, "Delta", "D");
    static const MultiPoly<ZZ> p2a = square_symbol(p2, "delta", "d");
    switch (id) {
        case TemplateId::P1_S5: return p1;
        case TemplateId::P2_S5: return p2;
        case TemplateId::P1_A5: return p1a;
        case TemplateId::P2_A5: return p2a;
    }
    throw internal_error("bad template id");
}

// ---------------------------------------------------------------------------

namespace {

bool proportional(const QQ& K, const UPoly<QQ>& a, const UPoly<QQ>& b) {
    if (up::is_zero(a) || up::is_zero(b)) return up::is_zero(a) && up::is_zero(b);
    if (up::deg(a) != up::deg(b)) return false;
    return up::eq(K, up::mul_scalar(K, a, up::lc(b)), up::mul_scalar(K, b, up::lc(a)));
}

}  // namespace

VerifySample verify_template_sample(const MultiPoly<QQ>& g) {
    QQ K;
    VerifySample s;
    s.quintic = format_poly(g);

    auto dsc_g = discriminant(g, "x").constant_value();
    if (K.is_zero(dsc_g)) {
        s.skipped = true;
        s.skip_reason = "disc=0";
        return s;
    }
    auto inv = invariants(K, g);
    if (K.is_zero(inv.A)) {
        s.skipped = true;
        s.skip_reason = "A=0";
        return s;
    }
    if (K.is_zero(inv.M)) {
        s.skipped = true;
        s.skip_reason = "M=0";
        return s;
    }
    auto forms = covariant_forms(K, g);
    auto common = gcd_univariate(g, forms.i, "x");
    if (degree_in(common, "x") != 0) {
        s.skipped = true;
        s.skip_reason = "gcd(g,i)!=1";
        return s;
    }

    // (a) minimal polynomial of z = k/i^2 against P1 at (A, Delta, M)
    auto xz = standard_vars({"x", "z"});
    auto ge = extend_vars(g, xz);
    auto ie = extend_vars(forms.i, xz);
    auto ke = extend_vars(forms.k, xz);
    auto zvar = MultiPoly<QQ>::variable(K, xz, "z");
    auto res = resultant(ge, zvar * ie * ie - ke, "x");
    auto res_z = to_upoly(rename_vars(res, {{"x", "z"}}, {"z"}), "z");
    auto p1 = specialize(K, TemplateId::P1_S5,
                         {{"A", inv.A}, {"Delta", inv.Delta}, {"M", inv.M}});
    auto p1_z = to_upoly(p1, "z");
    s.resultant_matches_p1 = up::deg(res_z) == 5 && proportional(K, res_z, p1_z);

    // (b) z = (u-1)/3 turns P1/A^6 into P2 at (delta, q)
    auto abs = absolute_invariants(K, inv);
    auto zu = standard_vars({"z", "u"});
    auto p1e = extend_vars(p1, zu);
    auto repl = mul_scalar(parse_poly("u-1", K, zu), mpq_class(1, 3));
    auto subst = substitute(p1e, "z", repl);
    auto subst_u = to_upoly(rename_vars(subst, {{"z", "u"}}, {"u"}), "u");
    auto p2 = specialize(K, TemplateId::P2_S5, {{"delta", abs.delta}, {"q", abs.q}});
    auto p2_u = to_upoly(p2, "u");
    s.substitution_matches_p2 = proportional(K, subst_u, p2_u);

    // (c) disc(P1 specialized) is a nonzero square times Delta
    auto dsc = discriminant(p1, "z").constant_value();
    s.disc_is_square_times_delta =
        !K.is_zero(dsc) && K.is_square(K.div(dsc, inv.Delta)).has_value();
    return s;
}

VerifyReport verify_templates(int sample_count, uint64_t seed) {
    QQ K;
    VerifyReport report;
    report.seed = seed;
    std::mt19937_64 rng(seed);
    const std::vector<std::string> xv{"x"};
    auto known = parse_poly("x^5-2*x^4-10*x^3+23*x^2-6*x-4", K, xv);
    for (int n = 0; n < sample_count; ++n) {
        MultiPoly<QQ> g = known;
        if (n > 0) {
            g = MultiPoly<QQ>::variable(K, xv, "x");
            g = pow_poly(g, 5);
            for (int t = 0; t < 5; ++t) {
                long c = static_cast<long>(rng() % 19) - 9;
                auto mono = mul_scalar(pow_poly(MultiPoly<QQ>::variable(K, xv, "x"),
                                                static_cast<unsigned long>(t)),
                                       K.from_int(c));
                g = g + mono;
            }
        }
        auto s = verify_template_sample(g);
        if (s.skipped)
            ++report.skipped;
        else if (s.passed())
            ++report.passed;
        else
            ++report.failed;
        report.samples.push_back(std::move(s));
    }
    return report;
}

}  // namespace quintic
