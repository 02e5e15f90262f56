// Command-line interface.  Every value is exact; --json emits a single JSON
// document; exit codes: 0 success, 1 mathematical failure, 2 usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "quintic/covariants.hpp"
#include "quintic/dispatch.hpp"
#include "quintic/formparse.hpp"
#include "quintic/galois.hpp"
#include "quintic/json_io.hpp"
#include "quintic/reduction.hpp"
#include "quintic/templates.hpp"

using namespace quintic;

namespace {

struct Options {
    std::string ring = "q";
    uint64_t p = 0;
    bool p_given = false;
    std::string param;
    bool json = false;
    bool monic = false;
    uint64_t seed = 1;
    int samples = 200;
};

RingDescriptor make_ring(const Options& opt) {
    if (opt.ring == "fp" && !opt.p_given) throw wrong_ring("--p is required with --ring fp");
    if (opt.ring == "q" && opt.p_given) throw wrong_ring("--p is only meaningful with --ring fp");
    RingDescriptor base =
        opt.ring == "fp" ? RingDescriptor::prime(opt.p) : RingDescriptor::rationals();
    if (!opt.param.empty()) return RingDescriptor::rational_functions(base, opt.param);
    return base;
}

const std::vector<std::string> kXVar{"x"};

template <class F>
std::pair<std::string, typename F::Elem> parse_binding(const F& K, const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw parse_error("expected name=value", 0);
    auto value = parse_poly(text.substr(eq + 1), K, {});
    return {text.substr(0, eq), value.constant_value()};
}

int cmd_invariants(const Options& opt, const std::string& poly) {
    return with_field(make_ring(opt), [&](auto K) {
        auto g = parse_poly(poly, K, kXVar);
        auto inv = invariants(K, g);
        std::optional<AbsoluteInvariantsT<decltype(K)>> abs;
        if (!K.is_zero(inv.A) && !K.is_zero(inv.M)) abs = absolute_invariants(K, inv);
        if (opt.json) {
            std::cout << invariants_to_json(K, inv, abs).dump(2) << "\n";
        } else {
            std::cout << "A = " << elem_to_string(K, inv.A) << "\n"
                      << "B = " << elem_to_string(K, inv.B) << "\n"
                      << "C = " << elem_to_string(K, inv.C) << "\n"
                      << "Delta = " << elem_to_string(K, inv.Delta) << "\n"
                      << "M = " << elem_to_string(K, inv.M) << "\n";
            if (abs)
                std::cout << "delta = " << elem_to_string(K, abs->delta) << "\n"
                          << "q = " << elem_to_string(K, abs->q) << "\n";
            else
                std::cout << "delta, q undefined (A = 0 or M = 0)\n";
        }
        return 0;
    });
}

int cmd_covariants(const Options& opt, const std::string& poly) {
    return with_field(make_ring(opt), [&](auto K) {
        auto g = parse_poly(poly, K, kXVar);
        auto forms = covariant_forms(K, g);
        if (opt.json) {
            nlohmann::json j;
            j["i"] = format_poly(forms.i);
            j["H"] = format_poly(forms.H);
            j["j"] = format_poly(forms.j);
            j["k"] = format_poly(forms.k);
            j["tau"] = format_poly(forms.tau);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "i = " << format_poly(forms.i) << "\n"
                      << "H = " << format_poly(forms.H) << "\n"
                      << "j = " << format_poly(forms.j) << "\n"
                      << "k = " << format_poly(forms.k) << "\n"
                      << "tau = " << format_poly(forms.tau) << "\n";
        }
        return 0;
    });
}

int cmd_specialize(const Options& opt, const std::string& id_text,
                   const std::vector<std::string>& bindings) {
    TemplateId id = template_id_from_string(id_text);
    return with_field(make_ring(opt), [&](auto K) {
        using F = decltype(K);
        std::vector<std::pair<std::string, typename F::Elem>> bound;
        for (const auto& b : bindings) bound.push_back(parse_binding(K, b));
        auto result = specialize(K, id, bound, opt.monic);
        if (opt.json) {
            nlohmann::json j;
            j["template"] = id_text;
            j["polynomial"] = format_poly(result);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << format_poly(result) << "\n";
        }
        return 0;
    });
}

int cmd_reduce(const Options& opt, const std::string& poly) {
    return with_field(make_ring(opt), [&](auto K) {
        auto g = parse_poly(poly, K, kXVar);
        auto cert = reduce_extension(K, g);
        auto label = group_label(K, cert.transformed);
        if (opt.json) {
            std::cout << certificate_to_json(K, cert, label).dump(2) << "\n";
        } else {
            std::cout << "input           " << format_poly(cert.input) << "\n";
            std::cout << "preliminary     "
                      << (cert.preliminary_applied ? cert.preliminary : "(none)") << "\n";
            std::cout << "transformed     " << format_poly(cert.transformed) << "\n";
            std::cout << "delta           " << elem_to_string(K, cert.abs.delta) << "\n";
            std::cout << "q               " << elem_to_string(K, cert.abs.q) << "\n";
            std::cout << "a5_mode         " << (cert.a5_mode ? "true" : "false") << "\n";
            if (cert.d) std::cout << "d               " << elem_to_string(K, *cert.d) << "\n";
            std::cout << "specialized     " << format_poly(cert.specialized) << "\n";
            std::cout << "u_minpoly       " << format_poly(cert.u_minpoly) << "\n";
            std::cout << "minpoly_match   " << (cert.minpoly_match ? "true" : "false") << "\n";
            std::cout << "disc_square     " << (cert.disc_square ? "true" : "false") << "\n";
            std::cout << "galois          " << group_value_to_string(label.value) << "\n";
        }
        return cert.minpoly_match ? 0 : 1;
    });
}

int cmd_certify(const Options& opt, const std::string& poly1, const std::string& poly2) {
    return with_field(make_ring(opt), [&](auto K) {
        auto g = parse_poly(poly1, K, kXVar);
        auto h = parse_poly(poly2, K, kXVar);
        bool same = certify_same_field(K, g, h);
        if (opt.json) {
            nlohmann::json j;
            j["same_field"] = same;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << (same ? "true" : "false") << "\n";
        }
        return same ? 0 : 1;
    });
}

int cmd_resolvent2(const Options& opt, const std::string& poly) {
    return with_field(make_ring(opt), [&](auto K) {
        auto g = parse_poly(poly, K, kXVar);
        auto h = resolvent_two_roots(K, g);
        if (opt.json) {
            nlohmann::json j;
            j["resolvent"] = format_poly(h);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << format_poly(h) << "\n";
        }
        return 0;
    });
}

int cmd_disc(const Options& opt, const std::string& poly) {
    return with_field(make_ring(opt), [&](auto K) {
        auto g = parse_poly(poly, K, kXVar);
        auto d = discriminant(g, "x").constant_value();
        auto w = K.is_square(d);
        if (opt.json) {
            nlohmann::json j;
            j["disc"] = elem_to_string(K, d);
            j["square"] = w.has_value();
            j["witness"] = w ? nlohmann::json(elem_to_string(K, *w)) : nlohmann::json(nullptr);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << elem_to_string(K, d) << "\n";
            if (w)
                std::cout << "square, witness " << elem_to_string(K, *w) << "\n";
            else
                std::cout << "not a square\n";
        }
        return 0;
    });
}

int cmd_transvect(const Options& opt, const std::string& ftext, const std::string& gtext, int m) {
    return with_field(make_ring(opt), [&](auto K) {
        const std::vector<std::string> xy = standard_vars({"x", "y"});
        auto f = make_binary_form(parse_poly(ftext, K, xy));
        auto g = make_binary_form(parse_poly(gtext, K, xy));
        auto t = transvectant(f, g, m);
        if (opt.json) {
            nlohmann::json j;
            j["order"] = t.order;
            j["zero"] = t.is_zero();
            j["polynomial"] = format_poly(t.poly);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << format_poly(t.poly) << "\n";
        }
        return 0;
    });
}

int cmd_verify_templates(const Options& opt) {
    auto report = verify_templates(opt.samples, opt.seed);
    if (opt.json) {
        std::cout << verify_report_to_json(report).dump(2) << "\n";
    } else {
        for (const auto& s : report.samples) {
            if (s.skipped)
                std::cout << "skip  " << s.quintic << "  (" << s.skip_reason << ")\n";
            else
                std::cout << (s.passed() ? "pass  " : "FAIL  ") << s.quintic << "\n";
        }
        std::cout << "passed " << report.passed << ", failed " << report.failed << ", skipped "
                  << report.skipped << " (seed " << report.seed << ")\n";
    }
    return report.all_passed() ? 0 : 1;
}

// The worked corpus: two rational quintics and the one-parameter family in
// characteristic 11, with the published target polynomials.
int cmd_selftest(const Options& opt) {
    struct Check {
        std::string name;
        bool ok;
    };
    std::vector<Check> checks;
    auto check = [&](const std::string& name, bool ok) { checks.push_back({name, ok}); };

    QQ K;
    auto ex1 = parse_poly("x^5-2*x^4-10*x^3+23*x^2-6*x-4", K, kXVar);
    {
        auto inv = invariants(K, ex1);
        auto abs = absolute_invariants(K, inv);
        check("ex1 A", inv.A == 110578);
        check("ex1 Delta", inv.Delta == 72352036);
        check("ex1 M", inv.M == mpq_class("55159285100995067"));
        check("ex1 delta", abs.delta == mpq_class(25, 169));
        check("ex1 q", abs.q == mpq_class("9343841/3049494563"));
        auto cert = reduce_extension(K, ex1);
        auto eq3 = parse_poly(
            "u^5+53018481246319976950/9299417089766560969*u^4"
            "+118978291635920447500/9299417089766560969*u^3"
            "+131644992415533125000/9299417089766560969*u^2"
            "+71941446489050000000/9299417089766560969*u"
            "+15555687740000000000/9299417089766560969",
            K, {"u"});
        check("ex1 a5_mode with d=5/13", cert.a5_mode && cert.d && *cert.d == mpq_class(5, 13));
        check("ex1 specialized = published quintic", cert.specialized == eq3);
        check("ex1 minpoly_match", cert.minpoly_match);
        auto eq3x = rename_vars(eq3, {{"u", "x"}}, kXVar);
        check("ex1 certify same field", certify_same_field(K, ex1, eq3x));
        check("ex1 group A5", group_label(K, ex1).value == GroupValue::A5);
    }
    {
        auto g = parse_poly("x^5+25*x^4-x-1", K, kXVar);
        check("ex2 A = 0", K.is_zero(invariants(K, g).A));
        auto sq = squared_roots(K, g);
        auto target = parse_poly("x^5-625*x^4-2*x^3+50*x^2+x-1", K, kXVar);
        check("ex2 squared roots", sq == target);
        auto inv = invariants(K, target);
        auto abs = absolute_invariants(K, inv);
        check("ex2 A value", inv.A == 1247920128);
        check("ex2 Delta value", inv.Delta == mpq_class("-833155976134656"));
        check("ex2 delta", abs.delta == mpq_class("-2554525/190992984"));
        // The printed M (and hence q) for this example fails the resultant
        // identity that defines the reduction; the values consistent with the
        // covariant tower are asserted instead.
        check("ex2 M (oracle-consistent)", inv.M == mpq_class("78631645938561680014193983488"));
        auto cert = reduce_extension(K, g);
        check("ex2 preliminary x^2", cert.preliminary_applied && cert.preliminary == "x^2");
        check("ex2 not a5_mode", !cert.a5_mode);
        check("ex2 minpoly_match", cert.minpoly_match);
        check("ex2 group S5", group_label(K, g).value == GroupValue::S5);
    }
    {
        QQt KC(QQ{}, "c");
        auto br = parse_poly("x^5-10*c*x^3+45*c^2*x-c^2", KC, kXVar);
        auto abs = absolute_invariants(KC, invariants(KC, br));
        auto delta_want = KC.from_mpq(mpq_class(1, 5));
        auto q_want = parse_poly("(25/8192)*(1728*c-1)/(1764*c-1)", KC, {}).constant_value();
        check("brioschi delta = 1/5", KC.eq(abs.delta, delta_want));
        check("brioschi q", KC.eq(abs.q, q_want));
    }
    {
        Fpt KP(Fp(11), "c");
        auto g = parse_poly("x^5+c*x^3+c^2*x-c^2", KP, kXVar);
        auto inv = invariants(KP, g);
        auto abs = absolute_invariants(KP, inv);
        check("char11 delta = 9", KP.eq(abs.delta, KP.from_int(9)));
        auto q_want = parse_poly("5*(c-1)/(2*c+5)", KP, {}).constant_value();
        check("char11 q", KP.eq(abs.q, q_want));
        auto cert = reduce_extension(KP, g);
        check("char11 a5_mode with d=3", cert.a5_mode && cert.d && KP.eq(*cert.d, KP.from_int(3)));
        auto eq4 = parse_poly(
            "u^5+(5*c^2+3*c+5)/(2*c+5)^2*u^4-(3*c^2+3*c+4)/(2*c+5)^2*u^3"
            "-(4*c+5)/(2*c+5)^2*u^2-2*(c-5)*(c-1)/(2*c+5)^2*u+(3+3*c^2+5*c)/(2*c+5)^2",
            KP, {"u"});
        check("char11 specialized = published family", cert.specialized == eq4);
        check("char11 minpoly_match", cert.minpoly_match);
        auto dsc = discriminant(g, "x").constant_value();
        auto dsc_want = parse_poly("c^8*(c-1)^2", KP, {}).constant_value();
        check("char11 disc = c^8(c-1)^2", KP.eq(dsc, dsc_want));
        check("char11 disc square", KP.is_square(dsc).has_value());
        auto cleared = mul_scalar(eq4, parse_poly("(2*c+5)^2", KP, {}).constant_value());
        auto dsc4 = discriminant(cleared, "u").constant_value();
        auto dsc4_want =
            parse_poly("2^4*(c-1)^4*c^4*(c^3+c^2-5*c-1)^2", KP, {}).constant_value();
        check("char11 disc of cleared family", KP.eq(dsc4, dsc4_want));
        check("char11 family disc square", KP.is_square(dsc4).has_value());
        auto eq4x = rename_vars(eq4, {{"u", "x"}}, kXVar);
        check("char11 family group A5", group_label(KP, eq4x).value == GroupValue::A5);
    }

    bool all = true;
    if (opt.json) {
        nlohmann::json j;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json e;
            e["check"] = c.name;
            e["ok"] = c.ok;
            all = all && c.ok;
            arr.push_back(std::move(e));
        }
        j["checks"] = std::move(arr);
        j["all_passed"] = all;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : checks) {
            std::cout << (c.ok ? "pass  " : "FAIL  ") << c.name << "\n";
            all = all && c.ok;
        }
        std::cout << (all ? "selftest passed\n" : "selftest FAILED\n");
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"exact invariant theory of binary quintics"};
    app.require_subcommand(1);
    app.add_option("--ring", opt.ring, "coefficient field: q or fp")
        ->check(CLI::IsMember({"q", "fp"}));
    auto* popt = app.add_option("--p", opt.p, "prime modulus (with --ring fp)");
    app.add_option("--param", opt.param, "parameter symbol for a rational-function field");
    app.add_flag("--json", opt.json, "emit a single JSON document");

    std::string poly1, poly2, tid;
    int tv_m = 0;
    std::vector<std::string> bindings;

    auto* c_inv = app.add_subcommand("invariants", "A, B, C, Delta, M and delta, q of a quintic");
    c_inv->add_option("polynomial", poly1)->required();
    auto* c_cov = app.add_subcommand("covariants", "dehomogenized covariant forms of a quintic");
    c_cov->add_option("polynomial", poly1)->required();
    auto* c_spec = app.add_subcommand("specialize", "specialize a generic template");
    c_spec->add_option("template", tid, "P1_S5, P2_S5, P1_A5 or P2_A5")->required();
    c_spec->add_option("bindings", bindings, "name=value pairs");
    c_spec->add_flag("--monic", opt.monic, "divide by the leading coefficient");
    auto* c_red = app.add_subcommand("reduce", "reduce a quintic to a generic specialization");
    c_red->add_option("polynomial", poly1)->required();
    auto* c_cert = app.add_subcommand("certify", "certify two quintics generate the same field");
    c_cert->add_option("polynomial1", poly1)->required();
    c_cert->add_option("polynomial2", poly2)->required();
    auto* c_res = app.add_subcommand("resolvent2", "degree-10 two-root resolvent");
    c_res->add_option("polynomial", poly1)->required();
    auto* c_disc = app.add_subcommand("disc", "discriminant and its square test");
    c_disc->add_option("polynomial", poly1)->required();
    auto* c_tv = app.add_subcommand("transvect", "m-th transvectant of two binary forms");
    c_tv->add_option("f", poly1)->required();
    c_tv->add_option("g", poly2)->required();
    c_tv->add_option("m", tv_m)->required()->check(CLI::NonNegativeNumber);
    auto* c_ver = app.add_subcommand("verify-templates", "re-derive the template identities");
    c_ver->add_option("--samples", opt.samples)->check(CLI::PositiveNumber);
    c_ver->add_option("--seed", opt.seed);
    auto* c_self = app.add_subcommand("selftest", "run the built-in worked examples");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    opt.p_given = popt->count() > 0;

    try {
        if (c_inv->parsed()) return cmd_invariants(opt, poly1);
        if (c_cov->parsed()) return cmd_covariants(opt, poly1);
        if (c_spec->parsed()) return cmd_specialize(opt, tid, bindings);
        if (c_red->parsed()) return cmd_reduce(opt, poly1);
        if (c_cert->parsed()) return cmd_certify(opt, poly1, poly2);
        if (c_res->parsed()) return cmd_resolvent2(opt, poly1);
        if (c_disc->parsed()) return cmd_disc(opt, poly1);
        if (c_tv->parsed()) return cmd_transvect(opt, poly1, poly2, tv_m);
        if (c_ver->parsed()) return cmd_verify_templates(opt);
        if (c_self->parsed()) return cmd_selftest(opt);
        std::cerr << "no command given\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const unknown_symbol& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const wrong_ring& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const degree_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
