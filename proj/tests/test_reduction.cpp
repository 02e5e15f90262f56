#include "doctest.h"

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "quintic/formparse.hpp"
#include "quintic/json_io.hpp"
#include "quintic/reduction.hpp"

using namespace quintic;

namespace {

const std::vector<std::string> kX{"x"};

MultiPoly<QQ> random_monic_quintic(const QQ& K, std::mt19937_64& rng) {
    auto g = pow_poly(MultiPoly<QQ>::variable(K, kX, "x"), 5);
    for (int t = 0; t < 5; ++t)
        g = g + mul_scalar(pow_poly(MultiPoly<QQ>::variable(K, kX, "x"), t),
                           K.from_int(static_cast<long>(rng() % 19) - 9));
    return g;
}

// Durand-Kerner root finder; numeric sanity oracle only, never the source of truth.
std::vector<std::complex<double>> all_roots(const MultiPoly<QQ>& g) {
    auto u = to_upoly(g, "x");
    int n = up::deg(u);
    std::vector<std::complex<double>> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = u[i].get_d();
    std::vector<std::complex<double>> r(n);
    for (int i = 0; i < n; ++i) r[i] = std::pow(std::complex<double>(0.4, 0.9), i);
    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> num = c[n];
            for (int k = n - 1; k >= 0; --k) num = num * r[i] + c[k];
            std::complex<double> den = c[n];
            for (int j = 0; j < n; ++j)
                if (j != i) den *= (r[i] - r[j]);
            auto step = num / den;
            r[i] -= step;
            shift = std::max(shift, std::abs(step));
        }
        if (shift < 1e-14) break;
    }
    return r;
}

double multiset_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
    double worst = 0;
    for (const auto& x : a) {
        double best = 1e100;
        size_t at = 0;
        for (size_t j = 0; j < b.size(); ++j)
            if (std::abs(x - b[j]) < best) {
                best = std::abs(x - b[j]);
                at = j;
            }
        worst = std::max(worst, best);
        b.erase(b.begin() + at);
    }
    return worst;
}

}  // namespace

TEST_CASE("transformed minimal polynomials") {
    QQ K;
    SUBCASE("identity transformation returns the monic input") {
        std::mt19937_64 rng(91);
        for (int n = 0; n < 25; ++n) {
            auto g = random_monic_quintic(K, rng);
            auto x = MultiPoly<QQ>::variable(K, kX, "x");
            auto one = MultiPoly<QQ>::constant(K, kX, K.one());
            CHECK(tschirnhausen_minpoly(K, g, x, one) == g);
            auto scaled = mul_scalar(g, mpq_class(3, 7));
            CHECK(tschirnhausen_minpoly(K, scaled, x, one) == g);
        }
    }
    SUBCASE("squaring the roots of x^2+1") {
        auto g = parse_poly("x^2+1", K, kX);
        CHECK(squared_roots(K, g) == parse_poly("x^2+2*x+1", K, kX));
    }
    SUBCASE("degree and monicity are preserved") {
        std::mt19937_64 rng(97);
        for (int n = 0; n < 25; ++n) {
            auto g = random_monic_quintic(K, rng);
            auto num = parse_poly("x^2+3*x", K, kX);
            auto den = parse_poly("1", K, kX);
            auto t = tschirnhausen_minpoly(K, g, num, den);
            CHECK(degree_in(t, "x") == 5);
            CHECK(leading_coeff_in(t, "x").constant_value() == 1);
        }
    }
    SUBCASE("denominator sharing a root is rejected") {
        auto g = parse_poly("x^2-1", K, kX);
        auto num = parse_poly("x", K, kX);
        auto den = parse_poly("x-1", K, kX);
        CHECK_THROWS_AS(tschirnhausen_minpoly(K, g, num, den), not_invertible);
    }
    SUBCASE("floating-point root images match to 1e-8") {
        std::mt19937_64 rng(101);
        int done = 0;
        for (int n = 0; done < 10 && n < 50; ++n) {
            auto g = random_monic_quintic(K, rng);
            if (K.is_zero(discriminant(g, "x").constant_value())) continue;
            auto num = parse_poly("x^2+1", K, kX);
            auto den = parse_poly("x+11", K, kX);
            if (degree_in(gcd_univariate(g, den, "x"), "x") != 0) continue;
            auto t = tschirnhausen_minpoly(K, g, num, den);
            auto roots = all_roots(g);
            std::vector<std::complex<double>> images;
            for (auto r : roots) images.push_back((r * r + 1.0) / (r + 11.0));
            CHECK(multiset_distance(images, all_roots(t)) < 1e-8);
            ++done;
        }
        CHECK(done == 10);
    }
}

TEST_CASE("squared roots") {
    QQ K;
    SUBCASE("the published S5 example") {
        auto g = parse_poly("x^5+25*x^4-x-1", K, kX);
        CHECK(squared_roots(K, g) == parse_poly("x^5-625*x^4-2*x^3+50*x^2+x-1", K, kX));
    }
    SUBCASE("all roots zero") {
        CHECK(squared_roots(K, parse_poly("x^5", K, kX)) == parse_poly("x^5", K, kX));
    }
    SUBCASE("root collisions show up in the discriminant") {
        // roots +-1, 2, 3, 4: squares collide at 1
        auto g = parse_poly("(x-1)*(x+1)*(x-2)*(x-3)*(x-4)", K, kX);
        auto s = squared_roots(K, g);
        CHECK(K.is_zero(discriminant(s, "x").constant_value()));
        // roots 1..5: no collisions
        auto h = parse_poly("(x-1)*(x-2)*(x-3)*(x-4)*(x-5)", K, kX);
        CHECK(!K.is_zero(discriminant(squared_roots(K, h), "x").constant_value()));
    }
}

TEST_CASE("preliminary search") {
    QQ K;
    SUBCASE("no-op when the invariants already work") {
        auto g = parse_poly("x^5-2*x^4-10*x^3+23*x^2-6*x-4", K, kX);
        auto pre = preliminary_search(K, g);
        CHECK(pre.identity);
        CHECK(pre.t_text == "x");
        CHECK(pre.transformed == g);
    }
    SUBCASE("A = 0 resolved by squaring the roots") {
        auto g = parse_poly("x^5+25*x^4-x-1", K, kX);
        auto pre = preliminary_search(K, g);
        CHECK(!pre.identity);
        CHECK(pre.t_text == "x^2");
        CHECK(pre.transformed == parse_poly("x^5-625*x^4-2*x^3+50*x^2+x-1", K, kX));
    }
    SUBCASE("repeated roots are rejected") {
        CHECK_THROWS_AS(preliminary_search(K, parse_poly("x^5", K, kX)), repeated_roots);
    }
}

TEST_CASE("reduction certificates") {
    QQ K;
    SUBCASE("the constructive claim holds on random quintics") {
        std::mt19937_64 rng(103);
        int done = 0;
        for (int n = 0; done < 100 && n < 400; ++n) {
            auto g = random_monic_quintic(K, rng);
            if (K.is_zero(discriminant(g, "x").constant_value())) continue;
            auto inv = invariants(K, g);
            if (K.is_zero(inv.A) || K.is_zero(inv.M)) continue;
            auto cert = reduce_extension(K, g);
            CHECK(!cert.preliminary_applied);
            CHECK(cert.minpoly_match);
            if (cert.a5_mode) CHECK(cert.disc_square);
            ++done;
        }
        CHECK(done == 100);
    }
    SUBCASE("certificate JSON strings re-parse") {
        auto g = parse_poly("x^5-2*x^4-10*x^3+23*x^2-6*x-4", K, kX);
        auto cert = reduce_extension(K, g);
        auto j = certificate_to_json(K, cert);
        for (const char* key : {"input", "transformed"}) {
            auto p = parse_poly(j[key].get<std::string>(), K, kX);
            CHECK(!p.is_zero());
        }
        for (const char* key : {"specialized", "u_minpoly"}) {
            auto p = parse_poly(j[key].get<std::string>(), K, {"u"});
            CHECK(degree_in(p, "u") == 5);
        }
        CHECK(parse_poly(j["invariants"]["q"].get<std::string>(), K, {}).constant_value() ==
              mpq_class("9343841/3049494563"));
        CHECK(parse_poly(j["d"].get<std::string>(), K, {}).constant_value() == mpq_class(5, 13));

        Fpt KP(Fp(11), "c");
        auto g11 = parse_poly("x^5+c*x^3+c^2*x-c^2", KP, kX);
        auto cert11 = reduce_extension(KP, g11);
        auto j11 = certificate_to_json(KP, cert11);
        auto q11 = parse_poly(j11["invariants"]["q"].get<std::string>(), KP, {}).constant_value();
        CHECK(KP.eq(q11, parse_poly("5*(c-1)/(2*c+5)", KP, {}).constant_value()));
        auto spec11 = parse_poly(j11["specialized"].get<std::string>(), KP, {"u"});
        CHECK(spec11 == cert11.specialized);
    }

    SUBCASE("certify the published pair") {
        auto g = parse_poly("x^5-2*x^4-10*x^3+23*x^2-6*x-4", K, kX);
        auto h = parse_poly(
            "x^5+53018481246319976950/9299417089766560969*x^4"
            "+118978291635920447500/9299417089766560969*x^3"
            "+131644992415533125000/9299417089766560969*x^2"
            "+71941446489050000000/9299417089766560969*x"
            "+15555687740000000000/9299417089766560969",
            K, kX);
        CHECK(certify_same_field(K, g, h));
        CHECK(certify_same_field(K, g, g));
        CHECK(!certify_same_field(K, g, parse_poly("x^5-2", K, kX)));
    }
}
