#include "doctest.h"

#include <random>

#include "quintic/covariants.hpp"
#include "quintic/formparse.hpp"
#include "quintic/ratfunc.hpp"
#include "quintic/transvect.hpp"

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

}  // namespace

TEST_CASE("universal table structure") {
    const auto& T = universal_table();
    struct Want {
        const char* name;
        int order, degree;
    };
    const Want wants[] = {{"f", 5, 1}, {"i", 2, 2},   {"H", 6, 2}, {"j", 3, 3},
                          {"k", 4, 4}, {"tau", 2, 6}, {"A", 0, 4}, {"B", 0, 8},
                          {"Delta", 0, 8}, {"C", 0, 12}, {"M", 0, 12}};
    for (const auto& w : wants) {
        const auto& e = T.entry(w.name);
        CHECK(e.order == w.order);
        CHECK(e.degree == w.degree);
        CHECK(content(e.poly) == 1);
        CHECK(homogeneous_degree(e.poly, {"x", "y"}) == std::optional<int>(w.order));
        CHECK(homogeneous_degree(e.poly, {"a0", "a1", "a2", "a3", "a4", "a5"}) ==
              std::optional<int>(w.degree));
    }
    SUBCASE("raw transvectant contents equal the divisors") {
        auto F = make_binary_form(T.entry("f").poly);
        CHECK(content(transvectant(F, F, 4).poly) == 288);
        CHECK(content(transvectant(F, F, 2).poly) == 16);
        auto I = BinaryForm<ZZ>{2, T.entry("i").poly};
        CHECK(content(transvectant(F, I, 2).poly) == 12);
        CHECK(content(transvectant(I, I, 2).poly) == 32);
    }
    SUBCASE("odd self-transvectant vanishes") {
        auto F = make_binary_form(T.entry("f").poly);
        CHECK(transvectant(F, F, 1).is_zero());
    }
    SUBCASE("defining relations hold identically") {
        const auto& A = T.entry("A").poly;
        const auto& B = T.entry("B").poly;
        const auto& C = T.entry("C").poly;
        const auto& D = T.entry("Delta").poly;
        const auto& M = T.entry("M").poly;
        ZZ zz;
        CHECK(mul_scalar(D, mpz_class(125)) == A * A - mul_scalar(B, mpz_class(4)));
        CHECK(mul_scalar(M, mpz_class(25)) ==
              mul_scalar(C, mpz_class(-9)) + mul_scalar(A * D, mpz_class(2000)) +
                  mul_scalar(A * A * A, mpz_class(1008)));
    }
    SUBCASE("Delta is the discriminant on the nose") {
        CHECK(discriminant_to_delta_ratio() == 1);
    }
    SUBCASE("cache round-trips exactly") {
        auto text = table_to_text(T);
        auto T2 = table_from_text(text);
        REQUIRE(T2.entries.size() == T.entries.size());
        for (size_t i = 0; i < T.entries.size(); ++i) {
            CHECK(T2.entries[i].name == T.entries[i].name);
            CHECK(T2.entries[i].poly == T.entries[i].poly);
        }
        CHECK_THROWS_AS(table_from_text("garbage"), construction_error);
    }
}

TEST_CASE("invariants of the worked quintics") {
    QQ K;
    SUBCASE("known A5 example") {
        auto g = parse_poly("x^5-2*x^4-10*x^3+23*x^2-6*x-4", K, kX);
        auto inv = invariants(K, g);
        CHECK(inv.A == 110578);
        CHECK(inv.Delta == 72352036);
        CHECK(inv.M == mpq_class("55159285100995067"));
        CHECK(inv.discOK);
        auto abs = absolute_invariants(K, inv);
        CHECK(abs.delta == mpq_class(25, 169));
        CHECK(abs.q == mpq_class("9343841/3049494563"));
    }
    SUBCASE("squared-roots example") {
        auto g = parse_poly("x^5-625*x^4-2*x^3+50*x^2+x-1", K, kX);
        auto inv = invariants(K, g);
        CHECK(inv.A == 1247920128);
        CHECK(inv.Delta == mpq_class("-833155976134656"));
        CHECK(inv.M == mpq_class("78631645938561680014193983488"));
        auto abs = absolute_invariants(K, inv);
        CHECK(abs.delta == mpq_class("-2554525/190992984"));
        CHECK(abs.q == mpq_class("232757801797248/75340974219911521"));
    }
    SUBCASE("A can vanish") {
        auto g = parse_poly("x^5+25*x^4-x-1", K, kX);
        auto inv = invariants(K, g);
        CHECK(K.is_zero(inv.A));
        CHECK_THROWS_AS(absolute_invariants(K, inv), not_defined);
    }
    SUBCASE("wrong degree") {
        CHECK_THROWS_AS(invariants(K, parse_poly("x^4-1", K, kX)), degree_error);
    }
}

TEST_CASE("covariant forms") {
    QQ K;
    SUBCASE("i vanishes for x^5") {
        auto forms = covariant_forms(K, parse_poly("x^5", K, kX));
        CHECK(forms.i.is_zero());
    }
    SUBCASE("degrees and coprimality for the known example") {
        auto g = parse_poly("x^5-2*x^4-10*x^3+23*x^2-6*x-4", K, kX);
        auto forms = covariant_forms(K, g);
        CHECK(degree_in(forms.i, "x") == 2);
        CHECK(degree_in(forms.k, "x") == 4);
        CHECK(degree_in(gcd_univariate(g, forms.i, "x"), "x") == 0);
    }
    SUBCASE("table evaluation equals running the process on the concrete quintic") {
        std::mt19937_64 rng(71);
        int done = 0;
        for (int n = 0; done < 100 && n < 300; ++n) {
            auto g = random_monic_quintic(K, rng);
            // direct route: homogenize, run the Omega process, dehomogenize
            auto xy = standard_vars({"x", "y"});
            MultiPoly<QQ> fh(K, xy);
            for (int t = 0; t <= 5; ++t) {
                auto c = coeff_in(g, "x", t).constant_value();
                if (K.is_zero(c)) continue;
                Mono m(2, 0);
                m[0] = t;
                m[1] = 5 - t;
                fh.add_term(m, c);
            }
            auto direct = transvectant(make_binary_form(fh), make_binary_form(fh), 4).poly;
            direct = divexact_scalar(direct, K.from_int(288));
            auto direct_x = rename_vars(substitute_values(direct, {{"y", K.one()}}), {{"y", "x"}}, kX);
            auto table_i = covariant_forms(K, g).i;
            CHECK(direct_x == table_i);
            ++done;
        }
        CHECK(done == 100);
    }
}

TEST_CASE("invariance and weights") {
    QQ K;
    std::mt19937_64 rng(83);
    SUBCASE("scaling weights 4, 8, 12") {
        for (int n = 0; n < 25; ++n) {
            auto g = random_monic_quintic(K, rng);
            long lam = 2 + static_cast<long>(rng() % 5);
            auto inv = invariants(K, g);
            auto inv2 = invariants(K, mul_scalar(g, K.from_int(lam)));
            mpq_class l(lam);
            CHECK(inv2.A == inv.A * l * l * l * l);
            mpq_class l8 = l * l * l * l * l * l * l * l;
            CHECK(inv2.Delta == inv.Delta * l8);
            CHECK(inv2.M == inv.M * l8 * l * l * l * l);
        }
    }
    SUBCASE("absolute invariants are scaling- and GL2-invariant") {
        int done = 0;
        for (int n = 0; done < 100 && n < 500; ++n) {
            auto g = random_monic_quintic(K, rng);
            auto inv = invariants(K, g);
            if (K.is_zero(inv.A) || K.is_zero(inv.M) || !inv.discOK) continue;
            auto abs = absolute_invariants(K, inv);
            long lam = 2 + static_cast<long>(rng() % 5);
            auto abs_scaled = absolute_invariants(K, invariants(K, mul_scalar(g, K.from_int(lam))));
            CHECK(abs_scaled.delta == abs.delta);
            CHECK(abs_scaled.q == abs.q);

            // arbitrary invertible integer substitution on the form
            auto xy = standard_vars({"x", "y"});
            MultiPoly<QQ> fh(K, xy);
            for (int t = 0; t <= 5; ++t) {
                auto c = coeff_in(g, "x", t).constant_value();
                if (K.is_zero(c)) continue;
                Mono m(2, 0);
                m[0] = t;
                m[1] = 5 - t;
                fh.add_term(m, c);
            }
            mpq_class a(static_cast<long>(rng() % 5) - 2), b(static_cast<long>(rng() % 5) - 2);
            mpq_class c(static_cast<long>(rng() % 5) - 2), d(static_cast<long>(rng() % 5) - 2);
            if (a * d - b * c == 0) continue;
            auto tf = linear_substitution(fh, a, b, c, d);
            auto tx = rename_vars(substitute_values(tf, {{"y", K.one()}}), {{"y", "x"}}, kX);
            if (degree_in(tx, "x") != 5) continue;
            auto inv_t = invariants(K, tx);
            if (K.is_zero(inv_t.A) || K.is_zero(inv_t.M)) continue;
            auto abs_t = absolute_invariants(K, inv_t);
            CHECK(abs_t.delta == abs.delta);
            CHECK(abs_t.q == abs.q);
            ++done;
        }
        CHECK(done == 100);
    }
    SUBCASE("SL2 invariance of A, B, C, Delta, M") {
        int done = 0;
        for (int n = 0; done < 100 && n < 500; ++n) {
            auto g = random_monic_quintic(K, rng);
            auto xy = standard_vars({"x", "y"});
            MultiPoly<QQ> fh(K, xy);
            for (int t = 0; t <= 5; ++t) {
                auto c = coeff_in(g, "x", t).constant_value();
                if (K.is_zero(c)) continue;
                Mono m(2, 0);
                m[0] = t;
                m[1] = 5 - t;
                fh.add_term(m, c);
            }
            mpq_class b(static_cast<long>(rng() % 7) - 3), c(static_cast<long>(rng() % 7) - 3);
            mpq_class a = 1 + b * c;  // [[1+bc, b],[c, 1]], det 1
            auto tf = linear_substitution(fh, a, b, c, mpq_class(1));
            auto tx = rename_vars(substitute_values(tf, {{"y", K.one()}}), {{"y", "x"}}, kX);
            if (degree_in(tx, "x") != 5) continue;
            auto inv1 = invariants(K, g);
            auto inv2 = invariants(K, tx);
            CHECK(inv1.A == inv2.A);
            CHECK(inv1.B == inv2.B);
            CHECK(inv1.C == inv2.C);
            CHECK(inv1.Delta == inv2.Delta);
            CHECK(inv1.M == inv2.M);
            ++done;
        }
        CHECK(done == 100);
    }
    SUBCASE("reduction mod p commutes with evaluation") {
        for (uint64_t p : {7ull, 11ull, 13ull, 101ull}) {
            Fp F(p);
            for (int n = 0; n < 100; ++n) {
                auto g = random_monic_quintic(K, rng);
                MultiPoly<Fp> gm(F, kX);
                for (int t = 0; t <= 5; ++t) {
                    auto c = coeff_in(g, "x", t).constant_value();
                    auto cf = F.from_mpq(c);
                    if (cf == 0) continue;
                    Mono m(1, 0);
                    m[0] = t;
                    gm.add_term(m, cf);
                }
                auto invq = invariants(K, g);
                auto invp = invariants(F, gm);
                CHECK(F.from_mpq(invq.A) == invp.A);
                CHECK(F.from_mpq(invq.B) == invp.B);
                CHECK(F.from_mpq(invq.C) == invp.C);
                CHECK(F.from_mpq(invq.Delta) == invp.Delta);
                CHECK(F.from_mpq(invq.M) == invp.M);
            }
        }
    }
}

TEST_CASE("absolute invariants over function fields") {
    SUBCASE("one-parameter family over QQ(c)") {
        QQt KC(QQ{}, "c");
        auto g = parse_poly("x^5-10*c*x^3+45*c^2*x-c^2", KC, kX);
        auto abs = absolute_invariants(KC, invariants(KC, g));
        CHECK(KC.eq(abs.delta, KC.from_mpq(mpq_class(1, 5))));
        auto qw = parse_poly("(25/8192)*(1728*c-1)/(1764*c-1)", KC, {}).constant_value();
        CHECK(KC.eq(abs.q, qw));
    }
    SUBCASE("same family in characteristic 11") {
        Fpt KP(Fp(11), "c");
        auto g = parse_poly("x^5+c*x^3+c^2*x-c^2", KP, kX);
        auto abs = absolute_invariants(KP, invariants(KP, g));
        CHECK(KP.eq(abs.delta, KP.from_int(9)));
        auto d = KP.is_square(abs.delta);
        REQUIRE(d.has_value());
        CHECK(KP.eq(*d, KP.from_int(3)));
        auto qw = parse_poly("5*(c-1)/(2*c+5)", KP, {}).constant_value();
        CHECK(KP.eq(abs.q, qw));
    }
}
