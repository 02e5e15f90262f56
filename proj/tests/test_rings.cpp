#include "doctest.h"

#include <random>

#include "quintic/ratfunc.hpp"
#include "quintic/rings.hpp"
#include "quintic/upoly.hpp"

using namespace quintic;

namespace {

UPoly<Fp> fp_poly(const Fp& K, std::initializer_list<long> cs) {
    UPoly<Fp> p;
    for (long c : cs) p.push_back(K.from_int(c));
    up::trim(K, p);
    return p;
}

UPoly<QQ> qq_poly(std::initializer_list<long> cs) {
    QQ K;
    UPoly<QQ> p;
    for (long c : cs) p.push_back(K.from_int(c));
    up::trim(K, p);
    return p;
}

}  // namespace

TEST_CASE("ring descriptor validation") {
    CHECK_NOTHROW(RingDescriptor::prime(7));
    CHECK_NOTHROW(RingDescriptor::prime(101));
    CHECK_THROWS_AS(RingDescriptor::prime(2), wrong_ring);
    CHECK_THROWS_AS(RingDescriptor::prime(3), wrong_ring);
    CHECK_THROWS_AS(RingDescriptor::prime(5), wrong_ring);
    CHECK_THROWS_AS(RingDescriptor::prime(9), wrong_ring);
    auto q = RingDescriptor::rationals();
    auto qc = RingDescriptor::rational_functions(q, "c");
    CHECK_THROWS_AS(RingDescriptor::rational_functions(qc, "t"), wrong_ring);
    CHECK_THROWS_AS(RingDescriptor::rational_functions(q, ""), wrong_ring);
}

TEST_CASE("rf_normalize cancels, monicizes and fixes zero") {
    SUBCASE("common factor over QQ") {
        QQ K;
        // (c^2 - 1) / (c - 1) -> (c + 1)/1
        auto r = rf_normalize(K, qq_poly({-1, 0, 1}), qq_poly({-1, 1}));
        CHECK(up::eq(K, r.num, qq_poly({1, 1})));
        CHECK(up::eq(K, r.den, qq_poly({1})));
    }
    SUBCASE("monicizing over F11") {
        Fp K(11);
        // (5c - 5)/(2c + 5): multiply by 2^-1 = 6 and reduce
        auto r = rf_normalize(K, fp_poly(K, {-5, 5}), fp_poly(K, {5, 2}));
        CHECK(up::eq(K, r.num, fp_poly(K, {3, 8})));  // 8c + 3
        CHECK(up::eq(K, r.den, fp_poly(K, {8, 1})));  // c + 8
        // value unchanged: cross-multiplication
        auto lhs = up::mul(K, r.num, fp_poly(K, {5, 2}));
        auto rhs = up::mul(K, fp_poly(K, {-5, 5}), r.den);
        CHECK(up::eq(K, lhs, rhs));
    }
    SUBCASE("zero normalizes to 0/1") {
        QQ K;
        auto r = rf_normalize(K, UPoly<QQ>{}, qq_poly({1, 0, 0, 0, 0, 1}));
        CHECK(up::is_zero(r.num));
        CHECK(up::eq(K, r.den, qq_poly({1})));
    }
    SUBCASE("zero denominator") {
        QQ K;
        CHECK_THROWS_AS(rf_normalize(K, qq_poly({1}), UPoly<QQ>{}), division_by_zero);
    }
    SUBCASE("idempotent on random inputs") {
        Fp K(11);
        FuncField<Fp> F(K, "c");
        std::mt19937_64 rng(7);
        for (int n = 0; n < 200; ++n) {
            UPoly<Fp> num, den;
            for (int i = 0; i < 4; ++i) num.push_back(rng() % 11);
            for (int i = 0; i < 3; ++i) den.push_back(rng() % 11);
            up::trim(K, num);
            up::trim(K, den);
            if (up::is_zero(den)) continue;
            auto r = rf_normalize(K, num, den);
            auto r2 = rf_normalize(K, r.num, r.den);
            CHECK(F.eq(r, r2));
        }
    }
}

TEST_CASE("is_square with witnesses") {
    QQ K;
    SUBCASE("25/169 over QQ") {
        auto w = K.is_square(mpq_class(25, 169));
        REQUIRE(w.has_value());
        CHECK(*w == mpq_class(5, 13));
    }
    SUBCASE("negative rationals are not squares") {
        CHECK(!K.is_square(mpq_class(-1)).has_value());
        CHECK(!K.is_square(mpq_class(-4, 9)).has_value());
    }
    SUBCASE("9 over F11") {
        Fp F(11);
        auto w = F.is_square(9);
        REQUIRE(w.has_value());
        CHECK(*w == 3);
        CHECK(!F.is_square(2).has_value());  // 2 is a non-residue mod 11
    }
    SUBCASE("c^8 (c-1)^2 over F11(c)") {
        Fp F(11);
        FuncField<Fp> FF(F, "c");
        auto c = FF.parameter_elem();
        auto cm1 = FF.sub(c, FF.one());
        auto want = FF.mul(FF.mul(FF.mul(c, c), FF.mul(c, c)), cm1);  // c^4 (c-1)
        auto sq = FF.mul(want, want);                                 // c^8 (c-1)^2
        auto w = FF.is_square(sq);
        REQUIRE(w.has_value());
        CHECK(FF.eq(*w, want));
    }
    SUBCASE("witness property on random elements") {
        Fp F(101);
        FuncField<Fp> FF(F, "t");
        QQt FQ(QQ{}, "t");
        std::mt19937_64 rng(99);
        for (int n = 0; n < 1000; ++n) {
            // QQ
            mpq_class s(static_cast<long>(rng() % 2000) - 1000,
                        static_cast<long>(rng() % 50) + 1);
            s.canonicalize();
            auto w = K.is_square(s * s);
            REQUIRE(w.has_value());
            CHECK((*w) * (*w) == s * s);
            // Fp
            uint64_t e = rng() % 101;
            auto wf = F.is_square(F.mul(e, e));
            REQUIRE(wf.has_value());
            CHECK(F.mul(*wf, *wf) == F.mul(e, e));
        }
        for (int n = 0; n < 250; ++n) {
            Fp base(101);
            UPoly<Fp> num, den;
            for (int i = 0; i < 3; ++i) num.push_back(rng() % 101);
            for (int i = 0; i < 2; ++i) den.push_back(rng() % 101);
            up::trim(base, num);
            up::trim(base, den);
            if (up::is_zero(den)) den = fp_poly(base, {1});
            auto s = FF.make(num, den);
            auto w = FF.is_square(FF.mul(s, s));
            REQUIRE(w.has_value());
            CHECK(FF.eq(FF.mul(*w, *w), FF.mul(s, s)));
        }
        for (int n = 0; n < 250; ++n) {
            QQ KB;
            UPoly<QQ> num, den;
            for (int i = 0; i < 3; ++i)
                num.push_back(mpq_class(static_cast<long>(rng() % 19) - 9));
            for (int i = 0; i < 2; ++i)
                den.push_back(mpq_class(static_cast<long>(rng() % 19) - 9));
            up::trim(KB, num);
            up::trim(KB, den);
            if (up::is_zero(den)) den = qq_poly({1});
            auto s = FQ.make(num, den);
            auto w = FQ.is_square(FQ.mul(s, s));
            REQUIRE(w.has_value());
            CHECK(FQ.eq(FQ.mul(*w, *w), FQ.mul(s, s)));
        }
    }
}

TEST_CASE("poly_sqrt") {
    QQ K;
    SUBCASE("perfect square") {
        auto r = up::poly_sqrt(K, qq_poly({1, 2, 1}));
        REQUIRE(r.has_value());
        CHECK(up::eq(K, *r, qq_poly({1, 1})));
    }
    SUBCASE("odd degree") { CHECK(!up::poly_sqrt(K, qq_poly({1, 1})).has_value()); }
    SUBCASE("expand then recover") {
        auto p = qq_poly({7, -2, 0, 1});  // x^3 - 2x + 7
        auto sq = up::mul(K, p, p);
        auto r = up::poly_sqrt(K, sq);
        REQUIRE(r.has_value());
        CHECK(up::eq(K, *r, p));
    }
    SUBCASE("leading-coefficient sign convention") {
        std::mt19937_64 rng(3);
        Fp F(13);
        for (int n = 0; n < 200; ++n) {
            UPoly<QQ> q;
            for (int i = 0; i < 4; ++i)
                q.push_back(mpq_class(static_cast<long>(rng() % 19) - 9));
            up::trim(K, q);
            if (!up::is_zero(q)) {
                auto r = up::poly_sqrt(K, up::mul(K, q, q));
                REQUIRE(r.has_value());
                bool plus = up::eq(K, *r, q);
                bool minus = up::eq(K, *r, up::neg(K, q));
                CHECK((plus || minus));
                CHECK(up::lc(*r) > 0);  // principal root over QQ
            }
            UPoly<Fp> qf;
            for (int i = 0; i < 4; ++i) qf.push_back(F.from_int(static_cast<long>(rng() % 13)));
            up::trim(F, qf);
            if (!up::is_zero(qf)) {
                auto rf = up::poly_sqrt(F, up::mul(F, qf, qf));
                REQUIRE(rf.has_value());
                CHECK(up::lc(*rf) <= 13 - up::lc(*rf));  // canonical min(s, p-s)
            }
        }
    }
    SUBCASE("non-square even-degree polynomial") {
        CHECK(!up::poly_sqrt(K, qq_poly({1, 1, 1})).has_value());
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(2024);
    Fp F(101);
    Fpt FF(Fp(11), "c");
    QQ K;
    auto rand_q = [&] {
        mpq_class v(static_cast<long>(rng() % 401) - 200, static_cast<long>(rng() % 40) + 1);
        v.canonicalize();
        return v;
    };
    auto rand_ff = [&] {
        Fp base(11);
        UPoly<Fp> num, den;
        for (int i = 0; i < 3; ++i) num.push_back(base.from_int(static_cast<long>(rng() % 11)));
        for (int i = 0; i < 2; ++i) den.push_back(base.from_int(static_cast<long>(rng() % 11)));
        up::trim(base, num);
        up::trim(base, den);
        if (up::is_zero(den)) den = fp_poly(base, {1});
        return FF.make(num, den);
    };
    for (int n = 0; n < 500; ++n) {
        auto a = rand_q(), b = rand_q(), c = rand_q();
        CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
        CHECK(K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c)));

        uint64_t fa = rng() % 101, fb = rng() % 101, fc = rng() % 101;
        CHECK(F.mul(fa, F.add(fb, fc)) == F.add(F.mul(fa, fb), F.mul(fa, fc)));
        CHECK(F.mul(F.mul(fa, fb), fc) == F.mul(fa, F.mul(fb, fc)));
        if (fa != 0) CHECK(F.mul(fa, F.inv(fa)) == 1);

        auto ra = rand_ff(), rb = rand_ff(), rc = rand_ff();
        CHECK(FF.eq(FF.mul(ra, FF.add(rb, rc)), FF.add(FF.mul(ra, rb), FF.mul(ra, rc))));
        CHECK(FF.eq(FF.mul(FF.mul(ra, rb), rc), FF.mul(ra, FF.mul(rb, rc))));
        if (!FF.is_zero(ra)) CHECK(FF.is_one(FF.mul(ra, FF.inv(ra))));
    }
}
