// Rational-function fields K(t) in one parameter over QQ or a prime field.
// Elements are kept canonical at all times: gcd(num, den) = 1, den monic,
// zero stored as 0/1.  Equality is therefore plain representational equality.

#ifndef QUINTIC_RATFUNC_HPP
#define QUINTIC_RATFUNC_HPP

#include <optional>
#include <string>
#include <utility>

#include "quintic/rings.hpp"
#include "quintic/upoly.hpp"

namespace quintic {

template <class B>
struct RatFunc {
    UPoly<B> num;
    UPoly<B> den;  // monic, coprime to num; {one} when num is zero
};

// Canonical form of num/den; the value is unchanged as a fraction.
template <class B>
RatFunc<B> rf_normalize(const B& base, UPoly<B> num, UPoly<B> den) {
    if (up::is_zero(den)) throw division_by_zero();
    if (up::is_zero(num)) return RatFunc<B>{{}, up::constant(base, base.one())};
    auto g = up::gcd(base, num, den);
    if (up::deg(g) > 0) {
        num = up::divrem(base, std::move(num), g).first;
        den = up::divrem(base, std::move(den), g).first;
    }
    auto lead_inv = base.inv(up::lc(den));
    num = up::mul_scalar(base, std::move(num), lead_inv);
    den = up::mul_scalar(base, std::move(den), lead_inv);
    return RatFunc<B>{std::move(num), std::move(den)};
}

template <class B>
struct FuncField {
    B base;
    std::string param;
    using Elem = RatFunc<B>;
    static constexpr bool is_field = true;

    FuncField(B b, std::string parameter) : base(std::move(b)), param(std::move(parameter)) {
        if (param.empty()) throw wrong_ring("function field needs a parameter symbol");
    }

    Elem make(UPoly<B> num, UPoly<B> den) const {
        return rf_normalize(base, std::move(num), std::move(den));
    }
    Elem from_poly(UPoly<B> num) const {
        return Elem{std::move(num), up::constant(base, base.one())};
    }

    Elem zero() const { return from_poly({}); }
    Elem one() const { return from_poly(up::constant(base, base.one())); }
    Elem parameter_elem() const { return from_poly(UPoly<B>{base.zero(), base.one()}); }
    Elem from_int(long v) const { return from_poly(up::constant(base, base.from_int(v))); }
    Elem from_mpz(const mpz_class& v) const { return from_poly(up::constant(base, base.from_mpz(v))); }
    Elem from_mpq(const mpq_class& v) const { return from_poly(up::constant(base, base.from_mpq(v))); }

    Elem add(const Elem& a, const Elem& b) const {
        auto n = up::add(base, up::mul(base, a.num, b.den), up::mul(base, b.num, a.den));
        return make(std::move(n), up::mul(base, a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(Elem a) const {
        a.num = up::neg(base, std::move(a.num));
        return a;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        return make(up::mul(base, a.num, b.num), up::mul(base, a.den, b.den));
    }
    Elem inv(const Elem& a) const {
        if (is_zero(a)) throw division_by_zero();
        return make(a.den, a.num);
    }
    Elem div(const Elem& a, const Elem& b) const {
        if (is_zero(b)) throw division_by_zero();
        return make(up::mul(base, a.num, b.den), up::mul(base, a.den, b.num));
    }
    Elem divexact(const Elem& a, const Elem& b) const { return div(a, b); }

    bool is_zero(const Elem& a) const { return up::is_zero(a.num); }
    bool is_one(const Elem& a) const {
        return up::deg(a.num) == 0 && up::deg(a.den) == 0 && base.is_one(a.num[0]);
    }
    bool eq(const Elem& a, const Elem& b) const {
        return up::eq(base, a.num, b.num) && up::eq(base, a.den, b.den);
    }
    uint64_t characteristic() const { return base.characteristic(); }

    // num/den in canonical form is a square iff den is the square of a monic
    // polynomial and num is (square unit of the base) * (monic square).
    std::optional<Elem> is_square(const Elem& a) const {
        if (is_zero(a)) return zero();
        auto unit = up::lc(a.num);
        auto unit_root = base.is_square(unit);
        if (!unit_root) return std::nullopt;
        auto num_monic = up::mul_scalar(base, a.num, base.inv(unit));
        auto nr = up::poly_sqrt(base, num_monic);
        if (!nr) return std::nullopt;
        auto dr = up::poly_sqrt(base, a.den);
        if (!dr) return std::nullopt;
        return make(up::mul_scalar(base, std::move(*nr), *unit_root), std::move(*dr));
    }

    bool is_negative(const Elem& a) const {
        return !is_zero(a) && base.is_negative(up::lc(a.num));
    }
    Elem abs_val(const Elem& a) const { return is_negative(a) ? neg(a) : a; }

    std::string to_factor_string(const Elem& a) const {
        if (is_zero(a)) return "0";
        bool den_is_one = up::deg(a.den) == 0;
        std::string n = up::to_string(base, a.num, param);
        if (den_is_one) {
            if (up::deg(a.num) <= 0) return n;       // plain base constant
            if (a.num.size() - count_zeros(a.num) == 1 && !base.is_negative(up::lc(a.num)))
                return n;                            // single positive term, e.g. 5*c^2
            return "(" + n + ")";
        }
        return "(" + n + ")/(" + up::to_string(base, a.den, param) + ")";
    }

    bool same_ring(const FuncField& other) const {
        return param == other.param && base.same_ring(other.base);
    }

private:
    size_t count_zeros(const UPoly<B>& p) const {
        size_t z = 0;
        for (auto& c : p)
            if (base.is_zero(c)) ++z;
        return z;
    }
};

using QQt = FuncField<QQ>;
using Fpt = FuncField<Fp>;

}  // namespace quintic

#endif
