// Transvectants of binary forms via the Omega process: split the variables of
// the two forms, multiply, apply the operator
//     d^2/dx1 dy2 - d^2/dx2 dy1
// m times, then collapse x1,x2 -> x and y1,y2 -> y.

#ifndef QUINTIC_TRANSVECT_HPP
#define QUINTIC_TRANSVECT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "quintic/errors.hpp"
#include "quintic/multipoly.hpp"

namespace quintic {

template <class R>
struct BinaryForm {
    int order = 0;        // homogeneous degree in {x, y}
    MultiPoly<R> poly;

    bool is_zero() const { return poly.is_zero(); }
};

// Checks homogeneity in {x,y} and records the order.
template <class R>
BinaryForm<R> make_binary_form(const MultiPoly<R>& p) {
    if (p.is_zero()) return BinaryForm<R>{0, p};
    auto d = homogeneous_degree(p, {"x", "y"});
    if (!d) throw degree_error("form is not homogeneous in x, y");
    return BinaryForm<R>{*d, p};
}

// workspace context for the split-variable product
inline std::vector<std::string> omega_vars(const std::vector<std::string>& form_vars) {
    std::vector<std::string> v = {"x1", "y1", "x2", "y2"};
    for (const auto& name : form_vars)
        if (name != "x" && name != "y") v.push_back(name);
    return standard_vars(v);
}

template <class R>
MultiPoly<R> omega_apply(const MultiPoly<R>& w) {
    return derivative(derivative(w, "x1"), "y2") - derivative(derivative(w, "x2"), "y1");
}

// m-th transvectant (f, g)^m.  For m beyond min(order f, order g) the result
// is the zero form, which callers detect via is_zero().
template <class R>
BinaryForm<R> transvectant(const BinaryForm<R>& f, const BinaryForm<R>& g, int m) {
    f.poly.check_compatible(g.poly);
    auto wvars = omega_vars(f.poly.vars);
    auto w = rename_vars(f.poly, {{"x", "x1"}, {"y", "y1"}}, wvars) *
             rename_vars(g.poly, {{"x", "x2"}, {"y", "y2"}}, wvars);
    for (int step = 0; step < m; ++step) {
        w = omega_apply(w);
        if (w.is_zero()) break;
    }
    auto out = rename_vars(w, {{"x1", "x"}, {"x2", "x"}, {"y1", "y"}, {"y2", "y"}}, f.poly.vars);
    int order = f.order + g.order - 2 * m;
    if (!out.is_zero()) {
        auto d = homogeneous_degree(out, {"x", "y"});
        if (!d || *d != order) throw internal_error("transvectant order bookkeeping failed");
    }
    return BinaryForm<R>{order, out};
}

// unimodular (or general linear) substitution x -> a x + b y, y -> c x + d y
template <class R>
MultiPoly<R> linear_substitution(const MultiPoly<R>& p, const typename R::Elem& a,
                                 const typename R::Elem& b, const typename R::Elem& c,
                                 const typename R::Elem& d) {
    auto X = MultiPoly<R>::variable(p.ring, p.vars, "x");
    auto Y = MultiPoly<R>::variable(p.ring, p.vars, "y");
    auto nx = mul_scalar(X, a) + mul_scalar(Y, b);
    auto ny = mul_scalar(X, c) + mul_scalar(Y, d);
    return substitute_many(p, {{"x", nx}, {"y", ny}});
}

}  // namespace quintic

#endif
