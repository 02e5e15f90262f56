// The generic degree-5 templates.  P1_S5 lives in (z; A, Delta, M) with
// leading coefficient 288 M^2 and every z-coefficient weight-24 homogeneous
// under (A:4, Delta:8, M:12); P2_S5 lives in (u; delta, q) and reduces to
// u^2 (u+50)^3 at q = 0.  The A5 variants substitute Delta -> D^2 and
// delta -> d^2.  As printed, three z-coefficients of the first polynomial
// carry a Delta^4 monomial of weight 32; the stored table uses the weight-24
// reading Delta*A^4, and verify_templates pins that choice against an
// independent resultant oracle on random quintics.

#ifndef QUINTIC_TEMPLATES_HPP
#define QUINTIC_TEMPLATES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quintic/covariants.hpp"
#include "quintic/errors.hpp"
#include "quintic/multipoly.hpp"

namespace quintic {

enum class TemplateId { P1_S5, P2_S5, P1_A5, P2_A5 };

TemplateId template_id_from_string(const std::string& s);
std::string template_id_to_string(TemplateId id);

// the stored template over ZZ; variables are
//   P1_S5: {z, A, Delta, M}   P1_A5: {z, A, D, M}
//   P2_S5: {u, delta, q}      P2_A5: {u, d, q}
const MultiPoly<ZZ>& generic_template(TemplateId id);

// main (polynomial) variable of a template: z for P1, u for P2
std::string template_main_var(TemplateId id);

// Exact specialization of every non-main symbol.  The result is univariate in
// the main variable over F.  Throws not_defined for a missing binding,
// unknown_symbol for a stray one, degenerate_specialization when the leading
// coefficient vanishes.
template <class F>
MultiPoly<F> specialize(const F& K, TemplateId id,
                        const std::vector<std::pair<std::string, typename F::Elem>>& bindings,
                        bool monic = false) {
    const auto& tpl = generic_template(id);
    const std::string main = template_main_var(id);
    std::vector<std::vector<typename F::Elem>> pows;  // per template variable
    std::vector<int> bound(tpl.vars.size(), -1);
    for (const auto& [name, value] : bindings) {
        int idx = -1;
        for (size_t i = 0; i < tpl.vars.size(); ++i)
            if (tpl.vars[i] == name) {
                idx = static_cast<int>(i);
                break;
            }
        if (idx < 0 || tpl.vars[idx] == main) throw unknown_symbol(name);
        bound[idx] = static_cast<int>(pows.size());
        pows.push_back({K.one(), value});
    }
    int main_idx = -1;
    for (size_t i = 0; i < tpl.vars.size(); ++i) {
        if (tpl.vars[i] == main)
            main_idx = static_cast<int>(i);
        else if (bound[i] < 0)
            throw not_defined("template symbol not bound: " + tpl.vars[i]);
    }
    std::vector<std::string> out_vars{main};
    MultiPoly<F> out(K, out_vars);
    for (const auto& [m, c] : tpl.terms) {
        auto val = K.from_mpz(c);
        for (size_t i = 0; i < tpl.vars.size(); ++i) {
            if (static_cast<int>(i) == main_idx || m[i] == 0) continue;
            auto& pw = pows[bound[i]];
            while (pw.size() <= m[i]) pw.push_back(K.mul(pw.back(), pw[1]));
            val = K.mul(val, pw[m[i]]);
        }
        out.add_term(Mono{m[main_idx]}, val);
    }
    int want = degree_in(tpl, main);
    if (degree_in(out, main) != want)
        throw degenerate_specialization("leading coefficient vanished under specialization");
    if (monic) {
        auto lc = leading_coeff_in(out, main).constant_value();
        out = mul_scalar(out, K.inv(lc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// pointwise re-derivation of the template identities on random quintics

struct VerifySample {
    std::string quintic;
    bool skipped = false;
    std::string skip_reason;
    bool resultant_matches_p1 = false;   // minimal polynomial of z = k/i^2
    bool substitution_matches_p2 = false;  // z = (u-1)/3, scaled into (delta, q)
    bool disc_is_square_times_delta = false;
    bool passed() const {
        return !skipped && resultant_matches_p1 && substitution_matches_p2 &&
               disc_is_square_times_delta;
    }
};

struct VerifyReport {
    uint64_t seed = 0;
    std::vector<VerifySample> samples;
    int passed = 0, failed = 0, skipped = 0;
    bool all_passed() const { return failed == 0; }
};

// checks one quintic over QQ; returns a skipped sample when preconditions
// (disc != 0, A != 0, M != 0, gcd(g, i) = 1) fail
VerifySample verify_template_sample(const MultiPoly<QQ>& g);

// sample_count random integer quintics (the known A5 example is always
// sample 0), deterministic in seed
VerifyReport verify_templates(int sample_count, uint64_t seed);

}  // namespace quintic

#endif
