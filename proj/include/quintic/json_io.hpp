// JSON views of the exact results.  Every value is a string in the polynomial
// grammar (or a plain exact literal), never floating point.

#ifndef QUINTIC_JSON_IO_HPP
#define QUINTIC_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "quintic/covariants.hpp"
#include "quintic/formparse.hpp"
#include "quintic/galois.hpp"
#include "quintic/reduction.hpp"
#include "quintic/templates.hpp"

namespace quintic {

template <class F>
std::string elem_to_string(const F& K, const typename F::Elem& e) {
    if (K.is_negative(e)) return "-" + K.to_factor_string(K.abs_val(e));
    return K.to_factor_string(e);
}

template <class F>
nlohmann::json invariants_to_json(const F& K, const QuinticInvariantsT<F>& inv,
                                  const std::optional<AbsoluteInvariantsT<F>>& abs) {
    nlohmann::json j;
    j["A"] = elem_to_string(K, inv.A);
    j["B"] = elem_to_string(K, inv.B);
    j["C"] = elem_to_string(K, inv.C);
    j["Delta"] = elem_to_string(K, inv.Delta);
    j["M"] = elem_to_string(K, inv.M);
    j["discOK"] = inv.discOK;
    if (abs) {
        j["delta"] = elem_to_string(K, abs->delta);
        j["q"] = elem_to_string(K, abs->q);
    } else {
        j["delta"] = nullptr;
        j["q"] = nullptr;
    }
    return j;
}

inline nlohmann::json evidence_to_json(const GroupLabelResult& r) {
    nlohmann::json j;
    j["value"] = group_value_to_string(r.value);
    j["irreducible_deg5"] = tri_to_string(r.evidence.irreducible_deg5);
    j["disc_square"] = r.evidence.disc_square;
    j["resolvent10_irreducible"] = tri_to_string(r.evidence.resolvent10_irreducible);
    return j;
}

template <class F>
nlohmann::json certificate_to_json(const F& K, const ReductionCertificateT<F>& cert,
                                   const std::optional<GroupLabelResult>& label = std::nullopt) {
    nlohmann::json j;
    j["input"] = format_poly(cert.input);
    j["preliminary"] = cert.preliminary_applied ? nlohmann::json(cert.preliminary)
                                                : nlohmann::json(nullptr);
    j["transformed"] = format_poly(cert.transformed);
    j["invariants"] = invariants_to_json(K, cert.inv, std::optional<AbsoluteInvariantsT<F>>(cert.abs));
    j["a5_mode"] = cert.a5_mode;
    j["d"] = cert.d ? nlohmann::json(elem_to_string(K, *cert.d)) : nlohmann::json(nullptr);
    j["specialized"] = format_poly(cert.specialized);
    j["u_minpoly"] = format_poly(cert.u_minpoly);
    j["minpoly_match"] = cert.minpoly_match;
    j["disc_square"] = cert.disc_square;
    if (label) j["galois"] = evidence_to_json(*label);
    return j;
}

inline nlohmann::json verify_report_to_json(const VerifyReport& r) {
    nlohmann::json j;
    j["seed"] = r.seed;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    j["skipped"] = r.skipped;
    j["all_passed"] = r.all_passed();
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples) {
        nlohmann::json e;
        e["quintic"] = s.quintic;
        if (s.skipped) {
            e["status"] = "skipped";
            e["reason"] = s.skip_reason;
        } else {
            e["status"] = s.passed() ? "pass" : "fail";
            e["resultant_matches_p1"] = s.resultant_matches_p1;
            e["substitution_matches_p2"] = s.substitution_matches_p2;
            e["disc_is_square_times_delta"] = s.disc_is_square_times_delta;
        }
        samples.push_back(std::move(e));
    }
    j["samples"] = std::move(samples);
    return j;
}

}  // namespace quintic

#endif
