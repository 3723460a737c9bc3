#pragma once

#include <string>

#include <json.hpp>

#include "latang/angleset.hpp"
#include "latang/intvec.hpp"
#include "latang/oracle.hpp"

// JSON views of the domain types. All numbers are exact: integers are
// emitted as JSON numbers only when they fit comfortably, as decimal
// strings otherwise; rationals are always "n" or "n/d" strings.

namespace latang {

using Json = nlohmann::json;

inline Json to_json(const Int& x) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (x >= lo && x <= hi) return Json(x.convert_to<std::int64_t>());
    return Json(x.str());
}

inline std::string rational_str(const Rational& x) {
    if (den(x) == 1) return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

inline Json to_json(const IntVec& v) {
    Json arr = Json::array();
    for (const Int& x : v) arr.push_back(to_json(x));
    return arr;
}

inline Json to_json(const AngleClass& a) {
    switch (a.kind()) {
        case AngleKind::zero: return {{"kind", "zero"}};
        case AngleKind::right: return {{"kind", "right"}};
        case AngleKind::straight: return {{"kind", "straight"}};
        default:
            return {{"kind", "oblique"}, {"tan2", rational_str(a.tan2())}, {"obtuse", a.obtuse()}};
    }
}

inline const char* method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::hilbert_criterion: return "hilbert_criterion";
        case Method::construction: return "construction";
        default: return "oracle";
    }
}

inline Json to_json(const Verdict& v) {
    Json j{{"member", v.member}, {"method", method_name(v.method)}};
    if (v.witness) j["certificate"] = Json{{"witness", to_json(*v.witness)}};
    if (v.exclusion) {
        j["certificate"] = Json{{"prime", to_json(v.exclusion->prime)},
                                {"symbols", {v.exclusion->symbols[0], v.exclusion->symbols[1],
                                             v.exclusion->symbols[2]}}};
    }
    return j;
}

inline Json to_json(const AngleInventory& inv) {
    Json classes = Json::array();
    for (const auto& [angle, vectors] : inv.classes) {
        Json vecs = Json::array();
        for (const IntVec& v : vectors) vecs.push_back(to_json(v));
        classes.push_back({{"angle", to_json(angle)}, {"count", vectors.size()}, {"vectors", vecs}});
    }
    return {{"base", to_json(inv.base)}, {"box", to_json(inv.box_bound)}, {"classes", classes}};
}

inline Json to_json(const ReportIssue& issue) {
    return {{"base", to_json(issue.base)},
            {"tan2", rational_str(issue.tan2)},
            {"obtuse", issue.obtuse},
            {"what", issue.what}};
}

inline Json to_json(const ConsistencyReport& rep) {
    Json violations = Json::array();
    for (const auto& v : rep.violations) violations.push_back(to_json(v));
    Json exhausted = Json::array();
    for (const auto& v : rep.budget_exhausted) exhausted.push_back(to_json(v));
    return {{"dim", rep.dim},
            {"vec_bound", to_json(rep.vec_bound)},
            {"tan2_height", to_json(rep.tan2_height)},
            {"box_bound", to_json(rep.box_bound)},
            {"instances", rep.instances},
            {"oracle_hits", rep.oracle_hits},
            {"member_instances", rep.member_instances},
            {"witnesses_constructed", rep.witnesses_constructed},
            {"violations", violations},
            {"budget_exhausted", exhausted},
            {"ok", rep.ok()}};
}

}  // namespace latang
