#pragma once

#include <stdexcept>

#include "latang/angleset.hpp"
#include "latang/witness.hpp"

namespace latang {

// Decides whether the angle lies in Theta_n(a), the set of angles a forms
// with other integer vectors. Thin adapter over the per-dimension facts:
//
//   degenerate angles   always members, with canonical witnesses
//                       a, -a, perpendicular(a)
//   dimension != 3      membership in Theta_n is the whole story; members
//                       get a constructed witness (dimensions 2 and 4
//                       always, higher dimensions within the default
//                       search budget)
//   dimension 3         decided by the Hilbert criterion, which depends
//                       only on |a|^2
inline Verdict theta_n_of_a_contains(const IntVec& a, const AngleClass& angle) {
    if (is_zero(a)) throw std::invalid_argument("theta_n_of_a_contains: zero vector");
    int n = a.dim();
    if (n < 2) throw std::invalid_argument("theta_n_of_a_contains: dimension must be >= 2");

    Verdict v;
    switch (angle.kind()) {
        case AngleKind::zero:
            v = {true, Method::construction, a, std::nullopt};
            return v;
        case AngleKind::straight:
            v = {true, Method::construction, -a, std::nullopt};
            return v;
        case AngleKind::right:
            v = {true, Method::construction, perpendicular(a), std::nullopt};
            return v;
        default:
            break;
    }

    if (!theta_n_contains(n, angle)) {
        v.member = false;
        v.method = Method::closed_form;
        return v;
    }
    if (n == 3) {
        v = symbol_criterion(norm2(a), angle.tan2());
        if (v.member) {
            auto w = witness_for_angle(a, angle, SearchBudget::default_for_dim(n));
            if (w) v.witness = std::move(*w);  // best effort: members can outgrow the budget
        }
        return v;
    }

    v.member = true;
    v.method = Method::construction;
    auto w = witness_for_angle(a, angle, SearchBudget::default_for_dim(n));
    if (w) v.witness = std::move(*w);
    return v;
}

}  // namespace latang
