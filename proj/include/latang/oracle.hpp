#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latang/angleset.hpp"
#include "latang/membership.hpp"
#include "latang/shells.hpp"
#include "latang/witness.hpp"

// Brute-force ground truth. Everything here decides by enumerating integer
// vectors in a box and comparing exact angle classes; no Hilbert symbols
// are consulted. The oracle can only certify presence — absence within a
// box proves nothing on its own, which is why the consistency report pairs
// it with the decision procedures in one direction only.

namespace latang {

// First vector in canonical shell order forming the angle with a, or
// NotFound. Hits are primitive automatically (a non-primitive hit would
// have been preceded by its reduction in an earlier shell).
inline std::optional<IntVec> brute_force_witness(const IntVec& a, const AngleClass& angle,
                                                 const Int& box_bound) {
    if (is_zero(a)) throw std::invalid_argument("brute_force_witness: zero vector");
    std::int64_t bound = detail::checked_bound(box_bound);

    std::optional<IntVec> hit;
    auto scan = [&](auto matcher) {
        detail::visit_shells(a.dim(), bound, [&](const std::vector<std::int64_t>& v) {
            if (!matcher(v)) return false;
            hit = detail::from_i64(v);
            return true;
        });
    };
    if (detail::fits_int128(a, angle, bound))
        scan(detail::AngleMatcher<__int128>(a, angle));
    else
        scan(detail::AngleMatcher<Int>(a, angle));

    if (hit && angle_between(a, *hit) != angle)
        throw std::logic_error("brute_force_witness: hit failed verification");
    return hit;
}

// Every angle class realized against `base` within the box, with the full
// list of primitive witnesses for each, in canonical order.
struct AngleInventory {
    IntVec base;
    Int box_bound;
    std::map<AngleClass, std::vector<IntVec>> classes;
};

inline AngleInventory angle_inventory(const IntVec& a, const Int& box_bound) {
    if (is_zero(a)) throw std::invalid_argument("angle_inventory: zero vector");
    std::int64_t bound = detail::checked_bound(box_bound);

    AngleInventory inv{a, box_bound, {}};
    detail::visit_shells(a.dim(), bound, [&](const std::vector<std::int64_t>& c) {
        IntVec v = detail::from_i64(c);
        if (!is_primitive(v)) return false;
        inv.classes[angle_between(a, v)].push_back(std::move(v));
        return false;
    });
    return inv;
}

struct ReportIssue {
    IntVec base;
    Rational tan2;
    bool obtuse = false;
    std::string what;
};

struct ConsistencyReport {
    int dim = 3;
    Int vec_bound;
    Int tan2_height;
    Int box_bound;
    long long instances = 0;
    long long oracle_hits = 0;
    long long member_instances = 0;
    long long witnesses_constructed = 0;
    std::vector<ReportIssue> violations;       // oracle found a witness the decision excluded
    std::vector<ReportIssue> budget_exhausted; // member without a constructed witness in budget
    bool ok() const { return violations.empty(); }
};

namespace detail {

// Flat full-box scan marking every integer value q <= height realized as
// tan^2(a, v) by some v in the box. Unordered and sign-free: the box is
// symmetric, so a realized class is realized with both obtuse flags.
inline void scan_integer_tangents(const std::vector<std::int64_t>& a, std::int64_t bound,
                                  std::int64_t height, std::vector<char>& found) {
    int dim = static_cast<int>(a.size());
    std::int64_t A2 = 0;
    for (std::int64_t x : a) A2 += x * x;

    auto rec = [&](auto&& self, int pos, std::int64_t pd, std::int64_t pn) -> void {
        if (pos == dim - 1) {
            std::int64_t al = a[static_cast<std::size_t>(pos)];
            std::int64_t d = pd - al * bound;
            for (std::int64_t v = -bound; v <= bound; ++v, d += al) {
                if (d == 0) continue;
                std::int64_t n2 = pn + v * v;
                std::int64_t d2 = d * d;
                std::int64_t cross = A2 * n2 - d2;
                if (cross == 0 || cross > height * d2) continue;
                if (cross % d2 == 0) found[static_cast<std::size_t>(cross / d2)] = 1;
            }
            return;
        }
        for (std::int64_t v = -bound; v <= bound; ++v)
            self(self, pos + 1, pd + a[static_cast<std::size_t>(pos)] * v, pn + v * v);
    };
    rec(rec, 0, 0, 0);
}

inline std::vector<char> squarefree_sieve(std::int64_t height) {
    std::vector<char> sf(static_cast<std::size_t>(height) + 1, 1);
    sf[0] = 0;
    for (std::int64_t p = 2; p * p <= height; ++p)
        for (std::int64_t m = p * p; m <= height; m += p * p) sf[static_cast<std::size_t>(m)] = 0;
    return sf;
}

}  // namespace detail

// Cross-checks the decision procedures against the enumeration oracle for
// every nonzero base vector with max-norm <= vec_bound and every square-free
// tangent class <= tan2_height:
//
//   (i)/(ii)  a brute-force witness exists  <=>  never when the decision
//             procedure says non-member (violations)
//   (iii)     decision says member  =>  witness_for_angle succeeds within
//             box_bound (budget exhaustion is recorded, not a violation)
//
// The oracle direction scans the same box_bound used as the construction
// budget.
inline ConsistencyReport consistency_report(int dim, const Int& vec_bound, const Int& tan2_height,
                                            const Int& box_bound) {
    if (dim < 2 || dim > 6) throw std::invalid_argument("consistency_report: dimension must be in 2..6");
    std::int64_t V = detail::checked_bound(vec_bound);
    std::int64_t H = detail::checked_bound(tan2_height);
    std::int64_t B = detail::checked_bound(box_bound);

    // int64 is enough for the scan when A2 * dim * B^2 stays small; the
    // desk-scale bounds this report is for are far below the limit.
    Int worst = Int(dim) * V * V * dim * B * B * (H + 1);
    if (worst >= (Int(1) << 62))
        throw std::invalid_argument("consistency_report: bounds too large for the oracle scan");

    ConsistencyReport rep;
    rep.dim = dim;
    rep.vec_bound = vec_bound;
    rep.tan2_height = tan2_height;
    rep.box_bound = box_bound;

    std::vector<char> squarefree = detail::squarefree_sieve(H);
    struct ClassInfo {
        std::int64_t t;
        bool in_theta;
    };
    std::vector<ClassInfo> classes;
    for (std::int64_t t = 1; t <= H; ++t) {
        if (!squarefree[static_cast<std::size_t>(t)]) continue;
        classes.push_back({t, theta_n_contains(dim, AngleClass::oblique(Rational(t)))});
    }

    // Decision verdicts depend only on |a|^2 in dimension 3; cache by norm.
    std::map<Int, std::vector<bool>> decision_cache;
    auto decisions_for = [&](const Int& A2) -> const std::vector<bool>& {
        auto it = decision_cache.find(A2);
        if (it != decision_cache.end()) return it->second;
        std::vector<bool> dec;
        dec.reserve(classes.size());
        for (const auto& cls : classes) {
            bool member = cls.in_theta;
            if (member && dim == 3) member = symbol_criterion(A2, Rational(cls.t)).member;
            dec.push_back(member);
        }
        return decision_cache.emplace(A2, std::move(dec)).first->second;
    };

    std::vector<std::int64_t> a(static_cast<std::size_t>(dim), -V);
    std::vector<char> found(static_cast<std::size_t>(H) + 1, 0);
    SearchBudget budget{box_bound};

    for (;;) {
        bool zero = true;
        for (std::int64_t x : a) zero = zero && x == 0;
        if (!zero) {
            std::fill(found.begin(), found.end(), 0);
            detail::scan_integer_tangents(a, B, H, found);

            IntVec base = detail::from_i64(a);
            const std::vector<bool>& dec = decisions_for(norm2(base));
            for (std::size_t ci = 0; ci < classes.size(); ++ci) {
                bool hit = found[static_cast<std::size_t>(classes[ci].t)] != 0;
                for (bool obtuse : {false, true}) {
                    ++rep.instances;
                    if (hit) ++rep.oracle_hits;
                    Rational t(classes[ci].t);
                    if (hit && !dec[ci]) {
                        rep.violations.push_back({base, t, obtuse, "oracle found a witness for an excluded class"});
                        continue;
                    }
                    if (!dec[ci]) continue;
                    ++rep.member_instances;
                    auto w = witness_for_angle(base, AngleClass::oblique(t, obtuse), budget);
                    if (!w)
                        rep.budget_exhausted.push_back({base, t, obtuse, "no constructed witness within budget"});
                    else
                        ++rep.witnesses_constructed;
                }
            }
        }
        int pos = dim - 1;
        while (pos >= 0 && a[static_cast<std::size_t>(pos)] == V) a[static_cast<std::size_t>(pos--)] = -V;
        if (pos < 0) break;
        ++a[static_cast<std::size_t>(pos)];
    }
    return rep;
}

}  // namespace latang
