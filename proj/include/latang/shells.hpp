#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "latang/exactnum.hpp"

// Deterministic enumeration of integer tuples by max-norm shells.
//
// Shells are visited for r = 1, 2, ... and within a shell tuples are
// ordered lexicographically with the per-component value order
//   0 < 1 < 2 < ... < r < -1 < -2 < ... < -r,
// so small nonnegative witnesses are reached first. First-hit searches on
// any scale-invariant predicate return a primitive vector automatically: a
// non-primitive hit k*w lies in a strictly later shell than w.

namespace latang {
namespace detail {

inline std::int64_t checked_bound(const Int& bound) {
    if (bound < 1) throw std::invalid_argument("search bound must be >= 1");
    if (bound > Int(1000000000))
        throw std::invalid_argument("search bound too large for tuple enumeration");
    return bound.convert_to<std::int64_t>();
}

// Visits every tuple of the shell max|c_i| == r in canonical order.
// The visitor receives the component vector and returns true to stop.
template <class Visit>
bool visit_shell(int dim, std::int64_t r, std::vector<std::int64_t>& c, Visit&& visit) {
    auto rec = [&](auto&& self, int pos, bool has_r) -> bool {
        if (pos == dim) return visit(c);
        if (pos == dim - 1 && !has_r) {
            c[pos] = r;
            if (self(self, pos + 1, true)) return true;
            c[pos] = -r;
            return self(self, pos + 1, true);
        }
        for (std::int64_t v = 0;;) {
            c[pos] = v;
            if (self(self, pos + 1, has_r || v == r || v == -r)) return true;
            if (v >= 0)
                v = (v < r) ? v + 1 : -1;
            else if (v > -r)
                --v;
            else
                break;
        }
        return false;
    };
    return rec(rec, 0, false);
}

// Shells r = 1..bound in order; stops early when the visitor does.
template <class Visit>
bool visit_shells(int dim, std::int64_t bound, Visit&& visit) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim));
    for (std::int64_t r = 1; r <= bound; ++r)
        if (visit_shell(dim, r, c, visit)) return true;
    return false;
}

// Same shell discipline over tuples with x_0 >= lo0 and x_i >= 0: used for
// coefficient searches where signs are either fixed or irrelevant.
template <class Visit>
bool visit_shells_nonneg(int dim, std::int64_t bound, std::int64_t lo0, Visit&& visit) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim));
    for (std::int64_t r = lo0 > 1 ? lo0 : 1; r <= bound; ++r) {
        auto rec = [&](auto&& self, int pos, bool has_r) -> bool {
            if (pos == dim) return visit(c);
            std::int64_t lo = pos == 0 ? lo0 : 0;
            std::int64_t from = (pos == dim - 1 && !has_r) ? r : lo;
            for (std::int64_t v = from; v <= r; ++v) {
                c[pos] = v;
                if (self(self, pos + 1, has_r || v == r)) return true;
                if (pos == dim - 1 && !has_r) break;
            }
            return false;
        };
        if (rec(rec, 0, false)) return true;
    }
    return false;
}

}  // namespace detail
}  // namespace latang
