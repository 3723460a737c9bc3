#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "latang/exactnum.hpp"

// Independent brute-force oracles used only by the test suites. Each one
// recomputes a fact from first principles, without touching the library's
// own code paths.

namespace testoracle {

using latang::Int;
using latang::Rational;

// Exhaustive three-square test by direct enumeration.
inline bool three_square_exhaustive(std::int64_t n) {
    for (std::int64_t r = 0; r * r <= n; ++r)
        for (std::int64_t s = 0; r * r + s * s <= n; ++s) {
            std::int64_t rest = n - r * r - s * s;
            std::int64_t t = 0;
            while (t * t < rest) ++t;
            if (t * t == rest) return true;
        }
    return false;
}

// Legendre symbol by listing the squares mod p.
inline int legendre_by_squares(std::int64_t u, std::int64_t p) {
    u %= p;
    if (u < 0) u += p;
    if (u == 0) return 0;
    for (std::int64_t z = 1; z < p; ++z)
        if ((z * z) % p == u) return 1;
    return -1;
}

// Whether a x^2 + b y^2 = z^2 has a nontrivial p-adic solution, decided by
// searching for a primitive solution modulo p^3 (modulo 32 for p = 2).
// Sound for coefficients whose p-adic valuation is at most 1: a primitive
// solution at that precision lifts by Hensel's lemma, and conversely any
// p-adic solution reduces to one. Solutions with x and y both divisible by
// p would force z^2 = 0 mod p^2 against a unit square, so only pairs with
// x or y a unit need scanning.
inline bool conic_solvable_padic(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t m = p == 2 ? 32 : p * p * p;
    std::vector<char> is_sq(static_cast<std::size_t>(m), 0);
    for (std::int64_t z = 0; z < m; ++z) is_sq[static_cast<std::size_t>((z * z) % m)] = 1;
    auto mod = [m](std::int64_t x) {
        std::int64_t r = x % m;
        return r < 0 ? r + m : r;
    };
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y) {
            if (x % p == 0 && y % p == 0) continue;
            if (is_sq[static_cast<std::size_t>(mod(a * x * x + b * y * y))]) return true;
        }
    return false;
}

// All sorted triples r >= s >= t >= 0 with r^2+s^2+t^2 = n, descending.
inline std::vector<std::array<std::int64_t, 3>> all_three_square_decomps(std::int64_t n) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t r = 0; r * r <= n; ++r)
        for (std::int64_t s = 0; s <= r && r * r + s * s <= n; ++s) {
            std::int64_t rest = n - r * r - s * s;
            std::int64_t t = 0;
            while (t * t < rest) ++t;
            if (t * t == rest && t <= s) out.push_back({r, s, t});
        }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

}  // namespace testoracle
