#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact integer and rational arithmetic, prime factorization, square-free
// parts, the Legendre symbol, and sums of three squares. Everything here is
// a pure function on immutable values.

namespace latang {

using Int = boost::multiprecision::cpp_int;

// Always stored normalized: gcd(|num|, den) = 1, den >= 1, zero is 0/1,
// sign lives in the numerator.
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& x) { return numerator(x); }
inline Int den(const Rational& x) { return denominator(x); }

// Deterministic primality testing is done by trial division, which keeps
// the answer unconditional. Inputs past this bound are rejected rather
// than answered probabilistically.
inline const Int primality_input_bound = Int(1000000000000LL);  // 10^12

inline Int int_sqrt(const Int& n) {
    if (n < 0) throw std::invalid_argument("int_sqrt: negative input");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    return r * r == n;
}

inline bool is_rational_square(const Rational& x) {
    if (x < 0) return false;
    return is_square(num(x)) && is_square(den(x));
}

inline bool is_prime(const Int& n) {
    if (n > primality_input_bound)
        throw std::invalid_argument("is_prime: input exceeds the deterministic trial-division bound");
    if (n < 2) return false;
    std::uint64_t m = n.convert_to<std::uint64_t>();
    if (m % 2 == 0) return m == 2;
    if (m % 3 == 0) return m == 3;
    for (std::uint64_t d = 5; d * d <= m; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

struct PrimePower {
    Int prime;
    int exponent = 0;

    friend bool operator==(const PrimePower& a, const PrimePower& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

// Prime factorization as an ordered list of (prime, exponent) pairs with
// strictly increasing primes and exponents >= 1. factorize(1) is the empty
// product.
struct Factorization {
    std::vector<PrimePower> factors;

    Int value() const {
        Int v = 1;
        for (const auto& pp : factors)
            for (int i = 0; i < pp.exponent; ++i) v *= pp.prime;
        return v;
    }
};

namespace detail {

template <class T>
void trial_divide(T n, Factorization& out) {
    auto strip = [&](T d) {
        if (n % d != 0) return;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.factors.push_back({Int(d), e});
    };
    strip(T(2));
    strip(T(3));
    for (T d = 5; d * d <= n; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.factors.push_back({Int(n), 1});
}

}  // namespace detail

// Trial division up to sqrt(n). Practical input bound is around 10^12;
// larger inputs are still factored correctly, just slowly.
inline Factorization factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization out;
    if (n == 1) return out;
    if (n <= Int(1000000000000000000LL))  // keep d*d in uint64 range
        detail::trial_divide<std::uint64_t>(n.convert_to<std::uint64_t>(), out);
    else
        detail::trial_divide<Int>(n, out);
    return out;
}

// The minimal positive integer N such that x/N is the square of a rational.
// Equals the square-free part of numerator*denominator.
inline Int squarefree_part(const Rational& x) {
    if (x <= 0) throw std::invalid_argument("squarefree_part: input must be positive");
    Int out = 1;
    for (const Int& part : {num(x), den(x)}) {
        for (const auto& pp : factorize(part).factors)
            if (pp.exponent % 2 != 0) out *= pp.prime;
    }
    return out;
}

// Legendre symbol (u/p) for odd prime p, by Euler's criterion:
// +1 for a nonzero quadratic residue, -1 for a non-residue, 0 when p | u.
inline int legendre(const Int& u, const Int& p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    Int r = u % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Int e = boost::multiprecision::powm(r, (p - 1) / 2, p);
    return e == 1 ? 1 : -1;
}

// True iff n is a sum of three integer squares, i.e. not of the form
// 4^k (8m+7). Zero counts (0 = 0^2+0^2+0^2).
inline bool is_three_square(const Int& n) {
    if (n < 0) throw std::invalid_argument("is_three_square: negative input");
    Int m = n;
    while (m != 0 && m % 4 == 0) m /= 4;
    return m % 8 != 7;
}

// Decomposition n = r^2 + s^2 + t^2 with r >= s >= t >= 0, or absent when
// none exists. Ties are broken by taking the first sorted triple in
// lexicographic descending order, so the result is deterministic.
inline std::optional<std::array<Int, 3>> three_square_decomp(const Int& n) {
    if (n < 0) throw std::invalid_argument("three_square_decomp: negative input");
    if (!is_three_square(n)) return std::nullopt;
    for (Int r = int_sqrt(n); 3 * r * r >= n; --r) {
        Int m = n - r * r;
        Int s = int_sqrt(m);
        if (s > r) s = r;
        for (; s >= 0 && 2 * s * s >= m; --s) {
            Int t2 = m - s * s;
            Int t = int_sqrt(t2);
            if (t * t == t2 && t <= s) return std::array<Int, 3>{r, s, t};
        }
    }
    throw std::logic_error("three_square_decomp: no decomposition found for a three-square input");
}

// True iff x is a sum of three rational squares: the square-free part of x
// must not be congruent to 7 mod 8.
inline bool is_rational_three_square(const Rational& x) {
    if (x <= 0) throw std::invalid_argument("is_rational_three_square: input must be positive");
    return squarefree_part(x) % 8 != 7;
}

}  // namespace latang
