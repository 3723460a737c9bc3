#pragma once

#include <set>
#include <stdexcept>
#include <utility>

#include "latang/exactnum.hpp"

// Hilbert symbols (a,b)_v over the rationals, at every place v: odd primes,
// 2, and infinity. The symbol is +1 exactly when a x^2 + b y^2 = 1 has a
// solution over the completion at v, and is computed here in closed form
// from p-adic valuations and Legendre symbols.

namespace latang {

// A place of Q: either a finite prime (2 allowed) or the real place.
class Place {
public:
    static Place infinity() { return Place(Int(0), true); }

    static Place at_prime(const Int& p) {
        if (!is_prime(p)) throw std::invalid_argument("Place: not a prime");
        return Place(p, false);
    }

    bool is_infinite() const { return infinite_; }

    const Int& prime() const {
        if (infinite_) throw std::logic_error("Place: the real place has no prime");
        return p_;
    }

    friend bool operator==(const Place& a, const Place& b) {
        return a.infinite_ == b.infinite_ && a.p_ == b.p_;
    }

private:
    Place(Int p, bool infinite) : p_(std::move(p)), infinite_(infinite) {}

    Int p_;
    bool infinite_;
};

namespace detail {

// Writes x = p^alpha * x1/x2 with p dividing neither x1 nor x2, returning
// alpha and the product x1*x2 (the unit part only matters modulo squares,
// and x1/x2 == x1*x2 up to a square).
struct PadicSplit {
    long valuation = 0;
    Int unit;  // x1 * x2
};

inline PadicSplit padic_split(const Rational& x, const Int& p) {
    PadicSplit out;
    Int n = num(x);
    Int d = den(x);
    while (n % p == 0) {
        n /= p;
        ++out.valuation;
    }
    while (d % p == 0) {
        d /= p;
        --out.valuation;
    }
    out.unit = n * d;
    return out;
}

inline int residue_mod8(const Int& u) {
    Int r = u % 8;
    if (r < 0) r += 8;
    return r.convert_to<int>();
}

// (u-1)/2 mod 2 for odd u: 1 iff u = 3 mod 4.
inline int eps2(int u_mod8) { return (u_mod8 % 4 == 3) ? 1 : 0; }

// (u^2-1)/8 mod 2 for odd u: 1 iff u = 3,5 mod 8.
inline int omega2(int u_mod8) { return (u_mod8 == 3 || u_mod8 == 5) ? 1 : 0; }

}  // namespace detail

// Hilbert symbol (a,b)_v of two nonzero rationals; always +1 or -1.
//
// At infinity: -1 iff both arguments are negative. At an odd prime p, with
// a = p^alpha a1/a2 and b = p^beta b1/b2 (p dividing none of a1,a2,b1,b2):
//
//   (a,b)_p = (-1)^(alpha beta (p-1)/2) (a1 a2 | p)^beta (b1 b2 | p)^alpha
//
// and at p = 2:
//
//   (a,b)_2 = (-1)^( eps(a1 a2) eps(b1 b2) + alpha omega(b1 b2) + beta omega(a1 a2) )
//
// with eps(u) = (u-1)/2 and omega(u) = (u^2-1)/8 taken mod 2. All exponents
// are reduced mod 2 before use, so only residues mod p (resp. mod 8) enter.
inline int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("hilbert_symbol: arguments must be nonzero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;

    const Int& p = v.prime();
    auto sa = detail::padic_split(a, p);
    auto sb = detail::padic_split(b, p);
    long alpha = sa.valuation & 1;
    long beta = sb.valuation & 1;

    if (p == 2) {
        int ua = detail::residue_mod8(sa.unit);
        int ub = detail::residue_mod8(sb.unit);
        int e = detail::eps2(ua) * detail::eps2(ub) + static_cast<int>(alpha) * detail::omega2(ub) +
                static_cast<int>(beta) * detail::omega2(ua);
        return (e % 2 != 0) ? -1 : 1;
    }

    int result = 1;
    if (alpha && beta && ((p - 1) / 2) % 2 != 0) result = -result;
    if (beta) result *= legendre(sa.unit, p);
    if (alpha) result *= legendre(sb.unit, p);
    return result;
}

// All finite places where (a,b)_p can differ from +1: the primes dividing
// a numerator or denominator, plus 2.
inline std::set<Int> hilbert_support(const Rational& a, const Rational& b) {
    std::set<Int> primes{Int(2)};
    for (const Rational* x : {&a, &b}) {
        for (const Int& part : {Int(abs(num(*x))), den(*x)}) {
            for (const auto& pp : factorize(part).factors) primes.insert(pp.prime);
        }
    }
    return primes;
}

// Checks the product formula: the product of (a,b)_v over v = infinity, 2,
// and every odd prime dividing numerator or denominator of a or b equals 1.
// All other places contribute +1, since both arguments are units there.
inline bool hilbert_product_check(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("hilbert_product_check: arguments must be nonzero");
    int product = hilbert_symbol(a, b, Place::infinity());
    for (const Int& p : hilbert_support(a, b))
        product *= hilbert_symbol(a, b, Place::at_prime(p));
    return product == 1;
}

}  // namespace latang
