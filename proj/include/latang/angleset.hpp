#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "latang/exactnum.hpp"
#include "latang/hilbert.hpp"
#include "latang/intvec.hpp"

// Angle classes between integer vectors, membership in the realizable sets
// per dimension, and the odd-prime Hilbert-symbol criterion that decides
// which angles a fixed three-dimensional integer vector can form.

namespace latang {

enum class AngleKind { zero, right, straight, oblique };

// An exact angle in [0, pi]: one of the three degenerate angles, or an
// oblique angle encoded by tan^2(theta) > 0 plus an obtuse flag.
// Oblique(t, false) is arctan(sqrt(t)) in (0, pi/2); Oblique(t, true) is
// its supplement.
class AngleClass {
public:
    static AngleClass zero() { return AngleClass(AngleKind::zero); }
    static AngleClass right() { return AngleClass(AngleKind::right); }
    static AngleClass straight() { return AngleClass(AngleKind::straight); }

    static AngleClass oblique(Rational tan2, bool obtuse = false) {
        if (tan2 <= 0) throw std::invalid_argument("AngleClass: tan^2 must be positive");
        AngleClass a(AngleKind::oblique);
        a.tan2_ = std::move(tan2);
        a.obtuse_ = obtuse;
        return a;
    }

    AngleKind kind() const { return kind_; }
    bool is_oblique() const { return kind_ == AngleKind::oblique; }

    const Rational& tan2() const {
        if (!is_oblique()) throw std::logic_error("AngleClass: tan^2 of a degenerate angle");
        return tan2_;
    }

    bool obtuse() const { return kind_ == AngleKind::oblique && obtuse_; }

    AngleClass supplement() const {
        if (!is_oblique()) {
            if (kind_ == AngleKind::zero) return straight();
            if (kind_ == AngleKind::straight) return zero();
            return right();
        }
        return oblique(tan2_, !obtuse_);
    }

    friend bool operator==(const AngleClass& a, const AngleClass& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.kind_ != AngleKind::oblique) return true;
        return a.obtuse_ == b.obtuse_ && a.tan2_ == b.tan2_;
    }
    friend bool operator!=(const AngleClass& a, const AngleClass& b) { return !(a == b); }

    // Orders by the angle value in [0, pi]: 0, then acute obliques by
    // ascending tan^2, then pi/2, then obtuse obliques by descending
    // tan^2, then pi. Used for inventory keys and stable output.
    friend bool operator<(const AngleClass& a, const AngleClass& b) {
        auto band = [](const AngleClass& x) {
            switch (x.kind_) {
                case AngleKind::zero: return 0;
                case AngleKind::oblique: return x.obtuse_ ? 3 : 1;
                case AngleKind::right: return 2;
                default: return 4;
            }
        };
        int ba = band(a), bb = band(b);
        if (ba != bb) return ba < bb;
        if (a.kind_ != AngleKind::oblique) return false;
        return a.obtuse_ ? b.tan2_ < a.tan2_ : a.tan2_ < b.tan2_;
    }

private:
    explicit AngleClass(AngleKind k) : kind_(k) {}

    AngleKind kind_;
    Rational tan2_ = 0;
    bool obtuse_ = false;
};

inline std::ostream& operator<<(std::ostream& os, const AngleClass& a) {
    switch (a.kind()) {
        case AngleKind::zero: return os << "0";
        case AngleKind::right: return os << "pi/2";
        case AngleKind::straight: return os << "pi";
        default: return os << (a.obtuse() ? "obtuse" : "acute") << "(tan2=" << a.tan2() << ")";
    }
}

// The exact angle between two nonzero integer vectors of equal dimension:
// the sign of a.b picks the quadrant and
//   tan^2 = (|a|^2 |b|^2 - (a.b)^2) / (a.b)^2
// is an exact rational.
inline AngleClass angle_between(const IntVec& a, const IntVec& b) {
    if (is_zero(a) || is_zero(b)) throw std::invalid_argument("angle_between: zero vector");
    require_same_dim(a, b);
    Int d = dot(a, b);
    if (d == 0) return AngleClass::right();
    Int cross2 = norm2(a) * norm2(b) - d * d;
    if (cross2 == 0) return d > 0 ? AngleClass::zero() : AngleClass::straight();
    return AngleClass::oblique(Rational(cross2) / Rational(d * d), d < 0);
}

// Membership of an angle in Theta_n, the set of angles realizable between
// integer vectors in dimension n:
//   n = 2     tan(theta) rational, i.e. tan^2 a rational square
//   n = 3, 4  tan^2 a sum of three rational squares
//   n >= 5    tan^2 rational (always true here)
// The degenerate angles lie in every Theta_n.
inline bool theta_n_contains(int n, const AngleClass& angle) {
    if (n < 2) throw std::invalid_argument("theta_n_contains: dimension must be >= 2");
    if (!angle.is_oblique()) return true;
    if (n == 2) return is_rational_square(angle.tan2());
    if (n <= 4) return is_rational_three_square(angle.tan2());
    return true;
}

enum class Method { closed_form, hilbert_criterion, construction, oracle };

// Certificate of exclusion: an odd prime p where the three-factor product
//   (|a|^2,|a|^2)_p (|a|^2,tan^2)_p (tan^2,tan^2)_p
// is -1; symbols[] holds the factors in that order.
struct ExclusionCert {
    Int prime;
    std::array<int, 3> symbols{};
};

struct Verdict {
    bool member = false;
    Method method = Method::hilbert_criterion;
    std::optional<IntVec> witness;
    std::optional<ExclusionCert> exclusion;
};

// Decides whether an oblique angle with the given tan^2 is realizable
// against some integer vector of squared norm normA2 in dimension three.
// The criterion: the three-factor Hilbert product above equals +1 at every
// odd prime. Only odd primes dividing the product of the two square-free
// parts can contribute -1, so the check is finite; primes are scanned in
// ascending order and the first failure is certified.
//
// Preconditions: normA2 must be a sum of three squares (otherwise no such
// vector exists) and tan^2 must lie in the Theta_3 range.
inline Verdict symbol_criterion(const Int& normA2, const Rational& tan2) {
    if (normA2 < 1 || !is_three_square(normA2))
        throw std::invalid_argument("symbol_criterion: normA2 is not a sum of three squares");
    if (tan2 <= 0 || !is_rational_three_square(tan2))
        throw std::invalid_argument("symbol_criterion: tan^2 is outside the Theta_3 range");

    Rational ra(normA2);
    Int support = squarefree_part(ra) * squarefree_part(tan2);
    Verdict v;
    v.method = Method::hilbert_criterion;
    for (const auto& pp : factorize(support).factors) {
        if (pp.prime == 2) continue;
        Place place = Place::at_prime(pp.prime);
        std::array<int, 3> s{hilbert_symbol(ra, ra, place), hilbert_symbol(ra, tan2, place),
                             hilbert_symbol(tan2, tan2, place)};
        if (s[0] * s[1] * s[2] == -1) {
            v.member = false;
            v.exclusion = ExclusionCert{pp.prime, s};
            return v;
        }
    }
    v.member = true;
    return v;
}

namespace detail {

// Square-free positive integer split as 2^b * p1...ps with ascending odd
// primes.
struct SquarefreeShape {
    bool has_two = false;
    std::vector<Int> odd_primes;
};

inline SquarefreeShape squarefree_shape(const Int& squarefree) {
    SquarefreeShape s;
    for (const auto& pp : factorize(squarefree).factors) {
        if (pp.prime == 2)
            s.has_two = true;
        else
            s.odd_primes.push_back(pp.prime);
    }
    return s;
}

// Removes p from the list if present; returns whether it was there.
inline bool extract_prime(std::vector<Int>& primes, const Int& p) {
    for (auto it = primes.begin(); it != primes.end(); ++it) {
        if (*it == p) {
            primes.erase(it);
            return true;
        }
    }
    return false;
}

inline bool all_residue_1_mod4(const std::vector<Int>& primes) {
    for (const Int& p : primes)
        if (p % 4 != 1) return false;
    return true;
}

inline bool all_residue_1_or_3_mod8(const std::vector<Int>& primes) {
    for (const Int& p : primes) {
        Int r = p % 8;
        if (r != 1 && r != 3) return false;
    }
    return true;
}

// legendre(p_i, q) == (-1)^((p_i - 1)/2) for every listed prime.
inline bool legendre_matches_sign(const std::vector<Int>& primes, const Int& q) {
    for (const Int& p : primes) {
        int want = (p % 4 == 1) ? 1 : -1;
        if (legendre(p, q) != want) return false;
    }
    return true;
}

inline bool even_count_3_mod4(const std::vector<Int>& primes) {
    int count = 0;
    for (const Int& p : primes)
        if (p % 4 == 3) ++count;
    return count % 2 == 0;
}

}  // namespace detail

// Closed-form membership for squared norms of the shapes M^2, 2M^2, and
// qM^2 (q an odd prime), in terms of the square-free part 2^b p1...ps of
// tan^2:
//   |a|^2 = M^2    every p_i = 1 (mod 4)
//   |a|^2 = 2M^2   every p_i = 1,3 (mod 8)
//   |a|^2 = qM^2   split on q mod 8:
//     q = 3: b = 1 and legendre(p_i, q) = 1 for all i
//     q = 1: legendre(p_i, q) = (-1)^((p_i-1)/2) and an even number of
//            p_i = 3 (mod 4)
//     q = 5: the same legendre condition, with the parity of
//            #{p_i = 3 (mod 4)} tied to b: even when b = 0, odd when b = 1
//     q = 7: impossible for a sum of three squares (rejected)
inline bool classify_norm_shaped(const Int& normA2, const Rational& tan2) {
    if (normA2 < 1) throw std::invalid_argument("classify_norm_shaped: normA2 must be >= 1");
    if (tan2 <= 0 || !is_rational_three_square(tan2))
        throw std::invalid_argument("classify_norm_shaped: tan^2 is outside the Theta_3 range");

    Int s = squarefree_part(Rational(normA2));
    auto shape = detail::squarefree_shape(squarefree_part(tan2));
    bool b = shape.has_two;

    if (s == 1) return detail::all_residue_1_mod4(shape.odd_primes);
    if (s == 2) return detail::all_residue_1_or_3_mod8(shape.odd_primes);
    if (!is_prime(s))
        throw std::invalid_argument("classify_norm_shaped: normA2 is not of the form M^2, 2M^2, or qM^2");

    const Int& q = s;
    Int qm8 = q % 8;
    if (qm8 == 7)
        throw std::invalid_argument("classify_norm_shaped: qM^2 with q = 7 (mod 8) is not a sum of three squares");

    std::vector<Int> ps = shape.odd_primes;
    detail::extract_prime(ps, q);  // q^(b') is unconstrained

    if (qm8 == 3) {
        if (!b) return false;
        for (const Int& p : ps)
            if (legendre(p, q) != 1) return false;
        return true;
    }
    if (!detail::legendre_matches_sign(ps, q)) return false;
    bool even3 = detail::even_count_3_mod4(ps);
    if (qm8 == 1) return even3;
    return b ? !even3 : even3;  // q = 5 (mod 8)
}

// Dual closed form: tan^2 has square-free part 1, 2, or an odd prime p,
// and the condition constrains the square-free part 2^b q1...qt of |a|^2.
//
// The p = 5 (mod 8) case has two branches; the implemented second branch
// requires an odd number of q_j = 3 (mod 4) together with b = 1 (the
// counterpart of the norm-side statement). classify_tangent_shaped_literal keeps
// the literal published text of that branch, whose parity condition on the
// odd product q1...qt is never satisfiable; the two variants are compared
// in the test suites against the Hilbert criterion.
inline bool classify_tangent_shaped_impl(const Int& normA2, const Rational& tan2, bool literal_branch) {
    if (normA2 < 1 || !is_three_square(normA2))
        throw std::invalid_argument("classify_tangent_shaped: normA2 is not a sum of three squares");
    if (tan2 <= 0) throw std::invalid_argument("classify_tangent_shaped: tan^2 must be positive");

    Int t = squarefree_part(tan2);
    auto shape = detail::squarefree_shape(squarefree_part(Rational(normA2)));
    bool b = shape.has_two;

    if (t == 1) return detail::all_residue_1_mod4(shape.odd_primes);
    if (t == 2) return detail::all_residue_1_or_3_mod8(shape.odd_primes);
    if (!is_prime(t))
        throw std::invalid_argument("classify_tangent_shaped: square-free part of tan^2 is not 1, 2, or prime");

    const Int& p = t;
    Int pm8 = p % 8;
    if (pm8 == 7)
        throw std::invalid_argument("classify_tangent_shaped: tan^2 is outside the Theta_3 range");

    std::vector<Int> qs = shape.odd_primes;
    detail::extract_prime(qs, p);  // p^(b') is unconstrained

    if (pm8 == 3) {
        if (!b) return false;
        for (const Int& q : qs)
            if (legendre(q, p) != 1) return false;
        return true;
    }
    if (!detail::legendre_matches_sign(qs, p)) return false;
    bool even3 = detail::even_count_3_mod4(qs);
    if (pm8 == 1) return even3;
    if (!b) return even3;                 // p = 5 (mod 8), first branch
    return literal_branch ? false : !even3;  // second branch
}

inline bool classify_tangent_shaped(const Int& normA2, const Rational& tan2) {
    return classify_tangent_shaped_impl(normA2, tan2, false);
}

inline bool classify_tangent_shaped_literal(const Int& normA2, const Rational& tan2) {
    return classify_tangent_shaped_impl(normA2, tan2, true);
}

// The canonical vector with squared norm N: the deterministic three-square
// decomposition read as coordinates.
inline IntVec vector_with_norm(const Int& N) {
    auto d = three_square_decomp(N);
    if (!d) throw std::invalid_argument("vector_with_norm: N is not a sum of three squares");
    return IntVec{(*d)[0], (*d)[1], (*d)[2]};
}

// An excluded angle for a three-dimensional vector: some oblique angle in
// Theta_3 that a can never form. The four constructions, tried in order:
//   (a) |a|^2 a perfect square            -> tan^2 = 3
//   (b) a prime p = 3 (mod 4) in the
//       square-free part of |a|^2         -> tan^2 = 1
//   (c) a prime p = 1 (mod 4) there       -> tan^2 = c, the smallest
//       non-residue mod p that is a sum of three squares
//   (d) square-free part exactly 2        -> tan^2 = the smallest prime
//       l = 5 (mod 8) not dividing |a|^2
struct ExcludedAngle {
    AngleClass angle = AngleClass::zero();
    char case_label = '?';
};

inline ExcludedAngle excluded_angle(const IntVec& a) {
    if (a.dim() != 3) throw std::invalid_argument("excluded_angle: vector must be three-dimensional");
    if (is_zero(a)) throw std::invalid_argument("excluded_angle: zero vector");

    Int A2 = norm2(a);
    auto shape = detail::squarefree_shape(squarefree_part(Rational(A2)));

    ExcludedAngle out;
    if (!shape.has_two && shape.odd_primes.empty()) {
        out.angle = AngleClass::oblique(3);
        out.case_label = 'a';
    } else {
        Int found;
        for (const Int& p : shape.odd_primes)
            if (p % 4 == 3) {
                found = p;
                break;
            }
        if (found != 0) {
            out.angle = AngleClass::oblique(1);
            out.case_label = 'b';
        } else if (!shape.odd_primes.empty()) {
            const Int& p = shape.odd_primes.front();  // smallest, = 1 (mod 4)
            Int c = 0;
            for (Int cand = 1; cand < p; ++cand) {
                if (legendre(cand, p) == -1 && is_three_square(cand)) {
                    c = cand;
                    break;
                }
            }
            if (c == 0) throw std::logic_error("excluded_angle: no usable non-residue found");
            out.angle = AngleClass::oblique(c);
            out.case_label = 'c';
        } else {
            Int l = 5;
            while (!(is_prime(l) && A2 % l != 0)) l += 8;
            out.angle = AngleClass::oblique(l);
            out.case_label = 'd';
        }
    }

    if (!theta_n_contains(3, out.angle) || symbol_criterion(A2, out.angle.tan2()).member)
        throw std::logic_error("excluded_angle: construction failed verification");
    return out;
}

inline const Int excluded_vector_norm_cap = Int(1000000);

// A three-dimensional vector that cannot form the given oblique angle:
// scan squared norms upward for the first sum of three squares failing the
// criterion. Termination before the cap is guaranteed in practice; the cap
// turns a would-be infinite loop into an error.
inline IntVec excluded_vector(const AngleClass& angle) {
    if (!angle.is_oblique() || !theta_n_contains(3, angle))
        throw std::invalid_argument("excluded_vector: angle must be an oblique member of Theta_3");
    for (Int N = 1; N <= excluded_vector_norm_cap; ++N) {
        if (!is_three_square(N)) continue;
        if (!symbol_criterion(N, angle.tan2()).member) return vector_with_norm(N);
    }
    throw std::runtime_error("excluded_vector: no excluding norm found below the cap");
}

// Membership of N in S(theta), the squared norms of vectors that can form
// the angle: N must be a sum of three squares, and for oblique angles the
// criterion must hold. Angles outside Theta_3 are formed by no vector.
inline bool s_theta_contains(const Int& N, const AngleClass& angle) {
    if (N < 1) throw std::invalid_argument("s_theta_contains: N must be >= 1");
    if (!is_three_square(N)) return false;
    if (!angle.is_oblique()) return true;
    if (!is_rational_three_square(angle.tan2())) return false;
    return symbol_criterion(N, angle.tan2()).member;
}

}  // namespace latang
