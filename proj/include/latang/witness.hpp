#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "latang/angleset.hpp"
#include "latang/exactnum.hpp"
#include "latang/intvec.hpp"
#include "latang/shells.hpp"

// Construction of explicit integer witness vectors b with angle(a, b) equal
// to a requested angle class. Dimensions 2 and 4 are fully constructive;
// dimension 3 and dimensions >= 5 run a deterministic bounded search whose
// hits certify themselves through angle_between.

namespace latang {

// Bound on the max-norm of the searched box (dimension 3: witness
// components; dimensions >= 5: the free basis coefficients, the leading
// one being solved exactly). NotFound within a budget never implies
// non-membership.
struct SearchBudget {
    Int box_bound{100};

    static SearchBudget default_for_dim(int dim) { return SearchBudget{dim >= 5 ? Int(40) : Int(100)}; }
};

struct Dim2Params {
    Int u;
    Int v;  // tan(theta) = u/v, v != 0
};

struct Dim4Params {
    Int r, s, t;
    Int u;  // tan^2(theta) = (r^2+s^2+t^2)/u^2, u != 0
};

// An integer vector perpendicular to a: (1,0,...,0) when a_1 = 0, else
// (-a_2, a_1, 0, ..., 0).
inline IntVec perpendicular(const IntVec& a) {
    if (is_zero(a)) throw std::invalid_argument("perpendicular: zero vector");
    if (a.dim() < 2) throw std::invalid_argument("perpendicular: dimension must be >= 2");
    std::vector<Int> c(static_cast<std::size_t>(a.dim()), Int(0));
    if (a[0] == 0) {
        c[0] = 1;
    } else {
        c[0] = -a[1];
        c[1] = a[0];
    }
    return IntVec(std::move(c));
}

// The planar rotation-and-scale witness b = (a1 v - a2 u, a2 v + a1 u);
// angle(a, b) has tan(theta) = u/v with the quadrant implied by the signs
// (a.b = v * |a|^2).
inline IntVec witness_dim2(const IntVec& a, const Dim2Params& p) {
    if (a.dim() != 2) throw std::invalid_argument("witness_dim2: vector must be two-dimensional");
    if (is_zero(a)) throw std::invalid_argument("witness_dim2: zero vector");
    if (p.v == 0) throw std::invalid_argument("witness_dim2: v must be nonzero");
    return IntVec{a[0] * p.v - a[1] * p.u, a[1] * p.v + a[0] * p.u};
}

// The four-dimensional witness
//   b = u a + r (a2,-a1,a4,-a3) + s (a3,-a4,-a1,a2) + t (a4,a3,-a2,-a1),
// built from three integer rotations each orthogonal to a and to one
// another; tan^2(theta) = (r^2+s^2+t^2)/u^2 and a.b = u |a|^2.
inline IntVec witness_dim4(const IntVec& a, const Dim4Params& p) {
    if (a.dim() != 4) throw std::invalid_argument("witness_dim4: vector must be four-dimensional");
    if (is_zero(a)) throw std::invalid_argument("witness_dim4: zero vector");
    if (p.u == 0) throw std::invalid_argument("witness_dim4: u must be nonzero");
    const Int &a1 = a[0], &a2 = a[1], &a3 = a[2], &a4 = a[3];
    return IntVec{p.u * a1 + p.r * a2 + p.s * a3 + p.t * a4,
                  p.u * a2 - p.r * a1 - p.s * a4 + p.t * a3,
                  p.u * a3 + p.r * a4 - p.s * a1 - p.t * a2,
                  p.u * a4 - p.r * a3 + p.s * a2 - p.t * a1};
}

namespace detail {

inline IntVec sign_canonical(const IntVec& v) {
    for (const Int& x : v) {
        if (x != 0) return x > 0 ? v : -v;
    }
    return v;
}

inline IntVec from_i64(const std::vector<std::int64_t>& c) {
    std::vector<Int> out(c.begin(), c.end());
    return IntVec(std::move(out));
}

// Exact matcher for "angle_between(a, v) == angle" on int64 tuples,
// templated on the accumulator type; W = __int128 is used when the bound
// check on input sizes allows it, W = Int otherwise.
template <class W>
class AngleMatcher {
public:
    AngleMatcher(const IntVec& a, const AngleClass& angle) : kind_(angle.kind()) {
        for (const Int& x : a) a_.push_back(static_cast<W>(x));
        A2_ = 0;
        for (const W& x : a_) A2_ += x * x;
        if (angle.is_oblique()) {
            tn_ = static_cast<W>(num(angle.tan2()));
            td_ = static_cast<W>(den(angle.tan2()));
            obtuse_ = angle.obtuse();
        }
    }

    bool operator()(const std::vector<std::int64_t>& v) const {
        W d = 0, n2 = 0;
        for (std::size_t i = 0; i < a_.size(); ++i) {
            W x = static_cast<W>(v[i]);
            d += a_[i] * x;
            n2 += x * x;
        }
        if (kind_ == AngleKind::right) return d == 0;
        if (d == 0) return false;
        W cross = A2_ * n2 - d * d;
        switch (kind_) {
            case AngleKind::zero: return d > 0 && cross == 0;
            case AngleKind::straight: return d < 0 && cross == 0;
            default: break;
        }
        if ((d < 0) != obtuse_) return false;
        if (cross == 0) return false;
        return tn_ * (d * d) == td_ * cross;
    }

private:
    std::vector<W> a_;
    W A2_ = 0;
    W tn_ = 0, td_ = 1;
    bool obtuse_ = false;
    AngleKind kind_;
};

// True when every product formed by the matcher stays safely inside
// __int128 for boxes up to `bound`.
inline bool fits_int128(const IntVec& a, const AngleClass& angle, std::int64_t bound) {
    Int limit = Int(1) << 124;
    Int b(bound);
    Int cap = norm2(a) * a.dim() * b * b;  // bounds n2, |d|^2, and cross
    if (cap == 0 || cap > limit) return false;
    if (!angle.is_oblique()) return true;
    Int coef = num(angle.tan2()) > den(angle.tan2()) ? num(angle.tan2()) : den(angle.tan2());
    return coef <= limit / cap;
}

template <class W>
std::optional<IntVec> shell_search(const IntVec& a, const AngleClass& angle, std::int64_t bound) {
    AngleMatcher<W> match(a, angle);
    std::optional<IntVec> hit;
    detail::visit_shells(a.dim(), bound, [&](const std::vector<std::int64_t>& v) {
        if (!match(v)) return false;
        hit = from_i64(v);
        return true;
    });
    return hit;
}

// Dimension 3. A witness v is equivalent to a rational point on an
// ellipse: with any integer p perpendicular to a,
//   (x, y) = ( (p.v)/(a.v), ((a x p).v)/(a.v) )
// satisfies |a|^2 x^2 + y^2 = |p|^2 tan^2, and conversely. Solving for
// such points directly needs descent machinery; at this library's scale a
// direct bounded search on the defining identity is equivalent, and every
// hit certifies itself. The coordinate map is exercised by the tests.
inline std::optional<IntVec> search_dim3(const IntVec& a, const AngleClass& angle, std::int64_t bound) {
    auto hit = fits_int128(a, angle, bound) ? shell_search<__int128>(a, angle, bound)
                                            : shell_search<Int>(a, angle, bound);
    if (hit && angle_between(a, *hit) != angle)
        throw std::logic_error("witness search: hit failed verification");
    return hit;
}

}  // namespace detail

// Pairwise-orthogonal primitive integer vectors spanning the orthogonal
// complement of a, from exact Gram-Schmidt of the coordinate vectors
// against a with denominators cleared. Coordinates are taken in order of
// ascending |a_i|, which keeps the cleared norms small (a zero coordinate
// contributes its unit vector unchanged).
inline std::vector<IntVec> orthogonal_complement_basis(const IntVec& a) {
    if (is_zero(a)) throw std::invalid_argument("orthogonal_complement_basis: zero vector");
    int n = a.dim();
    using RVec = std::vector<Rational>;
    auto rdot = [n](const RVec& x, const RVec& y) {
        Rational s = 0;
        for (int i = 0; i < n; ++i) s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
        return s;
    };

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return abs(a[i]) < abs(a[j]); });

    std::vector<RVec> basis;
    RVec ra;
    for (const Int& x : a) ra.push_back(Rational(x));
    basis.push_back(ra);

    std::vector<IntVec> out;
    for (int oi = 0; oi < n && static_cast<int>(out.size()) < n - 1; ++oi) {
        int i = order[static_cast<std::size_t>(oi)];
        RVec e(static_cast<std::size_t>(n), Rational(0));
        e[static_cast<std::size_t>(i)] = 1;
        for (const RVec& b : basis) {
            Rational coef = rdot(e, b) / rdot(b, b);
            for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] -= coef * b[static_cast<std::size_t>(j)];
        }
        bool zero = true;
        for (const Rational& x : e)
            if (x != 0) zero = false;
        if (zero) continue;

        Int l = 1;
        for (const Rational& x : e) l = lcm(l, den(x));
        std::vector<Int> c;
        for (const Rational& x : e) c.push_back(num(x) * (l / den(x)));
        IntVec ci = primitive(IntVec(std::move(c)));
        RVec rc;
        for (const Int& x : ci) rc.push_back(Rational(x));
        basis.push_back(rc);
        out.push_back(std::move(ci));
    }
    return out;
}

namespace detail {

inline std::int64_t isqrt_i64(std::int64_t n) {
    if (n < 0) return -1;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

template <class W>
W exact_sqrt_or_negative(const W& q) {
    if constexpr (std::is_same_v<W, Int>) {
        if (q < 0) return Int(-1);
        Int r = boost::multiprecision::sqrt(q);
        return r * r == q ? r : Int(-1);
    } else {
        std::int64_t r = isqrt_i64(static_cast<std::int64_t>(q));
        return (r >= 0 && W(r) * W(r) == q) ? W(r) : W(-1);
    }
}

// Dimension >= 5: with {a, c_2, ..., c_n} orthogonal and v = x1 a + sum x_i c_i,
//   tan^2 = (sum_i |c_i|^2 x_i^2) / (|a|^2 x1^2),
// so witnesses correspond to coefficient tuples solving
//   Tn * |a|^2 * x1^2 = Td * sum_i |c_i|^2 x_i^2,  x1 >= 1.
// Signs of x_2..x_n do not enter, so only nonnegative tuples are scanned;
// x1 is solved exactly from each tuple (divisibility plus a perfect-square
// test) rather than enumerated, which keeps it unconstrained by the budget.
// The first solvable tuple in shell order gives the witness.
struct CoefficientHit {
    Int lead;                        // x1
    std::vector<std::int64_t> rest;  // x2..xn
};

template <class W>
std::optional<CoefficientHit> coefficient_search(const Int& A2, const std::vector<Int>& cnorms,
                                                 const Rational& tan2, std::int64_t bound) {
    int free_dim = static_cast<int>(cnorms.size());
    W denom = static_cast<W>(num(tan2) * A2);
    W td = static_cast<W>(den(tan2));
    std::vector<W> rhs_coef;
    for (const Int& cn : cnorms) rhs_coef.push_back(td * static_cast<W>(cn));

    std::optional<CoefficientHit> hit;
    visit_shells_nonneg(free_dim, bound, 0, [&](const std::vector<std::int64_t>& x) {
        W rhs = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            rhs += rhs_coef[i] * (static_cast<W>(x[i]) * static_cast<W>(x[i]));
        if (rhs == 0 || rhs % denom != 0) return false;
        W x1 = exact_sqrt_or_negative<W>(rhs / denom);
        if (x1 <= 0) return false;
        hit = CoefficientHit{Int(x1), x};
        return true;
    });
    return hit;
}

inline std::optional<IntVec> search_high_dim(const IntVec& a, const AngleClass& angle, std::int64_t bound) {
    IntVec base = primitive(a);
    Int A2 = norm2(base);
    std::vector<IntVec> cs = orthogonal_complement_basis(base);
    std::vector<Int> cnorms;
    for (const IntVec& c : cs) cnorms.push_back(norm2(c));

    Int b(bound);
    Int worst = 0;
    for (const Int& cn : cnorms) worst += den(angle.tan2()) * cn * b * b;
    bool fits = worst < (Int(1) << 62) && num(angle.tan2()) * A2 < (Int(1) << 62);

    auto x = fits ? coefficient_search<std::int64_t>(A2, cnorms, angle.tan2(), bound)
                  : coefficient_search<Int>(A2, cnorms, angle.tan2(), bound);
    if (!x) return std::nullopt;

    std::vector<Int> v(static_cast<std::size_t>(a.dim()), Int(0));
    for (int j = 0; j < a.dim(); ++j) v[static_cast<std::size_t>(j)] = x->lead * base[j];
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (int j = 0; j < a.dim(); ++j) v[static_cast<std::size_t>(j)] += x->rest[i] * cs[i][j];

    IntVec w = primitive(IntVec(std::move(v)));
    if (angle.obtuse()) w = -w;
    if (angle_between(a, w) != angle)
        throw std::logic_error("witness search: coefficient hit failed verification");
    return w;
}

}  // namespace detail

// Constructs an integer vector forming the requested angle with a, or
// NotFound (nullopt) when the bounded search is exhausted. Dispatch:
//
//   degenerate    canonical witnesses (a, -a, a normalized perpendicular)
//   dimension 2   tan = u/v recovered from the rational square tan^2
//   dimension 3   shell search for Tn (a.v)^2 = Td (|a|^2 |v|^2 - (a.v)^2)
//                 with sign(a.v) matching the obtuse flag; requires the
//                 Hilbert criterion to admit the angle
//   dimension 4   deterministic parameters from the square-free part and
//                 canonical three-square decomposition of tan^2
//   dimension >=5 orthogonal-basis coefficient search (see above)
//
// Every returned vector is primitive and verifies exactly under
// angle_between. Dimensions 2 and 4 always succeed.
inline std::optional<IntVec> witness_for_angle(const IntVec& a, const AngleClass& angle,
                                               const SearchBudget& budget) {
    if (is_zero(a)) throw std::invalid_argument("witness_for_angle: zero vector");
    int n = a.dim();
    if (n < 2) throw std::invalid_argument("witness_for_angle: dimension must be >= 2");

    switch (angle.kind()) {
        case AngleKind::zero: return primitive(a);
        case AngleKind::straight: return -primitive(a);
        case AngleKind::right: return detail::sign_canonical(primitive(perpendicular(a)));
        default: break;
    }
    if (!theta_n_contains(n, angle))
        throw std::invalid_argument("witness_for_angle: angle is not realizable in this dimension");

    if (n == 2) {
        Int u0 = int_sqrt(num(angle.tan2()));
        Int v0 = int_sqrt(den(angle.tan2()));
        IntVec b = witness_dim2(a, Dim2Params{u0, angle.obtuse() ? -v0 : v0});
        return primitive(b);
    }
    if (n == 4) {
        Int prod = num(angle.tan2()) * den(angle.tan2());
        Int N = squarefree_part(angle.tan2());
        Int c = int_sqrt(prod / N);
        auto rst = three_square_decomp(N);
        // N is three-square representable exactly when the angle lies in Theta_4
        Dim4Params p{c * (*rst)[0], c * (*rst)[1], c * (*rst)[2], angle.obtuse() ? -den(angle.tan2()) : den(angle.tan2())};
        return primitive(witness_dim4(a, p));
    }

    std::int64_t bound = detail::checked_bound(budget.box_bound);
    if (n == 3) {
        if (!symbol_criterion(norm2(a), angle.tan2()).member)
            throw std::invalid_argument(
                "witness_for_angle: the Hilbert criterion excludes this angle for this vector");
        return detail::search_dim3(a, angle, bound);
    }
    return detail::search_high_dim(a, angle, bound);
}

// Up to k pairwise non-parallel primitive witnesses in deterministic shell
// order; fewer only when the budget is exhausted. Oblique hits of a fixed
// class are automatically non-parallel (the opposite vector realizes the
// supplement), so only right angles need the explicit parallelism filter.
inline std::vector<IntVec> enumerate_witness_directions(const IntVec& a, const AngleClass& angle, int k,
                                                        const SearchBudget& budget) {
    if (a.dim() != 3) throw std::invalid_argument("enumerate_witness_directions: vector must be three-dimensional");
    if (is_zero(a)) throw std::invalid_argument("enumerate_witness_directions: zero vector");
    if (k < 1) throw std::invalid_argument("enumerate_witness_directions: k must be >= 1");

    std::vector<IntVec> out;
    if (angle.kind() == AngleKind::zero) {
        out.push_back(primitive(a));
        return out;
    }
    if (angle.kind() == AngleKind::straight) {
        out.push_back(-primitive(a));
        return out;
    }
    if (angle.is_oblique()) {
        if (!theta_n_contains(3, angle))
            throw std::invalid_argument("enumerate_witness_directions: angle is not in Theta_3");
        if (!symbol_criterion(norm2(a), angle.tan2()).member)
            throw std::invalid_argument(
                "enumerate_witness_directions: the Hilbert criterion excludes this angle for this vector");
    }

    std::int64_t bound = detail::checked_bound(budget.box_bound);
    bool fast = detail::fits_int128(a, angle, bound);
    auto collect = [&](auto matcher) {
        detail::visit_shells(3, bound, [&](const std::vector<std::int64_t>& v) {
            if (!matcher(v)) return false;
            IntVec w = detail::from_i64(v);
            if (!is_primitive(w)) return false;
            for (const IntVec& prev : out)
                if (is_zero(cross(prev, w))) return false;  // parallel to an earlier hit
            out.push_back(std::move(w));
            return static_cast<int>(out.size()) >= k;
        });
    };
    if (fast)
        collect(detail::AngleMatcher<__int128>(a, angle));
    else
        collect(detail::AngleMatcher<Int>(a, angle));

    for (const IntVec& w : out)
        if (angle_between(a, w) != angle) throw std::logic_error("enumerate_witness_directions: verification failed");
    return out;
}

}  // namespace latang
