#pragma once

#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "latang/exactnum.hpp"

namespace latang {

// Integer vector of fixed dimension. The zero vector is representable but
// every angle operation rejects it.
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::vector<Int> comps) : c_(std::move(comps)) {}
    IntVec(std::initializer_list<Int> comps) : c_(comps) {}

    int dim() const { return static_cast<int>(c_.size()); }
    const Int& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

    const std::vector<Int>& components() const { return c_; }

    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    friend bool operator==(const IntVec& a, const IntVec& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntVec& a, const IntVec& b) { return !(a == b); }

private:
    std::vector<Int> c_;
};

inline bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

inline void require_same_dim(const IntVec& a, const IntVec& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

inline Int dot(const IntVec& a, const IntVec& b) {
    require_same_dim(a, b);
    Int s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline Int norm2(const IntVec& a) { return dot(a, a); }

inline IntVec operator-(const IntVec& a) {
    std::vector<Int> c;
    c.reserve(static_cast<std::size_t>(a.dim()));
    for (const Int& x : a) c.push_back(-x);
    return IntVec(std::move(c));
}

inline IntVec cross(const IntVec& a, const IntVec& b) {
    if (a.dim() != 3 || b.dim() != 3)
        throw std::invalid_argument("cross: vectors must be three-dimensional");
    return IntVec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// gcd of the absolute components; 0 for the zero vector.
inline Int content(const IntVec& a) {
    Int g = 0;
    for (const Int& x : a) g = boost::multiprecision::gcd(g, abs(x));
    return g;
}

inline bool is_primitive(const IntVec& a) { return content(a) == 1; }

// Divides out the content, keeping the direction (and sign).
inline IntVec primitive(const IntVec& a) {
    Int g = content(a);
    if (g == 0) throw std::invalid_argument("primitive: zero vector");
    std::vector<Int> c;
    c.reserve(static_cast<std::size_t>(a.dim()));
    for (const Int& x : a) c.push_back(x / g);
    return IntVec(std::move(c));
}

// True when b is q*a for some positive rational q.
inline bool is_positive_multiple(const IntVec& a, const IntVec& b) {
    require_same_dim(a, b);
    if (is_zero(a) || is_zero(b)) return false;
    Int d = dot(a, b);
    if (d <= 0) return false;
    return norm2(a) * norm2(b) == d * d;
}

inline std::ostream& operator<<(std::ostream& os, const IntVec& v) {
    os << '(';
    for (int i = 0; i < v.dim(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    return os << ')';
}

}  // namespace latang
