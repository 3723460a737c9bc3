// Acceptance suite: every criterion below is exact (integer or rational
// arithmetic, no tolerances). One line is printed per criterion; the exit
// code is the number of failures.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "latang/cli.hpp"
#include "latang/latang_lib.hpp"

using namespace latang;

namespace {

struct Checker {
    std::vector<std::string> failures;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::vector<std::int64_t> theta3_squarefree_classes(std::int64_t height) {
    std::vector<std::int64_t> out;
    for (std::int64_t t = 1; t <= height; ++t) {
        bool sf = true;
        for (std::int64_t p = 2; p * p <= t; ++p)
            if (t % (p * p) == 0) sf = false;
        if (sf && t % 8 != 7) out.push_back(t);
    }
    return out;
}

std::vector<Int> three_square_norms(std::int64_t height) {
    std::vector<Int> out;
    for (std::int64_t n = 1; n <= height; ++n)
        if (is_three_square(n)) out.push_back(n);
    return out;
}

// All nonzero integer vectors of the given dimension with max-norm <= bound.
std::vector<IntVec> box_vectors(int dim, std::int64_t bound) {
    std::vector<IntVec> out;
    std::vector<std::int64_t> c(static_cast<std::size_t>(dim), -bound);
    for (;;) {
        bool zero = true;
        for (std::int64_t x : c) zero = zero && x == 0;
        if (!zero) {
            std::vector<Int> comps(c.begin(), c.end());
            out.emplace_back(std::move(comps));
        }
        int pos = dim - 1;
        while (pos >= 0 && c[static_cast<std::size_t>(pos)] == bound) c[static_cast<std::size_t>(pos--)] = -bound;
        if (pos < 0) break;
        ++c[static_cast<std::size_t>(pos)];
    }
    return out;
}

Json run_cli(const std::vector<std::string>& args, int expected_exit, Checker& ck) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    ck.require(code == expected_exit, "cli exit code " + std::to_string(code));
    return Json::parse(out.str());
}

// ---------------------------------------------------------------- criteria

void criterion_1(Checker& ck) {
    auto json = run_cli({"membership", "--dim", "3", "--vector", "1,0,0", "--tan2", "3"}, 0, ck);
    ck.require(json["result"]["member"] == false, "membership must be false");
    ck.require(json["result"]["certificate"]["prime"] == 3, "failing prime must be 3");
    for (bool obtuse : {false, true})
        ck.require(!brute_force_witness(IntVec{1, 0, 0}, AngleClass::oblique(3, obtuse), 50).has_value(),
                   "brute force must find nothing in box 50");
}

void criterion_2(Checker& ck) {
    IntVec a{1, 1, 0};
    AngleClass angle = AngleClass::oblique(3);
    Verdict v = theta_n_of_a_contains(a, angle);
    ck.require(v.member, "membership must hold");
    auto constructed = witness_for_angle(a, angle, SearchBudget{100});
    ck.require(constructed.has_value() && *constructed == IntVec{0, 1, 1}, "construction must yield (0,1,1)");
    auto brute = brute_force_witness(a, angle, 10);
    ck.require(brute.has_value() && *brute == IntVec{0, 1, 1}, "brute force must yield (0,1,1)");
    ck.require(angle_between(a, IntVec{0, 1, 1}) == angle, "angle must verify exactly");
}

void criterion_3(Checker& ck) {
    AngleClass angle = angle_between(IntVec{4, 2}, IntVec{-1, -3});
    ck.require(angle == AngleClass::oblique(1, true), "angle must be exactly 3 pi / 4");
}

void criterion_4(Checker& ck) {
    std::mt19937 rng(20240001);
    std::uniform_int_distribution<std::int64_t> height(1, 10000);
    std::uniform_int_distribution<int> sign(0, 1);
    auto random_rational = [&]() {
        Rational r(height(rng), height(rng));
        return sign(rng) ? r : -r;
    };

    long checked = 0;
    for (int i = 0; i < 1000; ++i) {
        Rational a = random_rational();
        Rational b = random_rational();
        Rational c = random_rational();

        std::vector<Place> places{Place::infinity()};
        for (const Int& p : hilbert_support(a, b)) places.push_back(Place::at_prime(p));

        for (const Place& v : places) {
            int sab = hilbert_symbol(a, b, v);
            ck.require(sab == 1 || sab == -1, "symbol must be +-1");
            ck.require(sab == hilbert_symbol(b, a, v), "property 1: symmetry");
            ck.require(hilbert_symbol(a, b * c, v) == sab * hilbert_symbol(a, c, v),
                       "property 2: bimultiplicativity");
            ck.require(hilbert_symbol(a, b * b, v) == 1, "property 2: squares are trivial");
            ++checked;
        }
        if (a != 1) {
            for (const Int& p : hilbert_support(a, 1 - a))
                if (p != 2)
                    ck.require(hilbert_symbol(a, 1 - a, Place::at_prime(p)) == 1, "property 3: (a,1-a)_p = 1");
        }
        // property 4: units at an odd prime away from both supports
        for (Int p : {Int(3), Int(101)}) {
            if (num(a) % p == 0 || den(a) % p == 0 || num(b) % p == 0 || den(b) % p == 0) continue;
            ck.require(hilbert_symbol(a, b, Place::at_prime(p)) == 1, "property 4: unit symbol is 1");
        }
        ck.require(hilbert_product_check(a, b), "property 6: product formula");
    }
    for (Int p = 3; p < 200; ++p) {
        if (!is_prime(p)) continue;
        int expected = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
        ck.require(hilbert_symbol(Rational(p), Rational(p), Place::at_prime(p)) == expected,
                   "property 5: (p,p)_p");
    }
    ck.require(hilbert_symbol(2, 2, Place::at_prime(2)) == 1, "property 5: (2,2)_2 = 1");
    ck.note = std::to_string(checked) + " place evaluations";
}

void criterion_5(Checker& ck) {
    ConsistencyReport rep = consistency_report(3, 3, 30, 100);
    ck.require(rep.violations.empty(), std::to_string(rep.violations.size()) + " soundness violations");
    ck.require(rep.budget_exhausted.empty(),
               std::to_string(rep.budget_exhausted.size()) + " budget exhaustions");
    ck.require(rep.witnesses_constructed == rep.member_instances,
               "every member instance needs a constructed witness");
    ck.note = std::to_string(rep.instances) + " instances, " +
              std::to_string(rep.member_instances) + " members";
}

void criterion_6(Checker& ck) {
    auto classes = theta3_squarefree_classes(100);
    long swept = 0;
    for (Int n = 1; n <= 500; ++n) {
        if (!is_three_square(n)) continue;
        Int s = squarefree_part(Rational(n));
        if (!(s == 1 || s == 2 || is_prime(s))) continue;
        for (std::int64_t t : classes) {
            ++swept;
            if (classify_norm_shaped(n, t) != symbol_criterion(n, t).member)
                ck.require(false, "disagreement at norm " + n.str() + ", tan2 " + std::to_string(t));
        }
    }
    ck.note = std::to_string(swept) + " instances";
}

void criterion_7(Checker& ck) {
    std::vector<Rational> parts{1, 2};
    for (Int p = 3; p < 100; ++p)
        if (is_prime(p) && p % 8 != 7) parts.push_back(Rational(p));

    long swept = 0, literal_divergences = 0;
    for (Int n = 1; n <= 500; ++n) {
        if (!is_three_square(n)) continue;
        for (const Rational& t : parts) {
            ++swept;
            bool expected = symbol_criterion(n, t).member;
            if (classify_tangent_shaped(n, t) != expected)
                ck.require(false, "disagreement at norm " + n.str() + ", tan2 " + rational_str(t));
            if (classify_tangent_shaped_literal(n, t) != expected) ++literal_divergences;
        }
    }
    ck.note = std::to_string(swept) + " instances; literal (3c) reading diverges on " +
              std::to_string(literal_divergences);
}

void criterion_8(Checker& ck) {
    auto shape_of = [](const Int& n) { return detail::squarefree_shape(squarefree_part(Rational(n))); };
    long swept = 0;
    for (Int n = 1; n <= 500; ++n) {
        if (!is_three_square(n)) continue;
        ++swept;
        auto shape = shape_of(n);

        bool pred45 = true;
        for (const Int& q : shape.odd_primes) pred45 = pred45 && q % 4 == 1;
        if (symbol_criterion(n, 1).member != pred45)
            ck.require(false, "45-degree mismatch at norm " + n.str());

        bool pred3060 = shape.has_two;
        for (const Int& q : shape.odd_primes)
            if (q != 3) pred3060 = pred3060 && q % 3 == 1;
        bool m60 = symbol_criterion(n, 3).member;
        bool m30 = symbol_criterion(n, Rational(1, 3)).member;
        if (m60 != pred3060) ck.require(false, "60-degree mismatch at norm " + n.str());
        if (m30 != pred3060) ck.require(false, "30-degree mismatch at norm " + n.str());
    }
    ck.note = std::to_string(swept) + " norms";
}

void criterion_9(Checker& ck) {
    auto run_dim = [&](int dim, const std::vector<Rational>& classes) {
        SearchBudget budget = SearchBudget::default_for_dim(dim);
        long built = 0;
        for (const IntVec& a : box_vectors(dim, 2)) {
            for (const Rational& t : classes)
                for (bool obtuse : {false, true}) {
                    AngleClass angle = AngleClass::oblique(t, obtuse);
                    auto w = witness_for_angle(a, angle, budget);
                    if (!w) {
                        ck.require(false, "NotFound in dim " + std::to_string(dim) + " at a=" +
                                              rational_str(Rational(norm2(a))) + " tan2=" + rational_str(t));
                        continue;
                    }
                    if (angle_between(a, *w) != angle)
                        ck.require(false, "witness failed verification in dim " + std::to_string(dim));
                    ++built;
                }
        }
        return built;
    };

    std::vector<Rational> dim2;
    for (std::int64_t u = 1; u <= 6 && dim2.size() < 20; ++u)
        for (std::int64_t v = 1; v <= 6 && dim2.size() < 20; ++v) {
            if (boost::multiprecision::gcd(Int(u), Int(v)) != 1) continue;
            dim2.push_back(Rational(u * u, v * v));
        }

    std::vector<Rational> dim4{1, 2, 3, 5, 6, 10, 11, 13, 14, 17, 19, 21,
                               Rational(5, 4), Rational(3, 2), Rational(1, 3), Rational(9, 2),
                               Rational(2, 9), Rational(6, 25), Rational(10, 9), Rational(13, 4)};
    std::vector<Rational> dim5{7, 15, 23, 8, 12, 28, 31, 47, 60, 63,
                               Rational(7, 2), Rational(1, 7), Rational(7, 3), Rational(15, 4),
                               Rational(23, 9), Rational(5, 7), Rational(71, 2), Rational(39, 5),
                               Rational(55, 8), Rational(20, 3)};

    long b2 = run_dim(2, dim2);
    long b4 = run_dim(4, dim4);
    long b5 = run_dim(5, dim5);
    ck.note = std::to_string(b2) + "+" + std::to_string(b4) + "+" + std::to_string(b5) + " witnesses";
}

void criterion_10(Checker& ck) {
    auto classes = theta3_squarefree_classes(30);
    long swept = 0;
    for (const Int& N : three_square_norms(27)) {
        IntVec a = vector_with_norm(N);
        for (std::int64_t t : classes) {
            bool base = symbol_criterion(N, Rational(t)).member;
            for (Int n = 1; n <= 10; ++n) {
                ++swept;
                if (symbol_criterion(N, Rational(t) * Rational(n * n)).member != base)
                    ck.require(false, "scaling violation at N=" + N.str() + " t=" + std::to_string(t));
            }
            bool acute = theta_n_of_a_contains(a, AngleClass::oblique(t, false)).member;
            bool obtuse = theta_n_of_a_contains(a, AngleClass::oblique(t, true)).member;
            if (acute != base || obtuse != base)
                ck.require(false, "supplement violation at N=" + N.str() + " t=" + std::to_string(t));
        }
    }
    ck.note = std::to_string(swept) + " scaled instances";
}

void criterion_11(Checker& ck) {
    auto classes = theta3_squarefree_classes(50);
    ck.require(classes.size() == 25, "expected exactly 25 classes below 50");
    for (std::int64_t t : classes) {
        IntVec v = excluded_vector(AngleClass::oblique(t));
        if (is_zero(v) || symbol_criterion(norm2(v), Rational(t)).member)
            ck.require(false, "excluding vector failed for tan2 " + std::to_string(t));
    }
    ck.note = std::to_string(classes.size()) + " classes";
}

void criterion_12(Checker& ck) {
    std::mt19937 rng(20240012);
    auto norms = three_square_norms(50);
    auto classes = theta3_squarefree_classes(30);
    std::uniform_int_distribution<std::size_t> ni(0, norms.size() - 1);
    std::uniform_int_distribution<std::size_t> ci(0, classes.size() - 1);

    long premise_hits = 0;
    for (int i = 0; i < 200; ++i) {
        Int n1 = norms[ni(rng)], n2 = norms[ni(rng)], n3 = norms[ni(rng)];
        for (int j = 0; j < 10; ++j) {
            Rational t(classes[ci(rng)]);
            if (!symbol_criterion(n1, t).member || !symbol_criterion(n2, t).member ||
                !symbol_criterion(n3, t).member)
                continue;
            ++premise_hits;
            Int prod = n1 * n2 * n3;
            if (!is_three_square(prod) || !symbol_criterion(prod, t).member)
                ck.require(false, "product violation at (" + n1.str() + "," + n2.str() + "," + n3.str() +
                                      ") tan2 " + rational_str(t));
        }
    }
    ck.require(premise_hits > 50, "premise should hold on a healthy sample");
    ck.note = std::to_string(premise_hits) + " triple instances";
}

struct Criterion {
    int id;
    std::string name;
    long limit_ms;  // 0 = no stated limit
    std::function<void(Checker&)> body;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "excluded instance: e1 with tan^2 = 3, criterion and brute force", 1000, criterion_1},
        {2, "realizable instance: (1,1,0) with tan^2 = 3, witness (0,1,1)", 1000, criterion_2},
        {3, "plane example: (4,2) vs (-1,-3) is exactly 3 pi / 4", 0, criterion_3},
        {4, "hilbert symbol properties 1-6 on 1000 random pairs", 10000, criterion_4},
        {5, "criterion-oracle agreement, dim 3, vec bound 3, classes <= 30, box 100", 300000, criterion_5},
        {6, "norm-shaped closed form matches the criterion (norms <= 500, classes <= 100)", 30000, criterion_6},
        {7, "tangent-shaped closed form matches the criterion (dual sweep)", 30000, criterion_7},
        {8, "30/45/60-degree residue conditions match the criterion (norms <= 500)", 0, criterion_8},
        {9, "constructive realizability in dims 2, 4, 5 at desk scale", 120000, criterion_9},
        {10, "square-scaling invariance and supplement symmetry", 0, criterion_10},
        {11, "excluding vectors for 25 oblique classes", 0, criterion_11},
        {12, "norm products preserve membership (200 random triples)", 0, criterion_12},
    };

    int failures = 0;
    for (auto& c : criteria) {
        Checker ck;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(ck);
        } catch (const std::exception& e) {
            ck.require(false, std::string("exception: ") + e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                      .count();
        if (c.limit_ms > 0 && ms > c.limit_ms)
            ck.require(false, "runtime " + std::to_string(ms) + " ms exceeds " + std::to_string(c.limit_ms) + " ms");

        bool pass = ck.failures.empty();
        failures += pass ? 0 : 1;
        std::cout << (pass ? "PASS" : "FAIL") << "  " << std::setw(2) << c.id << "  " << c.name;
        if (!ck.note.empty()) std::cout << " [" << ck.note << "]";
        std::cout << " (" << ms << " ms)";
        if (!pass) std::cout << " -- " << ck.failures.front();
        std::cout << "\n";
    }
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED") << "\n";
    return failures;
}
