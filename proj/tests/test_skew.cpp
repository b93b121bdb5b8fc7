#include <doctest.h>

#include "skewconv/common.hpp"
#include "skewconv/skew.hpp"

#include <set>

using namespace skewconv;

namespace {

FieldPtr f9() {
    static FieldPtr f = ExtensionField::make(3, 2);
    return f;
}

FieldElement el(int64_t c0, int64_t c1) {
    return f9()->from_coords(std::vector<int64_t>{c0, c1});
}

SkewPolynomial poly(std::initializer_list<FieldElement> lowest_first) {
    return SkewPolynomial::from_coeffs(f9(), std::vector<FieldElement>(lowest_first));
}

FieldElement rand_el(const FieldPtr& f, DetRng& rng) {
    return f->from_index(rng.below(f->order()));
}

} // namespace

TEST_CASE("truncated norms on frozen values") {
    CHECK(norm_iterate(0, el(0, 1)).is_one()); // N_0 = 1 always
    CHECK(norm_iterate(1, el(1, 1)) == el(1, 1));
    CHECK(norm_iterate(2, el(1, 1)) == el(2, 0)); // N_2(1+w) = 2
    CHECK(norm_iterate(3, el(0, 1)) == el(0, 1)); // N_3(w) = w
    CHECK(norm_iterate(2, el(0, 0)).is_zero());
}

TEST_CASE("norms match the closed form a^((q^i - 1)/(q - 1))") {
    for (auto f : {ExtensionField::make(3, 2), ExtensionField::make(5, 2)}) {
        const uint64_t q = f->q();
        for (uint64_t idx = 0; idx < f->order(); ++idx) {
            auto a = f->from_index(idx);
            uint64_t e = 0; // (q^i - 1)/(q - 1) = 1 + q + ... + q^{i-1}
            uint64_t qpow = 1;
            for (unsigned i = 0; i <= 6; ++i) {
                if (i == 0)
                    CHECK(norm_iterate(0, a).is_one());
                else if (a.is_zero())
                    CHECK(norm_iterate(i, a).is_zero());
                else
                    CHECK(norm_iterate(i, a) == a.pow(e));
                e += qpow;
                qpow *= q;
            }
        }
    }
}

TEST_CASE("skew multiplication twists coefficients through frobenius") {
    auto x = SkewPolynomial::x(f9());
    auto w = el(0, 1);
    // x * w = sigma(w) x = w^3 x = 2w x
    auto p = x * poly({w});
    REQUIRE(p.degree() == 1);
    CHECK(p.coeff(0).is_zero());
    CHECK(p.coeff(1) == el(0, 2));
    // but w * x keeps w
    auto q = poly({w}) * x;
    CHECK(q.coeff(1) == w);
    CHECK(p != q); // noncommutative

    // (x - 2)(x - 1) = x^2 + 2: sigma fixes base-field constants here
    auto lhs = poly({el(-2, 0), el(1, 0)}) * poly({el(-1, 0), el(1, 0)});
    CHECK(lhs == poly({el(2, 0), el(0, 0), el(1, 0)}));
}

TEST_CASE("ring laws: associativity and distributivity on random triples") {
    DetRng rng(11);
    for (int iter = 0; iter < 200; ++iter) {
        auto rp = [&] {
            std::vector<FieldElement> c;
            size_t d = rng.below(4);
            for (size_t i = 0; i <= d; ++i) c.push_back(rand_el(f9(), rng));
            return SkewPolynomial::from_coeffs(f9(), c);
        };
        auto a = rp(), b = rp(), c = rp();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("degree bookkeeping and trimming") {
    CHECK(SkewPolynomial::zero(f9()).degree() == -1);
    CHECK(SkewPolynomial::one(f9()).degree() == 0);
    CHECK(poly({el(1, 0), el(0, 0)}).degree() == 0); // trailing zero trimmed
    auto m = SkewPolynomial::monomial(el(2, 1), 3);
    CHECK(m.degree() == 3);
    CHECK(m.coeff(3) == el(2, 1));
    CHECK(m.coeff(1).is_zero());
    CHECK(m.coeff(17).is_zero());
    CHECK(m.leading() == el(2, 1));
    CHECK_THROWS(SkewPolynomial::zero(f9()).leading());
    CHECK(SkewPolynomial::monomial(el(0, 0), 5).is_zero());
}

TEST_CASE("evaluation is the norm-weighted coefficient sum") {
    // f = w + (1+w) x + x^2 at a = 1+w:
    //   f(a) = w + (1+w) N_1(a) + N_2(a) = w + (1+w)^2 + 2
    auto a = el(1, 1);
    auto f = poly({el(0, 1), el(1, 1), el(1, 0)});
    auto expect = el(0, 1) + el(1, 1) * el(1, 1) + el(2, 0);
    CHECK(f.eval(a) == expect);
    CHECK(SkewPolynomial::zero(f9()).eval(a).is_zero());
    // constants evaluate to themselves regardless of the point
    CHECK(poly({el(2, 1)}).eval(a) == el(2, 1));
}

TEST_CASE("product evaluation rule") {
    // eval(f g, a) = 0 when g(a) = 0, else f(conjugate(a, g(a))) * g(a)
    DetRng rng(23);
    for (int iter = 0; iter < 500; ++iter) {
        auto rp = [&] {
            std::vector<FieldElement> c;
            size_t d = rng.below(4);
            for (size_t i = 0; i <= d; ++i) c.push_back(rand_el(f9(), rng));
            return SkewPolynomial::from_coeffs(f9(), c);
        };
        auto f = rp(), g = rp();
        auto a = rand_el(f9(), rng);
        auto ga = g.eval(a);
        auto whole = (f * g).eval(a);
        if (ga.is_zero())
            CHECK(whole.is_zero());
        else
            CHECK(whole == f.eval(conjugate(a, ga)) * ga);
    }
}

TEST_CASE("conjugation") {
    // conjugate(a, beta) = beta^{q-1} a over F_{q^t}
    for (uint64_t i = 0; i < 9; ++i)
        for (uint64_t j = 1; j < 9; ++j) {
            auto a = f9()->from_index(i);
            auto beta = f9()->from_index(j);
            CHECK(conjugate(a, beta) == beta.pow(2) * a);
        }
    CHECK(conjugate(el(1, 0), el(0, 1)) == el(2, 0)); // w^2 * 1 = 2
    CHECK_THROWS(conjugate(el(1, 0), el(0, 0)));
}

TEST_CASE("conjugacy classes of F_9") {
    auto classes = conjugacy_partition(f9());
    REQUIRE(classes.size() == 3); // {0} and one class per power residue
    CHECK(classes[0].members.size() == 1);
    CHECK(classes[0].members[0].is_zero());
    CHECK(classes[1].representative.is_one()); // gamma^0

    auto names = [](const ConjugacyClass& c) {
        std::set<std::string> s;
        for (const auto& m : c.members) s.insert(m.str());
        return s;
    };
    CHECK(names(classes[1]) == std::set<std::string>{"1", "2", "w", "2w"});
    CHECK(names(classes[2]) == std::set<std::string>{"1+w", "2+2w", "2+w", "1+2w"});
    CHECK(classes[2].representative == el(1, 1)); // gamma itself

    for (const auto& c : classes)
        for (const auto& m : c.members) CHECK(c.contains(m));
    CHECK_FALSE(classes[1].contains(el(1, 1)));

    // class sizes over a second field: (q^t-1)/(q-1) each
    auto f25 = ExtensionField::make(5, 2);
    auto c25 = conjugacy_partition(f25);
    REQUIRE(c25.size() == 5);
    for (size_t i = 1; i < c25.size(); ++i) CHECK(c25[i].members.size() == 6);

    // members really are mutually conjugate: m = conjugate(rep, beta) for some beta
    for (const auto& m : classes[2].members) {
        bool hit = false;
        for (uint64_t j = 1; j < 9 && !hit; ++j)
            hit = conjugate(classes[2].representative, f9()->from_index(j)) == m;
        CHECK(hit);
    }
}

TEST_CASE("linearized operator is F_q-linear and kernel dimension matches brute force") {
    DetRng rng(37);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<FieldElement> c;
        size_t d = 1 + rng.below(3);
        for (size_t i = 0; i <= d; ++i) c.push_back(rand_el(f9(), rng));
        auto f = SkewPolynomial::from_coeffs(f9(), c);
        if (f.is_zero()) continue;
        auto a = rand_el(f9(), rng);

        size_t kernel_count = 0;
        for (uint64_t j = 0; j < 9; ++j) {
            auto beta = f9()->from_index(j);
            if (linearized_eval(f, a, beta).is_zero()) ++kernel_count;
            // additivity
            for (uint64_t l = 0; l < 9; ++l) {
                auto beta2 = f9()->from_index(l);
                CHECK(linearized_eval(f, a, beta + beta2) ==
                      linearized_eval(f, a, beta) + linearized_eval(f, a, beta2));
            }
            // base-field homogeneity
            CHECK(linearized_eval(f, a, f9()->from_base(2) * beta) ==
                  f9()->from_base(2) * linearized_eval(f, a, beta));
        }
        unsigned dim = kernel_dimension(f, a);
        uint64_t expect = 1; // kernel is an F_3-subspace, so it has 3^dim points
        for (unsigned i = 0; i < dim; ++i) expect *= 3;
        CHECK(kernel_count == expect);
    }
}

TEST_CASE("kernel dimensions on frozen cases") {
    // f = x^2 + 2 = (x - 2)(x - 1): kernel of D_{f,a} per class representative
    auto f = poly({el(2, 0), el(0, 0), el(1, 0)});
    CHECK(kernel_dimension(f, el(0, 0)) == 0); // f(0) = 2 != 0
    CHECK(kernel_dimension(f, el(1, 0)) == 2); // both roots in the class of 1
    CHECK(kernel_dimension(f, el(1, 1)) == 0);

    // x - 1 at a = 1 gives beta^q - beta, vanishing exactly on F_3
    auto lin = poly({el(-1, 0), el(1, 0)});
    CHECK(kernel_dimension(lin, el(1, 0)) == 1);
    CHECK(kernel_dimension(lin, el(1, 1)) == 0); // sigma(b)*gamma = b unsolvable

    // the zero class is special: full kernel iff the constant term vanishes
    auto x_only = poly({el(0, 0), el(1, 0)});
    CHECK(kernel_dimension(x_only, el(0, 0)) == 2);
    CHECK(kernel_dimension(f, el(0, 0)) == 0);

    // kernel dimensions summed over the nonzero class representatives
    // gamma^0..gamma^{q-2} never exceed deg f (for deg f < t)
    for (auto fld : {ExtensionField::make(3, 2), ExtensionField::make(5, 2)}) {
        DetRng rng(41);
        const uint64_t q = fld->q();
        int done = 0;
        while (done < 200) {
            std::vector<FieldElement> c;
            for (unsigned i = 0; i < fld->t(); ++i) // deg <= t-1
                c.push_back(fld->from_index(rng.below(fld->order())));
            auto g = SkewPolynomial::from_coeffs(fld, c);
            if (g.is_zero()) continue;
            ++done;
            unsigned total = 0;
            auto rep = fld->one();
            for (uint64_t i = 0; i + 1 < q; ++i) {
                total += kernel_dimension(g, rep);
                rep = rep * fld->gamma();
            }
            CHECK(total <= static_cast<unsigned>(g.degree()));
        }
    }
}

TEST_CASE("skew vandermonde") {
    std::vector<FieldElement> pts = {el(1, 0), el(2, 0)};
    auto v = skew_vandermonde(2, pts);
    REQUIRE(v.rows() == 2);
    REQUIRE(v.cols() == 2);
    CHECK(v.at(0, 0).is_one());
    CHECK(v.at(0, 1).is_one());
    CHECK(v.at(1, 0) == el(1, 0)); // N_1(1) = 1
    CHECK(v.at(1, 1) == el(2, 0)); // N_1(2) = 2
    CHECK(v.det() == el(1, 0));

    std::vector<FieldElement> p3 = {el(1, 1), el(2, 2), el(1, 2)};
    auto v3 = skew_vandermonde(3, p3);
    for (size_t j = 0; j < 3; ++j) {
        CHECK(v3.at(0, j).is_one());
        CHECK(v3.at(2, j) == norm_iterate(2, p3[j]));
    }
}

TEST_CASE("minimal annihilator") {
    std::vector<FieldElement> pts = {el(1, 0), el(2, 0)};
    auto f = minimal_annihilator(f9(), pts);
    CHECK(f == poly({el(2, 0), el(0, 0), el(1, 0)})); // x^2 + 2
    for (const auto& p : pts) CHECK(f.eval(p).is_zero());
    CHECK(f.leading().is_one());

    // degree never exceeds the point count; vanishing always holds
    DetRng rng(53);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<FieldElement> ps;
        size_t m = 1 + rng.below(4);
        for (size_t i = 0; i < m; ++i) ps.push_back(rand_el(f9(), rng));
        auto g = minimal_annihilator(f9(), ps);
        CHECK(g.degree() >= 1);
        CHECK(g.degree() <= static_cast<int>(m));
        CHECK(g.leading().is_one());
        for (const auto& p : ps) CHECK(g.eval(p).is_zero());
    }

    // a full conjugacy class of F_9 needs degree 2, not 4: the class is
    // the zero set of one quadratic
    auto classes = conjugacy_partition(f9());
    auto ann = minimal_annihilator(f9(), classes[1].members);
    CHECK(ann.degree() == 2);

    // root spaces stay small: for points inside one class, the kernel of the
    // linearized map of their annihilator has dimension <= its degree
    DetRng rng2(59);
    for (int iter = 0; iter < 100; ++iter) {
        const auto& cls = classes[1 + rng2.below(2)];
        std::vector<FieldElement> s;
        size_t m = 1 + rng2.below(2);
        for (size_t i = 0; i < m; ++i) s.push_back(cls.members[rng2.below(cls.members.size())]);
        auto g = minimal_annihilator(f9(), s);
        CHECK(kernel_dimension(g, cls.representative) <= static_cast<unsigned>(g.degree()));
        for (const auto& p : s) CHECK(g.eval(p).is_zero());
    }
}
