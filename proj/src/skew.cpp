#include "skewconv/skew.hpp"

#include <algorithm>

namespace skewconv {

SkewPolynomial SkewPolynomial::one(const FieldPtr& f) {
    return SkewPolynomial(f, {f->one()});
}

SkewPolynomial SkewPolynomial::x(const FieldPtr& f) {
    return SkewPolynomial(f, {f->zero(), f->one()});
}

SkewPolynomial SkewPolynomial::from_coeffs(const FieldPtr& f, std::vector<FieldElement> coeffs) {
    for (const auto& c : coeffs) {
        if (!c.field() || !c.field()->same(*f)) throw std::invalid_argument("mixed-field operands");
    }
    SkewPolynomial p(f, std::move(coeffs));
    p.trim();
    return p;
}

SkewPolynomial SkewPolynomial::monomial(const FieldElement& c, size_t i) {
    if (!c.field()) throw std::invalid_argument("detached coefficient");
    std::vector<FieldElement> v(i + 1, c.field()->zero());
    v[i] = c;
    SkewPolynomial p(c.field(), std::move(v));
    p.trim();
    return p;
}

FieldElement SkewPolynomial::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return field_->zero();
}

FieldElement SkewPolynomial::leading() const {
    if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return c_.back();
}

void SkewPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

namespace {
void require_same_ring(const SkewPolynomial& a, const SkewPolynomial& b) {
    if (!a.field()->same(*b.field())) throw std::invalid_argument("mixed-field operands");
}
} // namespace

SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b) {
    require_same_ring(a, b);
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
        if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
    }
    SkewPolynomial r(a.field_, std::move(c));
    r.trim();
    return r;
}

SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b) {
    require_same_ring(a, b);
    std::vector<FieldElement> c(std::max(a.c_.size(), b.c_.size()), a.field_->zero());
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
        if (i < b.c_.size()) c[i] = c[i] - b.c_[i];
    }
    SkewPolynomial r(a.field_, std::move(c));
    r.trim();
    return r;
}

SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b) {
    require_same_ring(a, b);
    if (a.is_zero() || b.is_zero()) return SkewPolynomial::zero(a.field_);
    std::vector<FieldElement> c(a.c_.size() + b.c_.size() - 1, a.field_->zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] = c[i + j] + a.c_[i] * b.c_[j].frobenius(static_cast<unsigned>(i));
        }
    }
    SkewPolynomial r(a.field_, std::move(c));
    r.trim();
    return r;
}

FieldElement SkewPolynomial::eval(const FieldElement& a) const {
    if (!a.field() || !a.field()->same(*field_)) throw std::invalid_argument("mixed-field operands");
    FieldElement acc = field_->zero();
    FieldElement norm = field_->one(); // N_0
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i > 0) norm = norm.frobenius() * a;
        if (!c_[i].is_zero()) acc = acc + c_[i] * norm;
    }
    return acc;
}

FieldElement norm_iterate(unsigned i, const FieldElement& a) {
    if (!a.field()) throw std::invalid_argument("detached field element");
    FieldElement n = a.field()->one();
    for (unsigned s = 0; s < i; ++s) n = n.frobenius() * a;
    return n;
}

FieldElement conjugate(const FieldElement& a, const FieldElement& beta) {
    if (beta.is_zero()) throw std::invalid_argument("conjugation by zero");
    return beta.frobenius() * a * beta.inv();
}

FieldElement linearized_eval(const SkewPolynomial& f, const FieldElement& a,
                             const FieldElement& beta) {
    if (beta.is_zero()) return beta.field() ? beta.field()->zero() : beta;
    return f.eval(conjugate(a, beta)) * beta;
}

unsigned kernel_dimension(const SkewPolynomial& f, const FieldElement& a) {
    const FieldPtr& F = f.field();
    if (!a.field() || !a.field()->same(*F)) throw std::invalid_argument("mixed-field operands");
    unsigned t = F->t();
    // matrix of D_{f,a} in the power basis, one column per basis image
    std::vector<std::vector<uint32_t>> m(t, std::vector<uint32_t>(t, 0));
    for (unsigned j = 0; j < t; ++j) {
        std::vector<uint32_t> basis(t, 0);
        basis[j] = 1;
        FieldElement img = linearized_eval(f, a, F->from_coords(basis));
        for (unsigned i = 0; i < t; ++i) m[i][j] = img.coords()[i];
    }
    return t - static_cast<unsigned>(rank_mod_q(std::move(m), F->q()));
}

FieldMatrix skew_vandermonde(unsigned k, std::span<const FieldElement> points) {
    if (points.empty()) throw std::invalid_argument("empty point set");
    const FieldPtr& F = points[0].field();
    if (!F) throw std::invalid_argument("detached field element");
    for (const auto& p : points)
        if (!p.field() || !p.field()->same(*F)) throw std::invalid_argument("mixed-field operands");
    FieldMatrix m(F, k, points.size());
    for (size_t j = 0; j < points.size(); ++j) {
        FieldElement norm = F->one();
        for (unsigned i = 0; i < k; ++i) {
            if (i > 0) norm = norm.frobenius() * points[j];
            m.at(i, j) = norm;
        }
    }
    return m;
}

SkewPolynomial minimal_annihilator(const FieldPtr& f, std::span<const FieldElement> points) {
    SkewPolynomial p = SkewPolynomial::one(f);
    for (const auto& c : points) {
        if (!c.field() || !c.field()->same(*f)) throw std::invalid_argument("mixed-field operands");
        FieldElement v = p.eval(c);
        if (v.is_zero()) continue;
        // (x - conjugate(c, v)) * p kills c by the product rule and keeps all
        // previous roots
        SkewPolynomial lin = SkewPolynomial::x(f) - SkewPolynomial::monomial(conjugate(c, v), 0);
        p = lin * p;
    }
    return p;
}

bool ConjugacyClass::contains(const FieldElement& e) const {
    auto it = std::lower_bound(members.begin(), members.end(), e,
                               [](const FieldElement& a, const FieldElement& b) {
                                   return a.index() < b.index();
                               });
    return it != members.end() && *it == e;
}

std::vector<ConjugacyClass> conjugacy_partition(const FieldPtr& f) {
    if (f->order() > (1ULL << 20))
        throw InfeasibleError("conjugacy partition materialization limited to fields of order <= 2^20");
    uint64_t q = f->q();
    uint64_t m = f->order() - 1;
    std::vector<ConjugacyClass> classes;
    classes.push_back({f->zero(), {f->zero()}});

    // dlog table via one sweep of gamma powers
    std::vector<uint64_t> exp_table(m);
    FieldElement g = f->gamma();
    FieldElement cur = f->one();
    for (uint64_t i = 0; i < m; ++i) {
        exp_table[i] = cur.index();
        cur = cur * g;
    }
    uint64_t step = q - 1;
    for (uint64_t i = 0; i < step; ++i) {
        ConjugacyClass cls;
        cls.representative = g.pow(i);
        for (uint64_t j = i; j < m; j += step) cls.members.push_back(f->from_index(exp_table[j]));
        std::sort(cls.members.begin(), cls.members.end(),
                  [](const FieldElement& a, const FieldElement& b) { return a.index() < b.index(); });
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace skewconv
