#pragma once

#include <span>
#include <vector>

#include "skewconv/gf.hpp"
#include "skewconv/linalg.hpp"

namespace skewconv {

/// Polynomial in the twisted ring F_{q^t}[x; sigma] where sigma is the
/// q-power Frobenius and x * a = sigma(a) * x. Multiplication is therefore
/// noncommutative; everything else looks like an ordinary dense polynomial.
class SkewPolynomial {
  public:
    static SkewPolynomial zero(const FieldPtr& f) { return SkewPolynomial(f, {}); }
    static SkewPolynomial one(const FieldPtr& f);
    static SkewPolynomial x(const FieldPtr& f);
    /// Coefficients lowest-degree first; trailing zeros are trimmed.
    static SkewPolynomial from_coeffs(const FieldPtr& f, std::vector<FieldElement> coeffs);
    /// c * x^i
    static SkewPolynomial monomial(const FieldElement& c, size_t i);

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 marks the zero polynomial (whose degree is undefined).
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    FieldElement coeff(size_t i) const;
    const std::vector<FieldElement>& coeffs() const { return c_; }
    FieldElement leading() const;

    friend SkewPolynomial operator+(const SkewPolynomial& a, const SkewPolynomial& b);
    friend SkewPolynomial operator-(const SkewPolynomial& a, const SkewPolynomial& b);
    /// Skew product: (f g)_n = sum_{i+j=n} f_i sigma^i(g_j).
    friend SkewPolynomial operator*(const SkewPolynomial& a, const SkewPolynomial& b);

    bool operator==(const SkewPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const SkewPolynomial& o) const { return !(*this == o); }

    /// Remainder evaluation f(a) = sum f_i N_i(a).
    FieldElement eval(const FieldElement& a) const;

  private:
    SkewPolynomial(FieldPtr f, std::vector<FieldElement> c)
        : field_(std::move(f)), c_(std::move(c)) {}
    void trim();

    FieldPtr field_;
    std::vector<FieldElement> c_; // lowest first; empty <=> zero
};

/// Truncated norm N_i(a): N_0 = 1, N_{i+1}(a) = sigma(N_i(a)) * a.
FieldElement norm_iterate(unsigned i, const FieldElement& a);

/// Conjugate of a by beta: sigma(beta) * a * beta^{-1}. beta must be nonzero.
FieldElement conjugate(const FieldElement& a, const FieldElement& beta);

/// D_{f,a}(beta) = f(conjugate(a, beta)) * beta for beta != 0, and 0 at 0.
/// F_q-linear in beta.
FieldElement linearized_eval(const SkewPolynomial& f, const FieldElement& a,
                             const FieldElement& beta);

/// F_q-dimension of the kernel of D_{f,a} on F_{q^t}.
unsigned kernel_dimension(const SkewPolynomial& f, const FieldElement& a);

/// k x |points| matrix with entry (i, j) = N_i(points[j]).
FieldMatrix skew_vandermonde(unsigned k, std::span<const FieldElement> points);

/// Monic polynomial of minimal degree vanishing (under eval) on all points.
SkewPolynomial minimal_annihilator(const FieldPtr& f, std::span<const FieldElement> points);

struct ConjugacyClass {
    FieldElement representative;
    std::vector<FieldElement> members; // sorted by element index
    bool contains(const FieldElement& e) const;
};

/// Classes of the conjugacy relation b ~ a iff b = sigma(beta) a beta^{-1}:
/// [{0}] followed by the classes of gamma^0, ..., gamma^{q-2}. Each nonzero
/// class has (q^t - 1)/(q - 1) members. Guarded to fields of order <= 2^20.
std::vector<ConjugacyClass> conjugacy_partition(const FieldPtr& f);

} // namespace skewconv
