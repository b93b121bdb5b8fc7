#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "skewconv/common.hpp"

namespace skewconv {

bool is_prime(uint64_t n);
uint64_t smallest_prime_at_least(uint64_t n);

class ExtensionField;
using FieldPtr = std::shared_ptr<const ExtensionField>;

/// Element of F_{q^t}, stored as t coordinates over F_q in the power basis
/// 1, w, ..., w^{t-1} (coords[0] is the constant term). Elements keep a handle
/// to their field so arithmetic operators work standalone; mixing elements of
/// structurally different fields throws std::invalid_argument.
class FieldElement {
  public:
    FieldElement() = default; // detached; any arithmetic on it throws

    const FieldPtr& field() const { return field_; }
    const std::vector<uint32_t>& coords() const { return c_; }
    bool attached() const { return static_cast<bool>(field_); }
    bool is_zero() const;
    bool is_one() const;

    /// Position in the lexicographic enumeration of all field elements
    /// (coords[0] is the most significant digit).
    uint64_t index() const;

    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;
    /// q^i-power Frobenius; i = 1 is the ring automorphism sigma.
    FieldElement frobenius(unsigned i = 1) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const; // human-readable, e.g. "1+2w"

  private:
    friend class ExtensionField;
    FieldElement(FieldPtr f, std::vector<uint32_t> c)
        : field_(std::move(f)), c_(std::move(c)) {}

    FieldPtr field_;
    std::vector<uint32_t> c_;
};

/// F_{q^t} = F_q[w] / (modulus), q an odd prime, t >= 1. The modulus is the
/// lexicographically smallest monic irreducible of degree t and gamma the
/// lexicographically smallest multiplicative generator, so a (q, t) pair
/// always denotes one concrete field and serialized data round-trips
/// bit-identically.
class ExtensionField : public std::enable_shared_from_this<ExtensionField> {
  public:
    static FieldPtr make(uint64_t q, unsigned t);

    /// Rebuild from a serialized descriptor; re-validates primality,
    /// irreducibility of the modulus and that gamma generates the
    /// multiplicative group.
    static FieldPtr from_descriptor(const nlohmann::json& j);

    uint64_t q() const { return q_; }
    unsigned t() const { return t_; }
    uint64_t order() const { return order_; } // q^t

    /// Monic modulus, length t+1, constant term first.
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gamma() const; // fixed primitive element

    /// Signed coordinates are reduced mod q; handy for literals like {-1, 0}.
    FieldElement from_coords(std::span<const int64_t> coords) const;
    /// Strict variant for deserialized data: rejects coords outside [0, q).
    FieldElement from_coords(std::span<const uint32_t> coords) const;
    FieldElement from_index(uint64_t idx) const;
    /// Embeds c mod q as a base-field element.
    FieldElement from_base(uint64_t c) const;

    bool same(const ExtensionField& o) const {
        return q_ == o.q_ && t_ == o.t_ && modulus_ == o.modulus_;
    }

    nlohmann::ordered_json descriptor() const;

    // Base-field helpers (coefficients mod q).
    uint32_t base_add(uint32_t a, uint32_t b) const;
    uint32_t base_sub(uint32_t a, uint32_t b) const;
    uint32_t base_mul(uint32_t a, uint32_t b) const;
    uint32_t base_neg(uint32_t a) const;
    uint32_t base_inv(uint32_t a) const;

  private:
    ExtensionField() = default;

    FieldElement wrap(std::vector<uint32_t> c) const;
    std::vector<uint32_t> mul_coords(const std::vector<uint32_t>& a,
                                     const std::vector<uint32_t>& b) const;
    std::vector<uint32_t> inv_coords(const std::vector<uint32_t>& a) const;

    friend class FieldElement;
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    friend FieldElement operator/(const FieldElement&, const FieldElement&);

    uint64_t q_ = 0;
    unsigned t_ = 0;
    uint64_t order_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<uint32_t> gamma_;
    // red_[i] = coords of w^{t+i} mod modulus, i in [0, t-1]; drives schoolbook
    // reduction of degree <= 2t-2 products.
    std::vector<std::vector<uint32_t>> red_;
};

inline bool same_field(const FieldElement& a, const FieldElement& b) {
    return a.field() && b.field() && a.field()->same(*b.field());
}

} // namespace skewconv
