#include "skewconv/gf.hpp"

#include <algorithm>
#include <cassert>

namespace skewconv {

namespace {

constexpr uint64_t kMaxFieldOrder = 1ULL << 48;

// Dense little-endian polynomials over F_q, used only for modulus selection
// and element inversion.
using Poly = std::vector<uint32_t>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

uint64_t inv_mod(uint64_t a, uint64_t q) {
    // extended Euclid; a != 0 mod q, q prime
    int64_t t0 = 0, t1 = 1;
    int64_t r0 = static_cast<int64_t>(q), r1 = static_cast<int64_t>(a % q);
    while (r1 != 0) {
        int64_t k = r0 / r1;
        std::swap(r0 -= k * r1, r1);
        std::swap(t0 -= k * t1, t1);
    }
    if (r0 != 1) throw std::invalid_argument("division by zero in F_q");
    int64_t r = t0 % static_cast<int64_t>(q);
    if (r < 0) r += static_cast<int64_t>(q);
    return static_cast<uint64_t>(r);
}

Poly poly_mul(const Poly& a, const Poly& b, uint64_t q) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % q);
        }
    }
    return r;
}

// remainder of a by monic-normalizable b
Poly poly_rem(Poly a, const Poly& b, uint64_t q) {
    trim(a);
    int db = deg(b);
    assert(db >= 0);
    uint64_t lead_inv = inv_mod(b[db], q);
    while (deg(a) >= db) {
        int da = deg(a);
        uint64_t c = a[da] % q;
        if (c != 0) {
            uint64_t f = c * lead_inv % q;
            for (int i = 0; i <= db; ++i) {
                uint64_t sub = f * b[i] % q;
                uint64_t cur = a[da - db + i];
                a[da - db + i] = static_cast<uint32_t>((cur + q - sub) % q);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, uint64_t q) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, q);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& mod, uint64_t q) {
    Poly r{1};
    base = poly_rem(std::move(base), mod, q);
    while (e > 0) {
        if (e & 1) r = poly_rem(poly_mul(r, base, q), mod, q);
        base = poly_rem(poly_mul(base, base, q), mod, q);
        e >>= 1;
    }
    return r;
}

Poly poly_sub(Poly a, const Poly& b, uint64_t q) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = static_cast<uint32_t>((a[i] + q - b[i]) % q);
    trim(a);
    return a;
}

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fac;
    for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            fac.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fac.push_back(n);
    return fac;
}

// Rabin test: f monic of degree t is irreducible over F_q iff x^{q^t} = x mod f
// and gcd(x^{q^{t/p}} - x, f) = 1 for every prime p | t.
bool is_irreducible(const Poly& f, uint64_t q) {
    int t = deg(f);
    if (t < 1) return false;
    if (t == 1) return true;
    Poly x{0, 1};
    std::vector<Poly> frob(static_cast<size_t>(t) + 1);
    frob[0] = x;
    for (int i = 1; i <= t; ++i) frob[i] = poly_powmod(frob[i - 1], q, f, q);
    if (poly_sub(frob[t], x, q) != Poly{}) return false;
    for (uint64_t p : prime_factors(static_cast<uint64_t>(t))) {
        Poly g = poly_gcd(f, poly_sub(frob[t / p], x, q), q);
        if (deg(g) != 0) return false;
    }
    return true;
}

} // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

uint64_t smallest_prime_at_least(uint64_t n) {
    uint64_t p = std::max<uint64_t>(n, 2);
    while (!is_prime(p)) ++p;
    return p;
}

// ---------------------------------------------------------------------------
// ExtensionField

FieldPtr ExtensionField::make(uint64_t q, unsigned t) {
    if (!is_prime(q) || q < 3) throw std::invalid_argument("q must be a prime >= 3");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    uint64_t order = 1;
    for (unsigned i = 0; i < t; ++i) {
        if (order > kMaxFieldOrder / q) throw InfeasibleError("field order q^t exceeds 2^48");
        order *= q;
    }

    auto f = std::shared_ptr<ExtensionField>(new ExtensionField());
    f->q_ = q;
    f->t_ = t;
    f->order_ = order;

    // Lexicographically smallest monic irreducible: scan non-leading
    // coefficient tuples (c_0, ..., c_{t-1}) in lex order, c_0 first.
    for (uint64_t idx = 0;; ++idx) {
        if (idx >= order) throw VerificationError("no irreducible modulus found");
        Poly cand(t + 1, 0);
        uint64_t rem = idx;
        for (unsigned j = 0; j < t; ++j) {
            uint64_t place = 1;
            for (unsigned s = j + 1; s < t; ++s) place *= q;
            cand[j] = static_cast<uint32_t>(rem / place);
            rem %= place;
        }
        cand[t] = 1;
        if (is_irreducible(cand, q)) {
            f->modulus_ = std::move(cand);
            break;
        }
    }

    // w^{t+i} mod modulus for schoolbook reduction.
    f->red_.resize(t);
    std::vector<uint32_t> cur(t, 0); // w^t mod modulus = -(low part)
    for (unsigned j = 0; j < t; ++j) cur[j] = static_cast<uint32_t>((q - f->modulus_[j]) % q);
    f->red_[0] = cur;
    for (unsigned i = 1; i < t; ++i) {
        std::vector<uint32_t> nxt(t, 0);
        uint32_t carry = cur[t - 1];
        for (unsigned j = t - 1; j > 0; --j) nxt[j] = cur[j - 1];
        nxt[0] = 0;
        if (carry != 0) {
            for (unsigned j = 0; j < t; ++j) {
                nxt[j] = static_cast<uint32_t>((nxt[j] + static_cast<uint64_t>(carry) * f->red_[0][j]) % q);
            }
        }
        f->red_[i] = nxt;
        cur = std::move(nxt);
    }

    // Smallest multiplicative generator in the same lex order.
    std::vector<uint64_t> fac = prime_factors(order - 1);
    for (uint64_t idx = 1; idx < order; ++idx) {
        FieldElement cand = f->from_index(idx);
        bool primitive = true;
        for (uint64_t r : fac) {
            if (cand.pow((order - 1) / r).is_one()) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            f->gamma_ = cand.coords();
            break;
        }
    }
    if (f->gamma_.empty()) throw VerificationError("no multiplicative generator found");
    return f;
}

FieldPtr ExtensionField::from_descriptor(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("t") || !j.contains("modulus") ||
        !j.contains("gamma")) {
        throw std::invalid_argument("field descriptor must have q, t, modulus, gamma");
    }
    uint64_t q = j.at("q").get<uint64_t>();
    unsigned t = j.at("t").get<unsigned>();
    if (!is_prime(q) || q < 3) throw std::invalid_argument("q must be a prime >= 3");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    uint64_t order = 1;
    for (unsigned i = 0; i < t; ++i) {
        if (order > kMaxFieldOrder / q) throw InfeasibleError("field order q^t exceeds 2^48");
        order *= q;
    }

    auto mod = j.at("modulus").get<std::vector<int64_t>>();
    if (mod.size() != t + 1) throw std::invalid_argument("modulus must have t+1 coefficients");
    Poly m(t + 1);
    for (size_t i = 0; i <= t; ++i) {
        if (mod[i] < 0 || static_cast<uint64_t>(mod[i]) >= q)
            throw std::invalid_argument("modulus coefficient out of range");
        m[i] = static_cast<uint32_t>(mod[i]);
    }
    if (m[t] != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(m, q)) throw std::invalid_argument("modulus is reducible");

    auto f = std::shared_ptr<ExtensionField>(new ExtensionField());
    f->q_ = q;
    f->t_ = t;
    f->order_ = order;
    f->modulus_ = m;
    f->red_.resize(t);
    std::vector<uint32_t> cur(t, 0);
    for (unsigned i = 0; i < t; ++i) cur[i] = static_cast<uint32_t>((q - m[i]) % q);
    f->red_[0] = cur;
    for (unsigned i = 1; i < t; ++i) {
        std::vector<uint32_t> nxt(t, 0);
        uint32_t carry = cur[t - 1];
        for (unsigned k = t - 1; k > 0; --k) nxt[k] = cur[k - 1];
        nxt[0] = 0;
        if (carry != 0) {
            for (unsigned k = 0; k < t; ++k) {
                nxt[k] = static_cast<uint32_t>((nxt[k] + static_cast<uint64_t>(carry) * f->red_[0][k]) % q);
            }
        }
        f->red_[i] = nxt;
        cur = std::move(nxt);
    }

    auto g = j.at("gamma").get<std::vector<int64_t>>();
    FieldElement gamma = f->from_coords(g);
    if (gamma.is_zero()) throw std::invalid_argument("gamma must be nonzero");
    for (uint64_t r : prime_factors(order - 1)) {
        if (gamma.pow((order - 1) / r).is_one())
            throw std::invalid_argument("gamma does not generate the multiplicative group");
    }
    f->gamma_ = gamma.coords();
    return f;
}

FieldElement ExtensionField::wrap(std::vector<uint32_t> c) const {
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement ExtensionField::zero() const { return wrap(std::vector<uint32_t>(t_, 0)); }

FieldElement ExtensionField::one() const {
    std::vector<uint32_t> c(t_, 0);
    c[0] = 1;
    return wrap(std::move(c));
}

FieldElement ExtensionField::gamma() const { return wrap(gamma_); }

FieldElement ExtensionField::from_coords(std::span<const int64_t> coords) const {
    if (coords.size() != t_) throw std::invalid_argument("coordinate vector must have length t");
    std::vector<uint32_t> c(t_);
    const auto sq = static_cast<int64_t>(q_);
    for (unsigned i = 0; i < t_; ++i)
        c[i] = static_cast<uint32_t>(((coords[i] % sq) + sq) % sq);
    return wrap(std::move(c));
}

FieldElement ExtensionField::from_coords(std::span<const uint32_t> coords) const {
    if (coords.size() != t_) throw std::invalid_argument("coordinate vector must have length t");
    std::vector<uint32_t> c(coords.begin(), coords.end());
    for (uint32_t v : c)
        if (v >= q_) throw std::invalid_argument("coordinate out of range [0, q)");
    return wrap(std::move(c));
}

FieldElement ExtensionField::from_index(uint64_t idx) const {
    if (idx >= order_) throw std::invalid_argument("element index out of range");
    std::vector<uint32_t> c(t_);
    for (unsigned j = t_; j-- > 0;) {
        c[j] = static_cast<uint32_t>(idx % q_);
        idx /= q_;
    }
    // c[0] is the most significant digit, matching the lex element order
    return wrap(std::move(c));
}

FieldElement ExtensionField::from_base(uint64_t c) const {
    std::vector<uint32_t> v(t_, 0);
    v[0] = static_cast<uint32_t>(c % q_);
    return wrap(std::move(v));
}

nlohmann::ordered_json ExtensionField::descriptor() const {
    nlohmann::ordered_json j;
    j["q"] = q_;
    j["t"] = t_;
    j["modulus"] = modulus_;
    j["gamma"] = gamma_;
    return j;
}

uint32_t ExtensionField::base_add(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) + b) % q_);
}
uint32_t ExtensionField::base_sub(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) + q_ - b) % q_);
}
uint32_t ExtensionField::base_mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % q_);
}
uint32_t ExtensionField::base_neg(uint32_t a) const {
    return static_cast<uint32_t>((q_ - a) % q_);
}
uint32_t ExtensionField::base_inv(uint32_t a) const {
    return static_cast<uint32_t>(inv_mod(a, q_));
}

std::vector<uint32_t> ExtensionField::mul_coords(const std::vector<uint32_t>& a,
                                                 const std::vector<uint32_t>& b) const {
    std::vector<uint64_t> full(2 * t_ - 1, 0);
    for (unsigned i = 0; i < t_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < t_; ++j) full[i + j] += static_cast<uint64_t>(a[i]) * b[j];
    }
    for (auto& v : full) v %= q_;
    // fold w^{t+i} terms back using the precomputed reductions
    for (unsigned i = 2 * t_ - 1; i-- > t_;) {
        uint64_t c = full[i];
        if (c == 0) continue;
        const auto& red = red_[i - t_];
        for (unsigned j = 0; j < t_; ++j) full[j] = (full[j] + c * red[j]) % q_;
        full[i] = 0;
    }
    std::vector<uint32_t> out(t_);
    for (unsigned j = 0; j < t_; ++j) out[j] = static_cast<uint32_t>(full[j]);
    return out;
}

std::vector<uint32_t> ExtensionField::inv_coords(const std::vector<uint32_t>& a) const {
    Poly p(a);
    trim(p);
    if (p.empty()) throw std::invalid_argument("division by zero");
    // extended Euclid in F_q[x]: u*p + v*modulus = gcd
    Poly r0(modulus_), r1 = p;
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        // r0 = qt * r1 + r2
        Poly qt;
        Poly rem = r0;
        int d1 = deg(r1);
        uint64_t li = inv_mod(r1[d1], q_);
        qt.assign(std::max(deg(rem) - d1 + 1, 0), 0);
        while (deg(rem) >= d1) {
            int dr = deg(rem);
            uint64_t c = rem[dr] % q_;
            if (c != 0) {
                uint64_t f = c * li % q_;
                qt[dr - d1] = static_cast<uint32_t>(f);
                for (int i = 0; i <= d1; ++i) {
                    uint64_t sub = f * r1[i] % q_;
                    rem[dr - d1 + i] = static_cast<uint32_t>((rem[dr - d1 + i] + q_ - sub) % q_);
                }
            }
            rem.pop_back();
            trim(rem);
        }
        Poly s2 = poly_sub(s0, poly_mul(qt, s1, q_), q_);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a unit since modulus is irreducible and p != 0)
    assert(deg(r0) == 0);
    uint64_t gi = inv_mod(r0[0], q_);
    std::vector<uint32_t> out(t_, 0);
    for (size_t i = 0; i < s0.size() && i < t_; ++i)
        out[i] = static_cast<uint32_t>(s0[i] * gi % q_);
    return out;
}

// ---------------------------------------------------------------------------
// FieldElement

namespace {
const FieldPtr& require_field(const FieldElement& e) {
    if (!e.field()) throw std::invalid_argument("operation on detached field element");
    return e.field();
}
void require_same(const FieldElement& a, const FieldElement& b) {
    require_field(a);
    require_field(b);
    if (!a.field()->same(*b.field())) throw std::invalid_argument("mixed-field operands");
}
} // namespace

bool FieldElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t v) { return v == 0; });
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t v) { return v == 0; });
}

uint64_t FieldElement::index() const {
    require_field(*this);
    uint64_t idx = 0;
    for (uint32_t v : c_) idx = idx * field_->q() + v;
    return idx;
}

FieldElement FieldElement::operator-() const {
    const auto& f = require_field(*this);
    std::vector<uint32_t> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = f->base_neg(c_[i]);
    return FieldElement(f, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    std::vector<uint32_t> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.field_->base_add(a.c_[i], b.c_[i]);
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    std::vector<uint32_t> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.field_->base_sub(a.c_[i], b.c_[i]);
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return FieldElement(a.field_, a.field_->mul_coords(a.c_, b.c_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return a * b.inv();
}

FieldElement FieldElement::inv() const {
    const auto& f = require_field(*this);
    return FieldElement(f, f->inv_coords(c_));
}

FieldElement FieldElement::pow(uint64_t e) const {
    const auto& f = require_field(*this);
    FieldElement r = f->one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::frobenius(unsigned i) const {
    const auto& f = require_field(*this);
    i %= f->t();
    if (i == 0) return *this;
    uint64_t e = 1;
    for (unsigned s = 0; s < i; ++s) e *= f->q();
    return pow(e);
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (!field_ || !o.field_) return field_ == o.field_ && c_ == o.c_;
    return field_->same(*o.field_) && c_ == o.c_;
}

std::string FieldElement::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!out.empty()) out += "+";
        if (j == 0) {
            out += std::to_string(c_[j]);
        } else {
            if (c_[j] != 1) out += std::to_string(c_[j]);
            out += "w";
            if (j > 1) out += "^" + std::to_string(j);
        }
    }
    return out;
}

} // namespace skewconv
