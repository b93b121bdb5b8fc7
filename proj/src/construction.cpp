#include "skewconv/construction.hpp"

#include <numeric>

#include "skewconv/common.hpp"

namespace skewconv {

EvaluationPoints build_points(const FieldPtr& field, unsigned n, unsigned k,
                              std::optional<uint64_t> lambda_seed) {
    if (k < 1 || n <= k) throw std::invalid_argument("need n > k >= 1");
    if (field->t() != 2 * k) throw std::invalid_argument("field degree must equal 2k");
    if (n > field->q()) throw std::invalid_argument("q too small: need n distinct lambdas in F_q");

    EvaluationPoints pts;
    pts.lambdas.resize(n);
    std::iota(pts.lambdas.begin(), pts.lambdas.end(), 0);
    if (lambda_seed) {
        DetRng rng(*lambda_seed);
        for (size_t i = n; i > 1; --i) std::swap(pts.lambdas[i - 1], pts.lambdas[rng.below(i)]);
    }

    unsigned t = field->t();
    for (uint32_t lam : pts.lambdas) {
        // geometric coordinate vector (1, lam, lam^2, ...) over F_q
        std::vector<uint32_t> full(t, 0);
        uint32_t p = 1;
        for (unsigned j = 0; j < t; ++j) {
            full[j] = p;
            p = field->base_mul(p, lam);
        }
        std::vector<uint32_t> head(t, 0);
        for (unsigned j = 0; j < k; ++j) head[j] = full[j];
        pts.alphas.push_back(field->from_coords(head));
        pts.betas.push_back(field->from_coords(full));
    }
    return pts;
}

std::pair<FieldMatrix, FieldMatrix> build_generator(const FieldPtr& field,
                                                    const EvaluationPoints& points, unsigned k) {
    size_t n = points.lambdas.size();
    FieldMatrix g0(field, k, n), g1(field, k, n);
    FieldElement one = field->one();
    FieldElement gamma = field->gamma();
    for (size_t i = 0; i < n; ++i) {
        FieldElement ca = conjugate(one, points.alphas[i]);
        FieldElement cb = conjugate(gamma, points.betas[i]);
        FieldElement na = field->one(); // N_0
        FieldElement nb = field->one();
        for (unsigned j = 0; j < k; ++j) {
            if (j > 0) {
                na = na.frobenius() * ca;
                nb = nb.frobenius() * cb;
            }
            g0.at(j, i) = na * points.alphas[i];
            g1.at(j, i) = nb * points.betas[i];
        }
    }
    return {std::move(g0), std::move(g1)};
}

PolyMatrix ConvCode::generator() const {
    return PolyMatrix::from_blocks({g0, g1});
}

ConvCode construct_code(unsigned n, unsigned k, std::optional<uint64_t> q,
                        std::optional<uint64_t> lambda_seed) {
    if (k < 1 || n <= k) throw std::invalid_argument("need n > k >= 1");
    uint64_t qq = q ? *q : smallest_prime_at_least(std::max(3u, n));
    if (!is_prime(qq) || qq < 3) throw std::invalid_argument("q must be a prime >= 3");
    if (qq < n) throw std::invalid_argument("q too small: need n distinct lambdas in F_q");

    ConvCode code;
    code.n = n;
    code.k = k;
    code.field = ExtensionField::make(qq, 2 * k);
    code.points = build_points(code.field, n, k, lambda_seed);
    auto [g0, g1] = build_generator(code.field, code.points, k);
    code.g0 = std::move(g0);
    code.g1 = std::move(g1);

    ConstructionReport rep = verify_construction(code);
    if (!rep.ok) {
        throw VerificationError("construction self-check failed on " + rep.witness_matrix +
                                " (this indicates a bug)");
    }
    return code;
}

ConstructionReport verify_construction(const ConvCode& code) {
    ConstructionReport rep;
    unsigned k = code.k;
    const FieldMatrix* mats[2] = {&code.g0, &code.g1};
    const char* names[2] = {"G0", "G1"};
    for (int which = 0; which < 2; ++which) {
        bool bad = false;
        for_each_column_subset(code.n, k, [&](std::span<const size_t> cols) {
            ++rep.minors_checked;
            if (mats[which]->select_columns(cols).det().is_zero()) {
                rep.witness_matrix = names[which];
                rep.witness_columns.assign(cols.begin(), cols.end());
                for (auto& c : rep.witness_columns) ++c;
                bad = true;
                return false;
            }
            return true;
        });
        if (bad) return rep;
    }
    rep.minimal = is_minimal(code.generator());
    rep.ok = rep.minimal;
    if (!rep.minimal) rep.witness_matrix = "highest-order";
    return rep;
}

MdpReport verify_mdp_guarantee(const ConvCode& code) {
    if (!code.mdp_guarantee_applies())
        throw std::invalid_argument("MDP guarantee requires n > 2k");
    return is_mdp(code.generator());
}

DualMdpReport verify_dual_mdp(const ConvCode& code) {
    DualMdpReport rep;
    rep.dual_k = code.n - code.k;
    rep.dual_delta = code.k;
    SingletonData sd = singleton_data(code.n, rep.dual_k, rep.dual_delta);
    rep.L = sd.L;
    // primal generator acts as the dual's parity check matrix
    TruncatedMatrix t = truncate(code.generator(), rep.L, TruncKind::Parity);
    rep.minors = mdp_minor_check(t);
    rep.dual_mdp = rep.minors.ok;
    return rep;
}

} // namespace skewconv
