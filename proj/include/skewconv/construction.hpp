#pragma once

#include <optional>

#include "skewconv/conv.hpp"
#include "skewconv/skew.hpp"

namespace skewconv {

/// Evaluation data for a rate-k/n unit-memory code over F_{q^{2k}}:
/// lambdas are n distinct base-field scalars; alpha_i truncates the
/// geometric coordinate vector of lambda_i to its first k coordinates,
/// beta_i uses all 2k.
struct EvaluationPoints {
    std::vector<uint32_t> lambdas;
    std::vector<FieldElement> alphas;
    std::vector<FieldElement> betas;
};

/// Canonical lambdas are 0..n-1; a seed applies a deterministic permutation.
EvaluationPoints build_points(const FieldPtr& field, unsigned n, unsigned k,
                              std::optional<uint64_t> lambda_seed = {});

/// G0[j][i] = N_j(conjugate(1, alpha_i)) * alpha_i,
/// G1[j][i] = N_j(conjugate(gamma, beta_i)) * beta_i, j = 0..k-1.
std::pair<FieldMatrix, FieldMatrix> build_generator(const FieldPtr& field,
                                                    const EvaluationPoints& points, unsigned k);

struct ConvCode {
    unsigned n = 0, k = 0;
    FieldPtr field; // F_{q^{2k}}
    EvaluationPoints points;
    FieldMatrix g0, g1;

    uint64_t q() const { return field->q(); }
    unsigned t() const { return field->t(); }
    PolyMatrix generator() const;
    /// The unit-memory MDP guarantee needs n > 2k.
    bool mdp_guarantee_applies() const { return n > 2 * k; }
};

/// Builds the code over F_{q^{2k}}; q defaults to the smallest prime >=
/// max(3, n). Internally re-verified before returning; a verification
/// failure here is a bug, reported as VerificationError.
ConvCode construct_code(unsigned n, unsigned k, std::optional<uint64_t> q = {},
                        std::optional<uint64_t> lambda_seed = {});

struct ConstructionReport {
    bool ok = false;
    bool minimal = false;
    uint64_t minors_checked = 0;          // k x k minors over both blocks
    std::string witness_matrix;           // "G0" or "G1" when a minor vanishes
    std::vector<size_t> witness_columns;  // 1-based
};

/// Checks every k x k submatrix of G0 and of G1 is nonsingular and the
/// generator matrix is minimal.
ConstructionReport verify_construction(const ConvCode& code);

/// Runs the full MDP minor criterion on the constructed generator.
/// Requires n > 2k (std::invalid_argument otherwise).
MdpReport verify_mdp_guarantee(const ConvCode& code);

struct DualMdpReport {
    bool dual_mdp = false;
    unsigned dual_k = 0;     // n - k
    uint64_t dual_delta = 0; // k
    unsigned L = 0;          // dual code's MDP window index
    MinorCheckReport minors;
};

/// Decides whether the dual (n, n-k, delta=k) code is MDP by running the
/// parity-kind minor criterion with the primal generator as parity check.
DualMdpReport verify_dual_mdp(const ConvCode& code);

} // namespace skewconv
