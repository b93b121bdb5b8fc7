#include "skewconv/json_io.hpp"

#include <set>

namespace skewconv {

namespace {

ordered_json matrix_json(const FieldMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).coords());
        rows.push_back(std::move(row));
    }
    return rows;
}

FieldMatrix matrix_from_json(const FieldPtr& f, const nlohmann::json& j, size_t rows, size_t cols,
                             const char* name) {
    if (!j.is_array() || j.size() != rows)
        throw std::invalid_argument(std::string(name) + " must have k rows");
    FieldMatrix m(f, rows, cols);
    for (size_t r = 0; r < rows; ++r) {
        const auto& row = j[r];
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument(std::string(name) + " rows must have n entries");
        for (size_t c = 0; c < cols; ++c) {
            auto coords = row[c].get<std::vector<int64_t>>();
            m.at(r, c) = f->from_coords(coords);
        }
    }
    return m;
}

} // namespace

ordered_json code_to_json(const ConvCode& code, const ordered_json& verified) {
    ordered_json j;
    j["schema"] = 1;
    j["n"] = code.n;
    j["k"] = code.k;
    j["q"] = code.q();
    j["t"] = code.t();
    j["field"] = code.field->descriptor();
    j["lambdas"] = code.points.lambdas;
    j["G0"] = matrix_json(code.g0);
    j["G1"] = matrix_json(code.g1);
    j["verified"] = verified;
    return j;
}

ConvCode code_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("code file must be a JSON object");
    if (!j.contains("schema") || j.at("schema").get<int64_t>() != 1)
        throw std::invalid_argument("unsupported schema version");
    for (const char* key : {"n", "k", "q", "t", "field", "lambdas", "G0", "G1"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("missing key: ") + key);
    }
    ConvCode code;
    code.n = j.at("n").get<unsigned>();
    code.k = j.at("k").get<unsigned>();
    if (code.k < 1 || code.n <= code.k) throw std::invalid_argument("need n > k >= 1");
    code.field = ExtensionField::from_descriptor(j.at("field"));
    if (code.field->q() != j.at("q").get<uint64_t>() || code.field->t() != j.at("t").get<unsigned>())
        throw std::invalid_argument("q/t do not match the field descriptor");
    if (code.field->t() != 2 * code.k) throw std::invalid_argument("field degree must equal 2k");

    auto lambdas = j.at("lambdas").get<std::vector<int64_t>>();
    if (lambdas.size() != code.n) throw std::invalid_argument("lambdas must have n entries");
    std::set<int64_t> seen;
    for (int64_t l : lambdas) {
        if (l < 0 || static_cast<uint64_t>(l) >= code.field->q())
            throw std::invalid_argument("lambda out of range [0, q)");
        if (!seen.insert(l).second) throw std::invalid_argument("lambdas must be distinct");
    }
    // evaluation points are derived data; generator blocks stay as given
    EvaluationPoints pts;
    pts.lambdas.assign(lambdas.begin(), lambdas.end());
    {
        unsigned t = code.field->t();
        for (uint32_t lam : pts.lambdas) {
            std::vector<uint32_t> full(t, 0);
            uint32_t p = 1;
            for (unsigned s = 0; s < t; ++s) {
                full[s] = p;
                p = code.field->base_mul(p, lam);
            }
            std::vector<uint32_t> head(t, 0);
            for (unsigned s = 0; s < code.k; ++s) head[s] = full[s];
            pts.alphas.push_back(code.field->from_coords(head));
            pts.betas.push_back(code.field->from_coords(full));
        }
    }
    code.points = std::move(pts);
    code.g0 = matrix_from_json(code.field, j.at("G0"), code.k, code.n, "G0");
    code.g1 = matrix_from_json(code.field, j.at("G1"), code.k, code.n, "G1");
    return code;
}

ordered_json construction_report_json(const ConstructionReport& rep) {
    ordered_json j;
    j["ok"] = rep.ok;
    j["minimal"] = rep.minimal;
    j["minors_checked"] = rep.minors_checked;
    if (!rep.ok) {
        j["witness_matrix"] = rep.witness_matrix;
        j["witness_columns"] = rep.witness_columns;
    }
    return j;
}

ordered_json mdp_report_json(const MdpReport& rep, const ConvCode& code) {
    ordered_json j;
    j["guarantee_applies"] = code.mdp_guarantee_applies();
    j["is_mdp"] = rep.is_mdp;
    j["L"] = rep.L;
    j["delta"] = rep.delta;
    j["minors_checked"] = rep.minors.minors_checked;
    if (rep.is_mdp) {
        j["column_distance_at_L"] =
            static_cast<uint64_t>(code.n - code.k) * (rep.L + 1) + 1;
    } else {
        j["witness_columns"] = rep.minors.witness_columns;
    }
    return j;
}

ordered_json dual_report_json(const DualMdpReport& rep) {
    ordered_json j;
    j["dual_mdp"] = rep.dual_mdp;
    j["dual_k"] = rep.dual_k;
    j["dual_delta"] = rep.dual_delta;
    j["L"] = rep.L;
    j["minors_checked"] = rep.minors.minors_checked;
    if (!rep.dual_mdp) j["witness_columns"] = rep.minors.witness_columns;
    return j;
}

ordered_json verification_block(const ConvCode& code) {
    ordered_json v;
    v["construction"] = construction_report_json(verify_construction(code));
    v["mdp"] = mdp_report_json(is_mdp(code.generator()), code);
    v["dual"] = dual_report_json(verify_dual_mdp(code));
    uint64_t q_bound = 2 * std::max<uint64_t>(3, code.n);
    ordered_json fs;
    fs["size"] = code.field->order(); // q^{2k}
    fs["q"] = code.q();
    fs["q_bound"] = q_bound;
    fs["q_within_bound"] = code.q() <= q_bound;
    v["field"] = fs;
    return v;
}

bool verification_ok(const ordered_json& verified) {
    if (!verified.at("construction").at("ok").get<bool>()) return false;
    if (!verified.at("field").at("q_within_bound").get<bool>()) return false;
    bool applies = verified.at("mdp").at("guarantee_applies").get<bool>();
    if (applies) {
        if (!verified.at("mdp").at("is_mdp").get<bool>()) return false;
        if (!verified.at("dual").at("dual_mdp").get<bool>()) return false;
    }
    return true;
}

ordered_json sim_report_json(const SimReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["mode"] = "sample";
    j["j"] = rep.j;
    j["p"] = rep.p;
    j["seed"] = rep.seed;
    j["trials"] = rep.trials;
    j["recovered"] = rep.recovered;
    ordered_json fails = ordered_json::array();
    for (const auto& [pattern, count] : rep.failed_patterns) {
        ordered_json f;
        f["erased"] = pattern;
        f["count"] = count;
        fails.push_back(std::move(f));
    }
    j["failed_patterns"] = std::move(fails);
    return j;
}

ordered_json census_report_json(const CensusReport& rep) {
    ordered_json j;
    j["schema"] = 1;
    j["mode"] = "census";
    j["j"] = rep.j;
    j["patterns"] = rep.patterns;
    j["recoverable"] = rep.recoverable_count;
    j["unrecoverable"] = rep.patterns - rep.recoverable_count;
    return j;
}

} // namespace skewconv
