// Command-line front end: construct / verify / profile / simulate / field-info.
// stdout carries machine-readable JSON or CSV only; configuration echoes,
// warnings and timings go to stderr. Exit codes: 0 ok, 2 bad parameters or
// malformed input, 3 failed verification, 4 infeasible exact computation.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "skewconv/json_io.hpp"

using namespace skewconv;

namespace {

void echo_config(const ordered_json& cfg) {
    std::cerr << "config " << cfg.dump() << "\n";
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

int run_construct(unsigned n, unsigned k, std::optional<uint64_t> q,
                  std::optional<uint64_t> lambda_seed, const std::string& out) {
    ordered_json cfg{{"command", "construct"}, {"n", n}, {"k", k}};
    cfg["q"] = q ? ordered_json(*q) : ordered_json(nullptr);
    cfg["lambda_seed"] = lambda_seed ? ordered_json(*lambda_seed) : ordered_json(nullptr);
    cfg["out"] = out.empty() ? ordered_json(nullptr) : ordered_json(out);
    echo_config(cfg);

    ConvCode code = construct_code(n, k, q, lambda_seed);
    if (!code.mdp_guarantee_applies())
        std::cerr << "warning: n <= 2k, the distance-profile guarantee does not apply;"
                     " mdp/dual results are informational\n";
    ordered_json verified = verification_block(code);
    ordered_json doc = code_to_json(code, verified);
    std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!out.empty()) {
        std::ofstream of(out);
        if (!of) throw std::invalid_argument("cannot write file: " + out);
        of << text;
    }
    return verification_ok(verified) ? 0 : 3;
}

int run_verify(const std::string& path, const std::string& mode) {
    echo_config({{"command", "verify"}, {"file", path}, {"mode", mode}});
    ConvCode code = code_from_json(load_json_file(path));

    ordered_json out;
    out["schema"] = 1;
    out["check"] = mode;
    bool ok = true;
    if (mode == "construction" || mode == "all") {
        ConstructionReport rep = verify_construction(code);
        ordered_json j = construction_report_json(rep);
        ok = ok && rep.ok;
        if (mode == "all")
            out["construction"] = j;
        else
            out.update(j);
    }
    if (mode == "mdp" || mode == "all") {
        MdpReport rep = is_mdp(code.generator());
        ordered_json j = mdp_report_json(rep, code);
        ok = ok && rep.is_mdp;
        if (mode == "all")
            out["mdp"] = j;
        else
            out.update(j);
    }
    if (mode == "dual" || mode == "all") {
        DualMdpReport rep = verify_dual_mdp(code);
        ordered_json j = dual_report_json(rep);
        ok = ok && rep.dual_mdp;
        if (mode == "all")
            out["dual"] = j;
        else
            out.update(j);
    }
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 3;
}

int run_profile(const std::string& path, unsigned jmax, std::optional<unsigned> max_deg,
                const std::string& engine_name) {
    echo_config({{"command", "profile"},
                 {"file", path},
                 {"jmax", jmax},
                 {"max_deg", max_deg ? ordered_json(*max_deg) : ordered_json(nullptr)},
                 {"engine", engine_name}});
    DistanceEngine engine = DistanceEngine::Auto;
    if (engine_name == "message") engine = DistanceEngine::MessageEnum;
    else if (engine_name == "support") engine = DistanceEngine::SupportEnum;
    else if (engine_name != "auto") throw std::invalid_argument("unknown engine: " + engine_name);

    ConvCode code = code_from_json(load_json_file(path));
    DistanceProfile p = distance_profile(code.generator(), jmax, max_deg, engine);
    std::cout << profile_csv(p);
    return 0;
}

int run_simulate(const std::string& path, unsigned j, double p, uint64_t trials, uint64_t seed,
                 bool exhaustive, const std::string& pattern_csv) {
    echo_config({{"command", "simulate"},
                 {"file", path},
                 {"j", j},
                 {"p", p},
                 {"trials", trials},
                 {"seed", seed},
                 {"exhaustive", exhaustive},
                 {"pattern_csv", pattern_csv.empty() ? ordered_json(nullptr)
                                                     : ordered_json(pattern_csv)}});
    ConvCode code = code_from_json(load_json_file(path));
    if (exhaustive) {
        CensusReport rep = erasure_census(code, j);
        std::cout << census_report_json(rep).dump(2) << "\n";
        std::cerr << "wall_ms " << rep.wall_ms << "\n";
        if (!pattern_csv.empty()) {
            std::ofstream of(pattern_csv);
            if (!of) throw std::invalid_argument("cannot write file: " + pattern_csv);
            of << census_csv(rep);
        }
        return 0;
    }
    if (!pattern_csv.empty())
        throw std::invalid_argument("--pattern-csv requires --exhaustive");
    SimReport rep = simulate(code, j, p, trials, seed);
    std::cout << sim_report_json(rep).dump(2) << "\n";
    std::cerr << "wall_ms " << rep.wall_ms << "\n";
    return 0;
}

int run_field_info(uint64_t q, unsigned t) {
    echo_config({{"command", "field-info"}, {"q", q}, {"t", t}});
    FieldPtr f = ExtensionField::make(q, t);
    ordered_json out;
    out["schema"] = 1;
    out.update(f->descriptor());
    std::cout << out.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew-polynomial unit-memory convolutional codes"};
    app.require_subcommand(1);

    // construct
    auto* c = app.add_subcommand("construct", "build a code and verify it");
    unsigned n = 0, k = 0;
    std::optional<uint64_t> q, lambda_seed;
    std::string out_path;
    c->add_option("--n", n, "code length")->required();
    c->add_option("--k", k, "code dimension")->required();
    c->add_option("--q", q, "base field size (default: smallest prime >= max(3, n))");
    c->add_option("--lambda-seed", lambda_seed, "permute the evaluation scalars");
    c->add_option("--out", out_path, "also write the code JSON to this file");

    // verify
    auto* v = app.add_subcommand("verify", "re-check an exported code");
    std::string v_path, v_mode = "all";
    v->add_option("file", v_path, "code JSON file")->required();
    v->add_option("--mode", v_mode, "construction | mdp | dual | all")
        ->check(CLI::IsMember({"construction", "mdp", "dual", "all"}));

    // profile
    auto* pr = app.add_subcommand("profile", "column distance profile as CSV");
    std::string p_path, engine = "auto";
    unsigned jmax = 0;
    std::optional<unsigned> max_deg;
    pr->add_option("file", p_path, "code JSON file")->required();
    pr->add_option("--jmax", jmax, "largest window index")->required();
    pr->add_option("--max-deg", max_deg, "message degree cap for the free-distance scan");
    pr->add_option("--engine", engine, "auto | message | support")
        ->check(CLI::IsMember({"auto", "message", "support"}));

    // simulate
    auto* s = app.add_subcommand("simulate", "erasure-channel recovery simulation");
    std::string s_path, pattern_csv;
    unsigned s_j = 0;
    double s_p = 0.0;
    uint64_t trials = 1000, seed = 0;
    bool exhaustive = false;
    s->add_option("file", s_path, "code JSON file")->required();
    s->add_option("--j", s_j, "window index")->required();
    s->add_option("--p", s_p, "erasure probability in [0, 1]");
    s->add_option("--trials", trials, "number of sampled windows");
    s->add_option("--seed", seed, "rng seed");
    s->add_flag("--exhaustive", exhaustive, "enumerate all patterns instead of sampling");
    s->add_option("--pattern-csv", pattern_csv, "write per-pattern census CSV here");

    // field-info
    auto* fi = app.add_subcommand("field-info", "canonical field descriptor");
    uint64_t fq = 0;
    unsigned ft = 0;
    fi->add_option("--q", fq, "base field size")->required();
    fi->add_option("--t", ft, "extension degree")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // parameter errors are exit 2
    }

    try {
        if (c->parsed()) return run_construct(n, k, q, lambda_seed, out_path);
        if (v->parsed()) return run_verify(v_path, v_mode);
        if (pr->parsed()) return run_profile(p_path, jmax, max_deg, engine);
        if (s->parsed()) return run_simulate(s_path, s_j, s_p, trials, seed, exhaustive, pattern_csv);
        if (fi->parsed()) return run_field_info(fq, ft);
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
