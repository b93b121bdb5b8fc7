// Python bindings. Reports cross the boundary as plain dicts/lists mirroring
// the CLI's JSON output; codes are the same dict shape the CLI writes to disk.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewconv/json_io.hpp"

namespace py = pybind11;
using namespace skewconv;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
    switch (j.type()) {
    case nlohmann::ordered_json::value_t::null:
        return py::none();
    case nlohmann::ordered_json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_unsigned:
        return py::int_(j.get<uint64_t>());
    case nlohmann::ordered_json::value_t::number_integer:
        return py::int_(j.get<int64_t>());
    case nlohmann::ordered_json::value_t::number_float:
        return py::float_(j.get<double>());
    case nlohmann::ordered_json::value_t::string:
        return py::str(j.get<std::string>());
    case nlohmann::ordered_json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(json_to_py(item));
        return out;
    }
    case nlohmann::ordered_json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
        return out;
    }
    default:
        throw std::invalid_argument("unsupported JSON value");
    }
}

nlohmann::json py_to_json(const py::handle& h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<int64_t>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& item : h) arr.push_back(py_to_json(item));
        return arr;
    }
    if (py::isinstance<py::dict>(h)) {
        nlohmann::json obj = nlohmann::json::object();
        for (const auto& item : h.cast<py::dict>())
            obj[item.first.cast<std::string>()] = py_to_json(item.second);
        return obj;
    }
    throw py::type_error("expected a JSON-like value (None/bool/int/float/str/list/dict)");
}

ConvCode code_from_py(const py::dict& d) { return code_from_json(py_to_json(d)); }

DistanceEngine engine_from_name(const std::string& name) {
    if (name == "auto") return DistanceEngine::Auto;
    if (name == "message") return DistanceEngine::MessageEnum;
    if (name == "support") return DistanceEngine::SupportEnum;
    throw std::invalid_argument("unknown engine: " + name);
}

FieldElement element_from_py(const FieldPtr& f, const std::vector<int64_t>& coords) {
    return f->from_coords(coords);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "skew-polynomial unit-memory convolutional codes";

    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
    py::register_exception<UnrecoverableError>(m, "UnrecoverableError", PyExc_RuntimeError);

    m.def(
        "construct",
        [](unsigned n, unsigned k, std::optional<uint64_t> q, std::optional<uint64_t> lambda_seed) {
            ConvCode code = construct_code(n, k, q, lambda_seed);
            return json_to_py(code_to_json(code, verification_block(code)));
        },
        py::arg("n"), py::arg("k"), py::arg("q") = std::nullopt,
        py::arg("lambda_seed") = std::nullopt,
        "Build a code over F_{q^(2k)} and embed its verification block.");

    m.def(
        "verify",
        [](const py::dict& code_dict) {
            ConvCode code = code_from_py(code_dict);
            ordered_json block = verification_block(code);
            ordered_json out;
            out["ok"] = verification_ok(block);
            out.update(block);
            return json_to_py(out);
        },
        py::arg("code"), "Re-run all checks on a code dict; 'ok' summarizes them.");

    m.def(
        "profile",
        [](const py::dict& code_dict, unsigned jmax, std::optional<unsigned> max_deg,
           const std::string& engine) {
            ConvCode code = code_from_py(code_dict);
            DistanceProfile p =
                distance_profile(code.generator(), jmax, max_deg, engine_from_name(engine));
            ordered_json out;
            out["n"] = p.n;
            out["k"] = p.k;
            out["delta"] = p.delta;
            out["L"] = p.L;
            out["M"] = p.M;
            ordered_json rows = ordered_json::array();
            for (const auto& r : p.rows)
                rows.push_back({{"j", r.j}, {"d", r.d}, {"bound", r.bound}, {"met", r.met}});
            out["rows"] = std::move(rows);
            out["mdp"] = p.mdp ? ordered_json(*p.mdp) : ordered_json(nullptr);
            out["strongly_mds"] =
                p.strongly_mds ? ordered_json(*p.strongly_mds) : ordered_json(nullptr);
            if (p.free_scan) {
                out["free_scan"] = {{"upper_bound", p.free_scan->upper_bound},
                                    {"max_deg", p.free_scan->max_deg},
                                    {"achieving_degree", p.free_scan->achieving_degree}};
            } else {
                out["free_scan"] = nullptr;
            }
            out["csv"] = profile_csv(p);
            return json_to_py(out);
        },
        py::arg("code"), py::arg("jmax"), py::arg("max_deg") = std::nullopt,
        py::arg("engine") = "auto",
        "Exact column distances d_0^c..d_jmax^c with per-window bounds; 'csv' matches the CLI.");

    m.def(
        "column_distance",
        [](const py::dict& code_dict, unsigned j, const std::string& engine) {
            return column_distance_exact(code_from_py(code_dict).generator(), j,
                                         engine_from_name(engine));
        },
        py::arg("code"), py::arg("j"), py::arg("engine") = "auto");

    m.def(
        "census",
        [](const py::dict& code_dict, unsigned j) {
            CensusReport rep = erasure_census(code_from_py(code_dict), j);
            ordered_json out = census_report_json(rep);
            out["csv"] = census_csv(rep);
            return json_to_py(out);
        },
        py::arg("code"), py::arg("j"),
        "Exhaustive erasure census over one window; 'csv' matches the CLI's --pattern-csv.");

    m.def(
        "simulate",
        [](const py::dict& code_dict, unsigned j, double p, uint64_t trials, uint64_t seed) {
            return json_to_py(sim_report_json(simulate(code_from_py(code_dict), j, p, trials, seed)));
        },
        py::arg("code"), py::arg("j"), py::arg("p"), py::arg("trials"), py::arg("seed"),
        "Seeded erasure-channel trials; deterministic for a fixed seed.");

    m.def(
        "field_info",
        [](uint64_t q, unsigned t) {
            FieldPtr f = ExtensionField::make(q, t);
            ordered_json out;
            out["schema"] = 1;
            out.update(f->descriptor());
            return json_to_py(out);
        },
        py::arg("q"), py::arg("t"), "Canonical modulus and generator of F_{q^t}.");

    // small skew-algebra surface, elements as coordinate lists
    m.def(
        "norm_iterate",
        [](uint64_t q, unsigned t, unsigned i, const std::vector<int64_t>& a) {
            auto f = ExtensionField::make(q, t);
            return norm_iterate(i, element_from_py(f, a)).coords();
        },
        py::arg("q"), py::arg("t"), py::arg("i"), py::arg("a"));

    m.def(
        "conjugate",
        [](uint64_t q, unsigned t, const std::vector<int64_t>& a, const std::vector<int64_t>& beta) {
            auto f = ExtensionField::make(q, t);
            return conjugate(element_from_py(f, a), element_from_py(f, beta)).coords();
        },
        py::arg("q"), py::arg("t"), py::arg("a"), py::arg("beta"));

    m.def(
        "kernel_dimension",
        [](uint64_t q, unsigned t, const std::vector<std::vector<int64_t>>& coeffs,
           const std::vector<int64_t>& a) {
            auto f = ExtensionField::make(q, t);
            std::vector<FieldElement> c;
            for (const auto& v : coeffs) c.push_back(element_from_py(f, v));
            return kernel_dimension(SkewPolynomial::from_coeffs(f, c), element_from_py(f, a));
        },
        py::arg("q"), py::arg("t"), py::arg("coeffs"), py::arg("a"),
        "Dimension over F_q of the root space of f on the class of a.");

    m.def(
        "conjugacy_classes",
        [](uint64_t q, unsigned t) {
            auto f = ExtensionField::make(q, t);
            std::vector<std::vector<std::vector<uint32_t>>> out;
            for (const auto& cls : conjugacy_partition(f)) {
                std::vector<std::vector<uint32_t>> members;
                for (const auto& el : cls.members) members.push_back(el.coords());
                out.push_back(std::move(members));
            }
            return out;
        },
        py::arg("q"), py::arg("t"));
}
