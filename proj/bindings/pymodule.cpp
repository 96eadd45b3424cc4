#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nakamol/character.hpp"
#include "nakamol/cli.hpp"
#include "nakamol/flatness.hpp"
#include "nakamol/koszul.hpp"
#include "nakamol/oracles.hpp"

namespace py = pybind11;
using namespace nakamol;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    auto loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

QuiverSpecFile spec_from_text(const std::string& text) { return parse_spec(text); }

py::object run(const std::string& spec_text, const std::string& command,
               py::kwargs kwargs) {
    RunOptions opts;
    opts.command = command;
    if (kwargs.contains("order")) opts.order = kwargs["order"].cast<int>();
    if (kwargs.contains("max_degree")) opts.max_degree = kwargs["max_degree"].cast<int>();
    if (kwargs.contains("lambda_")) opts.lambda_text = kwargs["lambda_"].cast<std::string>();
    if (kwargs.contains("theta")) opts.theta = kwargs["theta"].cast<std::vector<int>>();
    if (kwargs.contains("no_cache")) opts.no_cache = kwargs["no_cache"].cast<bool>();
    if (kwargs.contains("seed")) opts.seed = kwargs["seed"].cast<std::uint64_t>();
    if (kwargs.contains("jtype_cap")) opts.jtype_cap = kwargs["jtype_cap"].cast<int>();
    auto report = run_command(spec_from_text(spec_text), opts);
    py::dict out;
    out["report"] = json_to_py(report.body);
    out["cache_hit"] = report.cache_hit;
    out["exit_code"] = report.exit_code;
    return out;
}

py::object series_terms(const TruncatedSeries& s) {
    return json_to_py(series_to_json(s));
}

}  // namespace

PYBIND11_MODULE(_nakamol, m) {
    m.doc() = "Exact quiver-variety invariants and equivariant Hilbert series";

    m.def("run", &run, py::arg("spec_text"), py::arg("command"),
          "Run a CLI-level command on a quiver spec; returns the report as a dict");

    m.def(
        "cartan_matrix",
        [](const std::string& spec_text) {
            return cartan_matrix(spec_from_text(spec_text).quiver);
        },
        py::arg("spec_text"));

    m.def(
        "smooth_dim",
        [](const std::string& spec_text) {
            auto spec = spec_from_text(spec_text);
            return smooth_dim(spec.quiver, spec.dims);
        },
        py::arg("spec_text"));

    m.def(
        "is_flat",
        [](const std::string& spec_text) {
            auto spec = spec_from_text(spec_text);
            auto rep = is_flat(spec.quiver, spec.dims);
            py::dict out;
            out["flat"] = rep.flat;
            if (rep.certificate) {
                py::dict cert;
                cert["beta0"] = rep.certificate->beta0;
                cert["parts"] = rep.certificate->parts;
                cert["lhs"] = static_cast<long long>(rep.certificate->lhs);
                cert["rhs"] = static_cast<long long>(rep.certificate->rhs);
                out["certificate"] = cert;
            }
            return out;
        },
        py::arg("spec_text"));

    m.def(
        "is_v_regular",
        [](const std::string& spec_text, const std::vector<int>& theta) {
            auto spec = spec_from_text(spec_text);
            auto rep = is_v_regular(spec.quiver, spec.dims.v, ThetaVector{theta});
            py::dict out;
            out["regular"] = rep.regular;
            if (rep.witness) out["witness"] = *rep.witness;
            return out;
        },
        py::arg("spec_text"), py::arg("theta"));

    m.def(
        "molien_series",
        [](const std::string& spec_text, int order) {
            auto spec = spec_from_text(spec_text);
            return series_terms(molien_series(spec.quiver, spec.dims, order));
        },
        py::arg("spec_text"), py::arg("order"));

    m.def(
        "taut_character",
        [](const std::string& spec_text, const std::string& lambda, int order) {
            auto spec = spec_from_text(spec_text);
            auto mp = MultiPartition::parse(lambda);
            return series_terms(taut_character(spec.quiver, spec.dims, mp, order));
        },
        py::arg("spec_text"), py::arg("lambda_"), py::arg("order"));

    m.def(
        "homology_dims",
        [](const std::string& spec_text, int dmax) {
            auto spec = spec_from_text(spec_text);
            auto scan = homology_scan(spec.quiver, spec.dims, dmax);
            py::dict out;
            for (const auto& [wd, dims] : scan.homology_by_degree)
                out[py::int_(wd)] = dims;
            return out;
        },
        py::arg("spec_text"), py::arg("max_degree"));

    m.def(
        "euler_crosscheck",
        [](const std::string& spec_text, int dmax) {
            auto spec = spec_from_text(spec_text);
            auto rep = euler_crosscheck(spec.quiver, spec.dims, dmax);
            py::dict out;
            out["ok"] = rep.ok;
            out["compared"] = rep.compared;
            if (!rep.ok) out["mismatch"] = rep.mismatch;
            return out;
        },
        py::arg("spec_text"), py::arg("max_degree"));

    m.def(
        "schur_terms",
        [](const std::vector<int>& parts, int nvars) {
            auto reg = VarRegistry::for_quiver({nvars}, {0});
            GLPartition lam{parts};
            return series_terms(schur_laurent(lam, reg, 0, 0));
        },
        py::arg("parts"), py::arg("nvars"));

    m.attr("__version__") = kLibraryVersion;
}
