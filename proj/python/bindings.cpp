#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "taut/cache.hpp"
#include "taut/correlator.hpp"
#include "taut/point_psi.hpp"
#include "taut/relations.hpp"
#include "taut/sweep.hpp"

namespace py = pybind11;

namespace {

std::optional<taut::IntRange> range_arg(const std::optional<std::string>& text) {
    if (!text) return std::nullopt;
    return taut::IntRange::parse(*text);
}

std::string run_verify(const std::string& relation, const std::optional<std::string>& g,
                       const std::optional<std::string>& r, const std::optional<std::string>& s,
                       const std::optional<std::string>& m, const std::optional<std::string>& levels, int n1, int n2,
                       bool timing) {
    taut::SweepConfig config;
    config.genus = range_arg(g);
    config.r = range_arg(r);
    config.s = range_arg(s);
    config.m = range_arg(m);
    config.levels = range_arg(levels);
    config.n1 = n1;
    config.n2 = n2;
    std::vector<taut::VerificationReport> reports;
    {
        py::gil_scoped_release release;
        reports = taut::run_sweep(taut::default_engine(), relation, config);
    }
    return taut::to_json(reports, timing);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact psi/kappa intersection numbers and tautological relation checks";
    m.attr("ENGINE_VERSION") = std::string(taut::kEngineVersion);

    py::register_exception<taut::CacheFormatError>(m, "CacheFormatError", PyExc_ValueError);

    m.def(
        "psi_integral",
        [](int g, const std::vector<int>& d) { return taut::default_engine().psi_integral(g, d).str(); },
        py::arg("g"), py::arg("d"));
    m.def(
        "psi_kappa_integral",
        [](int g, const std::vector<int>& d, const std::vector<int>& b) {
            return taut::default_engine().psi_kappa_integral(g, d, b).str();
        },
        py::arg("g"), py::arg("d"), py::arg("kappa"));
    m.def("one_point_value", [](int g) { return taut::one_point_value(g).str(); }, py::arg("g"));
    m.def(
        "genus0_closed_form", [](const std::vector<int>& d) { return taut::genus0_closed_form(d).str(); },
        py::arg("d"));
    m.def(
        "xi_witness", [](int g, int r) { return taut::xi_witness(taut::default_engine(), g, r).str(); },
        py::arg("g"), py::arg("r"));
    m.def(
        "psi_eval",
        [](int g, int mm, const std::vector<int>& w, const std::vector<int>& v) {
            return taut::psi_eval_levels(taut::default_engine(), g, mm, w, v).str();
        },
        py::arg("g"), py::arg("m"), py::arg("w"), py::arg("v"));
    m.def("verify", &run_verify, py::arg("relation"), py::arg("g") = py::none(), py::arg("r") = py::none(),
          py::arg("s") = py::none(), py::arg("m") = py::none(), py::arg("levels") = py::none(), py::arg("n1") = 2,
          py::arg("n2") = 2, py::arg("timing") = true);
    m.def("relations", &taut::sweep_relations);

    m.def("cache_save", [](const std::string& path) { taut::cache_save(taut::snapshot(taut::default_engine()), path); },
          py::arg("path"));
    m.def(
        "cache_load",
        [](const std::string& path) {
            const auto store = taut::cache_load(path);
            const bool trusted = taut::install(taut::default_engine(), store, nullptr);
            return py::make_tuple(store.entries.size(), trusted);
        },
        py::arg("path"));
    m.def("cache_clear", [] { taut::default_engine().clear(); });
    m.def("cache_entries", [] { return taut::default_engine().stats().entries; });
}
