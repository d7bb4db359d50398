#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "omgci/analysis.hpp"
#include "omgci/channel.hpp"
#include "omgci/cohinfo.hpp"
#include "omgci/dilation.hpp"
#include "omgci/entropy.hpp"
#include "omgci/errors.hpp"
#include "omgci/identity.hpp"
#include "omgci/verify.hpp"

namespace py = pybind11;
using namespace omgci;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coherent information of phase-insensitive one-mode Gaussian channels";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NoThreshold>(m, "NoThreshold", domain_error.ptr());
    py::register_exception<MultipleStationaryPoints>(m, "MultipleStationaryPoints", PyExc_RuntimeError);

    py::enum_<ChannelClass>(m, "ChannelClass")
        .value("Loss", ChannelClass::Loss)
        .value("Amp", ChannelClass::Amp)
        .value("B2", ChannelClass::B2)
        .value("ConjugateAmp", ChannelClass::ConjugateAmp);

    py::class_<ChannelSpec>(m, "ChannelSpec")
        .def(py::init<ChannelClass, double, double>(), py::arg("cls"), py::arg("tau"), py::arg("k"))
        .def_static("from_tau_k", &ChannelSpec::from_tau_k, py::arg("tau"), py::arg("k"))
        .def_static("from_tau_y", &ChannelSpec::from_tau_y, py::arg("tau"), py::arg("y"))
        .def_property_readonly("cls", &ChannelSpec::cls)
        .def_property_readonly("tau", &ChannelSpec::tau)
        .def_property_readonly("k", &ChannelSpec::k)
        .def_property_readonly("y", &ChannelSpec::y)
        .def_property_readonly("nbar", &ChannelSpec::nbar)
        .def(py::self == py::self)
        .def("__repr__", [](const ChannelSpec& s) {
            return "ChannelSpec(" + std::string(to_string(s.cls())) + ", tau=" + std::to_string(s.tau()) +
                   ", k=" + std::to_string(s.k()) + ")";
        });

    m.def("cp_check", &cp_check, py::arg("tau"), py::arg("y"));
    m.def("k_from_y", &k_from_y, py::arg("tau"), py::arg("y"));

    m.def("g", &g, py::arg("x"));
    m.def("g_prime", &g_prime, py::arg("x"));

    py::class_<SpectralParams>(m, "SpectralParams")
        .def_readonly("eta", &SpectralParams::eta)
        .def_readonly("f", &SpectralParams::f)
        .def_readonly("ell", &SpectralParams::ell)
        .def_readonly("p", &SpectralParams::p)
        .def_readonly("q", &SpectralParams::q);

    m.def("spectral_params", &spectral_params, py::arg("n"), py::arg("k"), py::arg("tau"));
    m.def("coherent_info", &coherent_info, py::arg("n"), py::arg("k"), py::arg("tau"));
    m.def("dG_dN", &dG_dN, py::arg("n"), py::arg("k"), py::arg("tau"));
    m.def("limit_inf", &limit_inf, py::arg("k"), py::arg("tau"));
    m.def("saturation_residual", &saturation_residual, py::arg("n"), py::arg("k"), py::arg("tau"));
    m.def("coherent_info_oracle", &coherent_info_oracle, py::arg("n"), py::arg("spec"));

    m.def("supremum", [](double k, double tau) {
        const Supremum s = supremum(k, tau);
        return py::make_tuple(s.value, s.attained_at == AttainedAt::InfiniteN ? "N=inf" : "N=0");
    }, py::arg("k"), py::arg("tau"), "Returns (value, 'N=inf' or 'N=0').");

    m.def("scan", [](double k, double tau, double n_min, double n_max, std::size_t points) {
        std::vector<double> n, value, slope;
        for (const auto& s : scan(k, tau, n_min, n_max, points)) {
            n.push_back(s.n);
            value.push_back(s.value);
            slope.push_back(s.slope);
        }
        return py::make_tuple(n, value, slope);
    }, py::arg("k"), py::arg("tau"), py::arg("n_min") = kGridNMin, py::arg("n_max") = 1e6,
       py::arg("points") = 400, "Returns lists (N, G, dGdN).");

    m.def("stationary_point", [](double k, double tau) {
        const StationaryReport r = stationary_point(k, tau);
        py::dict d;
        d["exists"] = r.exists;
        d["n_star"] = r.n_star ? py::cast(*r.n_star) : py::none();
        d["value"] = r.value ? py::cast(*r.value) : py::none();
        d["shape"] = std::string(to_string(r.shape));
        return d;
    }, py::arg("k"), py::arg("tau"));

    m.def("k_threshold", [](double tau) { return k_threshold(tau); }, py::arg("tau"));

    m.def("classify", [](double tau, double y) {
        const RegionLabel l = classify(tau, y);
        return py::make_tuple(std::string(to_string(l.label)), std::string(to_string(l.sub)),
                              l.limit_value ? py::cast(*l.limit_value) : py::none());
    }, py::arg("tau"), py::arg("y"), "Returns (label, note, limit or None).");

    m.def("verify", [](std::size_t samples, std::uint64_t seed) {
        VerifyConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        const VerifyReport report = [&] {
            py::gil_scoped_release release;
            return run_verification(cfg);
        }();
        py::list props;
        for (const auto& p : report.properties) {
            py::dict d;
            d["name"] = p.name;
            d["samples"] = p.samples;
            d["violations"] = p.violations;
            d["worst"] = p.worst;
            d["passed"] = p.passed();
            props.append(d);
        }
        return py::make_tuple(report.passed(), props);
    }, py::arg("samples") = 1000, py::arg("seed") = kDefaultSeed, "Returns (passed, [property dicts]).");
}
