#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "duris/analytic.hpp"
#include "duris/channel.hpp"
#include "duris/config.hpp"
#include "duris/emit.hpp"
#include "duris/moments.hpp"
#include "duris/montecarlo.hpp"
#include "duris/specfun.hpp"
#include "duris/sweep.hpp"
#include "duris/version.hpp"

namespace py = pybind11;
using namespace duris;

namespace {

analytic::OutageForm form_from_string(const std::string& name) {
    if (name == "marcum") return analytic::OutageForm::marcum;
    if (name == "gaussian_q_pair") return analytic::OutageForm::gaussian_q_pair;
    if (name == "exact_folded_normal") return analytic::OutageForm::exact_folded_normal;
    throw std::domain_error("unknown outage form '" + name + "'");
}

py::list estimates_to_list(const SystemConfig& config,
                           const std::vector<mc::MetricEstimate>& est) {
    py::list out;
    for (std::size_t j = 0; j < est.size(); ++j) {
        py::dict d;
        d["snr_db"] = config.snr_db[j];
        d["value"] = est[j].value;
        d["ci95"] = est[j].ci95_halfwidth;
        d["trials"] = est[j].trials;
        out.append(std::move(d));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "dual-RIS received-SSK link simulator core";
    m.attr("__version__") = kVersion;

    // special functions
    m.def("gaussian_q", &specfun::gaussian_q, py::arg("x"));
    m.def("bessel_i", &specfun::bessel_i, py::arg("order"), py::arg("x"));
    m.def("laguerre_half", &specfun::laguerre_half, py::arg("k"));
    m.def("marcum_q1", &specfun::marcum_q1, py::arg("a"), py::arg("b"));

    py::enum_<Topology>(m, "Topology")
        .value("dual", Topology::dual)
        .value("single", Topology::single);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("n_elements", &SystemConfig::n_elements)
        .def_readwrite("n_rx", &SystemConfig::n_rx)
        .def_readwrite("carrier_hz", &SystemConfig::carrier_hz)
        .def_readwrite("d1_m", &SystemConfig::d1_m)
        .def_readwrite("d2_m", &SystemConfig::d2_m)
        .def_readwrite("k1", &SystemConfig::k1)
        .def_readwrite("k2", &SystemConfig::k2)
        .def_readwrite("omega1", &SystemConfig::omega1)
        .def_readwrite("omega2", &SystemConfig::omega2)
        .def_readwrite("es", &SystemConfig::es)
        .def_readwrite("snr_db", &SystemConfig::snr_db)
        .def_readwrite("gamma_out_db", &SystemConfig::gamma_out_db)
        .def_readwrite("topology", &SystemConfig::topology)
        .def_readwrite("zeta_exponent", &SystemConfig::zeta_exponent)
        .def("validate", &SystemConfig::validate)
        .def("to_json", [](const SystemConfig& c) { return config_to_json_text(c); })
        .def_static("from_json", [](const std::string& text) {
            return config_from_json_text(text);
        });

    m.def("config_hash", &config_hash, py::arg("config"));
    m.def("path_loss_zeta", &channel::path_loss_zeta, py::arg("config"));
    m.def("path_loss_single", &channel::path_loss_single, py::arg("config"));

    py::class_<moments::CltMoments>(m, "CltMoments")
        .def_readonly("mu_alpha", &moments::CltMoments::mu_alpha)
        .def_readonly("mu_beta", &moments::CltMoments::mu_beta)
        .def_readonly("sigma2_alpha", &moments::CltMoments::sigma2_alpha)
        .def_readonly("sigma2_beta", &moments::CltMoments::sigma2_beta)
        .def_readonly("mu_z", &moments::CltMoments::mu_z)
        .def_readonly("sigma2_z", &moments::CltMoments::sigma2_z);

    m.def("sum_mean", &moments::sum_mean, py::arg("n"), py::arg("k"), py::arg("omega"));
    m.def("sum_variance", &moments::sum_variance, py::arg("n"), py::arg("k"), py::arg("omega"));
    m.def("product_moments", &moments::product_moments, py::arg("config"));

    m.def(
        "outage_probability",
        [](const moments::CltMoments& mm, const std::string& form, double gamma_out, double s) {
            return analytic::outage_probability(mm, form_from_string(form), gamma_out, s);
        },
        py::arg("moments"), py::arg("form"), py::arg("gamma_out"), py::arg("s"));
    m.def(
        "outage_curve",
        [](const SystemConfig& config, const std::string& form) {
            return analytic::outage_curve(config, form_from_string(form));
        },
        py::arg("config"), py::arg("form") = "exact_folded_normal");
    m.def("snr_pdf", &analytic::snr_pdf, py::arg("gamma"), py::arg("moments"), py::arg("s"));
    m.def("ergodic_capacity_integral", &analytic::ergodic_capacity_integral,
          py::arg("moments"), py::arg("s"));
    m.def("ergodic_capacity_bound", &analytic::ergodic_capacity_bound, py::arg("moments"),
          py::arg("s"));
    m.def("capacity_curve_integral", &analytic::capacity_curve_integral, py::arg("config"));
    m.def("capacity_curve_bound", &analytic::capacity_curve_bound, py::arg("config"));
    m.def("marcum_identity_residual", &analytic::marcum_identity_residual, py::arg("a"),
          py::arg("b"));

    py::class_<mc::TrialPlan>(m, "TrialPlan")
        .def(py::init<>())
        .def_readwrite("master_seed", &mc::TrialPlan::master_seed)
        .def_readwrite("n_trials", &mc::TrialPlan::n_trials);

    m.def(
        "run_outage",
        [](const SystemConfig& c, const mc::TrialPlan& p) {
            return estimates_to_list(c, mc::run_outage(c, p));
        },
        py::arg("config"), py::arg("plan"));
    m.def(
        "run_capacity",
        [](const SystemConfig& c, const mc::TrialPlan& p) {
            return estimates_to_list(c, mc::run_capacity(c, p));
        },
        py::arg("config"), py::arg("plan"));
    m.def(
        "run_ssk_ber",
        [](const SystemConfig& c, const mc::TrialPlan& p) {
            return estimates_to_list(c, mc::run_ssk_ber(c, p));
        },
        py::arg("config"), py::arg("plan"));
    m.def("sample_gains", &mc::sample_gains, py::arg("config"), py::arg("plan"));
    m.def("empirical_snr_samples", &mc::empirical_snr_samples, py::arg("config"),
          py::arg("plan"), py::arg("snr_db"));

    m.def("preset_names", &sweep::preset_names);
    m.def(
        "run_preset",
        [](const std::string& name, std::optional<std::uint64_t> seed,
           std::optional<std::uint64_t> trials, const std::string& format) {
            const auto result = sweep::run_preset(name, seed, trials);
            return io::render(result, io::format_from_string(format));
        },
        py::arg("name"), py::arg("seed") = std::nullopt, py::arg("trials") = std::nullopt,
        py::arg("format") = "csv");

    py::register_exception<ConfigError>(m, "ConfigError");
}
