#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relgs/bessel.hpp"
#include "relgs/bounds.hpp"
#include "relgs/diagnostics.hpp"
#include "relgs/extension.hpp"
#include "relgs/fft.hpp"
#include "relgs/kernel.hpp"
#include "relgs/solver.hpp"
#include "relgs/spectral.hpp"

namespace py = pybind11;
using namespace relgs;

namespace {

RealField field_from_array(const Grid& g, const py::array& arr) {
    auto c = py::array_t<double, py::array::c_style | py::array::forcecast>::ensure(arr);
    if (!c) throw std::invalid_argument("expected a numeric array");
    if (static_cast<std::size_t>(c.size()) != g.size())
        throw std::invalid_argument("array size does not match grid");
    const double* data = c.data();
    return RealField(g, std::vector<double>(data, data + g.size()));
}

py::array_t<double> array_from_field(const RealField& u) {
    std::vector<py::ssize_t> shape(u.grid.dim(), u.grid.n());
    py::array_t<double> out(shape);
    std::copy(u.values.begin(), u.values.end(), static_cast<double*>(out.request().ptr));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "ground states of the pseudo-relativistic nonlinear Schrodinger equation";

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double s, double mass, double mu, double p, int N) {
                 ModelParams mp{s, mass, mu, p, N};
                 mp.validate();
                 return mp;
             }),
             py::arg("s"), py::arg("m"), py::arg("mu"), py::arg("p"), py::arg("N"))
        .def_readonly("s", &ModelParams::s)
        .def_readonly("m", &ModelParams::m)
        .def_readonly("mu", &ModelParams::mu)
        .def_readonly("p", &ModelParams::p)
        .def_readonly("N", &ModelParams::N)
        .def("critical_exponent", &ModelParams::critical_exponent)
        .def("__repr__", [](const ModelParams& p) {
            return "ModelParams(s=" + std::to_string(p.s) + ", m=" + std::to_string(p.m) +
                   ", mu=" + std::to_string(p.mu) + ", p=" + std::to_string(p.p) +
                   ", N=" + std::to_string(p.N) + ")";
        });

    py::class_<Grid>(m, "Grid")
        .def(py::init<int, int, double>(), py::arg("dim"), py::arg("n"), py::arg("length"))
        .def_property_readonly("dim", &Grid::dim)
        .def_property_readonly("n", &Grid::n)
        .def_property_readonly("length", &Grid::length)
        .def_property_readonly("dx", &Grid::dx)
        .def("coords", [](const Grid& g) {
            py::array_t<double> out(g.n());
            double* p = static_cast<double*>(out.request().ptr);
            for (int i = 0; i < g.n(); ++i) p[i] = g.coord(i);
            return out;
        });

    py::class_<EnergyBreakdown>(m, "EnergyBreakdown")
        .def_readonly("hs_term", &EnergyBreakdown::hs_term)
        .def_readonly("mass_shift", &EnergyBreakdown::mass_shift)
        .def_readonly("potential", &EnergyBreakdown::potential)
        .def_readonly("nonlinear", &EnergyBreakdown::nonlinear)
        .def_readonly("total", &EnergyBreakdown::total)
        .def_readonly("norm_e_sq", &EnergyBreakdown::norm_e_sq)
        .def_readonly("nehari", &EnergyBreakdown::nehari);

    py::class_<DiagnosticsReport>(m, "DiagnosticsReport")
        .def_readonly("one_signed", &DiagnosticsReport::one_signed)
        .def_readonly("u_min", &DiagnosticsReport::u_min)
        .def_readonly("u_max", &DiagnosticsReport::u_max)
        .def_readonly("radial_deviation", &DiagnosticsReport::radial_deviation)
        .def_readonly("linf", &DiagnosticsReport::linf)
        .def_readonly("tail_kind", &DiagnosticsReport::tail_kind)
        .def_readonly("tail_monotone", &DiagnosticsReport::tail_monotone)
        .def_readonly("tail_edge_small", &DiagnosticsReport::tail_edge_small)
        .def_readonly("el_residual_linf", &DiagnosticsReport::el_residual_linf)
        .def_property_readonly("tail_rate", [](const DiagnosticsReport& r) -> py::object {
            if (r.tail_rate) return py::float_(*r.tail_rate);
            return py::none();
        });

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("max_iters", &SolverConfig::max_iters)
        .def_readwrite("tol_residual", &SolverConfig::tol_residual)
        .def_readwrite("tol_energy", &SolverConfig::tol_energy)
        .def_readwrite("rearrange_every", &SolverConfig::rearrange_every)
        .def_readwrite("damping", &SolverConfig::damping)
        .def_readwrite("init_noise", &SolverConfig::init_noise)
        .def_readwrite("seed", &SolverConfig::seed);

    py::class_<GroundStateResult>(m, "GroundStateResult")
        .def_readonly("energy", &GroundStateResult::energy)
        .def_readonly("c_m", &GroundStateResult::c_m)
        .def_readonly("iterations", &GroundStateResult::iterations)
        .def_readonly("residual", &GroundStateResult::residual)
        .def_readonly("diagnostics", &GroundStateResult::diagnostics)
        .def_readonly("converged", &GroundStateResult::converged)
        .def_property_readonly("field",
                               [](const GroundStateResult& r) { return array_from_field(r.field); });

    m.def("symbol", &symbol, py::arg("k_sq"), py::arg("params"));
    m.def("bessel_k", &bessel_k, py::arg("nu"), py::arg("z"));
    m.def("kernel_constant", &kernel_constant, py::arg("params"));
    m.def("kernel_value", &kernel_value, py::arg("r"), py::arg("params"));
    m.def("profile_theta", &profile_theta, py::arg("s"), py::arg("r"));
    m.def("kappa_s", &kappa_s, py::arg("s"));
    m.def("dn_map_check", &dn_map_check, py::arg("s"), py::arg("rho"));
    m.def("extension_energy_per_mode", &extension_energy_per_mode, py::arg("s"), py::arg("rho"),
          py::arg("amplitude_sq"));

    m.def("apply_operator",
          [](const py::array& u, const Grid& g, const ModelParams& p) {
              return array_from_field(apply_operator(field_from_array(g, u), p));
          },
          py::arg("u"), py::arg("grid"), py::arg("params"));
    m.def("apply_resolvent",
          [](const py::array& f, const Grid& g, const ModelParams& p) {
              return array_from_field(apply_resolvent(field_from_array(g, f), p));
          },
          py::arg("f"), py::arg("grid"), py::arg("params"));
    m.def("hs_norm_sq",
          [](const py::array& u, const Grid& g, const ModelParams& p) {
              return hs_norm_sq(field_from_array(g, u), p);
          },
          py::arg("u"), py::arg("grid"), py::arg("params"));
    m.def("lp_norm",
          [](const py::array& u, const Grid& g, double q) {
              return lp_norm(field_from_array(g, u), q);
          },
          py::arg("u"), py::arg("grid"), py::arg("q"));
    m.def("energy",
          [](const py::array& u, const Grid& g, const ModelParams& p) {
              return energy(field_from_array(g, u), p);
          },
          py::arg("u"), py::arg("grid"), py::arg("params"));
    m.def("nehari_project",
          [](const py::array& u, const Grid& g, const ModelParams& p) {
              const auto proj = nehari_project(field_from_array(g, u), p);
              return py::make_tuple(proj.t_star, array_from_field(proj.projected));
          },
          py::arg("u"), py::arg("grid"), py::arg("params"));
    m.def("ground_energy",
          [](const py::array& u, const Grid& g, const ModelParams& p) {
              return ground_energy(field_from_array(g, u), p);
          },
          py::arg("u"), py::arg("grid"), py::arg("params"));
    m.def("rearrange_decreasing",
          [](const py::array& u, const Grid& g) {
              return array_from_field(rearrange_decreasing(field_from_array(g, u)));
          },
          py::arg("u"), py::arg("grid"));
    m.def("el_residual",
          [](const py::array& u, const Grid& g, const ModelParams& p) {
              return el_residual(field_from_array(g, u), p);
          },
          py::arg("u"), py::arg("grid"), py::arg("params"));

    m.def("solve_ground_state",
          [](const ModelParams& p, const Grid& g, const SolverConfig& cfg) {
              return solve_ground_state(p, g, cfg);
          },
          py::arg("params"), py::arg("grid"), py::arg("config") = SolverConfig{},
          py::call_guard<py::gil_scoped_release>());
    m.def("continuation_m",
          [](const ModelParams& p, const std::vector<double>& ms, const Grid& g,
             const SolverConfig& cfg) {
              const ContinuationOutcome out = continuation_m(p, ms, g, cfg);
              if (!out.completed) throw std::runtime_error("continuation failed: " + out.error);
              return out.results;
          },
          py::arg("params"), py::arg("m_values"), py::arg("grid"),
          py::arg("config") = SolverConfig{}, py::call_guard<py::gil_scoped_release>());

    py::class_<BoundsReport>(m, "BoundsReport")
        .def_readonly("A", &BoundsReport::A)
        .def_readonly("B", &BoundsReport::B)
        .def_readonly("C", &BoundsReport::C)
        .def_readonly("delta", &BoundsReport::delta)
        .def_readonly("tent_l2_sq", &BoundsReport::tent_l2_sq)
        .def_readonly("tent_grad_l2_sq", &BoundsReport::tent_grad_l2_sq)
        .def_readonly("tent_lp_p", &BoundsReport::tent_lp_p);
    m.def("upper_bound_delta", &upper_bound_delta, py::arg("params"));
    m.def("weight_integrals", &weight_integrals, py::arg("s"));
    m.def("tent_norms", [](int N, double p) {
        const TentNorms t = tent_norms(N, p);
        return py::make_tuple(t.l2_sq, t.grad_l2_sq, t.lp_p);
    }, py::arg("N"), py::arg("p"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
