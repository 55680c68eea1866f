#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "viscomem/config.hpp"
#include "viscomem/diagnostics.hpp"
#include "viscomem/harness.hpp"

namespace py = pybind11;
using namespace viscomem;

PYBIND11_MODULE(_viscomem, m) {
  m.doc() = "Galerkin solver for damped wave equations with sign-changing memory";

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<KernelSpec>(m, "KernelSpec")
      .def(py::init([](double alpha, double sigma, double gamma, bool enforce_range) {
             KernelSpec s{alpha, sigma, gamma, enforce_range};
             s.validate();
             return s;
           }),
           py::arg("alpha") = 1.0, py::arg("sigma") = 2.0, py::arg("gamma") = 0.0,
           py::arg("enforce_range") = true)
      .def_readonly("alpha", &KernelSpec::alpha)
      .def_readonly("sigma", &KernelSpec::sigma)
      .def_readonly("gamma", &KernelSpec::gamma)
      .def("__repr__", [](const KernelSpec& s) {
        return "KernelSpec(alpha=" + format_real(s.alpha) + ", sigma=" + format_real(s.sigma) +
               ", gamma=" + format_real(s.gamma) + ")";
      });

  m.def("beta", &beta, py::arg("spec"), py::arg("t"));
  m.def("kernel_transform", &kernel_transform, py::arg("spec"), py::arg("t"));
  m.def("k_zero", [](const KernelSpec& s) {
    const KernelZero z = k_zero(s);
    return py::make_tuple(z.k0, z.mu0);
  }, py::arg("spec"), "(K(0), 1 - K(0))");

  py::class_<MemoryKernel>(m, "MemoryKernel")
      .def_static("from_spec", &MemoryKernel::from_spec)
      .def_static("constant", &MemoryKernel::constant)
      .def("__call__", &MemoryKernel::operator())
      .def_property_readonly("k0", &MemoryKernel::k0)
      .def_property_readonly("mu0", &MemoryKernel::mu0)
      .def_property_readonly("support", &MemoryKernel::support);

  py::class_<WeightTable>(m, "WeightTable")
      .def_property_readonly("tau", &WeightTable::tau)
      .def_property_readonly("n_max", &WeightTable::n_max)
      .def("weight", &WeightTable::weight, py::arg("n"), py::arg("p"))
      .def("left_edge_sum", &WeightTable::left_edge_sum, py::arg("m"));
  m.def("build_weight_table", &build_weight_table, py::arg("kernel"), py::arg("tau"),
        py::arg("n_max"));

  py::class_<Mesh>(m, "Mesh")
      .def(py::init<int, int>(), py::arg("dim"), py::arg("subdivisions"))
      .def_property_readonly("dim", &Mesh::dim)
      .def_property_readonly("subdivisions", &Mesh::subdivisions)
      .def_property_readonly("h", &Mesh::h)
      .def_property_readonly("n_interior", &Mesh::n_interior);

  py::class_<DiscreteOperators>(m, "DiscreteOperators")
      .def_readonly("mass", &DiscreteOperators::mass)
      .def_readonly("stiffness", &DiscreteOperators::stiffness);
  py::enum_<MassMatrix>(m, "MassMatrix")
      .value("consistent", MassMatrix::consistent)
      .value("lumped", MassMatrix::lumped);
  m.def("assemble", &assemble, py::arg("mesh"), py::arg("mass") = MassMatrix::consistent);

  py::enum_<DampingKind>(m, "DampingKind")
      .value("affine", DampingKind::affine)
      .value("sqrt", DampingKind::sqrt)
      .value("constant", DampingKind::constant);
  py::class_<DampingSpec>(m, "DampingSpec")
      .def_static("affine", &DampingSpec::affine)
      .def_static("square_root", &DampingSpec::square_root)
      .def_static("constant_value", &DampingSpec::constant_value)
      .def("evaluate", &DampingSpec::evaluate)
      .def_readonly("kind", &DampingSpec::kind);

  py::class_<Problem>(m, "Problem")
      .def_readonly("name", &Problem::name)
      .def_readwrite("damping", &Problem::damping);
  m.def("paper_1d_problem", &paper_1d_problem, py::arg("kernel"), py::arg("with_forcing") = true);
  m.def("paper_2d_problem", &paper_2d_problem, py::arg("kernel"));
  m.def("manufactured_problem", &manufactured_problem, py::arg("damping_constant") = 1.0);
  m.def("zero_problem", &zero_problem, py::arg("kernel"), py::arg("damping"));

  py::class_<SimulationHistory>(m, "SimulationHistory")
      .def_readonly("tau", &SimulationHistory::tau)
      .def_readonly("states", &SimulationHistory::states)
      .def_readonly("damping", &SimulationHistory::damping)
      .def("__len__", [](const SimulationHistory& h) { return h.states.size(); });
  m.def("run", &run, py::arg("problem"), py::arg("mesh"), py::arg("tau"), py::arg("n_steps"),
        py::arg("mass") = MassMatrix::consistent, "history holding U^0..U^n_steps");

  m.def("discrete_energy", &discrete_energy, py::arg("history"), py::arg("ops"), py::arg("n"));
  m.def("a_norm", &a_norm, py::arg("history"), py::arg("ops"), py::arg("mu0"), py::arg("m"));
  m.def("self_error_time", &self_error_time);
  m.def("self_error_space", &self_error_space);
  m.def("rate", &rate);

  py::class_<RunConfig>(m, "RunConfig")
      .def_readwrite("M", &RunConfig::M)
      .def_readwrite("N", &RunConfig::N)
      .def_readwrite("T", &RunConfig::T)
      .def_readonly("dim", &RunConfig::dim)
      .def("__str__", &serialize);
  m.def("parse_config", &parse_config, py::arg("text"));
  m.def("load_config", [](const std::string& path) { return load_config(path); }, py::arg("path"));

  m.def("run_single", [](const RunConfig& c) {
    const RunOutput out = run_single(c);
    py::dict d;
    d["run_id"] = out.record.run_id;
    d["energy"] = out.record.energy;
    d["a_norm"] = out.record.a_norm;
    d["terminal_gradient"] = out.record.terminal_gradient;
    d["terminal_state"] = out.history.states[c.N];
    return d;
  }, py::arg("config"), "energy, A-norm and terminal data of one configured run");

  m.def("run_convergence", [](const RunConfig& c, const std::string& mode,
                              const std::vector<std::size_t>& ladder) {
    py::list rows;
    for (const auto& r : run_convergence(c, ladder_mode_from_string(mode), ladder)) {
      rows.append(py::make_tuple(r.M, r.N, r.error, r.rate ? py::cast(*r.rate) : py::none()));
    }
    return rows;
  }, py::arg("config"), py::arg("mode"), py::arg("ladder"), "rows (M, N, E, rate or None)");
}
