// Python bindings for the channel-synthesis and correlation-extraction core.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "corrchan/errors.hpp"
#include "corrchan/oracle.hpp"
#include "corrchan/protocol.hpp"
#include "corrchan/synthesis.hpp"

namespace py = pybind11;
using namespace corrchan;

namespace {

SuperOperator as_sensor_map(const Mat& m) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("expected a 4x4 Liouville matrix");
  return SuperOperator{2, m, OperatorBasis::pauli()};
}

}  // namespace

PYBIND11_MODULE(_corrchan, m) {
  m.doc() = "Quantum-channel synthesis and correlation extraction";

  py::class_<ExperimentParams>(m, "ExperimentParams")
      .def(py::init<>())
      .def_readwrite("J_CH", &ExperimentParams::J_CH)
      .def_readwrite("nu", &ExperimentParams::nu)
      .def_readwrite("p_C", &ExperimentParams::p_C)
      .def_readwrite("p_H", &ExperimentParams::p_H)
      .def_readwrite("delta_t", &ExperimentParams::delta_t)
      .def_readwrite("n_repeat", &ExperimentParams::n_repeat)
      .def_readwrite("bath_spins", &ExperimentParams::bath_spins)
      .def("J", &ExperimentParams::J);

  m.def("catalog_labels", [] {
    std::vector<std::string> out;
    for (const auto& op : catalog_operations()) out.push_back(op.label());
    return out;
  });
  m.def("sparse_element_names", &sparse_element_names);
  m.def("sparse_element", [](const std::string& name) -> Mat {
    return sparse_element(name);
  });
  m.def(
      "decompose_weights",
      [](const Mat& target) {
        const WeightSolution sol = decompose(as_sensor_map(target));
        return py::make_tuple(sol.weights, sol.residual);
      },
      "Expansion weights of a 4x4 Liouville matrix over the operation "
      "catalog, plus the reconstruction residual");
  m.def("cptp_check", [](const Mat& map) {
    const CptpReport rep = cptp_check(as_sensor_map(map));
    py::dict d;
    d["hermitian"] = rep.hermitian_C;
    d["positive"] = rep.positive_C;
    d["trace_preserving"] = rep.trace_preserving;
    d["min_choi_eigenvalue"] = rep.min_choi_eigenvalue;
    d["tp_defect"] = rep.tp_defect;
    return d;
  });
  m.def("robust_channel_matrix", [](double delta_theta, int n) -> Mat {
    return robust_repeat(delta_theta, n).matrix.matrix;
  });

  m.def(
      "correlation",
      [](const std::string& eta, const std::vector<double>& times,
         const ExperimentParams& p) {
        return correlation(OrderingSequence::parse(eta), times,
                           SystemModel::build(p));
      },
      py::arg("eta"), py::arg("times"),
      py::arg("params") = ExperimentParams{});
  m.def("analytic_C_plus_minus", &analytic_C_plus_minus);
  m.def("analytic_C_pmmp", &analytic_C_pmmp);
  m.def("analytic_C_p00p", &analytic_C_p00p);
  m.def("exact_second_order",
        [](double delta_t, double tau21, const ExperimentParams& p) {
          return exact_S2(delta_t, 0.0, tau21, SystemModel::build(p));
        });
  m.def("exact_fourth_order",
        [](double delta_t, const std::array<double, 4>& times,
           const ExperimentParams& p) {
          return exact_S4(delta_t, times, SystemModel::build(p), p.p_C);
        });

  m.def(
      "second_order_signal",
      [](const ExperimentParams& p, double tau21) {
        return run(second_order_protocol(p, tau21));
      },
      "Simulated second-order protocol signal <sigma_y>");
  m.def(
      "fourth_order_signal",
      [](const ExperimentParams& p, double tau21, double tau32, double tau43,
         int n, double delta_theta) {
        return run(fourth_order_protocol(p, tau21, tau32, tau43, n, delta_theta));
      },
      py::arg("params"), py::arg("tau21"), py::arg("tau32") = 1e-5,
      py::arg("tau43") = 1e-5, py::arg("n") = 1, py::arg("delta_theta") = 0.0);
  m.def("sweep_2d",
        [](const ExperimentParams& p, const std::vector<double>& tau21s,
           const std::vector<double>& tau43s, double tau32) {
          return sweep_2d(p, tau21s, tau43s, tau32);
        });
  m.def("spectral_peaks", [](const Eigen::MatrixXd& signal, double step) {
    const SpectralDensity sd = spectral_density(signal, step);
    std::vector<std::tuple<double, double, double>> out;
    for (const auto& pk : sd.peaks)
      out.emplace_back(pk.fx, pk.fy, pk.magnitude);
    return out;
  });
  m.def("fit_power_law_exponent",
        [](const std::vector<double>& axis, const std::vector<double>& vals) {
          return fit_power_law(axis, vals).exponent;
        });

  m.def(
      "optimal_window",
      [](int theta, const ExperimentParams& p) {
        std::vector<double> grid;
        for (int i = 0; i < 40; ++i) grid.push_back(2e-6 * i);
        const BudgetInputs in = budget_inputs(p, theta, grid);
        return optimal_dt(theta, in.next_order.norm(),
                          default_readout_sigma(theta) *
                              std::sqrt(double(in.target.size())));
      },
      py::arg("theta"), py::arg("params") = ExperimentParams{},
      "Error-budget optimal coupling window in seconds");
  m.def("deviation",
        [](const std::vector<double>& x, const std::vector<double>& y) {
          return deviation_metrics(x, y).relative;
        });
}
