#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "ddinv/approx_inverse.hpp"
#include "ddinv/bounds.hpp"
#include "ddinv/ddp_matrix.hpp"
#include "ddinv/error.hpp"
#include "ddinv/matrix_io.hpp"
#include "ddinv/solvers.hpp"
#include "ddinv/sweep.hpp"

namespace py = pybind11;
using namespace ddinv;

namespace {

using Rows = std::vector<std::vector<double>>;

DenseMatrix from_rows(const Rows& rows) {
  const auto n = rows.size();
  std::vector<double> data;
  data.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorKind::RowLengthMismatch, "(" + std::to_string(i + 1) + ")");
    }
    data.insert(data.end(), rows[i].begin(), rows[i].end());
  }
  return DenseMatrix(n, std::move(data));
}

Rows to_rows(const DenseMatrix& a) {
  Rows rows(a.order());
  for (std::size_t i = 0; i < a.order(); ++i) rows[i].assign(a.row(i).begin(), a.row(i).end());
  return rows;
}

}  // namespace

PYBIND11_MODULE(_ddinv, m) {
  m.doc() = "Diagonal approximate inverse S = diag(1/t_ii) of diagonally dominant positive "
            "matrices, its explicit max-norm error bound, and verification utilities.";

  py::register_exception<Error>(m, "DdinvError", PyExc_ValueError);

  py::class_<DdpMatrix>(m, "DdpMatrix")
      .def_property_readonly("order", &DdpMatrix::order)
      .def_property_readonly("symmetric", &DdpMatrix::symmetric)
      .def("to_list", [](const DdpMatrix& t) { return to_rows(t.matrix()); })
      .def("__repr__", [](const DdpMatrix& t) {
        return "<DdpMatrix n=" + std::to_string(t.order()) +
               (t.symmetric() ? " symmetric>" : " asymmetric>");
      });

  py::class_<DominanceParams>(m, "DominanceParams")
      .def_readonly("m", &DominanceParams::m)
      .def_readonly("M", &DominanceParams::M)
      .def_readonly("delta", &DominanceParams::delta);

  py::class_<BoundOutcome>(m, "BoundOutcome")
      .def_readonly("n", &BoundOutcome::n)
      .def_readonly("m", &BoundOutcome::m)
      .def_readonly("M", &BoundOutcome::M)
      .def_readonly("c_value", &BoundOutcome::c_value)
      .def_readonly("bound", &BoundOutcome::bound)
      .def_property_readonly("applicable", &BoundOutcome::applicable);

  py::class_<ErrorReport>(m, "ErrorReport")
      .def_readonly("max_norm", &ErrorReport::max_norm)
      .def_readonly("bound", &ErrorReport::bound)
      .def_readonly("ratio", &ErrorReport::ratio)
      .def_readonly("inverse_nonpositive_offdiag", &ErrorReport::inverse_nonpositive_offdiag)
      .def_readonly("params", &ErrorReport::params)
      .def_property_readonly("f_matrix", [](const ErrorReport& r) { return to_rows(r.f_matrix); });

  py::class_<DiscussionReport>(m, "DiscussionReport")
      .def_readonly("error", &DiscussionReport::error)
      .def_readonly("scaled_error", &DiscussionReport::scaled_error)
      .def_readonly("printed_closed_form_gap", &DiscussionReport::printed_closed_form_gap);

  py::class_<SolveReport>(m, "SolveReport")
      .def_property_readonly("method", [](const SolveReport& r) { return std::string(to_string(r.method)); })
      .def_readonly("solution", &SolveReport::solution)
      .def_readonly("iterations", &SolveReport::iterations)
      .def_readonly("converged", &SolveReport::converged)
      .def_readonly("residual_history", &SolveReport::residual_history);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("family", &SweepRow::family)
      .def_readonly("n", &SweepRow::n)
      .def_readonly("m", &SweepRow::m)
      .def_readonly("M", &SweepRow::M)
      .def_readonly("c_value", &SweepRow::c_value)
      .def_readonly("bound", &SweepRow::bound)
      .def_readonly("error", &SweepRow::error)
      .def_readonly("scaled_error", &SweepRow::scaled_error)
      .def_readonly("ratio", &SweepRow::ratio)
      .def_readonly("seed", &SweepRow::seed);

  // matrix-core
  m.def("validate_ddp",
        [](const Rows& rows, bool require_symmetric) { return validate_ddp(from_rows(rows), require_symmetric); },
        py::arg("rows"), py::arg("require_symmetric") = true);
  m.def("parse_matrix", [](std::string_view text) { return to_rows(parse_matrix(text)); }, py::arg("text"));
  m.def("format_matrix", [](const Rows& rows) { return format_matrix(from_rows(rows)); }, py::arg("rows"));
  m.def("dominance_params", &dominance_params, py::arg("t"));
  m.def("worst_case_example", &worst_case_example, py::arg("n"), py::arg("m"), py::arg("M"));
  m.def("random_ddp",
        [](std::size_t n, double lo, double off_max, double slack_max, std::uint64_t seed) {
          return random_ddp({n, lo, off_max, slack_max, seed});
        },
        py::arg("n"), py::arg("m"), py::arg("off_max"), py::arg("slack_max"), py::arg("seed"));
  m.def("is_positive_definite", &is_positive_definite, py::arg("t"));

  // bound-analysis
  m.def("c_constant", &c_constant, py::arg("n"), py::arg("m"), py::arg("M"));
  m.def("theorem1_bound", &theorem1_bound, py::arg("n"), py::arg("m"), py::arg("M"));
  m.def("f_lambda", &f_lambda, py::arg("lam"), py::arg("n"), py::arg("m"), py::arg("M"));
  m.def("g_lambda", &g_lambda, py::arg("lam"), py::arg("n"), py::arg("m"), py::arg("M"));
  m.def("f_max_closed_form", &f_max_closed_form, py::arg("n"), py::arg("m"), py::arg("M"));
  m.def("g_max_closed_form", &g_max_closed_form, py::arg("n"), py::arg("m"), py::arg("M"));
  m.def("corollary_limit", &corollary_limit, py::arg("m"), py::arg("M"));

  // approx-inverse
  m.def("diag_approx",
        [](const DdpMatrix& t) {
          const auto s = diag_approx(t);
          return std::vector<double>(s.recip_diag().begin(), s.recip_diag().end());
        },
        py::arg("t"));
  m.def("exact_inverse", [](const DdpMatrix& t) { return to_rows(exact_inverse(t)); }, py::arg("t"));
  m.def("error_report", py::overload_cast<const DdpMatrix&>(&error_report), py::arg("t"));
  m.def("check_recursion_identity", &check_recursion_identity, py::arg("t"));
  m.def("check_hold_identity", &check_hold_identity, py::arg("t"));
  m.def("discussion_example_report", &discussion_example_report, py::arg("n"), py::arg("m"), py::arg("M"));

  // precond-solver
  m.def("jacobi_solve",
        [](const DdpMatrix& t, const std::vector<double>& b, double tol, std::size_t max_iter) {
          py::gil_scoped_release release;
          return jacobi_solve(t, b, tol, max_iter);
        },
        py::arg("t"), py::arg("b"), py::arg("tol") = 1e-10, py::arg("max_iter") = 10000);
  m.def("pcg_solve",
        [](const DdpMatrix& t, const std::vector<double>& b, bool use_diag_precond, double tol,
           std::size_t max_iter) {
          py::gil_scoped_release release;
          return pcg_solve(t, b, use_diag_precond, tol, max_iter);
        },
        py::arg("t"), py::arg("b"), py::arg("use_diag_precond") = true, py::arg("tol") = 1e-10,
        py::arg("max_iter") = 10000);

  // sweeps
  m.def("run_sweep",
        [](const std::string& family, std::vector<std::size_t> n_list, double lo, double hi,
           double slack, std::uint64_t seed, std::size_t reps, std::size_t threads) {
          auto fam = parse_family(family);
          if (!fam) throw Error(ErrorKind::InvalidParams, ": unknown family '" + family + "'");
          SweepConfig cfg{*fam, std::move(n_list), lo, hi, slack, seed, reps};
          py::gil_scoped_release release;
          return run_sweep(cfg, threads);
        },
        py::arg("family"), py::arg("n_list"), py::arg("m") = 1.0, py::arg("M") = 2.0,
        py::arg("slack") = 1.0, py::arg("seed") = 1, py::arg("reps") = 1, py::arg("threads") = 1);
  m.def("sweep_csv", &format_sweep_csv, py::arg("rows"));
}
