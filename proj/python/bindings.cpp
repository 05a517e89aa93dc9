#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "torusadm/arrangement.hpp"
#include "torusadm/report.hpp"
#include "torusadm/strata.hpp"

namespace py = pybind11;
using namespace torusadm;

namespace {

std::string run_json(const std::string& verb, const std::string& arrangement,
                     const std::string& point, const std::string& weights,
                     bool betti, bool essential,
                     std::optional<unsigned long long> budget, int jobs,
                     const std::string& forms) {
  CliOptions o;
  o.verb = verb;
  o.arrangement_path = arrangement;
  o.point_path = point;
  o.class_path = weights;
  o.json = true;
  o.betti = betti;
  o.essential = essential;
  o.budget = budget;
  o.jobs = jobs;
  o.forms = forms;
  return execute(o).doc.to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact admissibility kernel for rank-one local systems on line "
            "arrangement complements.";

  py::register_exception<InputFormatError>(m, "InputFormatError",
                                           PyExc_ValueError);
  py::register_exception<SemanticError>(m, "SemanticError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);

  m.def("run_json", &run_json, py::arg("verb"), py::arg("arrangement"),
        py::arg("point") = "", py::arg("weights") = "",
        py::arg("betti") = false, py::arg("essential") = false,
        py::arg("budget") = std::nullopt, py::arg("jobs") = 1,
        py::arg("forms") = "",
        "Run one verb against an arrangement file and return the full "
        "report document as a JSON string.");

  m.attr("__version__") = "0.1.0";
}
