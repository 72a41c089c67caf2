#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rcclab/json_io.hpp"

namespace py = pybind11;
namespace io = rcclab::io;
using io::json;

namespace {

// Values cross the boundary as JSON text; the Python layer decodes them.
json in(const std::string& text) { return io::parse(text); }
std::string out(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_rcclab, m) {
  m.doc() = "Regular cycle condition toolkit (JSON-string interface)";

  py::register_exception<rcclab::BoundExceeded>(m, "BoundExceeded", PyExc_ValueError);
  py::register_exception<rcclab::InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("catalog", [](const std::string& name) { return out(io::to_json(rcclab::catalog(name))); }, py::arg("name"));

  m.def("construct_sg120_8", [] { return out(io::to_json(rcclab::construct_sg120_8())); });
  m.def(
      "construct_go",
      [](std::vector<std::uint64_t> primes, std::vector<unsigned> exps) {
        return out(io::to_json(rcclab::construct_Go(primes, exps)));
      },
      py::arg("primes"), py::arg("exps"));
  m.def(
      "construct_many_prime", [](std::uint64_t o) { return out(io::to_json(rcclab::construct_many_prime(o))); },
      py::arg("order"));

  m.def(
      "analyze",
      [](const std::string& input, bool records, bool all_certificates) {
        io::AnalyzeOptions opts;
        opts.records = records;
        opts.all_certificates = all_certificates;
        json result;
        {
          py::gil_scoped_release release;
          result = io::analyze(in(input), opts);
        }
        return out(result);
      },
      py::arg("input"), py::arg("records") = true, py::arg("all_certificates") = false);

  m.def(
      "check_rcc",
      [](const std::string& group, const std::string& aut, bool all_certificates) {
        auto g = io::group_from_json(in(group));
        return out(io::verdict_record(io::automorphism_from_json(g, in(aut)), all_certificates));
      },
      py::arg("group"), py::arg("automorphism"), py::arg("all_certificates") = false);

  m.def("poly_order", [](const std::string& poly) { return out(io::poly_order_report(io::poly_from_json(in(poly)))); },
        py::arg("poly"));
  m.def("frobenius", [](const std::string& mat) { return out(io::frobenius_report(io::matrix_from_json(in(mat)))); },
        py::arg("matrix"));
  m.def(
      "regular_basis", [](const std::string& mat) { return out(io::regular_basis_report(io::matrix_from_json(in(mat)))); },
      py::arg("matrix"));

  m.def("f_function", &rcclab::f_function, py::arg("o"));
}
