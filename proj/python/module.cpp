#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semideg/api.hpp"
#include "semideg/config.hpp"
#include "semideg/errors.hpp"

namespace py = pybind11;
using namespace semideg;

namespace {

std::vector<Int> to_ints(const std::vector<long>& v) {
  return {v.begin(), v.end()};
}

std::string dump(const api::json& j) { return j.dump(2) + "\n"; }

} // namespace

PYBIND11_MODULE(_semideg, m) {
  m.doc() = "exact geometry of compactifications of the affine plane";
  static py::exception<Error> exc(m, "SemidegError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = e.code() + ": " + e.what();
      PyErr_SetString(exc.ptr(), msg.c_str());
    }
  });

  m.def("set_max_cyclotomic",
        [](int n) { config().max_cyclotomic = n; });
  m.def("set_threads", [](int n) { config().threads = n; });

  m.def("classify",
        [](const std::string& s) { return dump(api::classify_op(s)); });
  m.def("keyforms",
        [](const std::string& s) { return dump(api::keyforms_op(s)); });
  m.def("delta", [](const std::string& s, const std::string& expr) {
    return dump(api::delta_op(s, io::parse_poly_expr(expr)));
  });
  m.def("dim", [](const std::string& s, const std::vector<long>& d) {
    return api::dim_op(s, to_ints(d))["dim"].get<long>();
  });
  m.def("basis", [](const std::string& s, const std::vector<long>& d) {
    return dump(api::basis_op(s, to_ints(d)));
  });
  m.def("enriques", [](const std::string& s, const std::vector<long>& d) {
    return dump(api::enriques_op(s, to_ints(d)));
  });
  m.def("zariski_bpf", [](const std::string& s, const std::vector<long>& d) {
    return dump(api::bpf_op(s, to_ints(d)));
  });
  m.def("zariski_member",
        [](const std::string& s, const std::vector<long>& d, long bound) {
          return dump(api::member_op(s, to_ints(d), bound));
        });
  m.def("tropical",
        [](const std::string& s, const std::vector<long>& box,
           const std::optional<std::vector<long>>& d) {
          if (d) {
            auto dv = to_ints(*d);
            return dump(api::tropical_op(s, to_ints(box), &dv));
          }
          return dump(api::tropical_op(s, to_ints(box), nullptr));
        },
        py::arg("surface"), py::arg("box"), py::arg("d") = py::none());
  m.def("compare_equisingular",
        [](const std::string& a, const std::string& b,
           const std::vector<long>& box) {
          return dump(api::compare_op(a, b, to_ints(box)));
        });
  m.def("from_branch",
        [](const std::string& s) { return api::from_branch_op(s); });
  m.def("canonicalize", [](const std::string& s) {
    return io::serialize_surface_file(io::parse_surface_file(s));
  });
}
