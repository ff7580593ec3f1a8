// dmod._core: thin wrapper over the command layer.  Reports cross as JSON text.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dmod/cli.hpp"
#include "dmod/geom.hpp"

namespace py = pybind11;

namespace {

dmod::Options make_options(std::optional<int> max_order, const std::vector<std::string>& subst, unsigned long seed,
                           bool timing) {
  dmod::Options o;
  o.max_order = max_order;
  o.subst = subst;
  o.seed = seed;
  o.timing = timing;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.attr("__version__") = dmod::kVersion;
  static PyObject* err = py::exception<dmod::Error>(m, "DmodError").release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const dmod::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(err)(py::str(e.what()));
      exc.attr("kind") = e.kind();
      PyErr_SetObject(err, exc.ptr());
    }
  });

  m.def("fixture_ids", &dmod::fixture_ids);
  m.def("fixture_source", [](const std::string& id) { return dmod::print_system(dmod::fixture(id).decl); });
  m.def("canonical", [](const std::string& text) { return dmod::print_system(dmod::parse_system(text)); },
        "parse a .sys source and print it back in canonical form");
  m.def("digest", [](const std::string& text) { return dmod::digest(dmod::parse_system(text)); });
  m.def(
      "run",
      [](const std::string& command, const std::string& source, std::optional<int> max_order,
         const std::vector<std::string>& subst, unsigned long seed, bool timing) {
        auto opt = make_options(max_order, subst, seed, timing);
        dmod::Report r;
        {
          py::gil_scoped_release release;
          r = dmod::run_command(command, dmod::parse_system(source), opt);
        }
        return py::make_tuple(dmod::render(r, "json"), r.exit_code());
      },
      py::arg("command"), py::arg("source"), py::arg("max_order") = py::none(),
      py::arg("subst") = std::vector<std::string>{}, py::arg("seed") = 1, py::arg("timing") = false,
      "run a command on a .sys source; returns (json text, exit code)");
  m.def(
      "demo",
      [](const std::string& id) {
        dmod::Report r;
        {
          py::gil_scoped_release release;
          r = id == "--all" ? dmod::run_demo_all(dmod::Options{}) : dmod::run_demo(id, dmod::Options{});
        }
        return py::make_tuple(dmod::render(r, "json"), r.exit_code());
      },
      py::arg("id"));
}
