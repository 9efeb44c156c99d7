#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "f4x/fibers.hpp"
#include "f4x/orbits.hpp"
#include "f4x/polycheck.hpp"
#include "f4x/rslocus.hpp"
#include "f4x/stabilizers.hpp"
#include "f4x/verify.hpp"

namespace py = pybind11;
using namespace f4x;

namespace {

py::object pyint(Count c) { return py::module_::import("builtins").attr("int")(to_string(c)); }
py::object pyint(const BigInt& c) { return py::module_::import("builtins").attr("int")(c.str()); }

int degree_of(int q) {
  for (int n = 1; n <= 4; ++n)
    if (q == 1 << n) return n;
  throw std::invalid_argument("field must be one of 2, 4, 8, 16");
}

const OrbitRecord& rec(const std::string& rep) { return OrbitTable::get().find(rep); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "F4 orbit computations in characteristic 2";
  m.attr("__version__") = kVersion;

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("data_checksum", [] { return OrbitTable::get().checksum(); });

  m.def("roots", [] {
    py::list out;
    const auto& rs = RootSystem::get();
    for (int i = 0; i < RootSystem::kNumRoots; ++i) {
      const auto& r = rs.root(i);
      py::dict d;
      d["index"] = i;
      d["label"] = root_label(r.coeffs);
      d["long"] = r.is_long();
      d["height"] = r.height();
      out.append(d);
    }
    return out;
  });

  m.def("weyl_census", [] {
    const auto& W = WeylGroup::get();
    py::dict d;
    d["order"] = W.size();
    d["length_distribution"] = W.length_distribution();
    d["classes"] = W.conjugacy_class_count();
    return d;
  });

  m.def("orbit_table", [] {
    py::list out;
    for (const auto& r : OrbitTable::get().orbits()) {
      py::dict d;
      d["id"] = r.id;
      d["support"] = r.support_labels();
      d["dim_stab"] = r.dim_stab;
      d["component_group"] = r.component_group == ComponentGroup::kS3 ? "S3" : "1";
      d["reductive_type"] = r.reductive_type;
      d["count"] = r.count_text;
      d["count_at_2"] = pyint(r.count.evaluate(2));
      out.append(d);
    }
    return out;
  });

  m.def("bfs_orbit", [](const std::string& rep, int field, std::uint64_t budget, int threads) {
    OrbitOptions o;
    o.budget = budget;
    o.threads = threads;
    py::gil_scoped_release release;
    return bfs_orbit(rec(rep).rep(), degree_of(field), o);
  }, py::arg("rep"), py::arg("field") = 2, py::arg("budget") = std::uint64_t{1} << 28, py::arg("threads") = 1);

  m.def("b_orbit", [](const std::string& rep, int field) { return b_orbit(rec(rep).rep(), degree_of(field)); },
        py::arg("rep"), py::arg("field") = 2);

  m.def("u_stabilizer_count", [](const std::string& rep, int field, bool oracle) {
    return pyint(u_stabilizer_count(rec(rep).rep(), degree_of(field), oracle));
  }, py::arg("rep"), py::arg("field") = 2, py::arg("oracle") = false);

  m.def("fiber", [](const std::string& rep, int field, int threads) {
    const auto p = fiber_count(rec(rep).rep(), threads, degree_of(field));
    py::dict d;
    d["total"] = pyint(p.total);
    py::list cells;
    for (Count c : p.cells) cells.append(pyint(c));
    d["cells"] = cells;
    return d;
  }, py::arg("rep"), py::arg("field") = 2, py::arg("threads") = 1);

  m.def("find_rs", [](int field) -> py::object {
    const auto w = find_rs(degree_of(field));
    if (!w) return py::none();
    py::dict d;
    d["v0"] = w->v0;
    d["values"] = w->values;
    d["unipotent_stabilizer"] = pyint(rs_unipotent_stabilizer(*w));
    return d;
  }, py::arg("field"));

  m.def("counts_sum_to_q48", [] { return orbit_count_sum_check().ok; });

  m.def("orbit_stabilizer_fit", [](int index) {
    const auto f = orbit_stabilizer_consistency(index);
    py::dict d;
    d["ok"] = f.ok;
    d["torus_ranks"] = f.torus_ranks;
    d["detail"] = f.detail;
    return d;
  });

  m.def("_verify_json", [](std::vector<std::string> sections, std::optional<std::string> rep, std::uint64_t budget,
                           int threads, bool oracle) {
    VerifyOptions o;
    o.sections = std::move(sections);
    if (rep) o.rep = parse_rep(*rep);
    o.budget = budget;
    o.threads = threads;
    o.oracle = oracle;
    return verify(o).to_json().dump();
  }, py::arg("sections"), py::arg("rep"), py::arg("budget"), py::arg("threads"), py::arg("oracle"));
}
