#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricsys/admissible.hpp"
#include "toricsys/json_io.hpp"
#include "toricsys/pseudoheight.hpp"
#include "toricsys/tables.hpp"
#include "toricsys/toric.hpp"
#include "toricsys/twist.hpp"

namespace py = pybind11;
using namespace toricsys;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
template <class T>
std::string dump(const T& value) {
  return to_json(value).dump();
}

ToricSystem make_system(const LatticePtr& lattice, const std::vector<std::vector<Int>>& entries) {
  std::vector<DivisorClass> ds;
  ds.reserve(entries.size());
  for (const auto& c : entries) ds.push_back(lattice->make(c));
  return ToricSystem(lattice, std::move(ds));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
  py::register_exception<MissingGolden>(m, "MissingGolden", PyExc_FileNotFoundError);

  py::class_<PicardLattice, std::shared_ptr<PicardLattice>>(m, "Lattice")
      .def_property_readonly("id", &PicardLattice::id)
      .def_property_readonly("rank", &PicardLattice::rank)
      .def_property_readonly("degree", &PicardLattice::degree)
      .def_property_readonly("basis_labels", &PicardLattice::basis_labels)
      .def("canonical", &PicardLattice::canonical)
      .def("make", &PicardLattice::make, py::arg("coords"))
      .def("__repr__", [](const PicardLattice& l) { return "Lattice(" + l.id() + ")"; });

  m.def("lattice", [](const std::string& id) { return std::const_pointer_cast<PicardLattice>(lattice_by_id(id)); },
        py::arg("id"));

  py::class_<DivisorClass>(m, "DivisorClass")
      .def_property_readonly("coords", &DivisorClass::coords)
      .def_property_readonly("lattice_id", [](const DivisorClass& d) { return d.lattice()->id(); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * Int())
      .def(Int() * py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__", [](const DivisorClass& d) { return DivisorClassHash{}(d); })
      .def("__str__", &DivisorClass::to_string)
      .def("__repr__", [](const DivisorClass& d) { return "DivisorClass(" + d.to_string() + ")"; });

  m.def("intersect", &intersect);
  m.def("square", &square);
  m.def("euler_char", &euler_char);
  m.def("euler_char_pair", &euler_char_pair);
  m.def("is_numerically_lo", &is_numerically_lo);
  m.def("enumerate_r_classes", [](const std::string& lattice_id, Int r) { return enumerate_r_classes(lattice_by_id(lattice_id), r); },
        py::arg("lattice"), py::arg("r"));

  py::class_<SurfaceModel, std::shared_ptr<SurfaceModel>>(m, "Surface")
      .def_property_readonly("name", &SurfaceModel::name)
      .def_property_readonly("degree", &SurfaceModel::degree)
      .def_property_readonly("lattice_id", [](const SurfaceModel& x) { return x.lattice()->id(); })
      .def_property_readonly("dynkin_type", &SurfaceModel::dynkin_type)
      .def_property_readonly("simple_roots", &SurfaceModel::simple_roots)
      .def_property_readonly("effective_roots", &SurfaceModel::effective_roots)
      .def_property_readonly("irreducible_minus1", &SurfaceModel::irreducible_minus1)
      .def("is_effective", &SurfaceModel::is_effective)
      .def("lo_slo_status",
           [](const SurfaceModel& x, const DivisorClass& d) {
             const LoSloStatus s = lo_slo_status(x, d);
             return std::make_pair(s.lo, s.slo);
           })
      .def("e_invariant", [](const SurfaceModel& x, const DivisorClass& d) { return dump(e_invariant(x, d)); })
      .def("__repr__", [](const SurfaceModel& x) { return "Surface(" + x.name() + ")"; });

  m.def("catalog_names", &catalog_names);
  m.def("surface", [](const std::string& name) { return std::const_pointer_cast<SurfaceModel>(catalog_surface(name)); },
        py::arg("name"));

  py::class_<ToricSystem>(m, "ToricSystem")
      .def(py::init([](const std::string& lattice_id, const std::vector<std::vector<Int>>& entries) {
             return make_system(lattice_by_id(lattice_id), entries);
           }),
           py::arg("lattice"), py::arg("entries"))
      .def_property_readonly("entries", &ToricSystem::entries)
      .def_property_readonly("lattice_id", [](const ToricSystem& ts) { return ts.lattice()->id(); })
      .def("__len__", &ToricSystem::size)
      .def("self_intersections", [](const ToricSystem& ts) { return self_intersections(ts); })
      .def("problems", [](const ToricSystem& ts) { return validate(ts).problems; })
      .def("to_json", [](const ToricSystem& ts) { return dump(ts); });

  m.def("toric_system_from_json", [](const std::string& text) { return toric_system_from_json(Json::parse(text)); });
  m.def("augment_blowup", &augment_blowup);
  m.def("generates_picard", &generates_picard);
  m.def("exceptionality", [](const SurfaceModel& x, const ToricSystem& ts, bool fast) {
    return dump(fast ? exceptionality_fast(x, ts) : exceptionality_naive(x, ts));
  });
  m.def("pseudoheight", [](const SurfaceModel& x, const ToricSystem& ts, int p_min) { return dump(pseudoheight(x, ts, p_min)); });
  m.def("reduce", [](const SurfaceModel& x, const DivisorClass& d) { return dump(reduce(x, d)); });

  m.def("is_admissible", [](const Sequence& s, bool p2) { return is_admissible(s, {p2}); });
  m.def("canonical_form", &canonical_form);
  m.def("augment", &augment);
  m.def("blow_down", &blow_down);
  m.def("generate_admissible", [](int n, Int lo, std::optional<Int> hi, bool p2) { return generate_admissible(n, lo, hi, {p2}); });
  m.def("matches_strong_family", &matches_strong_family);

  m.def("table_ids", &table_ids);
  m.def("default_data_dir", &default_data_dir);
  m.def("verify_table", [](const std::string& id, const std::string& data_dir) { return dump(verify_table(id, data_dir)); });
}
