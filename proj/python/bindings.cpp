#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "sdsearch/additive.hpp"
#include "sdsearch/binary_code.hpp"
#include "sdsearch/constructions.hpp"
#include "sdsearch/equiv.hpp"
#include "sdsearch/errors.hpp"
#include "sdsearch/extend.hpp"
#include "sdsearch/io.hpp"
#include "sdsearch/isotropic.hpp"

namespace py = pybind11;
using namespace sdsearch;

namespace {

std::vector<std::string> row_strings(const BinaryCode& c) {
  std::vector<std::string> out;
  for (const auto& r : c.rows()) out.push_back(r.to_string(c.length()));
  return out;
}

BinaryCode parse_code(const std::string& text) {
  std::istringstream in(text);
  auto codes = read_codes(in, "<string>");
  if (codes.size() != 1) throw InputError("expected exactly one code record");
  return codes.front();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Binary self-dual codes, GF(4) codes and orbit searches";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<BinaryCode>(m, "BinaryCode")
      .def(py::init([](const std::vector<std::string>& rows) { return BinaryCode::from_strings(rows); }),
           py::arg("rows"))
      .def_static("parse", &parse_code, py::arg("text"))
      .def_property_readonly("length", &BinaryCode::length)
      .def_property_readonly("dimension", &BinaryCode::dimension)
      .def_property_readonly("rows", &row_strings)
      .def("contains", [](const BinaryCode& c, const std::string& w) { return c.contains(BitVec::from_string(w)); })
      .def("dual", [](const BinaryCode& c) { return dual(c); })
      .def("min_distance", [](const BinaryCode& c) { return min_distance(c).distance; })
      .def("is_self_dual", [](const BinaryCode& c) { return is_self_dual(c); })
      .def("is_doubly_even", [](const BinaryCode& c) { return is_doubly_even(c); })
      .def("weight_distribution", [](const BinaryCode& c) { return weight_profile(c).counts; })
      .def("automorphism_order", [](const BinaryCode& c) { return automorphism_group(c).group.order(); })
      .def("to_text", &code_to_text)
      .def("__eq__", [](const BinaryCode& a, const BinaryCode& b) { return a == b; })
      .def("__hash__", &BinaryCode::hash)
      .def("__repr__", [](const BinaryCode& c) {
        return "<BinaryCode [" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]>";
      });

  m.def("golay24", &extended_golay24);
  m.def("hamming8", &extended_hamming8);
  m.def(
      "read_codes",
      [](const std::filesystem::path& p) {
        std::vector<BinaryCode> out;
        for (const auto& f : dataset_files(p)) {
          auto codes = read_code_file(f);
          out.insert(out.end(), codes.begin(), codes.end());
        }
        return out;
      },
      py::arg("path"));
  m.def("equivalent", [](const BinaryCode& a, const BinaryCode& b) { return is_equivalent(a, b).has_value(); });

  m.def("self_dual_count", &self_dual_count_formula, py::arg("n"));
  m.def("max_isotropic_count", &max_isotropic_count_formula, py::arg("m"));
  m.def("count_max_isotropic", [](std::size_t m) { return count_max_isotropic(m); }, py::arg("m"));

  m.def(
      "classify_self_dual",
      [](std::size_t n) {
        const auto cls = classify_self_dual(n);
        py::list classes;
        for (const auto& c : cls.classes) {
          py::dict d;
          d["rep"] = c.rep;
          d["aut_order"] = c.aut_order;
          d["count"] = c.count;
          classes.append(d);
        }
        py::dict out;
        out["total"] = cls.total;
        out["mass"] = cls.mass;
        out["classes"] = classes;
        return out;
      },
      py::arg("n"));

  m.def(
      "orbit_representatives",
      [](const BinaryCode& y, const std::string& group, std::size_t blocks) {
        const HConfig cfg = make_config(parse_hkind(group), blocks);
        std::vector<BinaryCode> out;
        for (const auto& r : lemma_repr(y, cfg).reps) out.push_back(r.code);
        return out;
      },
      py::arg("code"), py::arg("group"), py::arg("blocks"));
}
