// Python bindings for the core enumeration and moment engines.
// Big integers cross the boundary as Python ints, rationals as
// fractions.Fraction, so no precision is ever lost.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "corepart/moments.hpp"
#include "corepart/nice.hpp"
#include "corepart/partition.hpp"

namespace py = pybind11;
using namespace corepart;

namespace {

py::int_ big_to_py(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object rat_to_py(const Rational& r) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(big_to_py(numerator(r)), big_to_py(denominator(r)));
}

Family parse_family(const std::string& name) {
  if (name == "plus") return Family::Plus;
  if (name == "minus") return Family::Minus;
  throw py::value_error("family must be 'plus' or 'minus'");
}

}  // namespace

PYBIND11_MODULE(_corepart, mod) {
  mod.doc() = "Exact enumeration and moments of (n, dn+-1)-core partitions with distinct parts";

  mod.def(
      "m_seq", [](long long d, long long n) { return big_to_py(m_seq(d, n)); }, py::arg("d"),
      py::arg("n"), "Count of (n, dn+1)-core partitions with distinct parts");
  mod.def(
      "n_seq", [](long long d, long long n) { return big_to_py(n_seq(d, n)); }, py::arg("d"),
      py::arg("n"), "Count of (n, dn-1)-core partitions with distinct parts");

  mod.def(
      "enumerate_core",
      [](long long t1, long long t2, bool distinct, std::size_t budget) {
        py::list out;
        for (const auto& p : enumerate_core(t1, t2, distinct, budget)) {
          py::tuple parts(p.num_parts());
          for (std::size_t i = 0; i < p.num_parts(); ++i) parts[i] = p.parts()[i];
          out.append(parts);
        }
        return out;
      },
      py::arg("t1"), py::arg("t2"), py::arg("distinct") = false, py::arg("budget") = 1000000,
      "All (t1,t2)-core partitions as tuples of parts, largest size first");

  mod.def(
      "power_sum",
      [](const std::string& family, long long d, long long n, int k) {
        return big_to_py(power_sum(parse_family(family), d, n, k));
      },
      py::arg("family"), py::arg("d"), py::arg("n"), py::arg("k"),
      "Sum of |partition|^k over the family");

  mod.def(
      "moment",
      [](const std::string& family, long long d, long long n, int k) {
        MomentResult r = moment(parse_family(family), d, n, k);
        return py::make_tuple(big_to_py(r.power_sum), big_to_py(r.count),
                              rat_to_py(r.expectation));
      },
      py::arg("family"), py::arg("d"), py::arg("n"), py::arg("k"),
      "(power_sum, count, expectation) for the k-th moment of the size");

  mod.def(
      "expectation_plus",
      [](long long d, long long n) { return rat_to_py(closed_expectation_plus(d, n)); },
      py::arg("d"), py::arg("n"), "Closed-form mean size over (n, dn+1)-cores");

  mod.def(
      "total_minus",
      [](long long d, long long n) { return rat_to_py(closed_total_minus(d, n)); }, py::arg("d"),
      py::arg("n"), "Closed-form total size over (n, dn-1)-cores");
}
