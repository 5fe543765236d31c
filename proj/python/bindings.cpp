#include <span>

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slicekit/analysis.hpp"
#include "slicekit/error.hpp"
#include "slicekit/poly_text.hpp"
#include "slicekit/recovery.hpp"
#include "slicekit/thresholds.hpp"

namespace py = pybind11;
using namespace slicekit;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.str());
}

py::list fractions(std::span<const Rational> v) {
  py::list out;
  for (const auto& r : v) out.append(fraction(r));
  return out;
}

// Accepts "{0,1,3}" or any iterable of ints, Fractions or numeric strings.
ValueSet to_value_set(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return ValueSet::parse(obj.cast<std::string>());
  std::vector<Rational> values;
  for (const auto& item : obj) values.push_back(Rational::parse(py::str(item).cast<std::string>()));
  return ValueSet(std::move(values));
}

std::optional<ValueSet> to_optional_set(const py::object& obj) {
  if (obj.is_none()) return std::nullopt;
  return to_value_set(obj);
}

py::list indices(Mask m) { return py::cast(mask_indices(m)); }

py::dict junta_dict(const JuntaReport& r) {
  py::dict d;
  d["min_size"] = r.min_size;
  d["witness"] = indices(r.witness);
  return d;
}

py::dict coefficient_dict(const CoefficientMap& map) {
  py::dict d;
  for (const auto& [S, c] : map) d[py::tuple(indices(S))] = fraction(c);
  return d;
}

py::dict row_dict(const ThresholdRow& r) {
  py::dict d;
  d["A"] = fractions(r.A.elements());
  d["d"] = r.d;
  d["W"] = r.W;
  d["k"] = r.k;
  d["kappa"] = r.kappa;
  d["attaining_s"] = py::cast(std::vector<int>(r.attaining_s.begin(), r.attaining_s.end()));
  return d;
}

py::dict analyze_py(const std::string& poly, int n, int k, const py::object& A, std::optional<int> d) {
  const auto p = parse_poly(poly, n);
  AnalysisReport r;
  {
    py::gil_scoped_release release;
    r = analyze(p, SliceDomain(n, k), to_optional_set(A), d);
  }
  py::dict out;
  out["degree"] = r.degree;
  if (r.A) {
    out["a_valued"] = r.a_valued.ok;
    out["counterexample"] = r.a_valued.counterexample ? py::object(indices(*r.a_valued.counterexample)) : py::none();
  } else {
    out["a_valued"] = py::none();
    out["counterexample"] = py::none();
  }
  out["expansion_terms"] = r.expansion_terms;
  out["sparse"] = format_poly(r.sparse.as_poly());
  out["support"] = indices(r.sparse.support);
  out["junta"] = junta_dict(r.junta);
  return out;
}

py::dict construct_py(const py::object& A, int d, int k, int m) {
  const ValueSet set = to_value_set(A);
  std::optional<ConstructionBundle> b;
  {
    py::gil_scoped_release release;
    b.emplace(construct_certified(set, d, k, m));
  }
  const auto& s = b->example.spec;
  py::dict out;
  out["family"] = family_name(s.family);
  out["n"] = s.n;
  out["k"] = s.k;
  out["blocks"] = s.blocks;
  out["e"] = s.e;
  out["t"] = s.t;
  out["r"] = s.r;
  out["s"] = s.s;
  out["witness_poly"] = s.witness_poly ? py::object(fractions(s.witness_poly->coefficients())) : py::none();
  out["poly"] = format_poly(b->example.poly);
  out["I"] = indices(s.I);
  out["J"] = indices(s.J);
  out["a_valued"] = b->a_valued;
  out["degree"] = b->degree;
  out["lower_bound"] = b->lower_bound;
  out["junta"] = junta_dict(b->junta);
  out["certified"] = b->certified();
  return out;
}

py::dict verify_py(int n, int k, int d, const py::object& A, int bound) {
  const ValueSet set = to_value_set(A);
  std::optional<VerificationReport> r;
  {
    py::gil_scoped_release release;
    r.emplace(verify_exhaustive(SliceDomain(n, k), d, set, bound));
  }
  py::dict out;
  out["functions_scanned"] = r->functions_scanned;
  out["degree_le_d_count"] = r->degree_le_d_count;
  out["max_min_junta"] = r->max_min_junta;
  py::list violations;
  for (const auto& v : r->violations) violations.append(py::make_tuple(fractions(v.values), v.min_junta));
  out["violations"] = violations;
  return out;
}

py::dict decompose_py(const std::string& poly, int n, int k, const py::object& A) {
  const auto f = truth_table(parse_poly(poly, n), SliceDomain(n, k));
  const auto r = decompose(f, to_value_set(A));
  py::dict indicators;
  for (const auto& [a, t] : r.indicators) indicators[fraction(a)] = fractions(t.values());
  py::dict out;
  out["values"] = fractions(f.values());
  out["indicators"] = indicators;
  out["all_boolean"] = r.all_boolean;
  out["reconstructs"] = r.reconstructs;
  return out;
}

}  // namespace

PYBIND11_MODULE(_slicekit, m) {
  m.doc() = "Exact computations for low-degree functions on the slice";

  static py::exception<Error> base(m, "SlicekitError");
  static py::exception<Error> input(m, "InputError", base.ptr());
  static py::exception<Error> domain(m, "DomainError", base.ptr());
  static py::exception<Error> guard(m, "GuardError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::Input: py::set_error(input, e.what()); break;
        case ErrorKind::Domain: py::set_error(domain, e.what()); break;
        case ErrorKind::Guard: py::set_error(guard, e.what()); break;
        case ErrorKind::Internal: py::set_error(base, e.what()); break;
      }
    }
  });

  m.def("compute_W", [](const py::object& A, int d) { return compute_W(to_value_set(A), d); }, py::arg("A"),
        py::arg("d"));
  m.def(
      "compute_k",
      [](const py::object& A, int d) {
        const auto r = compute_k(to_value_set(A), d);
        return py::make_tuple(r.value, std::vector<int>(r.attaining_s.begin(), r.attaining_s.end()));
      },
      py::arg("A"), py::arg("d"), "Returns (k, attaining s values).");
  m.def("compute_kappa", [](const py::object& A, int d) { return compute_kappa(to_value_set(A), d); },
        py::arg("A"), py::arg("d"));
  m.def("longest_ap", [](const py::object& A) { return longest_ap(to_value_set(A)); }, py::arg("A"));
  m.def(
      "find_witness",
      [](const py::object& A, int d, long L) -> py::object {
        const auto w = find_nonconstant_witness(to_value_set(A), d, L);
        return w ? py::object(fractions(w->coefficients())) : py::none();
      },
      py::arg("A"), py::arg("d"), py::arg("L"), "Coefficients (lowest first) of the first witness, or None.");
  m.def(
      "build_table",
      [](const std::vector<py::object>& sets, int d_max) {
        std::vector<ValueSet> parsed;
        for (const auto& s : sets) parsed.push_back(to_value_set(s));
        py::list out;
        for (const auto& r : build_table(parsed, d_max)) out.append(row_dict(r));
        return out;
      },
      py::arg("sets"), py::arg("d_max"));
  m.def("transfer_matrix", &transfer_matrix, py::arg("k"), py::arg("d"));
  m.def(
      "truth_table",
      [](const std::string& poly, int n, int k) { return fractions(truth_table(parse_poly(poly, n), SliceDomain(n, k)).values()); },
      py::arg("poly"), py::arg("n"), py::arg("k"));
  m.def(
      "slice_degree", [](const std::string& poly, int n, int k) { return slice_degree(truth_table(parse_poly(poly, n), SliceDomain(n, k))); },
      py::arg("poly"), py::arg("n"), py::arg("k"));
  m.def(
      "homogenize",
      [](const std::string& poly, int n, int k, int d) {
        return format_poly(homogenize(parse_poly(poly, n), SliceDomain(n, k), d));
      },
      py::arg("poly"), py::arg("n"), py::arg("k"), py::arg("d"));
  m.def(
      "extract_coefficients",
      [](const std::string& poly, int n, int k, int d) {
        return coefficient_dict(extract_coefficients(truth_table(parse_poly(poly, n), SliceDomain(n, k)), d).coeffs);
      },
      py::arg("poly"), py::arg("n"), py::arg("k"), py::arg("d"));
  m.def("analyze", &analyze_py, py::arg("poly"), py::arg("n"), py::arg("k"), py::arg("A") = py::none(),
        py::arg("d") = py::none());
  m.def("construct", &construct_py, py::arg("A"), py::arg("d"), py::arg("k"), py::arg("m"));
  m.def("verify", &verify_py, py::arg("n"), py::arg("k"), py::arg("d"), py::arg("A") = "{0,1}",
        py::arg("bound") = 1);
  m.def("decompose", &decompose_py, py::arg("poly"), py::arg("n"), py::arg("k"), py::arg("A"));
}
