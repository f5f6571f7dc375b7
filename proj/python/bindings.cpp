#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinideal/ideals.hpp"
#include "spinideal/maps.hpp"
#include "spinideal/textio.hpp"
#include "spinideal/unitary.hpp"

namespace py = pybind11;
using namespace spinideal;

namespace {

py::int_ to_py_int(const Integer& v) {
  std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

Signature make_sig(int p, int q) { return Signature(p, q); }

std::vector<Blade> blades_from_lists(const std::vector<std::vector<int>>& lists) {
  std::vector<Blade> out;
  out.reserve(lists.size());
  for (const auto& idx : lists) out.push_back(Blade::from_indices(idx));
  return out;
}

py::list blades_to_lists(const std::vector<Blade>& blades) {
  py::list out;
  for (Blade b : blades) out.append(b.indices());
  return out;
}

py::dict report_to_dict(const IdempotentReport& r) {
  py::dict d;
  d["f"] = r.f;
  d["generators"] = blades_to_lists(r.generators);
  d["k"] = r.k;
  d["is_idempotent"] = r.is_idempotent;
  d["is_primitive"] = r.is_primitive;
  d["ideal_dim"] = r.ideal_dim;
  d["division_type"] =
      r.division_type ? py::object(py::str(division_type_str(*r.division_type))) : py::none();
  d["basis_labels"] = blades_to_lists(r.ideal_basis_labels);
  py::list basis;
  for (const auto& v : r.ideal_basis) basis.append(v);
  d["basis"] = basis;
  return d;
}

py::list matrix_to_rows(const RationalMatrix& m) {
  py::list rows;
  for (int r = 0; r < m.rows(); ++r) {
    py::list row;
    for (int c = 0; c < m.cols(); ++c) {
      const Rational& v = m.at(r, c);
      if (rational_den(v) == 1) {
        row.append(to_py_int(rational_num(v)));
      } else {
        row.append(py::str(rational_str(v)));
      }
    }
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(spinideal, m) {
  m.doc() = "Exact Clifford algebra toolkit: primitive idempotents, spinor ideals, and "
            "Kahler-form structures";

  py::register_exception<Error>(m, "SpinidealError");

  py::class_<Multivector>(m, "Multivector")
      .def_static(
          "parse",
          [](const std::string& text, int p, int q) {
            return parse_multivector(text, make_sig(p, q));
          },
          py::arg("text"), py::arg("p"), py::arg("q"))
      .def_static(
          "scalar",
          [](int p, int q, long long num, long long den) {
            return Multivector::scalar(make_sig(p, q), Rational(num, den));
          },
          py::arg("p"), py::arg("q"), py::arg("num"), py::arg("den") = 1)
      .def_static(
          "blade",
          [](int p, int q, const std::vector<int>& indices, long long num, long long den) {
            return Multivector::from_blade(make_sig(p, q), Blade::from_indices(indices),
                                           Rational(num, den));
          },
          py::arg("p"), py::arg("q"), py::arg("indices"), py::arg("num") = 1, py::arg("den") = 1)
      .def_property_readonly(
          "signature",
          [](const Multivector& x) { return py::make_tuple(x.sig().p, x.sig().q); })
      .def("is_zero", &Multivector::is_zero)
      .def("terms",
           [](const Multivector& x) {
             py::list out;
             for (const auto& [b, c] : x.terms()) {
               out.append(py::make_tuple(b.indices(), to_py_int(rational_num(c)),
                                         to_py_int(rational_den(c))));
             }
             return out;
           })
      .def("grade", [](const Multivector& x, int k) { return grade_project(x, k); })
      .def("scaled",
           [](const Multivector& x, long long num, long long den) {
             return x.scaled(Rational(num, den));
           },
           py::arg("num"), py::arg("den") = 1)
      .def("wedge", [](const Multivector& x, const Multivector& y) { return mv_wedge(x, y); })
      .def("__add__", [](const Multivector& x, const Multivector& y) { return x + y; })
      .def("__sub__", [](const Multivector& x, const Multivector& y) { return x - y; })
      .def("__neg__", [](const Multivector& x) { return -x; })
      .def("__mul__", [](const Multivector& x, const Multivector& y) { return mv_mul(x, y); })
      .def("__xor__", [](const Multivector& x, const Multivector& y) { return mv_wedge(x, y); })
      .def("__eq__", [](const Multivector& x, const Multivector& y) { return x == y; })
      .def("__str__", [](const Multivector& x) { return render_multivector(x); })
      .def("__repr__", [](const Multivector& x) {
        return "Multivector(" + render_multivector(x) + ")";
      });

  m.def("radon_hurwitz", &radon_hurwitz, py::arg("i"));
  m.def(
      "involution_count", [](int p, int q) { return involution_count(make_sig(p, q)); },
      py::arg("p"), py::arg("q"));
  m.def(
      "classify",
      [](int p, int q) {
        MatrixType t = classify(make_sig(p, q));
        py::dict d;
        d["text"] = t.str();
        d["size"] = t.size;
        d["minimal_ideal_dim"] = t.minimal_ideal_dim();
        d["real_dim"] = t.real_dim();
        return d;
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "pseudoscalar", [](int p, int q) { return pseudoscalar(make_sig(p, q)); }, py::arg("p"),
      py::arg("q"));
  m.def(
      "build_idempotent",
      [](int p, int q, const std::vector<std::vector<int>>& generators) {
        return build_idempotent(make_sig(p, q), blades_from_lists(generators));
      },
      py::arg("p"), py::arg("q"), py::arg("generators"));
  m.def(
      "verify_idempotent",
      [](int p, int q, const Multivector& f) {
        return report_to_dict(verify_idempotent(make_sig(p, q), f));
      },
      py::arg("p"), py::arg("q"), py::arg("f"));
  m.def(
      "division_ring_basis",
      [](int p, int q, const Multivector& f) {
        py::list out;
        for (const auto& v : division_ring_basis(make_sig(p, q), f)) out.append(v);
        return out;
      },
      py::arg("p"), py::arg("q"), py::arg("f"));
  m.def(
      "quaternion_relations_check",
      [](int p, int q, const Multivector& f, const Multivector& i, const Multivector& j,
         const Multivector& k) {
        return quaternion_relations_check(make_sig(p, q), f, i, j, k);
      },
      py::arg("p"), py::arg("q"), py::arg("f"), py::arg("i"), py::arg("j"), py::arg("k"));
  m.def(
      "find_generators",
      [](int p, int q, const std::vector<std::vector<int>>& seed,
         const std::vector<int>& support) {
        Signature sig = make_sig(p, q);
        std::vector<Blade> result =
            find_generators(sig, blades_from_lists(seed), GeneratorSubset::make(sig, support));
        return blades_to_lists(result);
      },
      py::arg("p"), py::arg("q"), py::arg("seed"), py::arg("support"));
  m.def("kahler_polynomial", &kahler_polynomial, py::arg("n"));
  m.def("rational_kahler_polynomial", &rational_kahler_polynomial, py::arg("n"));
  m.def(
      "induce_idempotent",
      [](int n, int p, int q) { return report_to_dict(induce_idempotent(n, make_sig(p, q))); },
      py::arg("n"), py::arg("p"), py::arg("q"));
  m.def(
      "recover_structure",
      [](int p, int q, const Multivector& f) {
        UnitaryStructure s = recover_structure(make_sig(p, q), f);
        py::dict d;
        d["n"] = s.n;
        d["omega"] = s.omega;
        d["J"] = matrix_to_rows(s.J);
        return d;
      },
      py::arg("p"), py::arg("q"), py::arg("f"));
  m.def(
      "recover_by_projection",
      [](int p, int q) {
        ProjectionDecomposition d = recover_by_projection(make_sig(p, q));
        py::dict out;
        out["pairs"] = d.pairs;
        out["f_tilde"] = d.f_tilde;
        out["extra_generators"] = blades_to_lists(d.extra_generators);
        out["e"] = d.e;
        out["h"] = d.h;
        out["omega_tilde"] = d.omega_tilde;
        out["subalgebra"] = d.subalgebra.members;
        out["is_idempotent"] = d.h_report.is_idempotent;
        out["is_primitive"] = d.h_report.is_primitive;
        out["ideal_dim"] = d.h_report.ideal_dim;
        out["splitting_verified"] = d.splitting_verified;
        return out;
      },
      py::arg("p"), py::arg("q"));
}
