#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shiftlim/json_io.hpp"
#include "shiftlim/limit_iso.hpp"
#include "shiftlim/shift_equiv.hpp"

namespace py = pybind11;
using namespace shiftlim;

namespace pybind11 {
namespace detail {

// Python int <-> arbitrary-precision Int, through the decimal string form.
template <>
struct type_caster<Int> {
 public:
  PYBIND11_TYPE_CASTER(Int, const_name("int"));

  bool load(handle src, bool) {
    PyObject* ptr = src.ptr();
    if (!PyLong_Check(ptr)) return false;
    PyObject* text = PyObject_Str(ptr);
    if (!text) {
      PyErr_Clear();
      return false;
    }
    const char* chars = PyUnicode_AsUTF8(text);
    bool ok = chars != nullptr;
    if (ok) {
      try {
        value = Int(chars);
      } catch (...) {
        ok = false;
      }
    } else {
      PyErr_Clear();
    }
    Py_DECREF(text);
    return ok;
  }

  static handle cast(const Int& src, return_value_policy, handle) {
    return PyLong_FromString(src.str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

template <typename T>
std::string repr_of(const T& value) {
  std::ostringstream out;
  out << value;
  return out.str();
}

std::vector<IntVector> matrix_rows(const IntMatrix& m) {
  std::vector<IntVector> out;
  out.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic shift equivalence and simple direct limits for "
            "integer matrix endomorphisms";

  py::register_exception<InvalidCertificate>(m, "InvalidCertificate", PyExc_ValueError);
  py::register_exception<InvalidIsoWitness>(m, "InvalidIsoWitness", PyExc_ValueError);
  py::register_exception<JsonError>(m, "JsonError", PyExc_ValueError);

  py::class_<IntMatrix>(m, "IntMatrix", "Dense integer matrix with exact arbitrary-precision entries")
      .def(py::init(&IntMatrix::from_rows), py::arg("rows"))
      .def_static("identity", &IntMatrix::identity, py::arg("n"))
      .def_static("zeros", [](std::size_t r, std::size_t c) { return IntMatrix(r, c); },
                  py::arg("rows"), py::arg("cols"))
      .def_property_readonly("rows", &IntMatrix::rows)
      .def_property_readonly("cols", &IntMatrix::cols)
      .def("to_lists", &matrix_rows)
      .def("column", &IntMatrix::column, py::arg("j"))
      .def("transposed", &IntMatrix::transposed)
      .def("is_zero", &IntMatrix::is_zero)
      .def("__getitem__",
           [](const IntMatrix& self, std::pair<std::size_t, std::size_t> ij) {
             if (ij.first >= self.rows() || ij.second >= self.cols()) {
               throw py::index_error("matrix index out of range");
             }
             return self(ij.first, ij.second);
           })
      .def(py::self == py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def("__matmul__", [](const IntMatrix& a, const IntMatrix& b) { return a * b; })
      .def("__mul__", [](const IntMatrix& a, const IntMatrix& b) { return a * b; })
      .def("__rmul__", [](const IntMatrix& a, const Int& c) { return c * a; })
      .def("__repr__", [](const IntMatrix& self) { return "IntMatrix(" + repr_of(self) + ")"; });
  py::implicitly_convertible<py::list, IntMatrix>();

  m.def("mat_mul", [](const IntMatrix& a, const IntMatrix& b) { return a * b; }, py::arg("a"),
        py::arg("b"));
  m.def("mat_pow", &mat_pow, py::arg("a"), py::arg("k"));
  m.def("determinant", &determinant, py::arg("m"));
  m.def("is_unimodular", &is_unimodular, py::arg("m"));
  m.def(
      "smith_normal_form",
      [](const IntMatrix& mat) {
        auto snf = smith_normal_form(mat);
        return py::make_tuple(std::move(snf.u), std::move(snf.d), std::move(snf.v));
      },
      py::arg("m"), "Return (u, d, v) with u*m*v = d in Smith normal form");
  m.def("integer_kernel_basis",
        [](const IntMatrix& mat) { return integer_kernel_basis(mat); }, py::arg("m"));
  m.def("solve_integer",
        [](const IntMatrix& mat, const IntVector& rhs) { return solve_integer(mat, rhs); },
        py::arg("m"), py::arg("rhs"));

  py::class_<Endomorphism>(m, "Endomorphism", "Endomorphism of Z^r given by a square matrix")
      .def(py::init<IntMatrix>(), py::arg("matrix"))
      .def(py::init([](const std::vector<IntVector>& rows) {
             return Endomorphism(IntMatrix::from_rows(rows));
           }),
           py::arg("rows"))
      .def_property_readonly("rank", &Endomorphism::rank)
      .def_property_readonly("matrix", &Endomorphism::matrix)
      .def("power", &Endomorphism::power, py::arg("k"))
      .def(py::self == py::self)
      .def("__repr__",
           [](const Endomorphism& self) { return "Endomorphism(" + repr_of(self.matrix()) + ")"; });
  py::implicitly_convertible<IntMatrix, Endomorphism>();
  py::implicitly_convertible<py::list, Endomorphism>();

  py::class_<LatticeBasis>(m, "LatticeBasis", "Basis of an integer lattice inside Z^ambient_dim")
      .def_readonly("ambient_dim", &LatticeBasis::ambient_dim)
      .def_readonly("vectors", &LatticeBasis::vectors)
      .def("__len__", &LatticeBasis::size)
      .def("contains", [](const LatticeBasis& self, const IntVector& v) {
        return lattice_contains(self, v);
      });

  m.def("stabilization_index", &stabilization_index, py::arg("e"));
  m.def("eventual_kernel_basis", &eventual_kernel_basis, py::arg("e"));
  m.def("intertwiner_lattice", &intertwiner_lattice, py::arg("a"), py::arg("b"));

  py::class_<LimitElement>(m, "LimitElement",
                           "Representative (g, n) of a class in a simple direct limit")
      .def(py::init([](IntVector g, std::size_t n) { return LimitElement{std::move(g), n}; }),
           py::arg("g"), py::arg("n") = 0)
      .def_readwrite("g", &LimitElement::g)
      .def_readwrite("n", &LimitElement::level)
      .def(py::self == py::self)
      .def("__repr__", [](const LimitElement& self) {
        std::ostringstream out;
        out << "LimitElement([";
        for (std::size_t i = 0; i < self.g.size(); ++i) out << (i ? ", " : "") << self.g[i];
        out << "], " << self.level << ")";
        return out.str();
      });

  py::class_<DirectLimitGroup>(m, "DirectLimitGroup",
                               "Simple direct limit of Z^r along an endomorphism")
      .def(py::init<Endomorphism>(), py::arg("endo"))
      .def_property_readonly("endo", &DirectLimitGroup::endo)
      .def_property_readonly("rank", &DirectLimitGroup::rank)
      .def_property_readonly("stabilization", &DirectLimitGroup::stabilization)
      .def_property_readonly("eventual_kernel", &DirectLimitGroup::eventual_kernel)
      .def("identity", &DirectLimitGroup::identity)
      .def("embed", &DirectLimitGroup::embed, py::arg("g"))
      .def("equal", &DirectLimitGroup::equal, py::arg("x"), py::arg("y"))
      .def("is_identity", &DirectLimitGroup::is_identity, py::arg("x"))
      .def("add", &DirectLimitGroup::add, py::arg("x"), py::arg("y"))
      .def("negate", &DirectLimitGroup::negate, py::arg("x"))
      .def("coshift", &DirectLimitGroup::coshift, py::arg("x"))
      .def("induced", &DirectLimitGroup::induced, py::arg("x"))
      .def("normalize", &DirectLimitGroup::normalize, py::arg("x"))
      .def("scalar_multiple", &DirectLimitGroup::scalar_multiple, py::arg("c"), py::arg("x"))
      .def("combine", &DirectLimitGroup::combine, py::arg("coeffs"), py::arg("elems"))
      .def(py::self == py::self);

  py::class_<ShiftEquivCert>(m, "ShiftEquivCert",
                             "Certificate (phi, psi, lag) of a shift equivalence")
      .def(py::init([](IntMatrix phi, IntMatrix psi, std::size_t lag) {
             return ShiftEquivCert{std::move(phi), std::move(psi), lag};
           }),
           py::arg("phi"), py::arg("psi"), py::arg("lag"))
      .def_readwrite("phi", &ShiftEquivCert::phi)
      .def_readwrite("psi", &ShiftEquivCert::psi)
      .def_readwrite("lag", &ShiftEquivCert::lag)
      .def(py::self == py::self);

  py::class_<VerifyReport>(m, "VerifyReport", "Outcome of the four defining relations")
      .def_readonly("phi_intertwines", &VerifyReport::phi_intertwines)
      .def_readonly("psi_intertwines", &VerifyReport::psi_intertwines)
      .def_readonly("psi_phi_is_source_power", &VerifyReport::psi_phi_is_source_power)
      .def_readonly("phi_psi_is_target_power", &VerifyReport::phi_psi_is_target_power)
      .def_property_readonly("valid", &VerifyReport::valid)
      .def("__bool__", &VerifyReport::valid);

  m.def("verify_cert", &verify_cert, py::arg("a"), py::arg("b"), py::arg("cert"));
  m.def("reflexive_cert", &reflexive_cert, py::arg("a"));
  m.def("identity_cert", &identity_cert, py::arg("a"));
  m.def("invert_cert", &invert_cert, py::arg("cert"));
  m.def("compose_certs", &compose_certs, py::arg("ab"), py::arg("bc"));
  m.def("search_shift_equivalence", &search_shift_equivalence, py::arg("a"), py::arg("b"),
        py::arg("max_lag"), py::arg("coeff_bound"));
  m.def("conjugacy_from_cert", &conjugacy_from_cert, py::arg("a"), py::arg("b"), py::arg("cert"));

  py::class_<LimitIso>(m, "LimitIso",
                       "Isomorphism between two direct limits, stored by generator images")
      .def(py::init(&make_limit_iso), py::arg("source"), py::arg("target"),
           py::arg("forward_images"), py::arg("backward_images"))
      .def_readonly("source", &LimitIso::source)
      .def_readonly("target", &LimitIso::target)
      .def_readonly("forward_images", &LimitIso::forward_images)
      .def_readonly("backward_images", &LimitIso::backward_images);

  py::class_<IsoReport>(m, "IsoReport")
      .def_readonly("ok", &IsoReport::ok)
      .def_readonly("diagnostics", &IsoReport::diagnostics)
      .def("__bool__", [](const IsoReport& self) { return self.ok; });

  py::class_<BridgedCert>(m, "BridgedCert",
                          "Certificate read off a witness, with the levels used per side")
      .def_readonly("cert", &BridgedCert::cert)
      .def_readonly("forward_level", &BridgedCert::forward_level)
      .def_readonly("backward_level", &BridgedCert::backward_level);

  m.def("apply_limit_hom", &apply_limit_hom, py::arg("iso"), py::arg("x"));
  m.def("inverse_iso", &inverse_iso, py::arg("iso"));
  m.def("verify_limit_iso", &verify_limit_iso, py::arg("iso"),
        py::arg("samples") = kDefaultIsoSamples, py::arg("seed") = kDefaultSampleSeed);
  m.def("shift_equiv_to_conjugacy", &shift_equiv_to_conjugacy, py::arg("a"), py::arg("b"),
        py::arg("cert"));
  m.def("conjugacy_to_shift_equiv", &conjugacy_to_shift_equiv, py::arg("iso"));

  // JSON string forms matching the CLI file schemas.
  m.def("matrix_to_json", [](const IntMatrix& mat) { return matrix_to_json(mat).dump(); },
        py::arg("m"));
  m.def("matrix_from_json",
        [](const std::string& text) { return matrix_from_json(nlohmann::json::parse(text)); },
        py::arg("text"));
  m.def("cert_to_json", [](const ShiftEquivCert& cert) { return cert_to_json(cert).dump(); },
        py::arg("cert"));
  m.def("cert_from_json",
        [](const std::string& text) { return cert_from_json(nlohmann::json::parse(text)); },
        py::arg("text"));
  m.def("element_to_json", [](const LimitElement& x) { return element_to_json(x).dump(); },
        py::arg("x"));
  m.def("element_from_json",
        [](const std::string& text) { return element_from_json(nlohmann::json::parse(text)); },
        py::arg("text"));
  m.def("iso_to_json",
        [](const LimitIso& iso) { return iso_to_json(iso).dump(); }, py::arg("iso"));
  m.def("iso_from_json",
        [](const std::string& text, Endomorphism a, Endomorphism b) {
          return iso_from_json(nlohmann::json::parse(text), std::move(a), std::move(b));
        },
        py::arg("text"), py::arg("a"), py::arg("b"));
}
