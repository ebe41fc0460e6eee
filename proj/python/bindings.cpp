#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bourbakikit/json_io.hpp"
#include "bourbakikit/poly_gcd.hpp"

namespace py = pybind11;
using bbk::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null:
      return py::none();
    case json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
      return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
      return py::float_(j.get<double>());
    case json::value_t::string:
      return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(json_to_py(v));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default:
      throw std::invalid_argument("unsupported JSON value");
  }
}

json py_to_json(const py::handle& h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<long long>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
    json a = json::array();
    for (const auto& v : h) a.push_back(py_to_json(v));
    return a;
  }
  if (py::isinstance<py::dict>(h)) {
    json o = json::object();
    for (const auto& item : h.cast<py::dict>())
      o[item.first.cast<std::string>()] = py_to_json(item.second);
    return o;
  }
  throw std::invalid_argument("values must be None, bool, int, float, str, list, or dict");
}

bbk::PolyMatrix matrix_arg(const py::handle& h) { return bbk::matrix_from_json(py_to_json(h)); }

int resolved_box(int n, int t_max, int box) { return box >= 0 ? box : n * t_max; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graded Bourbaki ideals of Koszul cycle modules: exact constructions, "
            "height certificates, determinantal extraction, and Rees lattice checks.";

  m.def(
      "koszul_differential",
      [](int n, int k) { return json_to_py(bbk::to_json(bbk::differential(n, k))); },
      py::arg("n"), py::arg("k"),
      "Matrix of the k-th Koszul differential on n variables, as a dict.");

  m.def(
      "parse_poly",
      [](const std::string& text, int n) {
        return json_to_py(bbk::to_json(bbk::parse_polynomial(text, n)));
      },
      py::arg("text"), py::arg("n"), "Parse a polynomial like 'x1^2*x2 - 3/4*x3'.");
  m.def(
      "poly_to_string",
      [](const py::handle& p) { return bbk::to_string(bbk::polynomial_from_json(py_to_json(p))); },
      py::arg("poly"), "Render a polynomial dict back to text.");
  m.def(
      "poly_gcd",
      [](const std::string& f, const std::string& g, int n) {
        return bbk::to_string(bbk::poly_gcd(bbk::parse_polynomial(f, n),
                                            bbk::parse_polynomial(g, n)));
      },
      py::arg("f"), py::arg("g"), py::arg("n"), "gcd of two polynomials given as text.");

  m.def(
      "catalog_ztop",
      [](int n, int i, int j) { return json_to_py(bbk::to_json(bbk::z_top(n, i, j))); },
      py::arg("n"), py::arg("i"), py::arg("j"));
  m.def("catalog_zn2", [](int n) { return json_to_py(bbk::to_json(bbk::z_nminus2(n))); },
        py::arg("n"));
  m.def("catalog_z2", [](int n) { return json_to_py(bbk::to_json(bbk::z2(n))); }, py::arg("n"));
  m.def("catalog_n6z3", [] { return json_to_py(bbk::to_json(bbk::n6_z3_explicit())); });
  m.def("catalog_n6z3_bad",
        [] { return json_to_py(bbk::to_json(bbk::n6_z3_bad_configuration())); });

  m.def(
      "check_map",
      [](const py::handle& matrix) {
        bbk::PolyMatrix mm = matrix_arg(matrix);
        return json_to_py(bbk::to_json(bbk::check_bourbaki_map(mm, mm.cols())));
      },
      py::arg("matrix"),
      "Unit minor gcd certificate for a map matrix; minor size is the column count.");
  m.def(
      "check_presentation",
      [](const py::handle& matrix, int r) {
        bbk::PolyMatrix mm = matrix_arg(matrix);
        return json_to_py(bbk::to_json(bbk::check_presentation_criterion(mm, mm.rows(), r)));
      },
      py::arg("matrix"), py::arg("r") = 2);
  m.def(
      "extract_ideal",
      [](const py::handle& matrix) {
        return json_to_py(bbk::to_json(bbk::extract_bourbaki_ideal(matrix_arg(matrix))));
      },
      py::arg("matrix"), "Determinantal extraction from a presentation matrix dict.");
  m.def(
      "extract_from_monomials",
      [](const py::handle& ideal) {
        bbk::IdealGens g = bbk::ideal_from_json(py_to_json(ideal));
        return json_to_py(bbk::to_json(bbk::extract_bourbaki_ideal(bbk::taylor_presentation(g))));
      },
      py::arg("ideal"),
      "Extraction from the pairwise syzygies of a monomial ideal dict {'n', 'gens'}.");

  m.def("bourbaki_number", &bbk::bourbaki_number, py::arg("k"), py::arg("r"), py::arg("e1"),
        "Twist m = k(r - 1) - e1.");
  m.def("koszul_bourbaki_number", &bbk::koszul_bourbaki_number, py::arg("n"), py::arg("i"),
        "Twist of the i-th Koszul cycle module on n variables.");
  m.def("cycle_rank", &bbk::cycle_rank, py::arg("n"), py::arg("i"));
  m.def("obstruction", &bbk::multigraded_obstruction, py::arg("n"), py::arg("i"),
        "False when no basis-subset splitting can exist at (n, i).");

  m.def(
      "search_generic",
      [](int n, int i, std::uint64_t seed, int max_attempts) {
        bbk::KoszulMap d = bbk::differential(n, i);
        const int r = static_cast<int>(bbk::cycle_rank(n, i));
        return json_to_py(bbk::to_json(
            bbk::generic_bourbaki_search(d.matrix, d.matrix.cols(), r, seed, max_attempts)));
      },
      py::arg("n"), py::arg("i"), py::arg("seed") = 0, py::arg("max_attempts") = 20);
  m.def(
      "search_multigraded",
      [](int n, int i, std::uint64_t budget) {
        return json_to_py(bbk::to_json(bbk::multigraded_exhaustive_search(n, i, budget)));
      },
      py::arg("n"), py::arg("i"), py::arg("budget") = 2000000);

  m.def(
      "rees_normality",
      [](int n, int t_max, int box) {
        return json_to_py(bbk::to_json(bbk::normality_check(n, t_max, resolved_box(n, t_max, box))));
      },
      py::arg("n"), py::arg("t_max") = 3, py::arg("box") = -1);
  m.def(
      "rees_canonical",
      [](int n, int t_max, int box) {
        return json_to_py(
            bbk::to_json(bbk::canonical_generators(n, t_max, resolved_box(n, t_max, box))));
      },
      py::arg("n"), py::arg("t_max") = 3, py::arg("box") = -1);
  m.def(
      "rees_reduction",
      [](int n, int t_max, int box) {
        return json_to_py(
            bbk::to_json(bbk::interior_reduction_check(n, t_max, resolved_box(n, t_max, box))));
      },
      py::arg("n"), py::arg("t_max") = 3, py::arg("box") = -1);
  m.def(
      "semigroup_membership",
      [](const std::vector<long long>& a, int n) -> py::object {
        auto d = bbk::semigroup_membership(a, n);
        if (!d) return py::none();
        return json_to_py(bbk::to_json(*d));
      },
      py::arg("a"), py::arg("n"),
      "Decomposition {'r', 's'} over the semigroup generators, or None.");
}
