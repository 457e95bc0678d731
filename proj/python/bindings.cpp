#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permlocal/bijections.hpp"
#include "permlocal/experiments.hpp"
#include "permlocal/limits.hpp"
#include "permlocal/samplers.hpp"
#include "permlocal/verify.hpp"

namespace py = pybind11;
using namespace permlocal;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(to_string(r)); }

py::object poly_to_py(const RationalPoly& poly) {
  py::list coeffs;
  for (const auto& c : poly.coefficients()) coeffs.append(fraction(c));
  py::dict d;
  d["factored"] = poly.factored_string();
  d["coefficients"] = coeffs;
  return d;
}

py::object json_to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_permlocal, m) {
  m.doc() = "Local limits of 231- and 321-avoiding permutations";
  m.attr("__version__") = kLibraryVersion;

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>(), py::arg("word"))
      .def(py::init([](const std::string& text) { return parse_permutation(text); }), py::arg("text"))
      .def_property_readonly("word", &Permutation::word)
      .def("__len__", &Permutation::size)
      .def("__call__", &Permutation::operator(), py::arg("i"))
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__hash__", [](const Permutation& p) { return py::hash(py::tuple(py::cast(p.word()))); })
      .def("__str__", [](const Permutation& p) { return to_string(p); })
      .def("__repr__", [](const Permutation& p) { return "Permutation('" + to_string(p) + "')"; });
  py::implicitly_convertible<py::list, Permutation>();
  py::implicitly_convertible<py::str, Permutation>();

  py::class_<RootedPermutation>(m, "RootedPermutation")
      .def(py::init<Permutation, int>(), py::arg("sigma"), py::arg("root"))
      .def(py::init([](const std::string& text) { return parse_rooted(text); }), py::arg("text"))
      .def_readonly("sigma", &RootedPermutation::sigma)
      .def_readonly("root", &RootedPermutation::root)
      .def("__eq__", [](const RootedPermutation& a, const RootedPermutation& b) { return a == b; })
      .def("__str__", [](const RootedPermutation& r) { return to_string(r); })
      .def("__repr__", [](const RootedPermutation& r) { return "RootedPermutation('" + to_string(r) + "')"; });
  py::implicitly_convertible<py::str, RootedPermutation>();

  m.def("c_occ", &c_occ, py::arg("pi"), py::arg("sigma"));
  m.def("c_occ_proportion", [](const Permutation& pi, const Permutation& s) { return fraction(c_occ_proportion(pi, s)); },
        py::arg("pi"), py::arg("sigma"));
  m.def("avoids", &avoids, py::arg("sigma"), py::arg("rho"));
  m.def("pat", &pat, py::arg("sigma"), py::arg("indices"));
  m.def("pat_interval", &pat_interval, py::arg("sigma"), py::arg("a"), py::arg("b"));
  m.def("inverse", &inverse);
  m.def("lr_maxima", &lr_maxima);
  m.def("rl_maxima", &rl_maxima);

  m.def("restrict", py::overload_cast<const RootedPermutation&, int>(&restrict), py::arg("rp"), py::arg("h"));
  m.def("local_distance", [](const RootedPermutation& a, const RootedPermutation& b) {
    return fraction(local_distance(a, b));
  });

  m.def("perm_to_btree", [](const Permutation& s) { return to_string(perm_to_btree(s)); });
  m.def("btree_to_perm", [](const std::string& t) { return btree_to_perm(parse_binary_tree(t)); });
  m.def("perm_to_otree", [](const Permutation& s) { return contour(perm_to_otree(s)); });
  m.def("otree_to_perm", [](const std::string& w) { return otree_to_perm(tree_from_contour(w)); });
  m.def("e_plus", &e_plus);

  m.def("p231", [](const Permutation& pi) { return fraction(p231(pi)); });
  m.def("p321", [](const Permutation& pi) { return fraction(p321(pi)); });
  m.def("symbolic_pat_j", [](const Permutation& pi) { return poly_to_py(symbolic_pat_j(pi)); });
  m.def("enumerate_class", &enumerate_class, py::arg("rho"), py::arg("n"));

  m.def("uniform_av231", [](int n, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rs(seed, stream);
    return uniform_av231(n, rs);
  }, py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def("uniform_av321", [](int n, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rs(seed, stream);
    return uniform_av321(n, rs);
  }, py::arg("n"), py::arg("seed"), py::arg("stream") = 0);
  m.def("limit231_window", [](int h, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rs(seed, stream);
    return limit231_window(h, rs);
  }, py::arg("h"), py::arg("seed"), py::arg("stream") = 0);
  m.def("limit321_window", [](int h, std::uint64_t seed, std::uint64_t stream) {
    RandomStream rs(seed, stream);
    return limit321_window(h, rs);
  }, py::arg("h"), py::arg("seed"), py::arg("stream") = 0);

  m.def("run_convergence", [](const std::string& model, int n, int samples, int pattern_size, std::uint64_t seed,
                              int workers) {
    ExperimentSpec spec;
    spec.model = parse_model(model);
    spec.n = n;
    spec.samples = samples;
    spec.pattern_size = pattern_size;
    spec.seed = seed;
    spec.workers = workers;
    std::vector<ExperimentRecord> recs;
    {
      py::gil_scoped_release release;
      recs = run_convergence(spec);
    }
    return json_to_py(nlohmann::json(recs));
  }, py::arg("model"), py::arg("n"), py::arg("samples"), py::arg("pattern_size") = 3, py::arg("seed") = 0,
     py::arg("workers") = 1);

  m.def("verify_suite", [](const std::string& suite, int max_n) {
    py::list out;
    for (const auto& r : verify_suite(suite, max_n)) {
      py::dict d;
      d["check"] = r.name;
      d["ok"] = r.ok;
      d["cases"] = r.cases;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("suite"), py::arg("max_n"));
}
