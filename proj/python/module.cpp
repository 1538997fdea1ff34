// Python bindings for the main operations: root-system data, Weyl group
// statistics, quantum Bruhat graph queries, Demazure products, Xi_sigma and
// the dimension routes. Rationals cross the boundary as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qweyl/newton.hpp"
#include "qweyl/suites.hpp"

namespace py = pybind11;
using namespace qweyl;

namespace {

py::object make_fraction(const Rat& r) {
  static py::object fraction =
      py::module_::import("fractions").attr("Fraction");
  return fraction(rat_str(r));
}

py::list qvec_to_py(const RootSystem& rs, const QVec& v) {
  py::list out;
  for (int j = 1; j <= rs.rank(); ++j) out.append(make_fraction(v[j]));
  return out;
}

QVec qvec_from_py(const RootSystem& rs, const py::sequence& seq) {
  if (static_cast<int>(py::len(seq)) != rs.rank())
    throw std::invalid_argument("coordinate list must match the rank");
  QVec v = qvec_zero(rs.rank());
  for (int j = 1; j <= rs.rank(); ++j)
    v[j] = rat_parse(py::str(seq[j - 1]).cast<std::string>());
  return v;
}

struct PyRootSystem {
  std::shared_ptr<RootSystem> rs;
  explicit PyRootSystem(const std::string& type, int rank)
      : rs(std::make_shared<RootSystem>(build_root_system(type.at(0), rank))) {}
  FrobeniusDatum datum(int tau, int sigma0) const {
    return make_frobenius(*rs, tau,
                          DiagramAutomorphism::finite_by_code(*rs, sigma0));
  }
};

}  // namespace

PYBIND11_MODULE(qweyl, m) {
  m.doc() = "exact affine Weyl group engine";

  py::class_<PyRootSystem>(m, "RootSystem")
      .def(py::init<const std::string&, int>(), py::arg("type"),
           py::arg("rank"))
      .def_property_readonly(
          "type", [](const PyRootSystem& s) { return std::string(1, s.rs->type()); })
      .def_property_readonly("rank",
                             [](const PyRootSystem& s) { return s.rs->rank(); })
      .def_property_readonly(
          "num_positive_roots",
          [](const PyRootSystem& s) { return s.rs->num_pos_roots(); })
      .def_property_readonly(
          "weyl_order", [](const PyRootSystem& s) { return weyl_order(*s.rs); })
      .def("cartan",
           [](const PyRootSystem& s) {
             py::list rows;
             for (int i = 1; i <= s.rs->rank(); ++i) {
               py::list row;
               for (int j = 1; j <= s.rs->rank(); ++j)
                 row.append(s.rs->datum.cartan[i][j]);
               rows.append(row);
             }
             return rows;
           })
      .def("fundamental_coweight",
           [](const PyRootSystem& s, int i) {
             return qvec_to_py(*s.rs, fundamental_coweight(*s.rs, i));
           })
      .def("minuscule_indices",
           [](const PyRootSystem& s) {
             return minuscule_coweight_indices(*s.rs);
           })
      .def("depth",
           [](const PyRootSystem& s, const py::sequence& v) {
             return make_fraction(s.rs->depth(qvec_from_py(*s.rs, v)));
           })
      .def("dominance_leq",
           [](const PyRootSystem& s, const py::sequence& a,
              const py::sequence& b) {
             return s.rs->dominance_leq(qvec_from_py(*s.rs, a),
                                        qvec_from_py(*s.rs, b));
           })
      .def("length",
           [](const PyRootSystem& s, const std::vector<int>& word) {
             return length(*s.rs, from_word(*s.rs, word));
           })
      .def("reflection_length",
           [](const PyRootSystem& s, const std::vector<int>& word) {
             return reflection_length(*s.rs, from_word(*s.rs, word));
           })
      .def("reduced_word",
           [](const PyRootSystem& s, const std::vector<int>& word) {
             return reduced_word(*s.rs, from_word(*s.rs, word));
           })
      .def("longest_word",
           [](const PyRootSystem& s) {
             return reduced_word(*s.rs, longest_element(*s.rs));
           })
      .def("zeta_word",
           [](const PyRootSystem& s, int i) {
             return reduced_word(*s.rs, zeta(*s.rs, i));
           })
      .def("qbg_distance",
           [](const PyRootSystem& s, const std::vector<int>& from,
              const std::vector<int>& to) {
             return qbg_distance(*s.rs, from_word(*s.rs, from),
                                 from_word(*s.rs, to));
           })
      .def("qbg_weight",
           [](const PyRootSystem& s, const std::vector<int>& from,
              const std::vector<int>& to) {
             IVec wt = qbg_weight(*s.rs, from_word(*s.rs, from),
                                  from_word(*s.rs, to));
             return std::vector<Int>(wt.begin() + 1, wt.end());
           })
      .def("im_length",
           [](const PyRootSystem& s, const py::sequence& lambda,
              const std::vector<int>& word) {
             return im_length(*s.rs, {qvec_from_py(*s.rs, lambda),
                                      from_word(*s.rs, word)});
           })
      .def("demazure_product",
           [](const PyRootSystem& s, const py::sequence& la,
              const std::vector<int>& wa, const py::sequence& lb,
              const std::vector<int>& wb) {
             ExtendedAffineElement p = demazure_product(
                 *s.rs, {qvec_from_py(*s.rs, la), from_word(*s.rs, wa)},
                 {qvec_from_py(*s.rs, lb), from_word(*s.rs, wb)});
             py::dict out;
             out["lambda"] = qvec_to_py(*s.rs, p.lambda);
             out["word"] = reduced_word(*s.rs, p.w);
             return out;
           })
      .def("mu_diamond",
           [](const PyRootSystem& s, int sigma0, const py::sequence& mu) {
             auto g = DiagramAutomorphism::finite_by_code(*s.rs, sigma0);
             return qvec_to_py(*s.rs,
                               mu_diamond(*s.rs, g, qvec_from_py(*s.rs, mu)));
           })
      .def("xi_sigma",
           [](const PyRootSystem& s, int tau, int sigma0) {
             return qvec_to_py(*s.rs, xi_sigma(*s.rs, s.datum(tau, sigma0)));
           },
           py::arg("tau"), py::arg("sigma0") = 1)
      .def("nu_b_max",
           [](const PyRootSystem& s, int tau, int sigma0,
              const py::sequence& mu) {
             NewtonPoint np = nu_b_max(*s.rs, s.datum(tau, sigma0),
                                       qvec_from_py(*s.rs, mu));
             py::dict out;
             out["nu"] = qvec_to_py(*s.rs, np.nu);
             out["regular"] = np.regular;
             return out;
           })
      .def("generic_newton_point",
           [](const PyRootSystem& s, int tau, int sigma0,
              const py::sequence& lambda, const std::vector<int>& word) {
             NewtonPoint np = generic_newton_point(
                 *s.rs, s.datum(tau, sigma0),
                 {qvec_from_py(*s.rs, lambda), from_word(*s.rs, word)});
             py::dict out;
             out["nu"] = qvec_to_py(*s.rs, np.nu);
             out["two_rho_pairing"] = make_fraction(s.rs->two_rho_pairing(np.nu));
             out["regular"] = np.regular;
             out["dominant"] = np.dominant;
             return out;
           })
      .def("dimension",
           [](const PyRootSystem& s, int tau, int sigma0,
              const std::string& strategy, bool allow_large) {
             DimStrategy st = DimStrategy::rank;
             if (strategy == "class")
               st = DimStrategy::class_route;
             else if (strategy == "qbg")
               st = DimStrategy::qbg;
             else if (strategy == "all")
               st = DimStrategy::all;
             DimOptions opts;
             opts.allow_large = allow_large;
             DimensionReport r =
                 dim_x_mu_bmax(*s.rs, s.datum(tau, sigma0), st, opts);
             if (!r.values_agree())
               throw std::runtime_error("dimension routes disagree");
             if (r.value_rank) return *r.value_rank;
             if (r.value_class) return *r.value_class;
             return *r.value_qbg;
           },
           py::arg("tau"), py::arg("sigma0") = 1,
           py::arg("strategy") = "rank", py::arg("allow_large") = false)
      .def("key_lemma_j_sets",
           [](const PyRootSystem& s, int tau, int sigma0) {
             KeyLemmaReport r =
                 verify_key_lemma(*s.rs, s.datum(tau, sigma0), 200000);
             return r.j_sets;
           },
           py::arg("tau"), py::arg("sigma0") = 1);

  m.def("run_suite", [](const std::string& name, int max_rank) {
    suites::SuiteOptions o;
    o.max_rank = max_rank;
    suites::SuiteReport rep = suites::run_suite(name, o);
    py::list out;
    for (const auto& c : rep.cases) {
      py::dict d;
      d["case"] = c.id;
      d["pass"] = c.pass;
      d["detail"] = c.detail;
      out.append(d);
    }
    return out;
  }, py::arg("name"), py::arg("max_rank") = 99);
}
