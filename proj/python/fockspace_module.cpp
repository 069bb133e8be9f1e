#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "fockspace/errors.hpp"
#include "fockspace/fock.hpp"
#include "fockspace/serialize.hpp"
#include "fockspace/theorems.hpp"

namespace py = pybind11;
using namespace fockspace;

namespace {

// Weights cross the boundary as tuples of ints, integers as Python ints and
// Fock elements as {weight tuple: LaurentPoly}.

py::tuple to_py(const Weight& w) {
  py::tuple t(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i)
    t[i] = py::int_(w[i]);
  return t;
}

Weight weight_from(const py::sequence& s) {
  std::vector<std::int64_t> c;
  for (auto x : s)
    c.push_back(x.cast<std::int64_t>());
  return Weight(c);
}

py::int_ to_py(const Integer& c) { return py::int_(py::str(c.str())); }

Integer integer_from(const py::int_& x) { return Integer(py::str(py::handle(x)).cast<std::string>()); }

py::dict to_py(const FockElement& x) {
  py::dict d;
  for (const auto& [mu, c] : x.terms())
    d[to_py(mu)] = c;
  return d;
}

py::dict to_py(const MonomialMap& m) {
  py::dict d;
  for (const auto& [mu, c] : m)
    d[to_py(mu)] = to_py(c);
  return d;
}

FockElement element_from(const py::dict& d) {
  FockElement x;
  for (auto [k, v] : d)
    x.add_term(weight_from(k.cast<py::sequence>()), v.cast<LaurentPoly>());
  return x;
}

py::dict report_to_py(const VerificationReport& r) {
  py::dict d;
  d["claim"] = r.claim;
  d["instance"] = r.instance;
  d["passed"] = r.passed;
  d["lhs"] = r.lhs;
  d["rhs"] = r.rhs;
  return d;
}

LaurentPoly poly_from_terms(const py::iterable& terms) {
  std::vector<std::pair<std::int64_t, Integer>> t;
  for (auto item : terms) {
    auto pair = item.cast<py::sequence>();
    t.emplace_back(pair[0].cast<std::int64_t>(), integer_from(pair[1].cast<py::int_>()));
  }
  return LaurentPoly::from_terms(t);
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C++ core of the fockspace package";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<FuelExhausted>(m, "FuelExhausted", PyExc_RuntimeError);
  py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception<NonInvariantError>(m, "NonInvariantError", PyExc_ValueError);

  py::class_<LaurentPoly>(m, "LaurentPoly", "Exact element of Z[v, 1/v], v = t^(1/2)")
      .def(py::init<>())
      .def(py::init([](const py::int_& c) { return LaurentPoly(integer_from(c)); }))
      .def(py::init(&poly_from_terms), py::arg("terms"), "from [(exponent, coefficient), ...]")
      .def_static("v", &LaurentPoly::v, py::arg("exponent") = 1)
      .def("terms",
           [](const LaurentPoly& p) {
             py::list out;
             for (const auto& [e, c] : p.terms())
               out.append(py::make_tuple(e, to_py(c)));
             return out;
           })
      .def("coeff", [](const LaurentPoly& p, std::int64_t e) { return to_py(p.coeff(e)); })
      .def("bar", &LaurentPoly::bar)
      .def("positive_part", &LaurentPoly::positive_part)
      .def("eval_one", [](const LaurentPoly& p) { return to_py(p.eval_one()); })
      .def("is_zero", &LaurentPoly::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &LaurentPoly::to_string)
      .def("__repr__", [](const LaurentPoly& p) { return "LaurentPoly(" + p.to_string() + ")"; });

  py::class_<RootSystem, std::shared_ptr<RootSystem>>(m, "RootSystem")
      .def(py::init([](const std::string& t) { return std::make_shared<RootSystem>(CartanType::parse(t)); }),
           py::arg("cartan_type"))
      .def_property_readonly("type", [](const RootSystem& rs) { return rs.type().to_string(); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("cartan_matrix", &RootSystem::cartan_matrix)
      .def_property_readonly("symmetrizers", &RootSystem::symmetrizers)
      .def_property_readonly("positive_roots", &RootSystem::positive_roots)
      .def_property_readonly("positive_coroots", &RootSystem::positive_coroots)
      .def_property_readonly("rho", [](const RootSystem& rs) { return to_py(rs.rho()); })
      .def_property_readonly("w0_word", &RootSystem::w0_word)
      .def_property_readonly("highest_short_coroot", &RootSystem::highest_short_coroot)
      .def_property_readonly("dual_coxeter", &RootSystem::dual_coxeter)
      .def("pairing",
           [](const RootSystem& rs, const py::sequence& l, const RootVector& c) {
             return rs.pairing(weight_from(l), c);
           })
      .def("simple_dot", [](const RootSystem& rs, int i, const py::sequence& l) {
        return to_py(rs.simple_dot(i, weight_from(l)));
      })
      .def("weyl_dot", [](const RootSystem& rs, const std::vector<int>& word, const py::sequence& l) {
        return to_py(rs.weyl_dot(word, weight_from(l)));
      })
      .def("affine_dot",
           [](const RootSystem& rs, const py::sequence& translation, const std::vector<int>& word,
              const py::sequence& l, std::int64_t ell) {
             return to_py(rs.affine_dot({weight_from(translation), word}, weight_from(l), ell));
           },
           py::arg("translation"), py::arg("finite_part"), py::arg("weight"), py::arg("ell"))
      .def("star", [](const RootSystem& rs, const py::sequence& l) { return to_py(rs.star(weight_from(l))); })
      .def("is_dominant", [](const RootSystem& rs, const py::sequence& l) { return rs.is_dominant(weight_from(l)); })
      .def("dominance_leq", [](const RootSystem& rs, const py::sequence& a, const py::sequence& b) {
        return rs.dominance_leq(weight_from(a), weight_from(b));
      })
      .def("n_lambda", [](const RootSystem& rs, const py::sequence& l, std::int64_t ell) {
        return rs.n_lambda(weight_from(l), ell);
      })
      .def("lambda_one", [](const RootSystem& rs, const py::sequence& l, int i, std::int64_t ell) {
        return to_py(rs.lambda_one(weight_from(l), i, ell));
      })
      .def("decompose_restricted", [](const RootSystem& rs, const py::sequence& l, std::int64_t ell) {
        auto [l0, l1] = rs.decompose_restricted(weight_from(l), ell);
        return py::make_tuple(to_py(l0), to_py(l1));
      })
      .def("dominant_below", [](const RootSystem& rs, const py::sequence& l) {
        py::list out;
        for (const auto& w : rs.dominant_below(weight_from(l)))
          out.append(to_py(w));
        return out;
      })
      .def("in_alcove", [](const RootSystem& rs, const py::sequence& l, std::int64_t ell) {
        return rs.in_alcove(weight_from(l), ell);
      });

  py::class_<FockSpace>(m, "FockSpace", "Abstract Fock space at level -ell-h, with memo caches")
      .def(py::init([](const std::string& t, std::int64_t ell, std::uint64_t fuel) {
             return FockSpace(FockConfig{std::make_shared<const RootSystem>(CartanType::parse(t)), ell, fuel});
           }),
           py::arg("cartan_type"), py::arg("ell"), py::arg("fuel") = kDefaultFuel)
      .def_property_readonly("ell", &FockSpace::ell)
      .def_property_readonly("root_system",
                             [](const FockSpace& s) { return std::make_shared<RootSystem>(s.roots()); })
      .def("straighten",
           [](FockSpace& s, const py::sequence& mu) { return to_py(s.straighten(weight_from(mu))); },
           py::arg("weight"))
      .def("straighten_raw",
           [](FockSpace& s, const py::iterable& terms) {
             RawFockExpression raw;
             for (auto item : terms) {
               auto pair = item.cast<py::sequence>();
               raw.terms.emplace_back(weight_from(pair[0].cast<py::sequence>()), pair[1].cast<LaurentPoly>());
             }
             return to_py(s.straighten(raw));
           },
           py::arg("terms"), "straighten [(weight, LaurentPoly), ...]")
      .def("bar", [](FockSpace& s, const py::dict& x) { return to_py(s.bar(element_from(x))); })
      .def("canonical_basis",
           [](FockSpace& s, const py::sequence& l) { return to_py(s.canonical_basis(weight_from(l))); })
      .def("kl_coefficient", [](FockSpace& s, const py::sequence& mu, const py::sequence& l) {
        return s.kl_coefficient(weight_from(mu), weight_from(l));
      })
      .def("weyl_character",
           [](FockSpace& s, const py::sequence& l) {
             return to_py(s.characters().weyl_character(weight_from(l)).dom_mults);
           })
      .def("monomial_character",
           [](FockSpace& s, const py::sequence& l) {
             return to_py(monomial_expand(s.roots(), s.characters().weyl_character(weight_from(l))));
           })
      .def("act_character",
           [](FockSpace& s, const py::sequence& l, const py::dict& x) {
             const Character& c = s.characters().weyl_character(weight_from(l));
             return to_py(s.act_character(c, element_from(x)));
           },
           py::arg("weight"), py::arg("element"))
      .def("to_json", [](const FockSpace& s, const py::dict& x) { return dump_line(fock_to_json(s, element_from(x))); })
      .def("format", [](const FockSpace&, const py::dict& x) { return element_from(x).to_string(); });

  m.def("steinberg_product",
        [](FockSpace& s, const py::sequence& l) { return to_py(steinberg_product(s, weight_from(l))); });
  m.def("verify_steinberg",
        [](FockSpace& s, const py::sequence& l) { return report_to_py(verify_steinberg(s, weight_from(l))); });
  m.def("whittaker_avatar",
        [](FockSpace& s, const py::sequence& l) { return to_py(whittaker_avatar(s, weight_from(l))); });
  m.def("casselman_shalika_check", [](FockSpace& s, const py::sequence& l) {
    return report_to_py(casselman_shalika_check(s, weight_from(l)));
  });
  m.def("verify_linkage_rho", [](FockSpace& s, const py::sequence& l, int i) {
    return report_to_py(verify_linkage_rho(s, weight_from(l), i));
  });
  m.def("mod_t_cancellation_check", [](FockSpace& s, const py::sequence& l0, const py::sequence& nu, int i) {
    return report_to_py(mod_t_cancellation_check(s, weight_from(l0), weight_from(nu), i));
  });
  m.def("frobenius_check",
        [](FockSpace& s, const py::sequence& l) { return report_to_py(frobenius_check(s, weight_from(l))); });
  m.def("llt_coefficient", [](FockSpace& s, const py::sequence& l, const py::sequence& mu) {
    return llt_coefficient(s, weight_from(l), weight_from(mu));
  });
  m.def("gh_coefficients", [](FockSpace& s, const py::sequence& l, const py::sequence& nu) {
    py::dict d;
    for (const auto& [mu, c] : gh_coefficients(s, weight_from(l), weight_from(nu)))
      d[to_py(mu)] = c;
    return d;
  });
  m.def("gh_identity_check",
        [](FockSpace& s, const py::sequence& l) { return report_to_py(gh_identity_check(s, weight_from(l))); });
  m.def("affine_graded_character", [](FockSpace& s, const py::sequence& l, int depth) {
    py::dict d;
    for (const auto& [deg, mm] : affine_graded_character(s, weight_from(l), depth).layers)
      d[py::int_(deg)] = to_py(mm);
    return d;
  });
}
