#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cantorlab/clopen.hpp"
#include "cantorlab/errors.hpp"
#include "cantorlab/homeo.hpp"
#include "cantorlab/lattice_iso.hpp"
#include "cantorlab/pbij.hpp"
#include "cantorlab/semilattice.hpp"
#include "cantorlab/verify.hpp"

namespace py = pybind11;
using namespace cantorlab;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "partial symmetries of Cantor space, Munn semigroups and the "
      "clopen-lattice correspondence";

  py::register_exception<MalformedQueryError>(m, "MalformedQueryError",
                                              PyExc_ValueError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError",
                                             PyExc_RuntimeError);
  static py::exception<InconsistencyError> inconsistency(m,
                                                          "InconsistencyError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const InconsistencyError& e) {
      const std::string msg =
          std::string(e.what()) + " [witness: " + e.witness + "]";
      PyErr_SetString(inconsistency.ptr(), msg.c_str());
    }
  });

  py::class_<PartialBijection>(m, "PartialBijection")
      .def(py::init([](const std::vector<std::pair<std::uint32_t,
                                                   std::uint32_t>>& e) {
             return PartialBijection::from_entries(e);
           }),
           py::arg("entries"))
      .def("apply", &PartialBijection::apply)
      .def("domain", &PartialBijection::domain)
      .def("image", &PartialBijection::image)
      .def("entries", &PartialBijection::entries)
      .def(py::self == py::self)
      .def("__repr__", [](const PartialBijection& f) {
        std::string s = "PartialBijection([";
        bool first = true;
        for (const auto& [a, b] : f.entries()) {
          if (!first) s += ", ";
          first = false;
          s += "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
        }
        return s + "])";
      });
  m.def("compose", &compose, py::arg("f"), py::arg("g"));
  m.def("invert", &invert, py::arg("f"));
  m.def("partial_identity", &partial_identity, py::arg("points"));
  m.def("is_idempotent", &is_idempotent, py::arg("f"));
  m.def("tau_pp_distance",
        [](const PartialBijection& f, const PartialBijection& g,
           std::uint32_t horizon) {
          const Rational r = tau_pp_distance(f, g, horizon);
          return py::make_tuple(r.num, r.den);
        },
        py::arg("f"), py::arg("g"), py::arg("horizon"));

  py::class_<FiniteSemilattice>(m, "FiniteSemilattice")
      .def(py::init(
               [](const std::vector<std::vector<std::uint32_t>>& meet) {
                 return FiniteSemilattice::from_meet_table(meet);
               }),
           py::arg("meet"))
      .def_static("chain", &FiniteSemilattice::chain, py::arg("n"))
      .def("size", &FiniteSemilattice::size)
      .def("meet", &FiniteSemilattice::meet)
      .def("leq", &FiniteSemilattice::leq);
  m.def("principal_ideal", &principal_ideal, py::arg("e"), py::arg("x"));
  m.def("compat_pairs", &compat_pairs, py::arg("e"));
  m.def("munn_semigroup",
        [](const FiniteSemilattice& e) {
          std::vector<PartialBijection> out;
          for (const auto& t : munn_semigroup(e)) out.push_back(t.map);
          return out;
        },
        py::arg("e"));
  m.def("is_munn_member", &is_munn_member, py::arg("e"), py::arg("f"));

  py::class_<Clopen>(m, "Clopen")
      .def(py::init([](const std::vector<std::string>& words) {
             return Clopen::from_words(words);
           }),
           py::arg("words"))
      .def_static("whole", &Clopen::whole)
      .def_static("cylinder", &Clopen::cylinder, py::arg("word"))
      .def("words", &Clopen::words)
      .def("empty", &Clopen::empty)
      .def(py::self == py::self)
      .def("__repr__", [](const Clopen& c) {
        std::string s = "Clopen([";
        bool first = true;
        for (const auto& w : c.words()) {
          if (!first) s += ", ";
          first = false;
          s += "'" + w + "'";
        }
        return s + "])";
      });
  m.def("clopen_union", &clopen_union);
  m.def("clopen_intersect", &clopen_intersect);
  m.def("clopen_complement", &clopen_complement);
  m.def("clopen_minus", &clopen_minus);
  m.def("clopen_subset", &clopen_subset);
  m.def("enumerate_base", &enumerate_base, py::arg("d"));
  m.def("tilde_truncated", &tilde_truncated, py::arg("v"), py::arg("d"));
  m.def("is_hereditary_sublattice", &is_hereditary_sublattice,
        py::arg("family"), py::arg("d"));

  py::class_<PrefixMap>(m, "PrefixMap")
      .def(py::init([](const std::vector<std::pair<std::string, std::string>>&
                           rules) { return PrefixMap::from_rules(rules); }),
           py::arg("rules"))
      .def_static("bit_flip", &PrefixMap::bit_flip)
      .def_static("identity_on", &PrefixMap::identity_on, py::arg("u"))
      .def("rules", &PrefixMap::rules)
      .def("domain_clopen", &PrefixMap::domain_clopen)
      .def("image_clopen", &PrefixMap::image_clopen)
      .def(py::self == py::self)
      .def("__repr__", [](const PrefixMap& h) {
        std::string s = "PrefixMap([";
        bool first = true;
        for (const auto& [a, b] : h.rules()) {
          if (!first) s += ", ";
          first = false;
          s += "('" + a + "', '" + b + "')";
        }
        return s + "])";
      });
  m.def("pm_compose", &pm_compose, py::arg("f"), py::arg("g"));
  m.def("pm_invert", &pm_invert, py::arg("f"));
  m.def("image_clopen", &image_clopen, py::arg("h"), py::arg("u"));
  m.def("apply_point",
        [](const PrefixMap& h, const std::string& prefix) {
          const auto r = apply_point(h, prefix);
          switch (r.status) {
            case ApplyResult::determined:
              return py::make_tuple("determined", r.image_prefix);
            case ApplyResult::needs_more_input:
              return py::make_tuple("needs_more_input", py::none());
            default:
              return py::make_tuple("outside_domain", py::none());
          }
        },
        py::arg("h"), py::arg("prefix"));

  py::class_<TruncatedLatticeMap>(m, "TruncatedLatticeMap")
      .def(py::init([](int depth,
                       const std::vector<std::pair<Clopen, Clopen>>& entries) {
             return TruncatedLatticeMap::from_entries(depth, entries);
           }),
           py::arg("depth"), py::arg("entries"))
      .def("depth", &TruncatedLatticeMap::depth)
      .def("entries", &TruncatedLatticeMap::entries)
      .def(py::self == py::self);
  m.def("encode", &encode, py::arg("h"), py::arg("depth"));
  m.def("decode", &decode, py::arg("m"));
  m.def("is_order_iso", &is_order_iso, py::arg("m"));
  m.def("is_sb_member", &is_sb_member, py::arg("m"));
  m.def("is_s1_member", &is_s1_member, py::arg("m"));
  m.def("phi_homomorphism_check", &phi_homomorphism_check, py::arg("f"),
        py::arg("g"), py::arg("depth"));
  m.def("neighborhood_correspondence_check", &neighborhood_correspondence_check,
        py::arg("o"), py::arg("p"), py::arg("sample"), py::arg("depth"));

  m.def("run_acceptance",
        [](std::uint64_t seed) {
          py::list out;
          for (const auto& r : run_acceptance(seed)) {
            py::dict d;
            d["id"] = r.id;
            d["name"] = r.name;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            out.append(d);
          }
          return out;
        },
        py::arg("seed") = 20240915);
}
