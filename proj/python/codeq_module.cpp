#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "codeq/search.hpp"

namespace py = pybind11;
using namespace codeq;

namespace {

ContextPtr context(const std::string& family, std::uint32_t n, std::uint64_t q) {
  if (family == "constacyclic") {
    if (q != 4) throw std::invalid_argument("constacyclic codes need q = 4");
    return constacyclic_context(n);
  }
  if (family != "cyclic") throw std::invalid_argument("family must be cyclic or constacyclic");
  return cyclic_context(n, q);
}

std::vector<std::vector<std::uint32_t>> rows(const LinearCode& c) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t r = 0; r < c.dimension(); ++r) {
    out.emplace_back(c.generator().row(r).begin(), c.generator().row(r).end());
  }
  return out;
}

DistanceOptions distance_options(const std::string& strategy, std::uint64_t max_codewords, double max_seconds,
                                 std::uint64_t seed, std::size_t random_sets) {
  DistanceOptions d;
  if (strategy == "exhaustive") d.strategy = DistanceStrategy::exhaustive;
  else if (strategy != "information_set") throw std::invalid_argument("unknown strategy: " + strategy);
  d.max_codewords = max_codewords;
  d.max_seconds = max_seconds;
  d.seed = seed;
  d.random_sets = random_sets;
  return d;
}

py::dict distance_dict(const DistanceResult& r) {
  py::dict d;
  d["lb"] = r.lb;
  d["ub"] = r.ub;
  d["exact"] = r.exact();
  d["budget_exhausted"] = r.budget_exhausted;
  d["codewords"] = r.codewords;
  d["witness"] = r.witness;
  return d;
}

py::dict certificate_dict(const Certificate& c, const CosetTable& t) {
  py::dict d;
  d["kind"] = c.kind();
  d["verified"] = c.verified();
  d["parameters_only"] = c.parameters_only();
  py::list steps;
  for (const auto& s : c.steps) {
    py::dict sd;
    sd["kind"] = to_string(s.kind);
    sd["from"] = s.from.to_string(t);
    sd["to"] = s.to.to_string(t);
    sd["verified"] = s.verified;
    sd["verification"] = s.verification;
    steps.append(sd);
  }
  d["steps"] = steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(codeq, m) {
  m.doc() = "Cyclic and constacyclic codes, equivalence certificates and quantum extensions";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::invalid_argument& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("cosets", [](std::uint32_t n, std::uint64_t q) { return coset_table(n, q).cosets(); }, py::arg("n"),
        py::arg("q"), "q-cyclotomic cosets of Z/nZ ordered by leader");

  py::class_<PolyCode>(m, "Code")
      .def_property_readonly("n", &PolyCode::n)
      .def_property_readonly("k", &PolyCode::k)
      .def_property_readonly("q", [](const PolyCode& c) { return c.ctx->q; })
      .def_property_readonly("leaders", [](const PolyCode& c) { return c.defining_set.leaders(c.ctx->cosets); })
      .def_property_readonly("defining_set", [](const PolyCode& c) { return c.defining_set.elements(); })
      .def_property_readonly("generator_polynomial", [](const PolyCode& c) { return c.generator_poly; })
      .def_property_readonly("generator", [](const PolyCode& c) { return rows(c.code); })
      .def("contains", [](const PolyCode& c, const std::vector<std::uint32_t>& v) { return c.code.contains(v); })
      .def("hermitian_hull_dimension", [](const PolyCode& c) { return hull_dim_hermitian(c.code); })
      .def("weight_distribution", [](const PolyCode& c) { return weight_distribution(c.code).counts; })
      .def("__repr__", [](const PolyCode& c) {
        std::ostringstream s;
        s << "<Code [" << c.n() << "," << c.k() << "] over GF(" << c.ctx->q << ") leaders "
          << c.defining_set.to_string(c.ctx->cosets) << ">";
        return s.str();
      });

  m.def(
      "build",
      [](std::uint32_t n, std::uint64_t q, const std::string& leaders, const std::string& family) {
        const auto ctx = context(family, n, q);
        return build_cyclic(ctx, DefiningSet::parse(ctx->cosets, leaders));
      },
      py::arg("n"), py::arg("q"), py::arg("leaders"), py::arg("family") = "cyclic",
      "Code from comma-separated coset leaders (or full:<elements>)");

  m.def(
      "min_distance",
      [](const PolyCode& c, const std::string& strategy, std::uint64_t max_codewords, double max_seconds,
         std::uint64_t seed, std::size_t random_sets) {
        const auto opts = distance_options(strategy, max_codewords, max_seconds, seed, random_sets);
        DistanceResult r;
        {
          py::gil_scoped_release release;
          r = min_distance(c.code, opts);
        }
        return distance_dict(r);
      },
      py::arg("code"), py::arg("strategy") = "information_set", py::arg("max_codewords") = std::uint64_t{1} << 32,
      py::arg("max_seconds") = 0.0, py::arg("seed") = 1, py::arg("random_sets") = 0);

  m.def(
      "certify_equivalence",
      [](const PolyCode& a, const PolyCode& b) {
        py::list out;
        if (a.ctx->modulus != a.ctx->n) {
          for (const auto& c : affine_same_parameters(a, b)) out.append(certificate_dict(c, a.ctx->cosets));
        } else {
          for (const auto& c : certify_equivalence(a, b)) out.append(certificate_dict(c, a.ctx->cosets));
        }
        return out;
      },
      py::arg("a"), py::arg("b"), "Verified certificates linking two codes of the same context");

  m.def(
      "quantum",
      [](const PolyCode& c, bool distance, const std::string& strategy, std::uint64_t max_codewords,
         double max_seconds, std::size_t random_sets) {
        ExtensionOptions eo;
        if (distance) eo.distance = distance_options(strategy, max_codewords, max_seconds, 1, random_sets);
        ExtensionResult r;
        {
          py::gil_scoped_release release;
          r = nearly_self_orthogonal(c.code, eo);
        }
        py::dict d;
        d["n_q"] = r.params.n_q;
        d["k_q"] = r.params.k_q;
        d["e"] = r.e;
        d["e_from_sum"] = r.e_from_sum;
        d["hull"] = r.hull;
        d["extended"] = py::make_tuple(r.extended.length(), r.extended.dimension());
        d["construction"] = to_string(r.params.construction);
        if (distance) {
          d["d_lb"] = r.params.d_lb;
          d["d_ub"] = r.params.d_ub;
        }
        return d;
      },
      py::arg("code"), py::arg("distance") = true, py::arg("strategy") = "information_set",
      py::arg("max_codewords") = std::uint64_t{1} << 32, py::arg("max_seconds") = 0.0, py::arg("random_sets") = 0,
      "Nearly-self-orthogonal extension and its quantum parameters (q = 4)");

  m.def(
      "orbits",
      [](std::uint32_t n, std::uint64_t q, const std::string& family, const std::string& prune) {
        SearchJob j;
        j.family = family == "constacyclic" ? Family::constacyclic : Family::cyclic;
        j.n = n;
        j.q = q;
        j.prune = PruneSet::parse(prune);
        OrbitEnumeration e;
        {
          py::gil_scoped_release release;
          e = enumerate_orbits(j);
        }
        py::list out;
        for (const auto& o : e.orbits) {
          py::dict d;
          d["representative"] = o.representative.leaders(e.ctx->cosets);
          d["size"] = o.size();
          py::list members;
          for (const auto& mb : o.members) members.append(mb.set.leaders(e.ctx->cosets));
          d["members"] = members;
          d["param_class"] = o.param_class;
          out.append(d);
        }
        return out;
      },
      py::arg("n"), py::arg("q"), py::arg("family") = "cyclic", py::arg("prune") = "all");

  m.def(
      "search",
      [](std::uint32_t n, std::uint64_t q, const std::string& family, std::size_t k_min, std::size_t k_max,
         bool distance, std::uint64_t max_codewords, std::uint64_t seed, unsigned threads, const std::string& focus) {
        SearchJob j;
        j.family = family == "constacyclic" ? Family::constacyclic : Family::cyclic;
        j.n = n;
        j.q = q;
        j.k_min = k_min;
        j.k_max = k_max;
        j.evaluate_distance = distance;
        j.distance.max_codewords = max_codewords;
        j.seed = seed;
        j.threads = threads;
        j.focus = focus;
        std::ostringstream out;
        {
          py::gil_scoped_release release;
          run_search(j, out);
        }
        return out.str();
      },
      py::arg("n"), py::arg("q"), py::arg("family") = "cyclic", py::arg("k_min") = 0,
      py::arg("k_max") = SIZE_MAX, py::arg("distance") = true, py::arg("max_codewords") = std::uint64_t{1} << 20,
      py::arg("seed") = 1, py::arg("threads") = 1, py::arg("focus") = "",
      "Runs a search and returns the JSON lines it wrote");
}
