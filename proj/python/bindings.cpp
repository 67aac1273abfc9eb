#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lingres/error.hpp"
#include "lingres/frontend.hpp"
#include "lingres/hedge_algebra.hpp"
#include "lingres/oracle.hpp"
#include "lingres/proof_export.hpp"
#include "lingres/resolution.hpp"

namespace py = pybind11;
using namespace lingres;

namespace {

// Terms cross the boundary as their textual names.
class PySignature {
 public:
  explicit PySignature(AlgebraSignature sig) : sig_(std::move(sig)) {}

  const AlgebraSignature& get() const { return sig_; }
  Term term(const std::string& s) const { return parse_term(sig_, s); }
  std::string name(const Term& t) const { return format_term(sig_, t); }

  std::vector<std::string> domain() const {
    std::vector<std::string> out;
    for (const auto& t : enumerate_domain(sig_)) out.push_back(name(t));
    return out;
  }

 private:
  AlgebraSignature sig_;
};

struct ProveResult {
  bool refuted = false;
  std::optional<std::string> reliability;
  std::size_t steps = 0;
  bool step_limit = false;
  std::string proof_json;  // empty without a refutation
};

ProveResult prove(const std::string& text, const std::string& strategy, bool merge,
                  std::size_t max_steps) {
  const auto problem = parse_problem(text);
  const auto& sig = problem.signature;
  auto store = ClauseStore::seeded(sig, strategy_from_string(strategy), problem.seed_clauses());
  SaturationOptions options;
  options.merge = merge ? MergeMode::MaxLabel : MergeMode::Off;
  options.limits.max_steps = max_steps;
  const auto run = saturate(store, options);

  ProveResult out;
  out.steps = run.steps;
  out.step_limit = run.status == SaturationResult::Status::StepLimit;
  if (const auto proof = refute(store)) {
    out.refuted = true;
    out.reliability = format_term(sig, proof->root().rc.reliability);
    out.proof_json = proof_to_json(sig, *proof).dump();
  }
  return out;
}

bool brute_unsat(const std::string& text, std::size_t max_interpretations) {
  const auto problem = parse_problem(text);
  std::vector<Clause> clauses;
  for (const auto& rc : problem.seed_clauses()) clauses.push_back(rc.clause);
  oracle::Caps caps;
  caps.max_interpretations = max_interpretations;
  return oracle::brute_unsat(problem.signature, clauses, caps).verdict == oracle::Verdict::Unsat;
}

}  // namespace

PYBIND11_MODULE(_lingres, m) {
  m.doc() = "Resolution prover over linguistic truth values";

  static py::exception<Error> error(m, "LingresError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string msg = std::string(to_string(e.code())) + ": " + e.what();
      PyErr_SetString(error.ptr(), msg.c_str());
    }
  });

  py::class_<PySignature>(m, "Signature")
      .def(py::init([](const std::vector<std::string>& positive,
                       const std::vector<std::string>& negative, int max_depth) {
             return PySignature(AlgebraSignature::build(positive, negative, max_depth));
           }),
           py::arg("positive"), py::arg("negative"), py::arg("max_depth"))
      .def_static("default", [] { return PySignature(default_signature()); })
      .def_property_readonly("max_depth", [](const PySignature& s) { return s.get().max_depth(); })
      .def("domain_size", [](const PySignature& s) { return s.get().domain_size(); })
      .def("domain", &PySignature::domain, "All terms in ascending truth order.")
      .def("compare",
           [](const PySignature& s, const std::string& a, const std::string& b) {
             const auto c = compare(s.get(), s.term(a), s.term(b));
             return c < 0 ? -1 : (c > 0 ? 1 : 0);
           })
      .def("negate",
           [](const PySignature& s, const std::string& a) { return s.name(negate(s.term(a))); })
      .def("meet",
           [](const PySignature& s, const std::string& a, const std::string& b) {
             return s.name(meet(s.get(), s.term(a), s.term(b)));
           })
      .def("join",
           [](const PySignature& s, const std::string& a, const std::string& b) {
             return s.name(join(s.get(), s.term(a), s.term(b)));
           })
      .def("luk_tnorm",
           [](const PySignature& s, const std::string& a, const std::string& b, bool truth_terms) {
             return s.name(luk_tnorm(s.get(), s.term(a), s.term(b),
                                     truth_terms ? IndexSpace::TruthTerms : IndexSpace::Full));
           },
           py::arg("a"), py::arg("b"), py::arg("truth_terms") = false)
      .def("luk_tconorm",
           [](const PySignature& s, const std::string& a, const std::string& b, bool truth_terms) {
             return s.name(luk_tconorm(s.get(), s.term(a), s.term(b),
                                       truth_terms ? IndexSpace::TruthTerms : IndexSpace::Full));
           },
           py::arg("a"), py::arg("b"), py::arg("truth_terms") = false);

  py::class_<ProveResult>(m, "ProveResult")
      .def_readonly("refuted", &ProveResult::refuted)
      .def_readonly("reliability", &ProveResult::reliability)
      .def_readonly("steps", &ProveResult::steps)
      .def_readonly("step_limit", &ProveResult::step_limit)
      .def_readonly("proof_json", &ProveResult::proof_json);

  m.def("prove", &prove, py::arg("text"), py::arg("strategy") = "alpha",
        py::arg("merge") = false, py::arg("max_steps") = SaturationLimits{}.max_steps,
        "Saturates the problem text and returns the best refutation, if any.");
  m.def("brute_unsat", &brute_unsat, py::arg("text"),
        py::arg("max_interpretations") = oracle::Caps{}.max_interpretations,
        "Unsatisfiability by enumerating every interpretation.");
  m.def("normalize", [](const std::string& text) { return serialize_problem(parse_problem(text)); },
        "Canonical text of a problem.");
}
