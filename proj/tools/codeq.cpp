// Command-line front end. Every subcommand prints JSON lines tagged "v":1.
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "codeq/search.hpp"
#include "json.hpp"

using namespace codeq;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 2;
constexpr int kBudget = 3;

json header(const std::string& type) {
  json j;
  j["v"] = 1;
  j["type"] = type;
  return j;
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

/// "300", "300s", "5m", "1h" -> seconds.
double parse_duration(const std::string& text) {
  if (text.empty()) return 0;
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  const std::string unit = text.substr(used);
  if (v < 0) throw std::invalid_argument("negative duration");
  if (unit.empty() || unit == "s") return v;
  if (unit == "ms") return v / 1000;
  if (unit == "m") return v * 60;
  if (unit == "h") return v * 3600;
  throw std::invalid_argument("unknown duration unit: " + unit);
}

struct DistanceArgs {
  std::string strategy = "information_set";
  std::string budget;  // wall clock
  std::uint64_t max_codewords = 0;
  std::size_t random_sets = 0;
  std::uint32_t stop_at = 0;
  std::uint64_t seed = 1;

  void attach(CLI::App* app) {
    app->add_option("--strategy", strategy, "exhaustive or information_set")
        ->check(CLI::IsMember({"exhaustive", "information_set"}));
    app->add_option("--distance-budget", budget, "wall-clock budget such as 300s or 5m");
    app->add_option("--max-codewords", max_codewords, "codeword enumeration cap");
    app->add_option("--random-sets", random_sets, "random information sets for the upper bound");
    app->add_option("--stop-at", stop_at, "stop once the upper bound reaches this value");
    app->add_option("--seed", seed, "seed for randomized information sets");
  }

  DistanceOptions options(std::uint64_t default_cap = 0) const {
    DistanceOptions d;
    d.strategy = strategy == "exhaustive" ? DistanceStrategy::exhaustive : DistanceStrategy::information_set;
    d.max_seconds = parse_duration(budget);
    if (max_codewords) d.max_codewords = max_codewords;
    else if (default_cap) d.max_codewords = default_cap;
    d.random_sets = random_sets;
    d.stop_at = stop_at;
    d.seed = seed;
    return d;
  }
};

json distance_json(const DistanceResult& d) {
  json j;
  j["lb"] = d.lb;
  j["ub"] = d.ub;
  j["exact"] = d.exact();
  j["strategy"] = to_string(d.strategy);
  j["codewords"] = d.codewords;
  j["budget_exhausted"] = d.budget_exhausted;
  j["seed"] = d.seed;
  return j;
}

json step_json(const CertificateStep& s, const CosetTable& t) {
  json j;
  j["kind"] = to_string(s.kind);
  j["from"] = s.from.to_string(t);
  j["to"] = s.to.to_string(t);
  json maps = json::array();
  for (const auto& m : s.maps) maps.push_back(m.describe());
  j["maps"] = maps;
  j["inverse"] = s.inverse;
  j["verified"] = s.verified;
  j["verification"] = s.verification;
  return j;
}

json certificate_json(const Certificate& c, const CosetTable& t) {
  json j;
  j["kind"] = c.kind();
  j["verified"] = c.verified();
  j["parameters_only"] = c.parameters_only();
  json steps = json::array();
  for (const auto& s : c.steps) steps.push_back(step_json(s, t));
  j["steps"] = steps;
  return j;
}

struct CodeArgs {
  std::uint32_t n = 0;
  std::uint64_t q = 4;
  std::string type = "cyclic";
  std::string leaders;

  void attach(CLI::App* app, bool with_leaders = true) {
    app->add_option("--n", n, "code length")->required();
    app->add_option("--q", q, "field size");
    app->add_option("--type", type, "cyclic or constacyclic")->check(CLI::IsMember({"cyclic", "constacyclic"}));
    if (with_leaders) {
      app->add_option("--leaders", leaders, "coset leaders, or full:<elements>")->required();
    }
  }

  bool consta() const { return type == "constacyclic"; }

  ContextPtr context() const {
    if (consta()) {
      if (q != 4) throw std::invalid_argument("constacyclic codes need q = 4");
      return constacyclic_context(n);
    }
    return cyclic_context(n, q);
  }

  PolyCode build(const ContextPtr& ctx, const std::string& text) const {
    return build_cyclic(ctx, DefiningSet::parse(ctx->cosets, text));
  }
};

json code_json(const PolyCode& c, const CodeArgs& a) {
  json j;
  j["family"] = a.type;
  j["n"] = c.n();
  j["q"] = c.ctx->q;
  j["k"] = c.k();
  j["leaders"] = c.defining_set.leaders(c.ctx->cosets);
  j["defining_set"] = c.defining_set.elements();
  j["generator_polynomial"] = c.generator_poly;
  return j;
}

int cmd_cosets(std::uint32_t n, std::uint64_t q, bool consta) {
  json j = header("cosets");
  j["n"] = n;
  j["q"] = q;
  if (consta) {
    if (q != 4) throw std::invalid_argument("constacyclic cosets need q = 4");
    const auto ctx = constacyclic_context(n);
    j["modulus"] = 3 * n;
    json list = json::array();
    for (const auto& c : ctx->cosets.cosets()) {
      if (c.front() % 3 == 1) list.push_back(c);
    }
    j["cosets"] = list;
  } else {
    const auto t = coset_table(n, q);
    j["modulus"] = n;
    j["cosets"] = t.cosets();
  }
  emit(j);
  return kOk;
}

int cmd_gen(const CodeArgs& a, bool matrix, bool distance, const DistanceArgs& d) {
  const auto ctx = a.context();
  const auto c = a.build(ctx, a.leaders);
  json j = header("code");
  j.update(code_json(c, a));
  if (matrix) {
    json rows = json::array();
    for (std::size_t r = 0; r < c.code.dimension(); ++r) {
      rows.push_back(std::vector<std::uint32_t>(c.code.generator().row(r).begin(), c.code.generator().row(r).end()));
    }
    j["generator"] = rows;
  }
  int rc = kOk;
  if (distance) {
    const auto res = min_distance(c.code, d.options());
    j["distance"] = distance_json(res);
    if (!res.exact() && res.budget_exhausted) rc = kBudget;
  }
  emit(j);
  return rc;
}

int cmd_mindist(const CodeArgs& a, const DistanceArgs& d) {
  const auto ctx = a.context();
  const auto c = a.build(ctx, a.leaders);
  const auto t0 = std::chrono::steady_clock::now();
  const auto res = min_distance(c.code, d.options());
  json j = header("distance");
  j.update(code_json(c, a));
  j["distance"] = distance_json(res);
  j["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(j);
  return !res.exact() && res.budget_exhausted ? kBudget : kOk;
}

int cmd_equiv(const CodeArgs& a, const std::string& other, std::uint32_t depth, bool brute) {
  const auto ctx = a.context();
  const auto c1 = a.build(ctx, a.leaders);
  const auto c2 = a.build(ctx, other);
  json j = header("equivalence");
  j["family"] = a.type;
  j["n"] = a.n;
  j["q"] = a.q;
  j["a"] = c1.defining_set.to_string(ctx->cosets);
  j["b"] = c2.defining_set.to_string(ctx->cosets);
  j["k"] = {c1.k(), c2.k()};
  json certs = json::array();
  std::string status = "unknown";
  if (c1.k() != c2.k()) {
    status = "not_equivalent";
  } else if (a.consta()) {
    if (c1.defining_set == c2.defining_set) status = "equivalent";
    for (const auto& c : affine_same_parameters(c1, c2)) {
      certs.push_back(certificate_json(c, ctx->cosets));
      if (!c.parameters_only()) status = "equivalent";
      else if (status == "unknown") status = "same_parameters";
    }
  } else {
    CertifyOptions opts;
    opts.max_depth = depth;
    opts.brute_force = brute;
    for (const auto& c : certify_equivalence(c1, c2, opts)) {
      certs.push_back(certificate_json(c, ctx->cosets));
      if (c.verified()) status = "equivalent";
    }
  }
  if (status == "unknown") {
    // Distinct weight distributions rule equivalence out.
    try {
      if (weight_distribution(c1.code, 1u << 22) != weight_distribution(c2.code, 1u << 22)) status = "not_equivalent";
    } catch (const std::length_error&) {
    }
  }
  j["status"] = status;
  j["certificates"] = certs;
  emit(j);
  return kOk;
}

int cmd_consta(const CodeArgs& a, bool neighbours, std::optional<std::uint32_t> psi, bool distance,
               const DistanceArgs& d) {
  CodeArgs ca = a;
  ca.type = "constacyclic";
  ca.q = 4;
  const auto ctx = ca.context();
  const auto c = ca.build(ctx, a.leaders);
  json j = header("constacyclic");
  j.update(code_json(c, ca));
  j["modulus"] = ctx->modulus;
  j["is_constacyclic"] = is_constacyclic(c.code, 2);
  if (psi) {
    const auto img = psi_substitution(c, *psi);
    j["psi"] = {{"e", *psi}, {"image", img.code.defining_set.to_string(ctx->cosets)}, {"verified", true}};
  }
  if (neighbours) {
    json list = json::array();
    for (auto& nb : constacyclic_neighbours(ctx, c.defining_set, true)) {
      verify_step(ctx, nb.step);
      list.push_back(step_json(nb.step, ctx->cosets));
    }
    j["neighbours"] = list;
  }
  int rc = kOk;
  if (distance) {
    const auto res = min_distance(c.code, d.options());
    j["distance"] = distance_json(res);
    if (!res.exact() && res.budget_exhausted) rc = kBudget;
  }
  emit(j);
  return rc;
}

int cmd_consta_classify(std::uint32_t n) {
  const auto ctx = constacyclic_context(n);
  const auto orbits = palfy_classify(n);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const auto& o = orbits[i];
    json j = header("consta_orbit");
    j["n"] = n;
    j["orbit"] = i;
    j["representative"] = o.representative.leaders(ctx->cosets);
    j["k"] = n - o.representative.size();
    json members = json::array();
    for (const auto& [set, e] : o.members) members.push_back({{"leaders", set.leaders(ctx->cosets)}, {"e", e}});
    j["size"] = o.members.size();
    j["members"] = members;
    emit(j);
  }
  json s = header("summary");
  s["n"] = n;
  s["orbits"] = orbits.size();
  emit(s);
  return kOk;
}

int cmd_quantum(const CodeArgs& a, const DistanceArgs& d, bool distance, std::optional<std::size_t> unitary) {
  const auto ctx = a.context();
  const auto c = a.build(ctx, a.leaders);
  ExtensionOptions eo;
  if (distance) eo.distance = d.options();
  if (unitary) {
    const auto plain = nearly_self_orthogonal(c.code);
    if (plain.e == 0) throw std::invalid_argument("--unitary-class needs e > 0");
    const auto classes = unitary_classes(plain.e);
    if (*unitary >= classes.size()) throw std::invalid_argument("--unitary-class out of range");
    eo.unitary = classes[*unitary];
  }
  const auto r = nearly_self_orthogonal(c.code, eo);
  json j = header("quantum");
  j["family"] = a.type;
  j["n"] = a.n;
  j["k"] = c.k();
  j["leaders"] = c.defining_set.leaders(ctx->cosets);
  j["n_q"] = r.params.n_q;
  j["k_q"] = r.params.k_q;
  j["e"] = r.e;
  j["e_from_sum"] = r.e_from_sum;
  j["hull"] = r.hull;
  j["extended"] = {r.extended.length(), r.extended.dimension()};
  j["dual_containing"] = true;  // checked inside the construction
  j["construction"] = to_string(r.params.construction);
  int rc = kOk;
  if (distance) {
    j["d_lb"] = r.params.d_lb;
    j["d_ub"] = r.params.d_ub;
    j["distance"] = distance_json(r.params.distance);
    if (!r.params.distance.exact() && r.params.distance.budget_exhausted) rc = kBudget;
  } else {
    j["d_lb"] = nullptr;
    j["d_ub"] = nullptr;
  }
  j["seed"] = d.seed;
  emit(j);
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"codeq: cyclic and constacyclic code toolkit"};
  app.require_subcommand(1);

  // cosets
  std::uint32_t cn = 0;
  std::uint64_t cq = 2;
  bool cconsta = false;
  auto* sc_cosets = app.add_subcommand("cosets", "q-cyclotomic cosets");
  sc_cosets->add_option("--n", cn, "code length")->required();
  sc_cosets->add_option("--q", cq, "field size")->required();
  sc_cosets->add_flag("--constacyclic", cconsta, "cosets of residues 1 mod 3 in Z/3nZ (q = 4)");

  // gen
  CodeArgs gen_args;
  DistanceArgs gen_dist;
  bool gen_matrix = false, gen_distance = false;
  auto* sc_gen = app.add_subcommand("gen", "build a code from a defining set");
  gen_args.attach(sc_gen);
  gen_dist.attach(sc_gen);
  sc_gen->add_flag("--matrix", gen_matrix, "include the RREF generator matrix");
  sc_gen->add_flag("--distance", gen_distance, "compute distance bounds");

  // equiv
  CodeArgs eq_args;
  std::string eq_other;
  std::uint32_t eq_depth = 3;
  bool eq_no_brute = false;
  auto* sc_equiv = app.add_subcommand("equiv", "certify equivalence of two codes");
  eq_args.attach(sc_equiv);
  sc_equiv->add_option("--with", eq_other, "leaders of the second code")->required();
  sc_equiv->add_option("--max-depth", eq_depth, "composition depth");
  sc_equiv->add_flag("--no-brute-force", eq_no_brute, "skip the explicit monomial search");

  // classify
  SearchJob cl_job;
  std::string cl_family = "cyclic", cl_prune = "all";
  auto* sc_classify = app.add_subcommand("classify", "group defining sets into certified orbits");
  sc_classify->add_option("--n", cl_job.n, "code length")->required();
  sc_classify->add_option("--q", cl_job.q, "field size")->required();
  sc_classify->add_option("--type", cl_family, "cyclic or constacyclic")->check(CLI::IsMember({"cyclic", "constacyclic"}));
  sc_classify->add_option("--k-min", cl_job.k_min, "smallest dimension to evaluate");
  sc_classify->add_option("--k-max", cl_job.k_max, "largest dimension to evaluate");
  sc_classify->add_option("--prune", cl_prune, "all, none or a list of certificate kinds");
  sc_classify->add_flag("--members", cl_job.emit_members, "list members with verified chains");

  // consta
  CodeArgs co_args;
  DistanceArgs co_dist;
  bool co_nb = false, co_distance = false;
  std::optional<std::uint32_t> co_psi;
  auto* sc_consta = app.add_subcommand("consta", "omega-constacyclic code over GF(4)");
  sc_consta->add_option("--n", co_args.n, "code length")->required();
  sc_consta->add_option("--leaders", co_args.leaders, "coset leaders, or full:<elements>")->required();
  sc_consta->add_flag("--neighbours", co_nb, "list psi and same-parameters neighbours");
  sc_consta->add_option("--psi", co_psi, "apply x -> x^e");
  sc_consta->add_flag("--distance", co_distance, "compute distance bounds");
  co_dist.attach(sc_consta);

  // consta-classify
  std::uint32_t cc_n = 0;
  auto* sc_cc = app.add_subcommand("consta-classify", "multiplier orbits when gcd(3n, phi(3n)) = 1");
  sc_cc->add_option("--n", cc_n, "code length")->required();

  // quantum
  CodeArgs qu_args;
  DistanceArgs qu_dist;
  bool qu_no_distance = false;
  std::optional<std::size_t> qu_unitary;
  auto* sc_quantum = app.add_subcommand("quantum", "binary quantum code by extension");
  qu_args.attach(sc_quantum);
  qu_dist.attach(sc_quantum);
  sc_quantum->add_flag("--no-distance", qu_no_distance, "skip distance computation");
  sc_quantum->add_option("--unitary-class", qu_unitary, "index into the unitary block classes");

  // search
  SearchJob se_job;
  std::string se_family = "cyclic", se_prune = "all", se_targets, se_out;
  DistanceArgs se_dist;
  bool se_no_distance = false;
  auto* sc_search = app.add_subcommand("search", "pruned exhaustive search");
  sc_search->add_option("--n", se_job.n, "code length")->required();
  sc_search->add_option("--q", se_job.q, "field size")->required();
  sc_search->add_option("--type", se_family, "cyclic or constacyclic")->check(CLI::IsMember({"cyclic", "constacyclic"}));
  sc_search->add_option("--k-min", se_job.k_min, "smallest dimension to evaluate");
  sc_search->add_option("--k-max", se_job.k_max, "largest dimension to evaluate");
  sc_search->add_option("--prune", se_prune, "all, none or a list of certificate kinds");
  sc_search->add_option("--targets", se_targets, "file with rows n,k,q,d");
  sc_search->add_option("--out", se_out, "write records here instead of stdout");
  sc_search->add_option("--threads", se_job.threads, "worker threads; output does not depend on this");
  sc_search->add_flag("--quantum", se_job.quantum, "run the extension construction (q = 4)");
  sc_search->add_flag("--members", se_job.emit_members, "list members with verified chains");
  sc_search->add_flag("--timing", se_job.timing, "add wall-clock fields");
  sc_search->add_flag("--no-distance", se_no_distance, "skip distance computation");
  sc_search->add_option("--orbit-of", se_job.focus, "evaluate only the orbit containing these leaders");
  se_dist.attach(sc_search);

  // mindist
  CodeArgs md_args;
  DistanceArgs md_dist;
  auto* sc_mindist = app.add_subcommand("mindist", "minimum distance bounds");
  md_args.attach(sc_mindist);
  md_dist.attach(sc_mindist);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*sc_cosets) return cmd_cosets(cn, cq, cconsta);
    if (*sc_gen) return cmd_gen(gen_args, gen_matrix, gen_distance, gen_dist);
    if (*sc_equiv) return cmd_equiv(eq_args, eq_other, eq_depth, !eq_no_brute);
    if (*sc_classify) {
      cl_job.family = cl_family == "constacyclic" ? Family::constacyclic : Family::cyclic;
      cl_job.prune = PruneSet::parse(cl_prune);
      cl_job.evaluate_distance = false;
      run_search(cl_job, std::cout);
      return kOk;
    }
    if (*sc_consta) return cmd_consta(co_args, co_nb, co_psi, co_distance, co_dist);
    if (*sc_cc) return cmd_consta_classify(cc_n);
    if (*sc_quantum) return cmd_quantum(qu_args, qu_dist, !qu_no_distance, qu_unitary);
    if (*sc_mindist) return cmd_mindist(md_args, md_dist);
    if (*sc_search) {
      se_job.family = se_family == "constacyclic" ? Family::constacyclic : Family::cyclic;
      se_job.prune = PruneSet::parse(se_prune);
      se_job.evaluate_distance = !se_no_distance;
      // Searches touch many codes, so cap each enumeration unless told otherwise.
      se_job.distance = se_dist.options(std::uint64_t{1} << 20);
      se_job.seed = se_dist.seed;
      if (!se_targets.empty()) se_job.targets = load_targets(se_targets);
      SearchSummary s;
      if (se_out.empty()) {
        s = run_search(se_job, std::cout);
      } else {
        std::ofstream f(se_out);
        if (!f) throw std::invalid_argument("cannot open output file: " + se_out);
        s = run_search(se_job, f);
      }
      return s.budget_exhausted ? kBudget : kOk;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "codeq: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "codeq: " << e.what() << '\n';
    return 1;
  }
  return kInvalid;
}
