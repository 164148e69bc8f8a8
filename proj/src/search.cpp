#include "codeq/search.hpp"

#include <chrono>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace codeq {

using json = nlohmann::ordered_json;

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

ContextPtr context_for(const SearchJob& job) {
  return job.family == Family::cyclic ? cyclic_context(job.n, job.q) : constacyclic_context(job.n);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // The smaller id stays the root, so roots are class representatives.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

json step_json(const CertificateStep& s, const CosetTable& t) {
  json maps = json::array();
  for (const auto& m : s.maps) maps.push_back(m.describe());
  return {{"kind", to_string(s.kind)},       {"from", s.from.to_string(t)},   {"to", s.to.to_string(t)},
          {"maps", maps},                    {"inverse", s.inverse},          {"verified", s.verified},
          {"verification", s.verification}};
}

json distance_json(const DistanceResult& d, bool shared) {
  return {{"lb", d.lb},
          {"ub", d.ub},
          {"exact", d.exact()},
          {"strategy", to_string(d.strategy)},
          {"budget_exhausted", d.budget_exhausted},
          {"shared", shared}};
}

/// Weight distribution of the smaller of C and its dual; equal for equivalent codes.
std::optional<WeightDistribution> small_side_wd(const LinearCode& c, std::uint64_t budget) {
  try {
    return weight_distribution(c.dimension() * 2 > c.length() ? euclidean_dual(c) : c, budget);
  } catch (const std::length_error&) {
    return std::nullopt;
  }
}

}  // namespace

std::string to_string(Family f) { return f == Family::cyclic ? "cyclic" : "constacyclic"; }

PruneSet PruneSet::none() {
  return {false, false, false, false, false, false};
}

PruneSet PruneSet::parse(const std::string& text) {
  const std::string t = trim(text);
  if (t == "all" || t.empty()) return {};
  if (t == "none") return none();
  PruneSet p = none();
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item == "multiplier") p.multiplier = true;
    else if (item == "affine") p.affine = true;
    else if (item == "generalized") p.generalized_multiplier = true;
    else if (item == "structural") p.structural = true;
    else if (item == "psi") p.psi = true;
    else if (item == "same_parameters") p.same_parameters = true;
    else throw std::invalid_argument("unknown prune kind: " + item);
  }
  return p;
}

std::string PruneSet::to_string() const {
  std::vector<std::string> parts;
  if (multiplier) parts.emplace_back("multiplier");
  if (affine) parts.emplace_back("affine");
  if (generalized_multiplier) parts.emplace_back("generalized");
  if (structural) parts.emplace_back("structural");
  if (psi) parts.emplace_back("psi");
  if (same_parameters) parts.emplace_back("same_parameters");
  if (parts.empty()) return "none";
  std::string out;
  for (const auto& s : parts) out += (out.empty() ? "" : ",") + s;
  return out;
}

TargetTable parse_targets(std::istream& in) {
  TargetTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::uint32_t> v;
    try {
      v = parse_uint_list(line);
    } catch (const std::exception&) {
      v.clear();
    }
    if (v.size() != 4) throw std::invalid_argument("targets line " + std::to_string(lineno) + ": expected n,k,q,d");
    t[{v[0], v[1], v[2]}] = v[3];
  }
  return t;
}

TargetTable load_targets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open targets file: " + path);
  return parse_targets(in);
}

void SearchJob::validate() const {
  if (n == 0) throw std::invalid_argument("n must be positive");
  if (k_min > k_max) throw std::invalid_argument("k_min exceeds k_max");
  if (threads == 0) throw std::invalid_argument("threads must be positive");
  if (prime_power(q).first == 0) throw std::invalid_argument("q must be a prime power");
  if (std::gcd<std::uint64_t>(n, q) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
  if (family == Family::constacyclic && (q != 4 || n % 2 == 0)) {
    throw std::invalid_argument("constacyclic search needs q = 4 and odd n");
  }
  if (quantum && q != 4) throw std::invalid_argument("quantum evaluation needs q = 4");
}

bool OrbitEnumeration::conserved() const {
  std::size_t s = 0;
  for (const auto& o : orbits) s += o.size();
  std::size_t p = 0;
  for (const auto& [id, size] : param_class_sizes) p += size;
  return s == total_sets && p == total_sets;
}

const Orbit* OrbitEnumeration::find(const DefiningSet& s) const {
  for (const auto& o : orbits) {
    if (o.representative == s) return &o;
    for (const auto& m : o.members) {
      if (m.set == s) return &o;
    }
  }
  return nullptr;
}

OrbitEnumeration enumerate_orbits(const SearchJob& job) {
  job.validate();
  OrbitEnumeration out;
  out.ctx = context_for(job);
  const bool consta = job.family == Family::constacyclic;
  const auto sets = all_defining_sets(out.ctx->cosets, job.k_min, job.k_max, consta);
  out.total_sets = sets.size();

  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < sets.size(); ++i) index.emplace(sets[i].elements(), i);

  const MapKinds kinds{job.prune.multiplier, job.prune.affine, job.prune.generalized_multiplier, job.prune.structural};
  const bool cyclic_moves = kinds.multiplier || kinds.affine || kinds.generalized_multiplier || kinds.structural;
  const bool consta_moves = job.prune.psi || job.prune.same_parameters;

  std::vector<std::size_t> orbit_of(sets.size(), SIZE_MAX);
  std::vector<std::pair<std::size_t, std::size_t>> same_param_edges;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (orbit_of[i] != SIZE_MAX) continue;
    Orbit orbit;
    orbit.id = out.orbits.size();
    orbit.representative = sets[i];
    orbit_of[i] = orbit.id;
    // BFS queue; each entry carries its chain from the representative.
    std::vector<std::pair<std::size_t, Certificate>> found{{i, Certificate{}}};
    for (std::size_t head = 0; head < found.size(); ++head) {
      const std::size_t cur = found[head].first;
      std::vector<Neighbour> nbrs;
      if (!consta && cyclic_moves) nbrs = cyclic_neighbours(out.ctx, sets[cur], kinds);
      if (consta && consta_moves) nbrs = constacyclic_neighbours(out.ctx, sets[cur], job.prune.same_parameters);
      for (auto& nb : nbrs) {
        const auto it = index.find(nb.to.elements());
        if (it == index.end()) continue;
        const std::size_t j = it->second;
        if (nb.step.kind == CertificateStep::Kind::same_parameters) {
          same_param_edges.emplace_back(cur, j);
          continue;
        }
        if (consta && !job.prune.psi) continue;
        if (orbit_of[j] != SIZE_MAX) continue;
        orbit_of[j] = orbit.id;
        Certificate chain = found[head].second;
        chain.steps.push_back(std::move(nb.step));
        found.emplace_back(j, std::move(chain));
      }
    }
    for (std::size_t f = 1; f < found.size(); ++f) {
      orbit.members.push_back({sets[found[f].first], std::move(found[f].second)});
    }
    out.orbits.push_back(std::move(orbit));
  }

  UnionFind uf(out.orbits.size());
  for (auto [a, b] : same_param_edges) uf.unite(orbit_of[a], orbit_of[b]);
  for (auto& o : out.orbits) {
    o.param_class = uf.find(o.id);
    out.param_class_sizes[o.param_class] += o.size();
  }
  return out;
}

SearchRecord evaluate(const SearchJob& job, const OrbitEnumeration& orbits, const Orbit& orbit,
                      const std::optional<DistanceResult>& shared) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& table = orbits.ctx->cosets;
  const PolyCode code = build_cyclic(orbits.ctx, orbit.representative);

  SearchRecord r;
  r.orbit_id = orbit.id;
  r.leaders = orbit.representative.leaders(table);
  r.n = job.n;
  r.k = code.k();
  r.orbit_size = orbit.size();
  r.param_class = orbit.param_class;
  r.param_class_size = orbits.param_class_sizes.at(orbit.param_class);

  DistanceOptions dopts = job.distance;
  dopts.seed = job.seed;
  if (job.evaluate_distance) {
    r.distance_computed = true;
    if (shared) {
      r.distance = *shared;
      r.distance_shared = true;
    } else {
      r.distance = min_distance(code.code, dopts);
    }
  }
  if (const auto it = job.targets.find({job.n, r.k, job.q}); it != job.targets.end()) r.target = it->second;

  if (job.quantum) {
    ExtensionOptions eo;
    if (job.evaluate_distance) eo.distance = dopts;
    r.quantum = nearly_self_orthogonal(code.code, eo).params;
  }

  if (job.emit_members) {
    r.members = orbit.members;
    for (auto& m : r.members) {
      for (auto& s : m.chain.steps) {
        if (!verify_step(orbits.ctx, s)) {
          throw std::logic_error("certificate chain failed verification for " + m.set.to_string(table));
        }
      }
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string to_json_line(const SearchJob& job, const SearchRecord& r) {
  json j;
  j["v"] = 1;
  j["type"] = "orbit";
  j["family"] = to_string(job.family);
  j["n"] = r.n;
  j["q"] = job.q;
  j["k"] = r.k;
  j["orbit"] = r.orbit_id;
  j["leaders"] = r.leaders;
  j["orbit_size"] = r.orbit_size;
  j["param_class"] = r.param_class;
  j["param_class_size"] = r.param_class_size;
  j["distance"] = r.distance_computed ? distance_json(r.distance, r.distance_shared) : json(nullptr);
  j["target"] = r.target ? json(*r.target) : json(nullptr);
  j["exceeds_target"] = r.exceeds_target();
  if (r.quantum) {
    const auto& q = *r.quantum;
    j["quantum"] = {{"n_q", q.n_q},   {"k_q", q.k_q},   {"e", q.e},
                    {"d_lb", q.d_lb}, {"d_ub", q.d_ub}, {"construction", to_string(q.construction)}};
  }
  if (job.emit_members) {
    const auto table = context_for(job)->cosets;
    json members = json::array();
    for (const auto& m : r.members) {
      json chain = json::array();
      for (const auto& s : m.chain.steps) chain.push_back(step_json(s, table));
      members.push_back({{"leaders", m.set.leaders(table)}, {"chain", chain}});
    }
    j["members"] = members;
  }
  j["seed"] = job.seed;
  if (job.timing) j["seconds"] = r.seconds;
  return j.dump();
}

SoundnessCheck spot_check(const OrbitEnumeration& orbits, std::size_t max_members) {
  constexpr std::uint64_t kBudget = std::uint64_t{1} << 22;
  SoundnessCheck sc;
  for (const auto& o : orbits.orbits) {
    if (o.size() < 2) continue;
    const PolyCode rep = build_cyclic(orbits.ctx, o.representative);
    const auto ref = small_side_wd(rep.code, kBudget);
    if (!ref) continue;
    sc.ran = true;
    sc.orbit_id = o.id;
    for (std::size_t i = 0; i < o.members.size() && i < max_members; ++i) {
      auto m = o.members[i];
      const PolyCode c = build_cyclic(orbits.ctx, m.set);
      ++sc.checked;
      bool ok = c.k() == rep.k() && small_side_wd(c.code, kBudget) == ref;
      for (auto& s : m.chain.steps) ok = ok && verify_step(orbits.ctx, s);
      if (!ok) {
        sc.passed = false;
        sc.detail = "member " + m.set.to_string(orbits.ctx->cosets) + " disagrees with its representative";
        return sc;
      }
    }
    return sc;
  }
  sc.detail = "no orbit with two members and a small enough weight enumerator";
  return sc;
}

SearchSummary report(const std::vector<SearchRecord>& records) {
  SearchSummary s;
  std::map<std::size_t, bool> classes;
  for (const auto& r : records) {
    s.total_sets += r.orbit_size;
    ++s.orbits;
    classes[r.param_class] = true;
    if (r.distance_computed && !r.distance_shared) ++s.evaluations;
    if (r.incomplete()) s.budget_exhausted = true;
    // Only certified lower bounds count; d_ub alone never makes a candidate.
    if (r.exceeds_target()) s.candidates.push_back(r.orbit_id);
  }
  s.param_classes = classes.size();
  return s;
}

std::string to_json_line(const SearchJob& job, const SearchSummary& s) {
  json j;
  j["v"] = 1;
  j["type"] = "summary";
  j["family"] = to_string(job.family);
  j["n"] = job.n;
  j["q"] = job.q;
  j["prune"] = job.prune.to_string();
  j["total_sets"] = s.total_sets;
  j["orbits"] = s.orbits;
  j["param_classes"] = s.param_classes;
  j["evaluations"] = s.evaluations;
  j["conserved"] = s.conserved;
  j["budget_exhausted"] = s.budget_exhausted;
  j["candidates"] = s.candidates;
  j["soundness"] = {{"ran", s.soundness.ran},
                    {"orbit", s.soundness.orbit_id},
                    {"checked", s.soundness.checked},
                    {"passed", s.soundness.passed},
                    {"detail", s.soundness.detail}};
  j["seed"] = job.seed;
  return j.dump();
}

SearchSummary run_search(const SearchJob& job, std::ostream& out) {
  const OrbitEnumeration orbits = enumerate_orbits(job);
  const std::size_t count = orbits.orbits.size();

  std::vector<std::size_t> selected;
  if (job.focus.empty()) {
    selected.resize(count);
    std::iota(selected.begin(), selected.end(), 0);
  } else {
    const Orbit* o = orbits.find(DefiningSet::parse(orbits.ctx->cosets, job.focus));
    if (!o) throw std::invalid_argument("focus set lies outside the dimension window");
    selected.push_back(o->id);
  }

  // One task per same-parameters class: the first orbit is measured, the
  // others reuse its bounds.
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t id : selected) classes[orbits.orbits[id].param_class].push_back(id);
  std::vector<std::vector<std::size_t>> tasks;
  for (auto& [id, list] : classes) tasks.push_back(std::move(list));

  std::vector<std::optional<SearchRecord>> done(count);
  std::mutex mu;
  std::condition_variable cv;
  std::size_t next_task = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    for (;;) {
      std::size_t t;
      {
        std::lock_guard lock(mu);
        if (next_task == tasks.size() || failure) return;
        t = next_task++;
      }
      try {
        std::optional<DistanceResult> shared;
        for (std::size_t id : tasks[t]) {
          SearchRecord r = evaluate(job, orbits, orbits.orbits[id], shared);
          if (job.evaluate_distance && !shared) shared = r.distance;
          std::lock_guard lock(mu);
          done[id] = std::move(r);
          cv.notify_all();
        }
      } catch (...) {
        std::lock_guard lock(mu);
        failure = std::current_exception();
        cv.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  for (unsigned i = 0; i < job.threads; ++i) pool.emplace_back(worker);

  // Single writer: records leave in representative order as the prefix completes.
  std::vector<SearchRecord> records;
  records.reserve(selected.size());
  {
    std::unique_lock lock(mu);
    for (std::size_t id : selected) {
      cv.wait(lock, [&] { return done[id].has_value() || failure; });
      if (failure) break;
      records.push_back(std::move(*done[id]));
      done[id].reset();
      lock.unlock();
      out << to_json_line(job, records.back()) << '\n';
      lock.lock();
    }
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  SearchSummary s = report(records);
  if (job.focus.empty()) {
    s.conserved = orbits.conserved() && s.total_sets == orbits.total_sets;
  } else {
    s.conserved = orbits.conserved();
    s.total_sets = orbits.total_sets;
    s.orbits = count;
    s.param_classes = orbits.param_class_sizes.size();
  }
  s.soundness = spot_check(orbits);
  out << to_json_line(job, s) << '\n';
  out.flush();
  return s;
}

}  // namespace codeq
