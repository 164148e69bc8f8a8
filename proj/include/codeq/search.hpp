#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "codeq/constacyclic.hpp"
#include "codeq/quantum.hpp"

namespace codeq {

enum class Family { cyclic, constacyclic };
std::string to_string(Family f);

/// Certificate kinds allowed to merge defining sets during enumeration.
struct PruneSet {
  bool multiplier = true;
  bool affine = true;
  bool generalized_multiplier = true;
  bool structural = true;
  bool psi = true;              // constacyclic multipliers
  bool same_parameters = true;  // constacyclic affine maps with b != 0; never merges orbits

  static PruneSet none();
  /// "all", "none" or a comma list of multiplier, affine, generalized, structural, psi, same_parameters.
  static PruneSet parse(const std::string& text);
  std::string to_string() const;
};

/// (n, k, q) -> best known d.
using TargetTable = std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>, std::uint32_t>;
/// Rows "n,k,q,d"; blank lines and lines starting with '#' are skipped.
TargetTable parse_targets(std::istream& in);
TargetTable load_targets(const std::string& path);

struct SearchJob {
  Family family = Family::cyclic;
  std::uint32_t n = 0;
  std::uint64_t q = 2;
  std::size_t k_min = 0;
  std::size_t k_max = SIZE_MAX;
  bool evaluate_distance = true;
  DistanceOptions distance;
  bool quantum = false;  // run the extension construction (q = 4 only)
  PruneSet prune;
  TargetTable targets;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool emit_members = false;  // list members with verified chains
  bool timing = false;        // wall-clock fields make the output nondeterministic
  std::string focus;          // leaders; when set only the orbit containing them is evaluated

  /// Throws std::invalid_argument when the family constraints fail.
  void validate() const;
};

struct OrbitMember {
  DefiningSet set;
  Certificate chain;  // from the representative to this member
};

struct Orbit {
  std::size_t id = 0;
  DefiningSet representative;    // lexicographically least leader list
  std::vector<OrbitMember> members;  // excludes the representative
  std::size_t param_class = 0;   // orbit id of the same-parameters class representative

  std::size_t size() const { return members.size() + 1; }
};

struct OrbitEnumeration {
  ContextPtr ctx;
  std::vector<Orbit> orbits;
  std::size_t total_sets = 0;
  std::map<std::size_t, std::size_t> param_class_sizes;  // class id -> number of defining sets

  /// Sum of orbit sizes equals the number of admissible defining sets.
  bool conserved() const;
  const Orbit* find(const DefiningSet& s) const;
};

OrbitEnumeration enumerate_orbits(const SearchJob& job);

struct SearchRecord {
  std::size_t orbit_id = 0;
  std::vector<std::uint32_t> leaders;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::size_t orbit_size = 1;
  std::size_t param_class = 0;
  std::size_t param_class_size = 1;
  bool distance_computed = false;
  bool distance_shared = false;  // copied from the same-parameters class representative
  DistanceResult distance;
  std::optional<std::uint32_t> target;
  std::optional<QuantumParameters> quantum;
  std::vector<OrbitMember> members;  // only with emit_members; chains verified
  double seconds = 0;

  bool exceeds_target() const { return target && distance_computed && distance.lb > *target; }
  bool incomplete() const { return distance_computed && !distance.exact(); }
};

/// Evaluates one orbit. `shared` carries the class representative's bounds
/// for orbits whose distance is implied by a same-parameters certificate.
SearchRecord evaluate(const SearchJob& job, const OrbitEnumeration& orbits, const Orbit& orbit,
                      const std::optional<DistanceResult>& shared = std::nullopt);

/// One JSON object, schema "v":1, no trailing newline.
std::string to_json_line(const SearchJob& job, const SearchRecord& r);

struct SoundnessCheck {
  bool ran = false;
  std::size_t orbit_id = 0;
  std::size_t checked = 0;
  bool passed = true;
  std::string detail;
};

/// Equal [n,k] and weight distribution across a sampled orbit, plus chain verification.
SoundnessCheck spot_check(const OrbitEnumeration& orbits, std::size_t max_members = 8);

struct SearchSummary {
  std::size_t total_sets = 0;
  std::size_t orbits = 0;
  std::size_t param_classes = 0;
  std::size_t evaluations = 0;
  bool conserved = false;
  bool budget_exhausted = false;  // some record has lb < ub
  std::vector<std::size_t> candidates;  // orbit ids with d_lb above the target
  SoundnessCheck soundness;
};

/// Tallies records; candidates are orbits whose certified d_lb beats the target.
SearchSummary report(const std::vector<SearchRecord>& records);
std::string to_json_line(const SearchJob& job, const SearchSummary& s);

/// Enumerates, evaluates on job.threads workers, and writes one record per
/// orbit in representative order followed by a summary line.
SearchSummary run_search(const SearchJob& job, std::ostream& out);

}  // namespace codeq
