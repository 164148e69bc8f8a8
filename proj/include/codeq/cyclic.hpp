#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "codeq/cosets.hpp"
#include "codeq/galois.hpp"
#include "codeq/linear.hpp"

namespace codeq {

enum class RootChoice {
  automatic,  // anchored when q = 4 and 3 | modulus, canonical otherwise
  canonical,  // g^((N-1)/modulus) for the smallest primitive g
  anchored,   // root^(modulus/3) = omega; requires q = 4 and 3 | modulus
};

/// Everything shared by polynomial codes of one length over one field: the base
/// field GF(q), the extension holding the roots, the fixed root of unity and
/// the coset table. For cyclic codes modulus == n; ω-constacyclic codes use
/// modulus 3n with the same machinery.
struct CodeContext {
  std::uint32_t n = 0;
  std::uint64_t q = 0;
  std::uint32_t modulus = 0;
  FieldPtr base;
  FieldPtr ext;
  std::shared_ptr<const SubfieldEmbedding> embedding;
  RootOfUnity root;
  bool anchored = false;
  CosetTable cosets{1, 2};
};
using ContextPtr = std::shared_ptr<const CodeContext>;

/// Cached per (n, q, choice). Throws on gcd(n, q) != 1 or a bad choice.
ContextPtr cyclic_context(std::uint32_t n, std::uint64_t q, RootChoice choice = RootChoice::automatic);
/// Same, with roots of order `modulus` (a multiple of n).
ContextPtr code_context(std::uint32_t n, std::uint64_t q, std::uint32_t modulus, RootChoice choice);

/// A code given by its defining set relative to a context's root.
struct PolyCode {
  ContextPtr ctx;
  DefiningSet defining_set;
  std::vector<std::uint32_t> generator_poly;  // over GF(q), ascending, monic
  LinearCode code;

  std::uint32_t n() const { return ctx->n; }
  std::size_t k() const { return code.dimension(); }
};
using CyclicCode = PolyCode;

/// prod_{i in A} (x - root^i), checked to have all coefficients in GF(q).
std::vector<std::uint32_t> generator_polynomial(const CodeContext& ctx, const DefiningSet& a);
/// Row space of x^i g(x), 0 <= i < n - deg g, at length n.
LinearCode code_from_generator(const FieldPtr& base, const std::vector<std::uint32_t>& g, std::size_t n);

CyclicCode build_cyclic(const ContextPtr& ctx, const DefiningSet& a);
CyclicCode build_cyclic(std::uint32_t n, std::uint64_t q, const DefiningSet& a);
/// Defining set of `c` if it is cyclic for this context, else nullopt.
std::optional<DefiningSet> cyclic_defining_set(const ContextPtr& ctx, const LinearCode& c);
/// Rows v^s = (1, a^s, ..., a^{(n-1)s}) for s in A, over the extension field.
Matrix generalized_parity_check(const CodeContext& ctx, const DefiningSet& a);

// Coordinate transforms. Conventions follow MonomialTransform: s_i T = diag_{perm(i)} s_{perm(i)}.

/// P_sigma D. Requires 8 | n and odd characteristic.
MonomialTransform sigma_transform(std::uint32_t n, const GaloisField& f);
/// Block diagonal diag(P_sigma D, ..., P_sigma D) with blocks of length `block` on consecutive coordinates.
MonomialTransform block_sigma_transform(std::uint32_t n, std::uint32_t block, const GaloisField& f);
/// P_gamma. Requires 8 | n.
MonomialTransform gamma_transform(std::uint32_t n);
/// P_chi. Requires 9 | n.
MonomialTransform chi_transform(std::uint32_t n);
/// Coordinate permutation i -> map(i).
MonomialTransform index_permutation(const IndexMap& map);
/// Coordinate permutation realising a multiplier on defining sets: if
/// mu_a(A1) = A2 then C(A1) T = C(A2), with T: i -> a^{-1} i.
MonomialTransform multiplier_transform(std::uint32_t n, std::int64_t a);
/// f(x) -> f(x^e) mod (x^n - omega) over GF(4), a monomial map.
MonomialTransform psi_transform(std::uint32_t n, std::uint32_t e, const GaloisField& f4);
/// diag(m, ..., m) on `copies` consecutive blocks.
MonomialTransform block_repeat(const MonomialTransform& m, std::uint32_t copies);

/// One verified link of an equivalence chain: C(from) -> C(to).
struct CertificateStep {
  enum class Kind {
    identity,
    multiplier,
    generalized_multiplier,
    shift,
    affine,
    sigma,
    block_sigma,
    gamma,
    chi,
    psi,
    explicit_monomial,
    same_parameters,
  };
  Kind kind = Kind::identity;
  DefiningSet from;
  DefiningSet to;
  std::vector<IndexMap> maps;                  // index-level description, if any
  std::optional<MonomialTransform> transform;  // C(from) * transform = C(to), if known
  bool inverse = false;                        // the structural matrix was applied inverted
  bool verified = false;
  std::string verification;  // how the step was checked
};

std::string to_string(CertificateStep::Kind k);

/// Chain C1 -> ... -> C2. Every step is checked before a certificate is returned.
struct Certificate {
  std::vector<CertificateStep> steps;

  bool verified() const;
  /// Kind of the single step, or "composite".
  std::string kind() const;
  /// True if every step carries a coordinate witness.
  bool has_transform() const;
  /// Composition of the step transforms (requires has_transform()).
  MonomialTransform transform(const GaloisField& f, std::size_t n) const;
  /// True if some step only guarantees equal parameters.
  bool parameters_only() const;
};

/// Which families of maps may be used.
struct MapKinds {
  bool multiplier = true;
  bool affine = true;
  bool generalized_multiplier = true;
  bool structural = true;  // sigma / block sigma / gamma / chi
};

/// Neighbours of A under single verified steps of the enabled kinds, for
/// cyclic contexts. Structural and generalized-multiplier images are only kept
/// when the image code is cyclic. Index-level steps are returned unverified.
struct Neighbour {
  DefiningSet to;
  CertificateStep step;
};
std::vector<Neighbour> cyclic_neighbours(const ContextPtr& ctx, const DefiningSet& a, const MapKinds& kinds);

struct CertifyOptions {
  MapKinds kinds;
  std::uint32_t max_depth = 3;  // composition chains explored breadth first
  bool brute_force = true;
  std::uint64_t brute_force_budget = 20'000'000;
  std::uint32_t brute_force_max_n = 16;
};

/// Certificates that C1 and C2 are equivalent, cheapest first: identity,
/// multiplier, affine/shift, generalized multiplier, structural matrices,
/// compositions and finally brute force. Empty if none was found.
std::vector<Certificate> certify_equivalence(const CyclicCode& c1, const CyclicCode& c2,
                                             const CertifyOptions& opts = {});

/// Checks one step and records how. Steps with a coordinate witness are
/// checked by code equality. Shift and affine isometries have no matrix
/// witness: the multiplier part is checked by code equality, the shift part by
/// the generator identity g2(x) = lambda g1(root^-b x) with lambda in GF(q)
/// together with the divisibility condition, plus weight distributions when
/// they are small enough to enumerate.
bool verify_step(const ContextPtr& ctx, CertificateStep& step);

struct TheoremInstance {
  DefiningSet a1;
  DefiningSet a2;
  Certificate certificate;
};

/// P_sigma D pair A u {n/4, 3n/4} and (A + n/2) u {0, n/2}; A must be a union
/// of cosets with odd leaders.
TheoremInstance theorem_monomial_action(const ContextPtr& ctx, const DefiningSet& a);
/// P_gamma pair A u {n/4} and A u {3n/4}.
TheoremInstance theorem_new_permutation(const ContextPtr& ctx, const DefiningSet& a);
/// P_chi pair Z(n/9) u B u A_e... and Z(2n/9) u B u A_e...
TheoremInstance theorem_F4_permutation(const ContextPtr& ctx, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& e_list);

/// Admissible sets for the sweeps above.
std::vector<DefiningSet> monomial_action_admissible(const ContextPtr& ctx);
std::vector<DefiningSet> new_permutation_admissible(const ContextPtr& ctx);

/// Cyclic code of length n*m generated by the same polynomial.
CyclicCode extend_length(const CyclicCode& c, std::uint32_t m);
/// If C1 T = C2 at length n then the length-nm codes satisfy C1' diag(T..T) = C2'.
/// Returns the block witness after checking it by code equality.
std::optional<MonomialTransform> extend_equivalence(const CyclicCode& c1, const CyclicCode& c2,
                                                    const MonomialTransform& t, std::uint32_t m);

/// All unions of cosets whose complement size lies in [k_min, k_max].
std::vector<DefiningSet> all_defining_sets(const CosetTable& table, std::size_t k_min = 0,
                                           std::size_t k_max = SIZE_MAX, bool constacyclic = false);

}  // namespace codeq
