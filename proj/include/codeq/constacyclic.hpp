#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "codeq/cyclic.hpp"

namespace codeq {

/// omega-constacyclic codes of odd length n over GF(4). Defining sets live in
/// Z/3nZ, consist of residues 1 mod 3, and refer to a primitive 3n-th root
/// delta with delta^n = omega.
ContextPtr constacyclic_context(std::uint32_t n);

using ConstacyclicCode = PolyCode;

ConstacyclicCode build_constacyclic(const ContextPtr& ctx, const DefiningSet& a);
ConstacyclicCode build_constacyclic(std::uint32_t n, const DefiningSet& a);
std::optional<DefiningSet> constacyclic_defining_set(const ContextPtr& ctx, const LinearCode& c);

/// True if (eta a_{n-1}, a_0, ..., a_{n-2}) stays in C for every codeword.
bool is_constacyclic(const LinearCode& c, Elem eta);

/// Coordinatewise conjugation a -> a^2: an isometry onto an omega^2-constacyclic code.
LinearCode conjugate_code(const ConstacyclicCode& c);

/// Image of f(x) -> f(x^e) mod (x^n - omega). Requires e = 1 mod 3 and
/// gcd(e, 3n) = 1. The image has defining set e^{-1} A; the coordinate
/// witness is checked before returning.
struct PsiImage {
  ConstacyclicCode code;
  MonomialTransform transform;
};
PsiImage psi_substitution(const ConstacyclicCode& c, std::uint32_t e);

/// phi_{3j}(A1) = A2 with n | 3j|A1|, certifying equal parameters.
std::optional<Certificate> shift_same_parameters(const ConstacyclicCode& c1, const ConstacyclicCode& c2,
                                                 std::uint32_t j);
/// All affine maps (e x + 3j) linking the defining sets, each checked.
std::vector<Certificate> affine_same_parameters(const ConstacyclicCode& c1, const ConstacyclicCode& c2);

/// Single steps from A: psi multipliers (equivalences) and, optionally,
/// nontrivial affine maps (same parameters only). Steps are unverified.
std::vector<Neighbour> constacyclic_neighbours(const ContextPtr& ctx, const DefiningSet& a, bool same_parameters);

struct MultiplierOrbit {
  DefiningSet representative;  // lexicographically least leader list
  /// Members with a multiplier e (e = 1 mod 3) such that mu_e(representative) = member.
  std::vector<std::pair<DefiningSet, std::uint32_t>> members;
};

/// Multiplier orbits of all defining sets; requires gcd(3n, phi(3n)) = 1.
std::vector<MultiplierOrbit> palfy_classify(std::uint32_t n);

/// The length-3n cyclic code over GF(4) with the same defining set.
CyclicCode embed_as_cyclic(const ConstacyclicCode& c);

}  // namespace codeq
