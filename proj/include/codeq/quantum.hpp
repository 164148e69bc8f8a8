#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "codeq/linear.hpp"

namespace codeq {

enum class QuantumConstruction { crss, nearly_self_orthogonal };
std::string to_string(QuantumConstruction c);

/// [[n_q, k_q, d]] with certified distance bounds for a binary quantum code
/// obtained from a quaternary code.
struct QuantumParameters {
  std::uint32_t n_q = 0;
  std::int64_t k_q = 0;
  std::uint32_t e = 0;
  std::uint32_t d_lb = 0;
  std::uint32_t d_ub = 0;
  bool distance_computed = false;
  DistanceResult distance;  // min weight in E \ E^perp_h
  QuantumConstruction construction = QuantumConstruction::crss;
};

/// Requires hermitian_dual(c) to be a subcode of c (std::invalid_argument
/// otherwise). Distance bounds only when `distance` is given.
QuantumParameters crss(const LinearCode& c, const std::optional<DistanceOptions>& distance = std::nullopt);

struct ExtensionResult {
  LinearCode extended;        // E, length n + e, dimension k + e, E^perp_h inside E
  std::uint32_t e = 0;        // n - k - hull
  std::uint32_t e_from_sum = 0;  // dim(C + C^perp_h) - k, must equal e
  std::uint32_t hull = 0;
  QuantumParameters params;
};

struct ExtensionOptions {
  std::optional<DistanceOptions> distance;
  /// e x e block placed in the new columns of the non-isotropic generators;
  /// must have Hermitian-orthonormal rows. Identity when empty.
  std::optional<Matrix> unitary;
};

/// Extends C by e = n - k - dim(C cap C^perp_h) coordinates into a
/// Hermitian dual-containing code. The containment is checked before returning.
ExtensionResult nearly_self_orthogonal(const LinearCode& c, const ExtensionOptions& opts = {});

/// Bounds on d(C) and d(C + C^perp_h); their combination
/// min{d(C), d(C + C^perp_h) + 1} bounds the extended quantum distance from below.
struct ExtensionBound {
  DistanceResult code;
  DistanceResult sum;
  std::uint32_t lb() const;
  std::uint32_t ub() const;
};
ExtensionBound extension_bound(const LinearCode& c, const DistanceOptions& opts = {});

/// Representatives of e x e matrices over GF(4) with Hermitian-orthonormal
/// rows, up to column permutations and column scalings (which only act on E
/// by a monomial map of the new coordinates). Requires e <= 4.
std::vector<Matrix> unitary_classes(std::uint32_t e);

}  // namespace codeq
