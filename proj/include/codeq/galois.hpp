#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace codeq {

using Elem = std::uint64_t;

/// Description of GF(p^m) by its prime, degree, and a monic irreducible modulus
/// (coefficients ascending, length m + 1).
struct FieldSpec {
  std::uint32_t characteristic = 0;
  std::uint32_t degree = 0;
  std::vector<std::uint32_t> modulus;

  bool operator==(const FieldSpec&) const = default;
};

/// Finite field GF(p^m) with elements encoded as integers: the coefficient
/// vector in the polynomial basis read in base p, lowest degree first.
///
/// Fields with at most kTableLimit elements use log/antilog tables; larger
/// ones fall back to polynomial arithmetic. Instances are immutable.
class GaloisField {
 public:
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

  explicit GaloisField(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.characteristic; }
  std::uint32_t degree() const { return spec_.degree; }
  std::uint64_t order() const { return order_; }
  bool has_tables() const { return !exp_.empty(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// Image of the prime-field constant c (reduced mod p).
  Elem constant(std::int64_t c) const;
  /// x ↦ x^p applied `times` times.
  Elem frobenius(Elem a, unsigned times = 1) const;

  /// Smallest element (in encoding order) generating the multiplicative group.
  Elem primitive_element() const { return primitive_; }
  std::uint64_t multiplicative_order(Elem a) const;
  bool is_primitive(Elem a) const;
  /// Discrete log base primitive_element(); only available with tables.
  std::uint64_t log(Elem a) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> d) const;

  /// Distinct prime factors of order() - 1.
  const std::vector<std::uint64_t>& group_order_factors() const { return factors_; }

 private:
  Elem slow_mul(Elem a, Elem b) const;
  Elem slow_pow(Elem a, std::uint64_t e) const;

  FieldSpec spec_;
  std::uint64_t order_ = 0;
  std::vector<std::uint64_t> place_;  // p^i
  std::vector<std::uint64_t> factors_;
  Elem primitive_ = 1;
  std::vector<Elem> exp_;             // size 2(order-1)
  std::vector<std::uint32_t> log_;    // size order
};

using FieldPtr = std::shared_ptr<const GaloisField>;

struct RootOfUnity {
  Elem element = 1;
  std::uint64_t order = 1;
};

/// GF(p^m) with the lowest-lexicographic monic irreducible modulus.
/// Throws std::invalid_argument if p is not prime or m < 1.
FieldPtr build_field(std::uint32_t p, std::uint32_t m);

/// GF(q^ord_n(q)) as a field over the prime of q. Throws if gcd(n, q) != 1.
FieldPtr splitting_field(std::uint64_t q, std::uint64_t n);

/// g^((N-1)/n) for the canonical primitive element g. Throws if n does not
/// divide N - 1.
RootOfUnity primitive_nth_root(const GaloisField& field, std::uint64_t n);

/// Primitive n-th root r = g^((N-1)/n * j), smallest valid j, with
/// r^anchor_power == anchor_value. Throws std::domain_error if unsatisfiable.
RootOfUnity anchored_root(const GaloisField& field, std::uint64_t n, std::uint64_t anchor_power,
                          Elem anchor_value);

/// Identification of a small field GF(q) with the subfield of order q inside a
/// larger field of the same characteristic. The generator x of the small field
/// is sent to the smallest-encoded root of the small field's modulus.
class SubfieldEmbedding {
 public:
  SubfieldEmbedding(FieldPtr small, FieldPtr large);

  const FieldPtr& small() const { return small_; }
  const FieldPtr& large() const { return large_; }
  Elem up(Elem a) const { return image_.at(a); }
  /// Preimage in the small field; throws std::domain_error if `a` lies outside
  /// the subfield.
  Elem down(Elem a) const;
  bool in_subfield(Elem a) const { return preimage_.contains(a); }

 private:
  FieldPtr small_;
  FieldPtr large_;
  std::vector<Elem> image_;
  std::unordered_map<Elem, Elem> preimage_;
};

// Integer helpers shared by the coset and code modules.
bool is_prime(std::uint64_t n);
/// Decomposes q = p^s; returns {p, s} or {0, 0} if q is not a prime power.
std::pair<std::uint64_t, std::uint32_t> prime_power(std::uint64_t q);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t multiplicative_order_mod(std::uint64_t a, std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace codeq
