#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace codeq {

/// Partition of Z/nZ into q-cyclotomic cosets, ordered by leader.
class CosetTable {
 public:
  CosetTable(std::uint32_t n, std::uint64_t q);

  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }
  std::size_t size() const { return cosets_.size(); }
  const std::vector<std::vector<std::uint32_t>>& cosets() const { return cosets_; }
  const std::vector<std::uint32_t>& leaders() const { return leaders_; }
  /// Index (into cosets()) of the coset containing a.
  std::size_t index_of(std::uint32_t a) const { return coset_of_[a % n_]; }
  const std::vector<std::uint32_t>& coset_containing(std::uint32_t a) const {
    return cosets_[index_of(a)];
  }
  /// True iff `elements` (any order, no duplicates) is a union of cosets.
  bool is_union_of_cosets(const std::vector<std::uint32_t>& elements) const;

 private:
  std::uint32_t n_;
  std::uint64_t q_;
  std::vector<std::vector<std::uint32_t>> cosets_;
  std::vector<std::uint32_t> leaders_;
  std::vector<std::uint32_t> coset_of_;
};

CosetTable coset_table(std::uint32_t n, std::uint64_t q);

/// A union of q-cyclotomic cosets mod n, stored as sorted elements.
class DefiningSet {
 public:
  DefiningSet() = default;
  /// Throws std::invalid_argument if the set is not a union of cosets.
  static DefiningSet from_elements(const CosetTable& table, std::vector<std::uint32_t> elements);
  /// Union of the cosets containing each given element.
  static DefiningSet from_leaders(const CosetTable& table, const std::vector<std::uint32_t>& leaders);
  /// Parses "0,2,7" (leaders) or "full:0,1,3,4" (all elements).
  static DefiningSet parse(const CosetTable& table, std::string_view text);

  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(std::uint32_t a) const;
  std::vector<std::uint32_t> leaders(const CosetTable& table) const;
  /// Comma-separated leaders.
  std::string to_string(const CosetTable& table) const;

  bool operator==(const DefiningSet& o) const { return n_ == o.n_ && elements_ == o.elements_; }
  auto operator<=>(const DefiningSet& o) const { return elements_ <=> o.elements_; }

 private:
  std::uint32_t n_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> elements_;
};

/// Index maps on Z/nZ acting on defining sets.
struct IndexMap {
  enum class Kind { multiplier, generalized_multiplier, shift, affine };

  Kind kind = Kind::affine;
  std::uint32_t modulus = 1;
  std::uint32_t e = 1;  // multiplier / affine scale; generalized multiplier d
  std::uint32_t b = 0;  // shift / affine translation
  std::uint32_t p = 0;  // generalized multiplier: n = p^m, digit base p^k
  std::uint32_t k = 0;
  std::uint32_t m = 0;

  static IndexMap multiplier(std::uint32_t n, std::int64_t a);
  static IndexMap generalized_multiplier(std::uint32_t n, std::uint32_t d, std::uint32_t k);
  static IndexMap shift(std::uint32_t n, std::int64_t b);
  static IndexMap affine(std::uint32_t n, std::int64_t e, std::int64_t b);

  std::uint32_t operator()(std::uint32_t x) const;
  std::string describe() const;
};

/// Image of a set under the map, sorted. Not necessarily a union of cosets.
/// Throws std::invalid_argument on modulus mismatch.
std::vector<std::uint32_t> apply_map(const IndexMap& map, const DefiningSet& set);
std::vector<std::uint32_t> apply_map(const IndexMap& map, const std::vector<std::uint32_t>& set);

/// n | setsize (q - 1) b.
bool shift_divisibility_cyclic(std::uint64_t n, std::uint64_t q, std::uint64_t setsize, std::uint64_t b);
/// 3 | b and n | b setsize.
bool shift_divisibility_constacyclic(std::uint64_t n, std::uint64_t setsize, std::uint64_t b);

/// {(ek + i n / 3^(t-1)) mod n : 0 <= i < 3^(t-1)} for n = 3^t k, t >= 3,
/// gcd(k, 3) = 1, n odd; validated as a union of 4-cyclotomic cosets.
DefiningSet build_Ae(std::uint32_t n, std::uint32_t e);

enum class CodeFamily { cyclic, constacyclic };

/// All affine maps theta with theta(A) = B and the side conditions of the
/// family. For constacyclic sets the modulus is 3n and q is 4.
std::vector<IndexMap> enumerate_affine_witnesses(const DefiningSet& a, const DefiningSet& b,
                                                 CodeFamily mode);

/// Parses a comma-separated list of non-negative integers.
std::vector<std::uint32_t> parse_uint_list(std::string_view text);

}  // namespace codeq
