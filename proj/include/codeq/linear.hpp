#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "codeq/galois.hpp"

namespace codeq {

/// Dense row-major matrix of field-element encodings.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const std::uint32_t> r);
  void swap_rows(std::size_t a, std::size_t b);
  /// Rows stacked: [a; b].
  static Matrix stack(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

struct RrefResult {
  Matrix matrix;                   // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row-echelon form. Columns are scanned in `column_order` when given
/// (pivots then follow that order); the result is still reduced on every
/// pivot column.
RrefResult rref(const GaloisField& field, Matrix m, std::span<const std::size_t> column_order = {});
std::size_t rank(const GaloisField& field, const Matrix& m);
/// Basis of {x : m x^T = 0}.
Matrix null_space(const GaloisField& field, const Matrix& m);

/// Linear code over GF(q) held by its unique RREF generator matrix.
class LinearCode {
 public:
  LinearCode() = default;
  static LinearCode from_rows(FieldPtr field, const Matrix& rows);
  static LinearCode zero_code(FieldPtr field, std::size_t n);
  static LinearCode full_space(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Generator matrix of the Euclidean dual.
  Matrix parity_check() const;

  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const LinearCode& sub) const;

  bool operator==(const LinearCode& o) const {
    return n_ == o.n_ && field_->order() == o.field_->order() && generator_ == o.generator_;
  }

 private:
  FieldPtr field_;
  std::size_t n_ = 0;
  Matrix generator_;
  std::vector<std::size_t> pivots_;
};

LinearCode euclidean_dual(const LinearCode& c);
/// Requires GF(4); conjugation is a -> a^2.
LinearCode hermitian_dual(const LinearCode& c);
/// Coordinatewise a -> a^2 on GF(4).
LinearCode conjugate(const LinearCode& c);
LinearCode code_sum(const LinearCode& a, const LinearCode& b);
LinearCode code_intersection(const LinearCode& a, const LinearCode& b);
/// dim(C ∩ C^⊥h).
std::size_t hull_dim_hermitian(const LinearCode& c);
/// Hermitian inner product sum u_i v_i^2 over GF(4).
Elem hermitian_product(const GaloisField& f4, std::span<const std::uint32_t> u, std::span<const std::uint32_t> v);

std::size_t hamming_weight(std::span<const std::uint32_t> v);

/// counts[w] = number of codewords of weight w.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;
  bool operator==(const WeightDistribution&) const = default;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 28;

/// Exact enumeration; throws std::length_error when q^k exceeds the budget.
WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget = kDefaultEnumerationBudget);

enum class DistanceStrategy { exhaustive, information_set };

struct DistanceOptions {
  DistanceStrategy strategy = DistanceStrategy::information_set;
  std::uint64_t max_codewords = std::uint64_t{1} << 32;
  double max_seconds = 0;          // 0 = no time limit
  std::uint64_t seed = 1;
  std::size_t random_sets = 0;     // random information sets drawn for the upper bound
  std::uint32_t random_depth = 2;  // message weight enumerated per random set
  std::uint32_t stop_at = 0;       // stop as soon as ub <= stop_at (0 = never)
};

/// Certified bounds lb <= d <= ub. The zero code (or an empty difference set)
/// reports the sentinel lb = ub = n + 1.
struct DistanceResult {
  std::uint32_t lb = 0;
  std::uint32_t ub = 0;
  DistanceStrategy strategy = DistanceStrategy::information_set;
  std::uint64_t seed = 0;
  double elapsed = 0;
  std::uint64_t codewords = 0;
  bool budget_exhausted = false;
  std::vector<std::uint32_t> witness;  // a codeword of weight ub, if found

  bool exact() const { return lb == ub; }
};

DistanceResult min_distance(const LinearCode& c, const DistanceOptions& opts = {});
/// Bounds on the minimum weight over C \ S. Requires S ⊆ C.
DistanceResult min_weight_outside(const LinearCode& c, const LinearCode& s, const DistanceOptions& opts = {});

std::string to_string(DistanceStrategy s);

/// v ↦ v' with v'_i = diag_i · v_{perm^{-1}(i)}, i.e. v·P·D with s_i P = s_{perm(i)}.
struct MonomialTransform {
  std::vector<std::uint32_t> perm;
  std::vector<std::uint32_t> diag;

  static MonomialTransform identity(std::size_t n);
  static MonomialTransform permutation(std::vector<std::uint32_t> perm);
  std::size_t size() const { return perm.size(); }
  bool is_permutation() const;
  std::vector<std::uint32_t> apply(const GaloisField& f, std::span<const std::uint32_t> v) const;
  /// this, then `next`.
  MonomialTransform then(const GaloisField& f, const MonomialTransform& next) const;
  MonomialTransform inverse(const GaloisField& f) const;
  /// n x n matrix M with (v M) = apply(v).
  Matrix to_matrix() const;

  bool operator==(const MonomialTransform&) const = default;
};

LinearCode apply_monomial(const LinearCode& c, const MonomialTransform& m);

enum class EquivalenceMode { permutation, monomial };

struct EquivalenceResult {
  enum class Status { equivalent, not_equivalent, unknown };
  Status status = Status::unknown;
  std::optional<MonomialTransform> witness;  // apply_monomial(c1, *witness) == c2
  std::uint64_t nodes = 0;
  std::string reason;
};

/// Backtracking search for an explicit transform mapping c1 onto c2, pruned by
/// matching the multisets of codeword supports. Requires n <= 64.
EquivalenceResult brute_force_equivalence(const LinearCode& c1, const LinearCode& c2, EquivalenceMode mode,
                                          std::uint64_t node_budget = 50'000'000);

}  // namespace codeq
