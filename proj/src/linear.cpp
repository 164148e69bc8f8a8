#include "codeq/linear.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace codeq {

void Matrix::append_row(std::span<const std::uint32_t> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
}

Matrix Matrix::stack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw std::invalid_argument("Matrix::stack: width mismatch");
  Matrix out = a;
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

RrefResult rref(const GaloisField& f, Matrix m, std::span<const std::size_t> column_order) {
  std::vector<std::size_t> order;
  if (column_order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
  } else {
    order.assign(column_order.begin(), column_order.end());
  }
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c : order) {
    if (r == m.rows()) break;
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    const Elem inv = f.inv(m(r, c));
    if (inv != 1) {
      for (auto& x : m.row(r)) x = static_cast<std::uint32_t>(f.mul(x, inv));
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem factor = f.neg(m(i, c));
      auto dst = m.row(i);
      auto src = m.row(r);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (src[j] != 0) dst[j] = static_cast<std::uint32_t>(f.add(dst[j], f.mul(factor, src[j])));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  Matrix trimmed(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) trimmed.append_row(m.row(i));
  out.matrix = std::move(trimmed);
  return out;
}

std::size_t rank(const GaloisField& f, const Matrix& m) { return rref(f, m).pivots.size(); }

Matrix null_space(const GaloisField& f, const Matrix& m) {
  const auto red = rref(f, m);
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto p : red.pivots) is_pivot[p] = 1;
  Matrix out(0, n);
  std::vector<std::uint32_t> v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      v[red.pivots[i]] = static_cast<std::uint32_t>(f.neg(red.matrix(i, free)));
    }
    out.append_row(v);
  }
  return out;
}

LinearCode LinearCode::from_rows(FieldPtr field, const Matrix& rows) {
  LinearCode c;
  c.n_ = rows.cols();
  auto red = rref(*field, rows);
  c.generator_ = std::move(red.matrix);
  c.pivots_ = std::move(red.pivots);
  c.field_ = std::move(field);
  return c;
}

LinearCode LinearCode::zero_code(FieldPtr field, std::size_t n) { return from_rows(std::move(field), Matrix(0, n)); }

LinearCode LinearCode::full_space(FieldPtr field, std::size_t n) {
  Matrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return from_rows(std::move(field), id);
}

Matrix LinearCode::parity_check() const { return null_space(*field_, generator_); }

bool LinearCode::contains(std::span<const std::uint32_t> v) const {
  if (v.size() != n_) return false;
  std::vector<std::uint32_t> w(v.begin(), v.end());
  const GaloisField& f = *field_;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = w[pivots_[i]];
    if (c == 0) continue;
    const Elem factor = f.neg(c);
    auto row = generator_.row(i);
    for (std::size_t j = 0; j < n_; ++j) {
      if (row[j] != 0) w[j] = static_cast<std::uint32_t>(f.add(w[j], f.mul(factor, row[j])));
    }
  }
  return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool LinearCode::contains(const LinearCode& sub) const {
  if (sub.length() != n_) return false;
  for (std::size_t r = 0; r < sub.dimension(); ++r) {
    if (!contains(sub.generator().row(r))) return false;
  }
  return true;
}

LinearCode euclidean_dual(const LinearCode& c) { return LinearCode::from_rows(c.field(), c.parity_check()); }

namespace {

void require_gf4(const LinearCode& c, const char* what) {
  if (c.field()->order() != 4) throw std::invalid_argument(std::string(what) + ": code must be over GF(4)");
}

}  // namespace

LinearCode conjugate(const LinearCode& c) {
  require_gf4(c, "conjugate");
  const GaloisField& f = *c.field();
  Matrix g = c.generator();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (auto& x : g.row(r)) x = static_cast<std::uint32_t>(f.mul(x, x));
  }
  return LinearCode::from_rows(c.field(), g);
}

LinearCode hermitian_dual(const LinearCode& c) {
  require_gf4(c, "hermitian_dual");
  return conjugate(euclidean_dual(c));
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
  if (a.length() != b.length()) throw std::invalid_argument("code_sum: length mismatch");
  return LinearCode::from_rows(a.field(), Matrix::stack(a.generator(), b.generator()));
}

LinearCode code_intersection(const LinearCode& a, const LinearCode& b) {
  return euclidean_dual(code_sum(euclidean_dual(a), euclidean_dual(b)));
}

std::size_t hull_dim_hermitian(const LinearCode& c) { return code_intersection(c, hermitian_dual(c)).dimension(); }

Elem hermitian_product(const GaloisField& f4, std::span<const std::uint32_t> u, std::span<const std::uint32_t> v) {
  Elem s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = f4.add(s, f4.mul(u[i], f4.mul(v[i], v[i])));
  return s;
}

std::size_t hamming_weight(std::span<const std::uint32_t> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; }));
}

std::string to_string(DistanceStrategy s) {
  return s == DistanceStrategy::exhaustive ? "exhaustive" : "information_set";
}

MonomialTransform MonomialTransform::identity(std::size_t n) {
  MonomialTransform m;
  m.perm.resize(n);
  std::iota(m.perm.begin(), m.perm.end(), 0u);
  m.diag.assign(n, 1);
  return m;
}

MonomialTransform MonomialTransform::permutation(std::vector<std::uint32_t> perm) {
  MonomialTransform m;
  m.diag.assign(perm.size(), 1);
  m.perm = std::move(perm);
  std::vector<char> seen(m.perm.size(), 0);
  for (auto p : m.perm) {
    if (p >= m.perm.size() || seen[p]) throw std::invalid_argument("MonomialTransform: not a permutation");
    seen[p] = 1;
  }
  return m;
}

bool MonomialTransform::is_permutation() const {
  return std::all_of(diag.begin(), diag.end(), [](std::uint32_t d) { return d == 1; });
}

std::vector<std::uint32_t> MonomialTransform::apply(const GaloisField& f, std::span<const std::uint32_t> v) const {
  if (v.size() != perm.size()) throw std::invalid_argument("MonomialTransform::apply: length mismatch");
  std::vector<std::uint32_t> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto t = perm[j];
    out[t] = static_cast<std::uint32_t>(f.mul(diag[t], v[j]));
  }
  return out;
}

MonomialTransform MonomialTransform::then(const GaloisField& f, const MonomialTransform& next) const {
  const std::size_t n = perm.size();
  if (next.size() != n) throw std::invalid_argument("MonomialTransform::then: size mismatch");
  MonomialTransform r;
  r.perm.resize(n);
  r.diag.resize(n);
  std::vector<std::uint32_t> next_inv(n);
  for (std::size_t i = 0; i < n; ++i) next_inv[next.perm[i]] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < n; ++i) r.perm[i] = next.perm[perm[i]];
  for (std::size_t j = 0; j < n; ++j) {
    r.diag[j] = static_cast<std::uint32_t>(f.mul(next.diag[j], diag[next_inv[j]]));
  }
  return r;
}

MonomialTransform MonomialTransform::inverse(const GaloisField& f) const {
  const std::size_t n = perm.size();
  MonomialTransform r;
  r.perm.resize(n);
  r.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.perm[perm[i]] = static_cast<std::uint32_t>(i);
  for (std::size_t j = 0; j < n; ++j) r.diag[j] = static_cast<std::uint32_t>(f.inv(diag[perm[j]]));
  return r;
}

Matrix MonomialTransform::to_matrix() const {
  const std::size_t n = perm.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = diag[perm[i]];
  return m;
}

LinearCode apply_monomial(const LinearCode& c, const MonomialTransform& m) {
  Matrix g(0, c.length());
  for (std::size_t r = 0; r < c.dimension(); ++r) g.append_row(m.apply(*c.field(), c.generator().row(r)));
  return LinearCode::from_rows(c.field(), g);
}

}  // namespace codeq
