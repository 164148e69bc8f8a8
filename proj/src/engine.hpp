#pragma once

// Packed codeword arithmetic used by the enumeration routines. Two layouts:
// bit-sliced planes for GF(2) and GF(4), and one byte per coordinate for every
// other field of order <= 256.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "codeq/galois.hpp"
#include "codeq/linear.hpp"

namespace codeq::detail {

class BitEngine {
 public:
  using word = std::uint64_t;

  BitEngine(const GaloisField& f, const Matrix& rows) : q_(static_cast<std::uint32_t>(f.order())), n_(rows.cols()) {
    if (q_ != 2 && q_ != 4) throw std::logic_error("BitEngine: field must be GF(2) or GF(4)");
    words_ = (n_ + 63) / 64;
    planes_ = q_ == 2 ? 1 : 2;
    stride_ = words_ * planes_;
    rows_ = rows.rows();
    data_.assign(rows_ * q_ * stride_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::uint32_t s = 1; s < q_; ++s) {
        word* v = slot(r, s);
        for (std::size_t j = 0; j < n_; ++j) {
          const auto x = static_cast<std::uint32_t>(f.mul(s, rows(r, j)));
          if (x & 1) v[j / 64] |= word{1} << (j % 64);
          if (x & 2) v[words_ + j / 64] |= word{1} << (j % 64);
        }
      }
    }
  }

  std::uint32_t q() const { return q_; }
  std::size_t n() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t stride() const { return stride_; }

  void add(word* dst, const word* src, std::size_t r, std::uint32_t s) const {
    const word* v = slot(r, s);
    for (std::size_t i = 0; i < stride_; ++i) dst[i] = src[i] ^ v[i];
  }
  void add_in_place(word* dst, std::size_t r, std::uint32_t s) const {
    const word* v = slot(r, s);
    for (std::size_t i = 0; i < stride_; ++i) dst[i] ^= v[i];
  }
  std::uint32_t weight(const word* v) const {
    std::uint32_t w = 0;
    if (planes_ == 1) {
      for (std::size_t i = 0; i < words_; ++i) w += static_cast<std::uint32_t>(std::popcount(v[i]));
    } else {
      for (std::size_t i = 0; i < words_; ++i) w += static_cast<std::uint32_t>(std::popcount(v[i] | v[words_ + i]));
    }
    return w;
  }
  std::uint64_t support(const word* v) const { return planes_ == 1 ? v[0] : (v[0] | v[words_]); }
  std::vector<std::uint32_t> unpack(const word* v) const {
    std::vector<std::uint32_t> out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      std::uint32_t x = (v[j / 64] >> (j % 64)) & 1;
      if (planes_ == 2) x |= ((v[words_ + j / 64] >> (j % 64)) & 1) << 1;
      out[j] = x;
    }
    return out;
  }

 private:
  const word* slot(std::size_t r, std::uint32_t s) const { return data_.data() + (r * q_ + s) * stride_; }
  word* slot(std::size_t r, std::uint32_t s) { return data_.data() + (r * q_ + s) * stride_; }

  std::uint32_t q_;
  std::size_t n_;
  std::size_t words_ = 0;
  std::size_t planes_ = 1;
  std::size_t stride_ = 0;
  std::size_t rows_ = 0;
  std::vector<word> data_;
};

class ByteEngine {
 public:
  using word = std::uint8_t;

  ByteEngine(const GaloisField& f, const Matrix& rows) : q_(static_cast<std::uint32_t>(f.order())), n_(rows.cols()) {
    if (q_ > 256) throw std::logic_error("ByteEngine: field too large");
    rows_ = rows.rows();
    add_.resize(std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) add_[a * q_ + b] = static_cast<word>(f.add(a, b));
    }
    data_.assign(rows_ * q_ * n_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::uint32_t s = 1; s < q_; ++s) {
        word* v = slot(r, s);
        for (std::size_t j = 0; j < n_; ++j) v[j] = static_cast<word>(f.mul(s, rows(r, j)));
      }
    }
  }

  std::uint32_t q() const { return q_; }
  std::size_t n() const { return n_; }
  std::size_t rows() const { return rows_; }
  std::size_t stride() const { return n_; }

  void add(word* dst, const word* src, std::size_t r, std::uint32_t s) const {
    const word* v = slot(r, s);
    for (std::size_t i = 0; i < n_; ++i) dst[i] = add_[src[i] * q_ + v[i]];
  }
  void add_in_place(word* dst, std::size_t r, std::uint32_t s) const { add(dst, dst, r, s); }
  std::uint32_t weight(const word* v) const {
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < n_; ++i) w += v[i] != 0;
    return w;
  }
  std::uint64_t support(const word* v) const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < n_ && i < 64; ++i) m |= std::uint64_t{v[i] != 0} << i;
    return m;
  }
  std::vector<std::uint32_t> unpack(const word* v) const { return {v, v + n_}; }

 private:
  const word* slot(std::size_t r, std::uint32_t s) const { return data_.data() + (r * q_ + s) * n_; }
  word* slot(std::size_t r, std::uint32_t s) { return data_.data() + (r * q_ + s) * n_; }

  std::uint32_t q_;
  std::size_t n_;
  std::size_t rows_ = 0;
  std::vector<word> add_;
  std::vector<word> data_;
};

/// Calls fn(engine) with the engine suited to the field.
template <class Fn>
decltype(auto) with_engine(const GaloisField& f, const Matrix& rows, Fn&& fn) {
  if (f.order() == 2 || f.order() == 4) {
    BitEngine e(f, rows);
    return fn(e);
  }
  if (f.order() > 256) throw std::invalid_argument("codeword enumeration supports fields of order <= 256");
  ByteEngine e(f, rows);
  return fn(e);
}

/// Visits every codeword of the span of the engine's rows exactly once via a
/// p-ary Gray code over the additive generators x^j * row_i. fn(const word*)
/// returns false to stop early. Returns false if stopped.
template <class Engine, class Fn>
bool for_each_codeword(const GaloisField& f, const Engine& e, Fn&& fn) {
  using word = typename Engine::word;
  const std::uint32_t p = f.characteristic();
  const std::uint32_t m = f.degree();
  const std::size_t digits = e.rows() * m;
  std::vector<std::uint32_t> gen_scalar(m);
  {
    std::uint32_t x = 1;
    for (std::uint32_t j = 0; j < m; ++j, x *= p) gen_scalar[j] = x;  // encodings of x^j
  }
  std::vector<word> v(e.stride(), 0);
  if (!fn(v.data())) return false;
  std::vector<std::uint32_t> counter(digits + 1, 0);
  for (;;) {
    std::size_t d = 0;
    while (d < digits && counter[d] == p - 1) counter[d++] = 0;
    if (d == digits) return true;
    ++counter[d];
    e.add_in_place(v.data(), d / m, gen_scalar[d % m]);
    if (!fn(v.data())) return false;
  }
}

/// Visits every message of exactly `w` nonzero positions among rows [0, k),
/// with the first nonzero scalar fixed to 1 (one representative per projective
/// point). fn(const word*) returns false to stop.
template <class Engine, class Fn>
bool for_each_weight_w(const Engine& e, std::size_t k, std::uint32_t w, Fn&& fn) {
  using word = typename Engine::word;
  if (w == 0 || w > k) return true;
  const std::uint32_t q = e.q();
  std::vector<word> stack((w + 1) * e.stride(), 0);
  bool keep_going = true;
  auto rec = [&](auto&& self, std::uint32_t depth, std::size_t start) -> void {
    word* prev = stack.data() + depth * e.stride();
    word* cur = prev + e.stride();
    const std::uint32_t s_lo = 1;
    const std::uint32_t s_hi = depth == 0 ? 1 : q - 1;
    for (std::size_t r = start; r + (w - depth) <= k && keep_going; ++r) {
      for (std::uint32_t s = s_lo; s <= s_hi && keep_going; ++s) {
        e.add(cur, prev, r, s);
        if (depth + 1 == w) {
          keep_going = fn(static_cast<const word*>(cur));
        } else {
          self(self, depth + 1, r + 1);
        }
      }
    }
  };
  rec(rec, 0, 0);
  return keep_going;
}

}  // namespace codeq::detail
