// Brute-force permutation/monomial equivalence.
//
// Both codes and their duals share the coordinate permutation of any monomial
// map (C2 = C1 P D implies C2^perp = C1^perp P D^-1), so the support multiset
// of whichever of C, C^perp has fewer codewords is an invariant of the
// unknown permutation. Coordinates are matched by backtracking under per
// coordinate and per pair signatures derived from that multiset. Each complete
// permutation is then tested exactly; in monomial mode the diagonal is solved
// as a linear system.

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "codeq/linear.hpp"
#include "engine.hpp"

namespace codeq {

namespace {

constexpr std::uint64_t kSupportEnumerationLimit = std::uint64_t{1} << 18;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Per-coordinate and per-pair commutative signatures of a code's supports.
struct Signatures {
  std::vector<std::uint64_t> single;
  std::vector<std::uint64_t> pair;  // n x n
  std::map<std::uint32_t, std::uint64_t> weights;
};

Signatures support_signatures(const LinearCode& d) {
  const std::size_t n = d.length();
  Signatures s;
  s.single.assign(n, 0);
  s.pair.assign(n * n, 0);
  if (d.dimension() == 0) return s;
  const GaloisField& f = *d.field();
  detail::with_engine(f, d.generator(), [&](auto& e) {
    // One representative per projective point: supports repeat (q-1) times otherwise.
    for (std::uint32_t w = 1; w <= d.dimension(); ++w) {
      detail::for_each_weight_w(e, d.dimension(), w, [&](const auto* v) {
        const auto vec = e.unpack(v);
        std::uint64_t mask = 0;
        std::uint32_t wt = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (vec[i]) {
            mask |= std::uint64_t{1} << i;
            ++wt;
          }
        }
        ++s.weights[wt];
        const std::uint64_t h = mix(wt);
        for (std::uint64_t a = mask; a; a &= a - 1) {
          const int i = std::countr_zero(a);
          s.single[i] += h;
          for (std::uint64_t b = a & (a - 1); b; b &= b - 1) {
            const int j = std::countr_zero(b);
            s.pair[i * n + j] += h;
            s.pair[j * n + i] += h;
          }
        }
        return true;
      });
    }
    return 0;
  });
  return s;
}

/// Diagonal d (all nonzero) with C1 P D = C2 for fixed P, if one exists.
std::optional<std::vector<std::uint32_t>> solve_diagonal(const LinearCode& permuted, const LinearCode& c2) {
  const GaloisField& f = *c2.field();
  const std::size_t n = c2.length();
  const Matrix h = c2.parity_check();
  // Unknowns d_0..d_{n-1}; equations sum_j h[r][j] g[j] d_j = 0 for each row g.
  Matrix sys(0, n);
  std::vector<std::uint32_t> eq(n);
  for (std::size_t gi = 0; gi < permuted.dimension(); ++gi) {
    const auto g = permuted.generator().row(gi);
    for (std::size_t r = 0; r < h.rows(); ++r) {
      for (std::size_t j = 0; j < n; ++j) eq[j] = static_cast<std::uint32_t>(f.mul(h(r, j), g[j]));
      sys.append_row(eq);
    }
  }
  Matrix basis = sys.rows() == 0 ? LinearCode::full_space(c2.field(), n).generator() : null_space(f, sys);
  const std::size_t t = basis.rows();
  if (t == 0) return std::nullopt;
  for (std::size_t j = 0; j < n; ++j) {
    bool any = false;
    for (std::size_t r = 0; r < t && !any; ++r) any = basis(r, j) != 0;
    if (!any) return std::nullopt;
  }
  // Scan combinations of basis vectors (first coefficient fixed to 1 is not
  // enough in general, so enumerate all) up to a modest limit.
  std::uint64_t total = 1;
  for (std::size_t r = 0; r < t; ++r) {
    if (total > (std::uint64_t{1} << 22) / f.order()) return std::nullopt;
    total *= f.order();
  }
  std::vector<std::uint32_t> coef(t, 0);
  std::vector<std::uint32_t> v(n);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t x = idx;
    for (std::size_t r = 0; r < t; ++r) {
      coef[r] = static_cast<std::uint32_t>(x % f.order());
      x /= f.order();
    }
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      Elem s = 0;
      for (std::size_t r = 0; r < t; ++r) {
        if (coef[r]) s = f.add(s, f.mul(coef[r], basis(r, j)));
      }
      v[j] = static_cast<std::uint32_t>(s);
      ok = s != 0;
    }
    if (ok) return v;
  }
  return std::nullopt;
}

class Matcher {
 public:
  Matcher(const LinearCode& c1, const LinearCode& c2, EquivalenceMode mode, std::uint64_t budget,
          const Signatures& s1, const Signatures& s2)
      : c1_(c1), c2_(c2), mode_(mode), budget_(budget), s1_(s1), s2_(s2), n_(c1.length()) {
    // Visit coordinates of rare signature first.
    std::map<std::uint64_t, std::size_t> freq;
    for (auto x : s1_.single) ++freq[x];
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return freq[s1_.single[a]] < freq[s1_.single[b]]; });
    perm_.assign(n_, UINT32_MAX);
    used_.assign(n_, 0);
  }

  EquivalenceResult run() {
    EquivalenceResult r;
    const bool done = search(0);
    r.nodes = nodes_;
    if (found_) {
      r.status = EquivalenceResult::Status::equivalent;
      r.witness = witness_;
      r.reason = "explicit witness";
    } else if (done) {
      r.status = EquivalenceResult::Status::not_equivalent;
      r.reason = "search exhausted";
    } else {
      r.status = EquivalenceResult::Status::unknown;
      r.reason = "node budget exhausted";
    }
    return r;
  }

 private:
  /// Returns false if the budget ran out.
  bool search(std::size_t depth) {
    if (found_) return true;
    if (depth == n_) return leaf();
    const std::size_t i = order_[depth];
    for (std::uint32_t t = 0; t < n_; ++t) {
      if (used_[t] || s1_.single[i] != s2_.single[t]) continue;
      if (++nodes_ > budget_) return false;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t j = order_[d];
        ok = s1_.pair[i * n_ + j] == s2_.pair[t * n_ + perm_[j]];
      }
      if (!ok) continue;
      perm_[i] = t;
      used_[t] = 1;
      const bool finished = search(depth + 1);
      used_[t] = 0;
      perm_[i] = UINT32_MAX;
      if (!finished) return false;
      if (found_) return true;
    }
    return true;
  }

  bool leaf() {
    const auto p = MonomialTransform::permutation(perm_);
    const LinearCode permuted = apply_monomial(c1_, p);
    if (permuted == c2_) {
      found_ = true;
      witness_ = p;
      return true;
    }
    if (mode_ == EquivalenceMode::monomial) {
      if (auto d = solve_diagonal(permuted, c2_)) {
        MonomialTransform m = p;
        m.diag = std::move(*d);
        if (apply_monomial(c1_, m) == c2_) {
          found_ = true;
          witness_ = m;
        }
      }
    }
    return true;
  }

  const LinearCode& c1_;
  const LinearCode& c2_;
  EquivalenceMode mode_;
  std::uint64_t budget_;
  const Signatures& s1_;
  const Signatures& s2_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::uint32_t> perm_;
  std::vector<char> used_;
  std::uint64_t nodes_ = 0;
  bool found_ = false;
  MonomialTransform witness_;
};

}  // namespace

EquivalenceResult brute_force_equivalence(const LinearCode& c1, const LinearCode& c2, EquivalenceMode mode,
                                          std::uint64_t node_budget) {
  EquivalenceResult r;
  const std::size_t n = c1.length();
  if (n != c2.length() || c1.field()->order() != c2.field()->order() || c1.dimension() != c2.dimension()) {
    r.status = EquivalenceResult::Status::not_equivalent;
    r.reason = "length, field or dimension differ";
    return r;
  }
  if (c1 == c2) {
    r.status = EquivalenceResult::Status::equivalent;
    r.witness = MonomialTransform::identity(n);
    r.reason = "identical codes";
    return r;
  }
  if (n > 64) throw std::invalid_argument("brute_force_equivalence: length must be <= 64");

  const bool use_dual = 2 * c1.dimension() > n;
  const LinearCode d1 = use_dual ? euclidean_dual(c1) : c1;
  const LinearCode d2 = use_dual ? euclidean_dual(c2) : c2;
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < d1.dimension(); ++i) {
    size *= c1.field()->order();
    if (size > kSupportEnumerationLimit) {
      r.reason = "code too large for support signatures";
      return r;
    }
  }
  if (weight_distribution(d1) != weight_distribution(d2)) {
    r.status = EquivalenceResult::Status::not_equivalent;
    r.reason = "weight distributions differ";
    return r;
  }
  const Signatures s1 = support_signatures(d1);
  const Signatures s2 = support_signatures(d2);
  auto sorted = [](std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(s1.single) != sorted(s2.single)) {
    r.status = EquivalenceResult::Status::not_equivalent;
    r.reason = "coordinate signatures differ";
    return r;
  }
  return Matcher(c1, c2, mode, node_budget, s1, s2).run();
}

}  // namespace codeq
