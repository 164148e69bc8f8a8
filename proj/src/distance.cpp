// Weight distributions and minimum-distance bounds.
//
// The distance routine combines two ingredients. Random information sets give
// cheap upper bounds. A sequence of mutually disjoint information sets, each
// enumerated by increasing message weight, gives the classical lower bound: a
// codeword not yet seen after all messages of weight <= w were visited in every
// set has at least max(0, w + 1 - (k - r_j)) nonzeros inside the j-th set,
// where r_j is the rank of that set.

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "codeq/linear.hpp"
#include "engine.hpp"

namespace codeq {

namespace {

using detail::for_each_weight_w;
using detail::with_engine;
using Clock = std::chrono::steady_clock;

bool pow_fits(std::uint64_t base, std::size_t exp, std::uint64_t limit, std::uint64_t* out = nullptr) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > limit / base) return false;
    v *= base;
  }
  if (v > limit) return false;
  if (out) *out = v;
  return true;
}

struct InfoSet {
  Matrix generator;    // RREF with pivots taken from the set first
  std::size_t rank;    // pivots inside the set
};

/// Disjoint information sets greedily carved out of `columns` in that order.
std::vector<InfoSet> disjoint_info_sets(const GaloisField& f, const Matrix& g, std::vector<std::size_t> columns) {
  std::vector<InfoSet> out;
  const std::size_t n = g.cols();
  while (!columns.empty()) {
    std::vector<char> used(n, 0);
    for (auto c : columns) used[c] = 1;
    std::vector<std::size_t> order = columns;
    for (std::size_t c = 0; c < n; ++c) {
      if (!used[c]) order.push_back(c);
    }
    auto red = rref(f, g, order);
    std::size_t r = 0;
    std::vector<char> taken(n, 0);
    for (auto p : red.pivots) {
      if (used[p]) {
        ++r;
        taken[p] = 1;
      }
    }
    if (r == 0) break;
    out.push_back({std::move(red.matrix), r});
    std::erase_if(columns, [&](std::size_t c) { return taken[c] != 0; });
  }
  return out;
}

/// Shared search state for one distance computation.
class DistanceSearch {
 public:
  DistanceSearch(const LinearCode& c, const LinearCode* s, const DistanceOptions& opts)
      : c_(c), s_(s), opts_(opts), start_(Clock::now()) {
    res_.strategy = opts.strategy;
    res_.seed = opts.seed;
    res_.lb = 1;
    res_.ub = static_cast<std::uint32_t>(c.length() + 1);
  }

  DistanceResult run() {
    const std::size_t n = c_.length();
    const std::size_t k = c_.dimension();
    const auto sentinel = static_cast<std::uint32_t>(n + 1);
    const std::size_t ks = s_ ? s_->dimension() : 0;
    if (k == ks) {
      res_.lb = res_.ub = sentinel;
      return finish();
    }
    const GaloisField& f = *c_.field();
    if (f.order() > 256) throw std::invalid_argument("min_distance: field order must be <= 256");

    if (opts_.strategy == DistanceStrategy::exhaustive) {
      InfoSet whole{c_.generator(), k};
      std::vector<InfoSet> sets;
      sets.push_back(std::move(whole));
      run_levels(sets, /*early_exit=*/false);
      return finish();
    }

    // Random sets first: they find low-weight words quickly and make the
    // level-wise loop terminate as soon as the lower bound catches up.
    std::mt19937_64 rng(opts_.seed);
    std::vector<std::size_t> perm(n);
    for (std::size_t t = 0; t < opts_.random_sets && !stopped_; ++t) {
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      auto red = rref(f, c_.generator(), perm);
      const std::uint32_t depth = std::min<std::uint32_t>(opts_.random_depth, static_cast<std::uint32_t>(k));
      with_engine(f, red.matrix, [&](auto& e) {
        for (std::uint32_t w = 1; w <= depth && !stopped_; ++w) enumerate_level(e, k, w);
        return 0;
      });
    }
    if (stopped_) return finish();

    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), std::size_t{0});
    auto sets = disjoint_info_sets(f, c_.generator(), cols);
    run_levels(sets, /*early_exit=*/true);
    return finish();
  }

 private:
  void run_levels(const std::vector<InfoSet>& sets, bool early_exit) {
    const GaloisField& f = *c_.field();
    const std::size_t k = c_.dimension();
    const std::uint32_t n1 = static_cast<std::uint32_t>(c_.length() + 1);
    // Only sets with a positive contribution at the current level are worth
    // enumerating; the rest are visited lazily as w grows.
    auto contribution = [&](const InfoSet& s, std::uint32_t w) -> std::uint32_t {
      const std::size_t defect = k - s.rank;
      return w + 1 > defect ? static_cast<std::uint32_t>(w + 1 - defect) : 0;
    };
    for (std::uint32_t w = 1; w <= k; ++w) {
      for (const auto& s : sets) {
        if (stopped_) return;
        if (contribution(s, w) == 0) continue;
        with_engine(f, s.generator, [&](auto& e) {
          enumerate_level(e, k, w);
          return 0;
        });
      }
      if (stopped_) return;
      std::uint32_t lb = 0;
      for (const auto& s : sets) lb += contribution(s, w);
      if (w == k) lb = n1;  // every codeword has been visited
      res_.lb = std::max(res_.lb, std::min(lb, res_.ub));
      if (early_exit && res_.lb >= res_.ub) return;
    }
    res_.lb = res_.ub;
  }

  template <class Engine>
  void enumerate_level(const Engine& e, std::size_t k, std::uint32_t w) {
    for_each_weight_w(e, k, w, [&](const auto* v) {
      ++res_.codewords;
      if ((res_.codewords & 0xFFFF) == 0 && over_budget()) return false;
      const std::uint32_t wt = e.weight(v);
      if (wt >= res_.ub) return true;
      auto vec = e.unpack(v);
      if (s_ && s_->contains(vec)) return true;
      res_.ub = wt;
      res_.witness = std::move(vec);
      if (opts_.stop_at != 0 && res_.ub <= opts_.stop_at) {
        stopped_ = true;
        return false;
      }
      return true;
    });
    if (res_.codewords > opts_.max_codewords) over_budget();
  }

  bool over_budget() {
    bool out = res_.codewords > opts_.max_codewords;
    if (!out && opts_.max_seconds > 0) {
      out = std::chrono::duration<double>(Clock::now() - start_).count() > opts_.max_seconds;
    }
    if (out) {
      res_.budget_exhausted = true;
      stopped_ = true;
    }
    return out;
  }

  DistanceResult finish() {
    res_.lb = std::min(res_.lb, res_.ub);
    res_.elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(res_);
  }

  const LinearCode& c_;
  const LinearCode* s_;
  DistanceOptions opts_;
  Clock::time_point start_;
  DistanceResult res_;
  bool stopped_ = false;
};

}  // namespace

WeightDistribution weight_distribution(const LinearCode& c, std::uint64_t budget) {
  const GaloisField& f = *c.field();
  if (!pow_fits(f.order(), c.dimension(), budget)) {
    throw std::length_error("weight_distribution: code too large to enumerate");
  }
  WeightDistribution wd;
  wd.counts.assign(c.length() + 1, 0);
  if (c.dimension() == 0) {
    wd.counts[0] = 1;
    return wd;
  }
  detail::with_engine(f, c.generator(), [&](auto& e) {
    detail::for_each_codeword(f, e, [&](const auto* v) {
      ++wd.counts[e.weight(v)];
      return true;
    });
    return 0;
  });
  return wd;
}

DistanceResult min_distance(const LinearCode& c, const DistanceOptions& opts) {
  return DistanceSearch(c, nullptr, opts).run();
}

DistanceResult min_weight_outside(const LinearCode& c, const LinearCode& s, const DistanceOptions& opts) {
  if (!c.contains(s)) throw std::invalid_argument("min_weight_outside: S is not a subcode of C");
  if (s.dimension() == 0) return DistanceSearch(c, nullptr, opts).run();
  return DistanceSearch(c, &s, opts).run();
}

}  // namespace codeq
