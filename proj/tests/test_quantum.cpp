#include <algorithm>

#include "codeq/constacyclic.hpp"
#include "codeq/quantum.hpp"
#include "doctest.h"

using namespace codeq;

namespace {

FieldPtr f4() { return build_field(2, 2); }

/// Minimum weight over c \ s by listing every codeword of c.
std::uint32_t brute_min_outside(const LinearCode& c, const LinearCode& s) {
  const auto& f = *c.field();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.dimension(); ++i) total *= f.order();
  auto best = static_cast<std::uint32_t>(c.length() + 1);
  std::vector<std::uint32_t> v(c.length());
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::fill(v.begin(), v.end(), 0);
    std::uint64_t x = idx;
    for (std::size_t r = 0; r < c.dimension(); ++r, x /= f.order()) {
      const Elem a = x % f.order();
      for (std::size_t j = 0; j < c.length(); ++j) v[j] = static_cast<std::uint32_t>(f.add(v[j], f.mul(a, c.generator()(r, j))));
    }
    if (!s.contains(v)) best = std::min(best, static_cast<std::uint32_t>(hamming_weight(v)));
  }
  return best;
}

DistanceOptions exhaustive() {
  DistanceOptions d;
  d.strategy = DistanceStrategy::exhaustive;
  return d;
}

}  // namespace

TEST_CASE("crss on the full space and on a self-dual code") {
  const auto f = f4();
  const auto full = LinearCode::full_space(f, 5);
  const auto p = crss(full, exhaustive());
  CHECK(p.n_q == 5);
  CHECK(p.k_q == 5);
  CHECK(p.e == 0);

  // (a, a) over GF(4) is Hermitian self-dual: 1 + 1 = 0.
  Matrix g(1, 2);
  g(0, 0) = g(0, 1) = 1;
  const auto sd = LinearCode::from_rows(f, g);
  REQUIRE(hermitian_dual(sd) == sd);
  const auto q = crss(sd, exhaustive());
  CHECK(q.k_q == 0);
  CHECK(q.d_lb == q.d_ub);
  // C \ C is empty, so the sentinel n + 1 comes back; d' = d(C) applies instead.
  CHECK(min_distance(sd, exhaustive()).lb == 2);
}

TEST_CASE("crss rejects codes that are not dual-containing") {
  const auto f = f4();
  Matrix g(1, 3);
  g(0, 0) = 1;
  CHECK_THROWS_AS(crss(LinearCode::from_rows(f, g)), std::invalid_argument);
  CHECK_THROWS_AS(crss(LinearCode::full_space(build_field(3, 1), 3)), std::invalid_argument);
}

TEST_CASE("dual-containing input needs no extension") {
  const auto f = f4();
  const auto full = LinearCode::full_space(f, 4);
  const auto r = nearly_self_orthogonal(full, {exhaustive(), std::nullopt});
  CHECK(r.e == 0);
  CHECK(r.extended == full);
  CHECK(r.params.k_q == 4);
}

TEST_CASE("extension invariants over every cyclic code of small length") {
  for (std::uint32_t n : {3u, 5u, 7u, 9u, 15u}) {
    const auto ctx = cyclic_context(n, 4);
    for (const auto& a : all_defining_sets(ctx->cosets, 0, SIZE_MAX, false)) {
      const auto c = build_cyclic(ctx, a);
      CAPTURE(n);
      CAPTURE(a.to_string(ctx->cosets));
      const auto r = nearly_self_orthogonal(c.code);
      const std::size_t k = c.k();
      CHECK(r.e == n - k - hull_dim_hermitian(c.code));
      CHECK(r.e == r.e_from_sum);
      CHECK(r.extended.length() == n + r.e);
      CHECK(r.extended.dimension() == k + r.e);
      CHECK(r.extended.contains(hermitian_dual(r.extended)));
      CHECK(r.params.k_q == 2 * static_cast<std::int64_t>(r.extended.dimension()) -
                                static_cast<std::int64_t>(r.extended.length()));
      // Puncturing the new coordinates gives back C + C^perp_h.
      Matrix head(0, n);
      for (std::size_t i = 0; i < r.extended.dimension(); ++i) {
        head.append_row(r.extended.generator().row(i).first(n));
      }
      CHECK(LinearCode::from_rows(c.code.field(), head) == code_sum(c.code, hermitian_dual(c.code)));
    }
  }
}

TEST_CASE("quantum distance respects the extension bound") {
  for (std::uint32_t n : {5u, 7u, 9u}) {
    const auto ctx = cyclic_context(n, 4);
    for (const auto& a : all_defining_sets(ctx->cosets, 0, SIZE_MAX, false)) {
      const auto c = build_cyclic(ctx, a);
      const auto r = nearly_self_orthogonal(c.code, {exhaustive(), std::nullopt});
      if (r.extended.dimension() > 7) continue;
      CAPTURE(n);
      CAPTURE(a.to_string(ctx->cosets));
      const auto truth = brute_min_outside(r.extended, hermitian_dual(r.extended));
      CHECK(r.params.d_lb == truth);
      CHECK(r.params.d_ub == truth);
      const auto b = extension_bound(c.code, exhaustive());
      CHECK(b.lb() == b.ub());
      CHECK(truth >= b.lb());
    }
  }
}

TEST_CASE("unitary classes for small e") {
  CHECK(unitary_classes(1).size() == 1);
  const auto u3 = unitary_classes(3);
  CHECK(u3.size() == 4);
  const auto f = f4();
  for (const auto& u : u3) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(hermitian_product(*f, u.row(i), u.row(j)) == (i == j ? 1u : 0u));
    }
  }
  CHECK_THROWS_AS(unitary_classes(0), std::invalid_argument);
  CHECK_THROWS_AS(unitary_classes(5), std::invalid_argument);
}

TEST_CASE("every unitary block yields a dual-containing extension") {
  const auto ctx = cyclic_context(15, 4);
  for (const auto& a : all_defining_sets(ctx->cosets, 0, SIZE_MAX, false)) {
    const auto c = build_cyclic(ctx, a);
    const auto plain = nearly_self_orthogonal(c.code);
    if (plain.e < 2 || plain.e > 4) continue;
    for (const auto& u : unitary_classes(plain.e)) {
      const auto r = nearly_self_orthogonal(c.code, {std::nullopt, u});
      CHECK(r.extended.contains(hermitian_dual(r.extended)));
      CHECK(r.extended.dimension() == c.k() + r.e);
    }
    Matrix bad(plain.e, plain.e);
    CHECK_THROWS_AS(nearly_self_orthogonal(c.code, {std::nullopt, bad}), std::invalid_argument);
    break;
  }
}

TEST_CASE("[[54,32,6]] from the length 51 cyclic code") {
  const auto ctx = cyclic_context(51, 4);
  const auto c = build_cyclic(ctx, DefiningSet::from_leaders(ctx->cosets, {0, 2, 7, 17, 34}));
  REQUIRE(c.k() == 40);
  DistanceOptions d;
  d.random_sets = 200;
  const auto r = nearly_self_orthogonal(c.code, {d, std::nullopt});
  CHECK(r.e == 3);
  CHECK(r.e_from_sum == 3);
  CHECK(r.extended.length() == 54);
  CHECK(r.extended.dimension() == 43);
  CHECK(r.params.n_q == 54);
  CHECK(r.params.k_q == 32);
  CHECK(r.params.d_lb == 6);
  CHECK(r.params.d_ub == 6);
  const auto b = extension_bound(c.code, d);
  CHECK(b.lb() == 4);
  CHECK(b.ub() == 4);
  CHECK(r.params.d_lb >= b.lb());
}

TEST_CASE("[[114,72]] from the length 111 constacyclic code") {
  const auto ctx = constacyclic_context(111);
  const auto c = build_constacyclic(ctx, DefiningSet::from_leaders(ctx->cosets, {19, 37}));
  REQUIRE(c.k() == 90);
  DistanceOptions d;
  d.random_sets = 2000;
  d.stop_at = 9;
  const auto r = nearly_self_orthogonal(c.code, {d, std::nullopt});
  CHECK(r.e == 3);
  CHECK(r.e_from_sum == 3);
  CHECK(r.extended.dimension() == 93);
  CHECK(r.params.n_q == 114);
  CHECK(r.params.k_q == 72);
  CHECK(r.params.d_ub <= 9);
  CHECK(hamming_weight(r.params.distance.witness) == r.params.d_ub);
  CHECK(r.extended.contains(r.params.distance.witness));
  CHECK_FALSE(hermitian_dual(r.extended).contains(r.params.distance.witness));
}
