#include <algorithm>
#include <numeric>

#include "codeq/cyclic.hpp"
#include "doctest.h"

using namespace codeq;

namespace {

DefiningSet ds(const ContextPtr& ctx, std::vector<std::uint32_t> elems) {
  return DefiningSet::from_elements(ctx->cosets, std::move(elems));
}

DefiningSet leaders(const ContextPtr& ctx, const std::vector<std::uint32_t>& l) {
  return DefiningSet::from_leaders(ctx->cosets, l);
}

/// Every cyclic shift of every generator row stays in the code.
bool shift_closed(const LinearCode& c) {
  const std::size_t n = c.length();
  for (std::size_t r = 0; r < c.dimension(); ++r) {
    auto row = c.generator().row(r);
    std::vector<std::uint32_t> s(n);
    for (std::size_t j = 0; j < n; ++j) s[(j + 1) % n] = row[j];
    if (!c.contains(s)) return false;
  }
  return true;
}

std::vector<std::uint32_t> negate_complement(const DefiningSet& a) {
  const std::uint32_t n = a.n();
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!a.contains((n - i) % n)) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("trivial cyclic codes") {
  auto ctx = cyclic_context(8, 3);
  auto full = build_cyclic(ctx, ds(ctx, {}));
  CHECK(full.k() == 8);
  CHECK(full.generator_poly == std::vector<std::uint32_t>{1});
  std::vector<std::uint32_t> all(8);
  std::iota(all.begin(), all.end(), 0u);
  auto zero = build_cyclic(ctx, ds(ctx, all));
  CHECK(zero.k() == 0);
  // x^8 - 1 over GF(3): coefficients -1, 0, ..., 0, 1.
  CHECK(zero.generator_poly.front() == 2);
  CHECK(zero.generator_poly.back() == 1);
  CHECK(zero.generator_poly.size() == 9);
}

TEST_CASE("the [51,40] quaternary cyclic code") {
  auto ctx = cyclic_context(51, 4);
  CHECK(ctx->anchored);
  auto c = build_cyclic(ctx, leaders(ctx, {0, 2, 7, 17, 34}));
  CHECK(c.n() == 51);
  CHECK(c.k() == 40);
  CHECK(shift_closed(c.code));
  CHECK(cyclic_defining_set(ctx, c.code) == c.defining_set);
}

TEST_CASE("defining sets round trip and the dual relation holds") {
  for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{8, 3}, {9, 2}, {15, 2}, {13, 3}, {10, 3}, {21, 4}}) {
    auto ctx = cyclic_context(n, q);
    for (const auto& a : all_defining_sets(ctx->cosets)) {
      auto c = build_cyclic(ctx, a);
      REQUIRE(c.k() == n - a.size());
      CHECK(shift_closed(c.code));
      CHECK(cyclic_defining_set(ctx, c.code) == a);
      auto dual = cyclic_defining_set(ctx, euclidean_dual(c.code));
      REQUIRE(dual.has_value());
      CHECK(dual->elements() == negate_complement(a));
    }
  }
  auto ctx = cyclic_context(8, 3);
  auto dual = cyclic_defining_set(ctx, euclidean_dual(build_cyclic(ctx, ds(ctx, {0, 1, 3, 4})).code));
  CHECK(dual->elements() == std::vector<std::uint32_t>{1, 2, 3, 6});
}

TEST_CASE("non-cyclic codes have no defining set") {
  auto ctx = cyclic_context(7, 2);
  Matrix g(1, 7);
  g(0, 0) = 1;
  g(0, 1) = 1;
  CHECK_FALSE(cyclic_defining_set(ctx, LinearCode::from_rows(ctx->base, g)).has_value());
}

TEST_CASE("generalized parity checks annihilate the code") {
  for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{8, 3}, {27, 4}, {16, 5}}) {
    auto ctx = cyclic_context(n, q);
    const auto sets = all_defining_sets(ctx->cosets);
    for (std::size_t i = 0; i < sets.size(); i += 5) {
      auto c = build_cyclic(ctx, sets[i]);
      auto h = generalized_parity_check(*ctx, sets[i]);
      const GaloisField& k = *ctx->ext;
      for (std::size_t r = 0; r < c.k(); ++r) {
        for (std::size_t s = 0; s < h.rows(); ++s) {
          Elem acc = 0;
          for (std::size_t j = 0; j < n; ++j) {
            acc = k.add(acc, k.mul(h(s, j), ctx->embedding->up(c.code.generator()(r, j))));
          }
          CHECK(acc == 0);
        }
      }
    }
  }
}

TEST_CASE("sigma transform acts on the standard basis as tabulated") {
  auto f = build_field(3, 1);
  auto t = sigma_transform(8, *f);
  auto image = [&](std::uint32_t i) {
    std::vector<std::uint32_t> s(8, 0);
    s[i] = 1;
    return t.apply(*f, s);
  };
  auto unit = [](std::uint32_t i, std::uint32_t v) {
    std::vector<std::uint32_t> s(8, 0);
    s[i] = v;
    return s;
  };
  CHECK(image(0) == unit(0, 1));
  CHECK(image(1) == unit(1, 2));
  CHECK(image(2) == unit(6, 2));
  CHECK(image(3) == unit(7, 1));
  // The sign pattern is invariant under sigma, so the square is the identity.
  for (std::uint32_t n : {8u, 16u, 24u}) {
    auto s = sigma_transform(n, *f);
    CHECK(s.then(*f, s) == MonomialTransform::identity(n));
  }
  CHECK_THROWS(sigma_transform(12, *f));
  CHECK_THROWS(sigma_transform(8, *build_field(2, 2)));
}

TEST_CASE("sigma maps parity rows v^b to v^(b + n/2) for odd b") {
  auto ctx = cyclic_context(16, 3);
  auto t = sigma_transform(16, *ctx->base);
  const GaloisField& k = *ctx->ext;
  auto v = [&](std::uint32_t b) {
    std::vector<std::uint32_t> row(16);
    for (std::uint32_t j = 0; j < 16; ++j) row[j] = static_cast<std::uint32_t>(k.pow(ctx->root.element, b * j % 16));
    return row;
  };
  // Diagonal entries are prime-field constants, so the transform acts over the extension unchanged.
  for (std::uint32_t b = 1; b < 16; b += 2) CHECK(t.apply(k, v(b)) == v((b + 8) % 16));
}

TEST_CASE("gamma and chi transforms") {
  auto g = gamma_transform(8);
  CHECK(g.perm[1] == 7);
  CHECK(g.perm[2] == 2);
  CHECK(g.is_permutation());
  auto ctx = cyclic_context(8, 5);
  const GaloisField& k = *ctx->ext;
  auto v = [&](std::uint32_t b) {
    std::vector<std::uint32_t> row(8);
    for (std::uint32_t j = 0; j < 8; ++j) row[j] = static_cast<std::uint32_t>(k.pow(ctx->root.element, b * j % 8));
    return row;
  };
  CHECK(g.apply(k, v(0)) == v(0));
  CHECK(g.apply(k, v(2)) == v(6));

  auto x = chi_transform(27);
  CHECK(x.perm[0] == 3);
  for (std::uint32_t i = 0; i < 27; ++i) CHECK(x.perm[x.perm[i]] == i);
  CHECK_THROWS(chi_transform(12));
}

TEST_CASE("P_sigma D links {0,1,3,4} and {2,5,6,7} over GF(3) and no affine map does") {
  auto ctx = cyclic_context(8, 3);
  auto c1 = build_cyclic(ctx, ds(ctx, {0, 1, 3, 4}));
  auto c2 = build_cyclic(ctx, ds(ctx, {2, 5, 6, 7}));
  CHECK(apply_monomial(c1.code, sigma_transform(8, *ctx->base)) == c2.code);
  CHECK(enumerate_affine_witnesses(c1.defining_set, c2.defining_set, CodeFamily::cyclic).empty());

  auto inst = theorem_monomial_action(ctx, ds(ctx, {5, 7}));
  CHECK(inst.a1.elements() == std::vector<std::uint32_t>{2, 5, 6, 7});
  CHECK(inst.a2.elements() == std::vector<std::uint32_t>{0, 1, 3, 4});
  CHECK(inst.certificate.verified());

  auto certs = certify_equivalence(c1, c2);
  REQUIRE_FALSE(certs.empty());
  CHECK(certs.front().kind() == "sigma");
  CHECK(certs.front().verified());
  for (const auto& c : certs) CHECK(c.kind() != "affine");
}

TEST_CASE("monomial action: empty A and n = 40") {
  auto ctx = cyclic_context(16, 3);
  auto inst = theorem_monomial_action(ctx, ds(ctx, {}));
  CHECK(inst.a1.elements() == std::vector<std::uint32_t>{4, 12});
  CHECK(inst.a2.elements() == std::vector<std::uint32_t>{0, 8});
  CHECK(inst.certificate.verified());

  auto ctx40 = cyclic_context(40, 3);
  auto inst40 = theorem_monomial_action(ctx40, leaders(ctx40, {1}));
  CHECK(inst40.certificate.verified());
  CHECK_THROWS(theorem_monomial_action(ctx40, leaders(ctx40, {2})));
}

TEST_CASE("monomial action sweep at small lengths") {
  for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{8, 3}, {8, 7}, {8, 11}, {16, 3}}) {
    auto ctx = cyclic_context(n, q);
    const auto sets = monomial_action_admissible(ctx);
    CHECK(!sets.empty());
    for (const auto& a : sets) CHECK(theorem_monomial_action(ctx, a).certificate.verified());
  }
}

TEST_CASE("P_gamma pair for A = {0,1,5} over GF(5) and admissible sweeps") {
  auto ctx = cyclic_context(8, 5);
  auto inst = theorem_new_permutation(ctx, ds(ctx, {0, 1, 5}));
  CHECK(inst.a1.elements() == std::vector<std::uint32_t>{0, 1, 2, 5});
  CHECK(inst.a2.elements() == std::vector<std::uint32_t>{0, 1, 5, 6});
  CHECK(inst.certificate.verified());
  CHECK(apply_monomial(build_cyclic(ctx, inst.a1).code, gamma_transform(8)) == build_cyclic(ctx, inst.a2).code);

  auto small = theorem_new_permutation(ctx, ds(ctx, {0}));
  CHECK(small.a1.elements() == std::vector<std::uint32_t>{0, 2});
  CHECK(small.certificate.verified());

  for (auto [n, q] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{8, 5}, {16, 5}, {8, 13}, {16, 13}}) {
    auto c = cyclic_context(n, q);
    const auto sets = new_permutation_admissible(c);
    CHECK(!sets.empty());
    for (const auto& a : sets) CHECK(theorem_new_permutation(c, a).certificate.verified());
  }
}

TEST_CASE("P_chi pairs at n = 27 over GF(4)") {
  auto ctx = cyclic_context(27, 4);
  REQUIRE(ctx->anchored);
  CHECK(ctx->ext->pow(ctx->root.element, 9) == ctx->embedding->up(2));
  struct Case {
    std::vector<std::uint32_t> b, e, t1, t2;
  };
  const std::vector<Case> cases{
      {{0}, {1}, {0, 1, 3}, {0, 1, 6}},
      {{0}, {2}, {0, 2, 3}, {0, 2, 6}},
      {{0, 9}, {1}, {0, 1, 3, 9}, {0, 1, 6, 9}},
      {{0, 9, 18}, {1}, {0, 1, 3, 9, 18}, {0, 1, 6, 9, 18}},
  };
  for (const auto& c : cases) {
    auto inst = theorem_F4_permutation(ctx, c.b, c.e);
    CHECK(inst.a1 == leaders(ctx, c.t1));
    CHECK(inst.a2 == leaders(ctx, c.t2));
    CHECK(inst.certificate.verified());
  }
  auto bare = theorem_F4_permutation(ctx, {}, {});
  CHECK(bare.a1 == leaders(ctx, {3}));
  CHECK(bare.certificate.verified());
}

TEST_CASE("P_chi holds for every B and e-list at n = 27") {
  auto ctx = cyclic_context(27, 4);
  const std::vector<std::uint32_t> bs{0, 9, 18};
  for (std::uint32_t bm = 0; bm < 8; ++bm) {
    for (std::uint32_t em = 0; em < 4; ++em) {
      std::vector<std::uint32_t> b, e;
      for (std::uint32_t i = 0; i < 3; ++i) {
        if (bm >> i & 1) b.push_back(bs[i]);
      }
      if (em & 1) e.push_back(1);
      if (em & 2) e.push_back(2);
      CHECK(theorem_F4_permutation(ctx, b, e).certificate.verified());
    }
  }
}

TEST_CASE("isodual chain C ~ dual(C) at n = 8 over GF(3)") {
  auto ctx = cyclic_context(8, 3);
  auto c = build_cyclic(ctx, ds(ctx, {0, 1, 3, 4}));
  auto dual_set = cyclic_defining_set(ctx, euclidean_dual(c.code));
  REQUIRE(dual_set.has_value());
  CHECK(dual_set->elements() == std::vector<std::uint32_t>{1, 2, 3, 6});

  CertificateStep shift;
  shift.kind = CertificateStep::Kind::shift;
  shift.from = *dual_set;
  shift.to = ds(ctx, {2, 5, 6, 7});
  shift.maps = {IndexMap::shift(8, 4)};
  CHECK(verify_step(ctx, shift));
  CHECK(shift.verification.find("generator_identity") != std::string::npos);

  CertificateStep sig;
  sig.kind = CertificateStep::Kind::sigma;
  sig.from = shift.to;
  sig.to = c.defining_set;
  sig.transform = sigma_transform(8, *ctx->base).inverse(*ctx->base);
  sig.inverse = true;
  CHECK(verify_step(ctx, sig));
  Certificate chain{{shift, sig}};
  CHECK(chain.verified());
  CHECK(chain.kind() == "composite");

  // The general certifier finds a chain on its own.
  auto certs = certify_equivalence(build_cyclic(ctx, *dual_set), c);
  REQUIRE_FALSE(certs.empty());
  CHECK(certs.front().verified());
}

TEST_CASE("shift steps with a wrong target are refused") {
  auto ctx = cyclic_context(8, 7);
  CertificateStep s;
  s.kind = CertificateStep::Kind::shift;
  s.from = ds(ctx, {0});
  s.to = ds(ctx, {4});
  s.maps = {IndexMap::shift(8, 4)};
  CHECK(verify_step(ctx, s));
  s.to = ds(ctx, {2, 6});
  CHECK_FALSE(verify_step(ctx, s));
  s.maps = {IndexMap::shift(8, 2)};
  CHECK_FALSE(verify_step(ctx, s));
}

TEST_CASE("multiplier certificates are coordinate permutations") {
  auto ctx = cyclic_context(15, 2);
  for (const auto& a : all_defining_sets(ctx->cosets)) {
    for (auto nb : cyclic_neighbours(ctx, a, MapKinds{true, false, false, false})) {
      REQUIRE(nb.step.transform.has_value());
      CHECK(apply_monomial(build_cyclic(ctx, a).code, *nb.step.transform) == build_cyclic(ctx, nb.to).code);
    }
  }
}

TEST_CASE("extension to length nm") {
  auto ctx = cyclic_context(8, 3);
  auto c1 = build_cyclic(ctx, ds(ctx, {0, 1, 3, 4}));
  auto c2 = build_cyclic(ctx, ds(ctx, {2, 5, 6, 7}));
  CHECK(extend_length(c1, 1).code == c1.code);
  auto e = extend_length(c1, 2);
  CHECK(e.n() == 16);
  CHECK(e.k() == 12);
  CHECK(min_distance(e.code).ub <= 2);
  auto w = extend_equivalence(c1, c2, sigma_transform(8, *ctx->base), 2);
  REQUIRE(w.has_value());
  CHECK(weight_distribution(extend_length(c1, 2).code) == weight_distribution(extend_length(c2, 2).code));
  // Length 40 = 8 * 5 keeps gcd(40, 3) = 1.
  CHECK(extend_equivalence(c1, c2, sigma_transform(8, *ctx->base), 5).has_value());
}

TEST_CASE("certify_equivalence returns identity and nothing across dimensions") {
  auto ctx = cyclic_context(8, 3);
  auto c = build_cyclic(ctx, ds(ctx, {0, 1, 3, 4}));
  auto certs = certify_equivalence(c, c);
  REQUIRE(certs.size() == 1);
  CHECK(certs.front().kind() == "identity");
  CHECK(certify_equivalence(c, build_cyclic(ctx, ds(ctx, {0}))).empty());
}
