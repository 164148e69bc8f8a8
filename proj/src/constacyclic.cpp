#include "codeq/constacyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace codeq {

namespace {

void require_odd(std::uint32_t n) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("constacyclic codes need odd n");
}

std::vector<std::uint32_t> scale(const std::vector<std::uint32_t>& a, std::uint64_t e, std::uint32_t mod) {
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back(static_cast<std::uint32_t>(e * x % mod));
  std::sort(out.begin(), out.end());
  return out;
}

/// Units e = 1 mod 3 of Z/3nZ.
std::vector<std::uint32_t> psi_units(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t e = 1; e < 3 * n; e += 3) {
    if (std::gcd(e, 3 * n) == 1) out.push_back(e);
  }
  return out;
}

}  // namespace

ContextPtr constacyclic_context(std::uint32_t n) {
  require_odd(n);
  return code_context(n, 4, 3 * n, RootChoice::anchored);
}

ConstacyclicCode build_constacyclic(const ContextPtr& ctx, const DefiningSet& a) { return build_cyclic(ctx, a); }

ConstacyclicCode build_constacyclic(std::uint32_t n, const DefiningSet& a) {
  return build_constacyclic(constacyclic_context(n), a);
}

std::optional<DefiningSet> constacyclic_defining_set(const ContextPtr& ctx, const LinearCode& c) {
  return cyclic_defining_set(ctx, c);
}

bool is_constacyclic(const LinearCode& c, Elem eta) {
  const GaloisField& f = *c.field();
  const std::size_t n = c.length();
  std::vector<std::uint32_t> s(n);
  for (std::size_t r = 0; r < c.dimension(); ++r) {
    auto row = c.generator().row(r);
    s[0] = static_cast<std::uint32_t>(f.mul(eta, row[n - 1]));
    for (std::size_t j = 1; j < n; ++j) s[j] = row[j - 1];
    if (!c.contains(s)) return false;
  }
  return true;
}

LinearCode conjugate_code(const ConstacyclicCode& c) { return conjugate(c.code); }

PsiImage psi_substitution(const ConstacyclicCode& c, std::uint32_t e) {
  const std::uint32_t n = c.n();
  const std::uint32_t mod = 3 * n;
  if (e % 3 != 1 || std::gcd(e, mod) != 1) throw std::invalid_argument("psi_substitution: need e = 1 mod 3, gcd(e, 3n) = 1");
  const auto inv = static_cast<std::uint64_t>(inverse_mod(e, mod));
  const auto image = DefiningSet::from_elements(c.ctx->cosets, scale(c.defining_set.elements(), inv, mod));
  PsiImage out{build_constacyclic(c.ctx, image), psi_transform(n, e % mod, *c.ctx->base)};
  if (apply_monomial(c.code, out.transform) != out.code.code) {
    throw std::logic_error("psi_substitution: image does not match the predicted defining set");
  }
  return out;
}

std::optional<Certificate> shift_same_parameters(const ConstacyclicCode& c1, const ConstacyclicCode& c2,
                                                 std::uint32_t j) {
  const std::uint32_t mod = c1.ctx->modulus;
  CertificateStep s;
  s.kind = CertificateStep::Kind::same_parameters;
  s.from = c1.defining_set;
  s.to = c2.defining_set;
  s.maps = {IndexMap::shift(mod, std::int64_t{3} * j)};
  if (apply_map(s.maps.front(), s.from) != s.to.elements()) return std::nullopt;
  if (!shift_divisibility_constacyclic(c1.n(), s.from.size(), (std::uint64_t{3} * j) % mod)) return std::nullopt;
  if (!verify_step(c1.ctx, s)) return std::nullopt;
  return Certificate{{std::move(s)}};
}

std::vector<Certificate> affine_same_parameters(const ConstacyclicCode& c1, const ConstacyclicCode& c2) {
  std::vector<Certificate> out;
  for (const auto& m : enumerate_affine_witnesses(c1.defining_set, c2.defining_set, CodeFamily::constacyclic)) {
    CertificateStep s;
    s.kind = m.b == 0 ? CertificateStep::Kind::psi : CertificateStep::Kind::same_parameters;
    s.from = c1.defining_set;
    s.to = c2.defining_set;
    s.maps = {m};
    if (verify_step(c1.ctx, s)) out.push_back({{std::move(s)}});
  }
  return out;
}

std::vector<Neighbour> constacyclic_neighbours(const ContextPtr& ctx, const DefiningSet& a, bool same_parameters) {
  const std::uint32_t n = ctx->n;
  const std::uint32_t mod = ctx->modulus;
  std::vector<Neighbour> out;
  std::map<std::vector<std::uint32_t>, bool> seen{{a.elements(), true}};
  const auto units = psi_units(n);
  for (auto e : units) {
    auto img = scale(a.elements(), e, mod);
    if (seen.contains(img)) continue;
    seen[img] = true;
    CertificateStep s;
    s.kind = CertificateStep::Kind::psi;
    s.from = a;
    s.to = DefiningSet::from_elements(ctx->cosets, img);
    s.maps = {IndexMap::multiplier(mod, e)};
    s.transform = psi_transform(n, static_cast<std::uint32_t>(inverse_mod(e, mod)), *ctx->base);
    out.push_back({s.to, std::move(s)});
  }
  if (!same_parameters || a.empty()) return out;
  for (std::uint32_t b = 3; b < mod; b += 3) {
    if (!shift_divisibility_constacyclic(n, a.size(), b)) continue;
    for (auto e : units) {
      const IndexMap m = IndexMap::affine(mod, e, b);
      auto img = apply_map(m, a);
      if (seen.contains(img) || !ctx->cosets.is_union_of_cosets(img)) continue;
      seen[img] = true;
      CertificateStep s;
      s.kind = CertificateStep::Kind::same_parameters;
      s.from = a;
      s.to = DefiningSet::from_elements(ctx->cosets, img);
      s.maps = {m};
      out.push_back({s.to, std::move(s)});
    }
  }
  return out;
}

std::vector<MultiplierOrbit> palfy_classify(std::uint32_t n) {
  require_odd(n);
  const std::uint32_t mod = 3 * n;
  if (std::gcd<std::uint64_t>(mod, euler_phi(mod)) != 1) {
    throw std::invalid_argument("palfy_classify: need gcd(3n, phi(3n)) = 1");
  }
  const auto ctx = constacyclic_context(n);
  const auto units = psi_units(n);
  std::map<std::vector<std::uint32_t>, bool> seen;
  std::vector<MultiplierOrbit> out;
  // Sets come sorted by leader list, so the first unseen member of an orbit is its least element.
  for (const auto& a : all_defining_sets(ctx->cosets, 0, SIZE_MAX, true)) {
    if (seen.contains(a.elements())) continue;
    MultiplierOrbit orbit{a, {}};
    for (auto e : units) {
      auto img = scale(a.elements(), e, mod);
      if (seen.contains(img)) continue;
      seen[img] = true;
      orbit.members.emplace_back(DefiningSet::from_elements(ctx->cosets, img), e);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

CyclicCode embed_as_cyclic(const ConstacyclicCode& c) {
  const auto ctx = cyclic_context(3 * c.n(), 4);
  // Same field and anchor, hence the same root; defining sets carry over verbatim.
  if (ctx->root.element != c.ctx->root.element || !(ctx->ext->spec() == c.ctx->ext->spec())) {
    throw std::logic_error("embed_as_cyclic: root mismatch between the two contexts");
  }
  return build_cyclic(ctx, DefiningSet::from_elements(ctx->cosets, c.defining_set.elements()));
}

}  // namespace codeq
