#include "codeq/cyclic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace codeq {

namespace {

std::uint32_t mod_u32(std::int64_t a, std::uint32_t n) {
  const auto r = a % static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(r < 0 ? r + n : r);
}

bool is_constacyclic(const CodeContext& ctx) { return ctx.modulus != ctx.n; }

/// Cosets eligible as zeros: all of them for cyclic codes, those congruent to
/// 1 mod 3 for the omega-constacyclic case.
bool eligible(const CodeContext& ctx, std::uint32_t leader) {
  return !is_constacyclic(ctx) || leader % 3 == 1;
}

/// Evaluates the GF(q) polynomial `c` (ascending) at `x` in the extension.
Elem evaluate(const CodeContext& ctx, std::span<const std::uint32_t> c, Elem x) {
  const GaloisField& k = *ctx.ext;
  Elem acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = k.mul(acc, x);
    if (c[i]) acc = k.add(acc, ctx.embedding->up(c[i]));
  }
  return acc;
}

DefiningSet set_of(const CodeContext& ctx, std::vector<std::uint32_t> elems) {
  return DefiningSet::from_elements(ctx.cosets, std::move(elems));
}

std::optional<DefiningSet> try_set(const CodeContext& ctx, std::vector<std::uint32_t> elems) {
  std::sort(elems.begin(), elems.end());
  if (!ctx.cosets.is_union_of_cosets(elems)) return std::nullopt;
  for (auto x : elems) {
    if (!eligible(ctx, x)) return std::nullopt;
  }
  return set_of(ctx, std::move(elems));
}

std::vector<std::uint32_t> coset_union(const CodeContext& ctx, std::initializer_list<std::uint32_t> reps,
                                       std::vector<std::uint32_t> base = {}) {
  for (auto r : reps) {
    const auto& c = ctx.cosets.coset_containing(r);
    base.insert(base.end(), c.begin(), c.end());
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

struct ContextKey {
  std::uint32_t n;
  std::uint64_t q;
  std::uint32_t modulus;
  int choice;
  auto operator<=>(const ContextKey&) const = default;
};

}  // namespace

ContextPtr code_context(std::uint32_t n, std::uint64_t q, std::uint32_t modulus, RootChoice choice) {
  static std::mutex mu;
  static std::map<ContextKey, ContextPtr> cache;
  const ContextKey key{n, q, modulus, static_cast<int>(choice)};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  if (n == 0 || modulus == 0 || modulus % n != 0) throw std::invalid_argument("code_context: bad length or modulus");
  const auto [p, s] = prime_power(q);
  if (p == 0) throw std::invalid_argument("code_context: q is not a prime power");
  if (std::gcd<std::uint64_t>(modulus, q) != 1) throw std::invalid_argument("code_context: gcd(n, q) != 1");

  auto ctx = std::make_shared<CodeContext>();
  ctx->n = n;
  ctx->q = q;
  ctx->modulus = modulus;
  ctx->base = build_field(static_cast<std::uint32_t>(p), s);
  ctx->ext = splitting_field(q, modulus);
  ctx->embedding = std::make_shared<SubfieldEmbedding>(ctx->base, ctx->ext);
  const bool can_anchor = q == 4 && modulus % 3 == 0;
  bool anchor = choice == RootChoice::anchored || (choice == RootChoice::automatic && can_anchor);
  if (anchor && !can_anchor) throw std::invalid_argument("code_context: anchoring needs q = 4 and 3 | n");
  if (anchor) {
    ctx->root = anchored_root(*ctx->ext, modulus, modulus / 3, ctx->embedding->up(2));
  } else {
    ctx->root = primitive_nth_root(*ctx->ext, modulus);
  }
  ctx->anchored = anchor;
  ctx->cosets = CosetTable(modulus, q);

  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(key, std::move(ctx));
  return it->second;
}

ContextPtr cyclic_context(std::uint32_t n, std::uint64_t q, RootChoice choice) {
  return code_context(n, q, n, choice);
}

std::vector<std::uint32_t> generator_polynomial(const CodeContext& ctx, const DefiningSet& a) {
  if (a.n() != ctx.modulus) throw std::invalid_argument("generator_polynomial: defining set modulus mismatch");
  const GaloisField& k = *ctx.ext;
  std::vector<Elem> g{1};
  for (auto i : a.elements()) {
    if (!eligible(ctx, i)) throw std::invalid_argument("generator_polynomial: element not admissible for the family");
    const Elem r = k.neg(k.pow(ctx.root.element, i));
    g.push_back(0);
    for (std::size_t j = g.size() - 1; j > 0; --j) g[j] = k.add(g[j - 1], k.mul(g[j], r));
    g[0] = k.mul(g[0], r);
  }
  std::vector<std::uint32_t> out(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) out[j] = static_cast<std::uint32_t>(ctx.embedding->down(g[j]));
  return out;
}

LinearCode code_from_generator(const FieldPtr& base, const std::vector<std::uint32_t>& g, std::size_t n) {
  if (g.empty() || g.size() > n + 1) throw std::invalid_argument("code_from_generator: bad degree");
  const std::size_t deg = g.size() - 1;
  const std::size_t k = n - deg;
  if (k == 0) return LinearCode::zero_code(base, n);
  Matrix rows(k, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= deg; ++j) rows(i, i + j) = g[j];
  }
  return LinearCode::from_rows(base, rows);
}

CyclicCode build_cyclic(const ContextPtr& ctx, const DefiningSet& a) {
  CyclicCode c;
  c.ctx = ctx;
  c.defining_set = a;
  c.generator_poly = generator_polynomial(*ctx, a);
  c.code = code_from_generator(ctx->base, c.generator_poly, ctx->n);
  return c;
}

CyclicCode build_cyclic(std::uint32_t n, std::uint64_t q, const DefiningSet& a) {
  return build_cyclic(cyclic_context(n, q), a);
}

std::optional<DefiningSet> cyclic_defining_set(const ContextPtr& ctx, const LinearCode& c) {
  if (c.length() != ctx->n || c.field()->order() != ctx->q) return std::nullopt;
  const GaloisField& k = *ctx->ext;
  std::vector<std::uint32_t> zeros;
  // Zeros of GF(q) polynomials are closed under Frobenius, so one test per coset suffices.
  for (const auto& coset : ctx->cosets.cosets()) {
    if (!eligible(*ctx, coset.front())) continue;
    const Elem x = k.pow(ctx->root.element, coset.front());
    bool all_zero = true;
    for (std::size_t r = 0; r < c.dimension() && all_zero; ++r) all_zero = evaluate(*ctx, c.generator().row(r), x) == 0;
    if (all_zero) zeros.insert(zeros.end(), coset.begin(), coset.end());
  }
  // C sits inside the code with these zeros; equality is a dimension count.
  if (c.dimension() + zeros.size() != ctx->n) return std::nullopt;
  return set_of(*ctx, std::move(zeros));
}

Matrix generalized_parity_check(const CodeContext& ctx, const DefiningSet& a) {
  const GaloisField& k = *ctx.ext;
  Matrix h(a.size(), ctx.n);
  std::size_t r = 0;
  for (auto s : a.elements()) {
    const Elem step = k.pow(ctx.root.element, s);
    Elem x = 1;
    for (std::size_t j = 0; j < ctx.n; ++j) {
      h(r, j) = static_cast<std::uint32_t>(x);
      x = k.mul(x, step);
    }
    ++r;
  }
  return h;
}

// ---- coordinate transforms ----

MonomialTransform sigma_transform(std::uint32_t n, const GaloisField& f) {
  if (n % 8 != 0) throw std::invalid_argument("sigma_transform: 8 must divide n");
  if (f.characteristic() == 2) throw std::invalid_argument("sigma_transform: odd characteristic required");
  MonomialTransform t = MonomialTransform::identity(n);
  const Elem minus_one = f.neg(1);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t r = i % 4;
    t.perm[i] = (r == 0 || r == 1) ? i : (i + n / 2) % n;
    if (r == 1 || r == 2) t.diag[i] = static_cast<std::uint32_t>(minus_one);
  }
  return t;
}

MonomialTransform block_sigma_transform(std::uint32_t n, std::uint32_t block, const GaloisField& f) {
  if (block == 0 || n % block != 0) throw std::invalid_argument("block_sigma_transform: block must divide n");
  return block_repeat(sigma_transform(block, f), n / block);
}

MonomialTransform gamma_transform(std::uint32_t n) {
  if (n % 8 != 0) throw std::invalid_argument("gamma_transform: 8 must divide n");
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = i % 2 == 0 ? i : (i + n - 2) % n;
  return MonomialTransform::permutation(std::move(p));
}

MonomialTransform chi_transform(std::uint32_t n) {
  if (n % 9 != 0) throw std::invalid_argument("chi_transform: 9 must divide n");
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    switch (i % 9) {
      case 0: case 4: case 5: p[i] = (i + 3) % n; break;
      case 3: case 7: case 8: p[i] = (i + n - 3) % n; break;
      default: p[i] = i;
    }
  }
  return MonomialTransform::permutation(std::move(p));
}

MonomialTransform index_permutation(const IndexMap& map) {
  std::vector<std::uint32_t> p(map.modulus);
  for (std::uint32_t i = 0; i < map.modulus; ++i) p[i] = map(i);
  return MonomialTransform::permutation(std::move(p));
}

MonomialTransform multiplier_transform(std::uint32_t n, std::int64_t a) {
  const auto inv = inverse_mod(static_cast<std::int64_t>(mod_u32(a, n)), n);
  if (inv < 0) throw std::invalid_argument("multiplier_transform: a is not a unit mod n");
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(std::uint64_t(inv) * i % n);
  return MonomialTransform::permutation(std::move(p));
}

MonomialTransform psi_transform(std::uint32_t n, std::uint32_t e, const GaloisField& f4) {
  if (f4.order() != 4) throw std::invalid_argument("psi_transform: field must be GF(4)");
  if (std::gcd<std::uint64_t>(e, 3ull * n) != 1) throw std::invalid_argument("psi_transform: gcd(e, 3n) != 1");
  MonomialTransform t = MonomialTransform::identity(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t ei = std::uint64_t{e} * i;
    t.perm[i] = static_cast<std::uint32_t>(ei % n);
    // x^{ei} = omega^{floor(ei / n)} x^{ei mod n} modulo x^n - omega.
    t.diag[t.perm[i]] = static_cast<std::uint32_t>(f4.pow(2, (ei / n) % 3));
  }
  return t;
}

MonomialTransform block_repeat(const MonomialTransform& m, std::uint32_t copies) {
  const auto b = static_cast<std::uint32_t>(m.size());
  MonomialTransform t = MonomialTransform::identity(std::size_t{b} * copies);
  for (std::uint32_t c = 0; c < copies; ++c) {
    for (std::uint32_t i = 0; i < b; ++i) {
      t.perm[c * b + i] = c * b + m.perm[i];
      t.diag[c * b + i] = m.diag[i];
    }
  }
  return t;
}

// ---- certificates ----

std::string to_string(CertificateStep::Kind k) {
  using K = CertificateStep::Kind;
  switch (k) {
    case K::identity: return "identity";
    case K::multiplier: return "multiplier";
    case K::generalized_multiplier: return "generalized_multiplier";
    case K::shift: return "shift";
    case K::affine: return "affine";
    case K::sigma: return "sigma";
    case K::block_sigma: return "block_sigma";
    case K::gamma: return "gamma";
    case K::chi: return "chi";
    case K::psi: return "psi";
    case K::explicit_monomial: return "explicit_monomial";
    case K::same_parameters: return "same_parameters";
  }
  return "unknown";
}

bool Certificate::verified() const {
  return !steps.empty() && std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.verified; });
}

std::string Certificate::kind() const {
  if (steps.size() == 1) return to_string(steps.front().kind);
  return steps.empty() ? "none" : "composite";
}

bool Certificate::has_transform() const {
  return std::all_of(steps.begin(), steps.end(), [](const auto& s) { return s.transform.has_value(); });
}

MonomialTransform Certificate::transform(const GaloisField& f, std::size_t n) const {
  MonomialTransform t = MonomialTransform::identity(n);
  for (const auto& s : steps) {
    if (!s.transform) throw std::logic_error("Certificate::transform: step without coordinate witness");
    t = t.then(f, *s.transform);
  }
  return t;
}

bool Certificate::parameters_only() const {
  return std::any_of(steps.begin(), steps.end(),
                     [](const auto& s) { return s.kind == CertificateStep::Kind::same_parameters; });
}

namespace {

bool wd_enumerable(const LinearCode& c) {
  const std::size_t k = std::min(c.dimension(), c.length() - c.dimension());
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    v *= c.field()->order();
    if (v > (std::uint64_t{1} << 20)) return false;
  }
  return true;
}

WeightDistribution small_side_wd(const LinearCode& c) {
  return 2 * c.dimension() <= c.length() ? weight_distribution(c) : weight_distribution(euclidean_dual(c));
}

/// Multiplier part of an index map acting on the context's family.
MonomialTransform scale_transform(const CodeContext& ctx, std::uint32_t e) {
  if (!is_constacyclic(ctx)) return multiplier_transform(ctx.n, e);
  // psi_{e'} sends A to e'^{-1} A, so e' = e^{-1}.
  const auto inv = inverse_mod(e, ctx.modulus);
  return psi_transform(ctx.n, static_cast<std::uint32_t>(inv), *ctx.base);
}

bool generator_identity(const CodeContext& ctx, const std::vector<std::uint32_t>& g1,
                        const std::vector<std::uint32_t>& g2, std::uint32_t b, std::size_t set_size) {
  const GaloisField& k = *ctx.ext;
  if (g1.size() != g2.size()) return false;
  const Elem lambda = k.pow(ctx.root.element, std::uint64_t{b} * set_size % ctx.modulus);
  if (!ctx.embedding->in_subfield(lambda)) return false;
  const Elem step = k.inv(k.pow(ctx.root.element, b));
  Elem scale = lambda;
  for (std::size_t j = 0; j < g1.size(); ++j) {
    const Elem lhs = ctx.embedding->up(g2[j]);
    const Elem rhs = g1[j] ? k.mul(scale, ctx.embedding->up(g1[j])) : 0;
    if (lhs != rhs) return false;
    scale = k.mul(scale, step);
  }
  return true;
}

bool verify_index_step(const ContextPtr& ctx, CertificateStep& step) {
  if (step.maps.size() != 1) return false;
  const IndexMap& m = step.maps.front();
  if (m.modulus != ctx->modulus) return false;
  const std::uint32_t e = (m.kind == IndexMap::Kind::shift) ? 1 : m.e;
  const std::uint32_t b = (m.kind == IndexMap::Kind::multiplier) ? 0 : m.b;
  if (apply_map(m, step.from) != step.to.elements()) return false;

  const CyclicCode c1 = build_cyclic(ctx, step.from);
  std::vector<std::uint32_t> mid_elems = apply_map(IndexMap::multiplier(ctx->modulus, e), step.from);
  const DefiningSet mid = set_of(*ctx, mid_elems);
  const CyclicCode cm = build_cyclic(ctx, mid);
  const MonomialTransform t = scale_transform(*ctx, e);
  if (apply_monomial(c1.code, t) != cm.code) return false;
  std::string how = "code_equality";
  if (b == 0) {
    step.transform = t;
  } else {
    const bool div = is_constacyclic(*ctx) ? shift_divisibility_constacyclic(ctx->n, step.from.size(), b)
                                           : shift_divisibility_cyclic(ctx->n, ctx->q, step.from.size(), b);
    if (!div) return false;
    const CyclicCode c2 = build_cyclic(ctx, step.to);
    if (!generator_identity(*ctx, cm.generator_poly, c2.generator_poly, b, step.from.size())) return false;
    how += "+generator_identity+divisibility";
    if (wd_enumerable(c1.code)) {
      if (small_side_wd(c1.code) != small_side_wd(c2.code)) return false;
      how += "+weight_distribution";
    }
  }
  step.verification = how;
  return true;
}

}  // namespace

bool verify_step(const ContextPtr& ctx, CertificateStep& step) {
  using K = CertificateStep::Kind;
  step.verified = false;
  if (step.kind == K::identity) {
    step.verified = step.from == step.to;
    step.verification = "equal defining sets";
    if (step.verified) step.transform = MonomialTransform::identity(ctx->n);
    return step.verified;
  }
  if (step.kind == K::same_parameters) {
    step.verified = verify_index_step(ctx, step);
    step.transform.reset();
    return step.verified;
  }
  if (step.transform) {
    const CyclicCode c1 = build_cyclic(ctx, step.from);
    const CyclicCode c2 = build_cyclic(ctx, step.to);
    step.verified = apply_monomial(c1.code, *step.transform) == c2.code;
    step.verification = "code_equality";
    return step.verified;
  }
  if (step.kind == K::multiplier || step.kind == K::shift || step.kind == K::affine || step.kind == K::psi) {
    step.verified = verify_index_step(ctx, step);
  }
  return step.verified;
}

// ---- neighbours and certification ----

namespace {

std::vector<std::uint32_t> units_mod(std::uint32_t n) {
  std::vector<std::uint32_t> u;
  for (std::uint32_t a = 1; a < n || (n == 1 && a == 1); ++a) {
    if (std::gcd(a, n) == 1) u.push_back(a);
    if (n == 1) break;
  }
  return u;
}

struct StructuralMove {
  CertificateStep::Kind kind;
  MonomialTransform t;
  bool inverse;
};

std::vector<StructuralMove> structural_moves(const CodeContext& ctx) {
  using K = CertificateStep::Kind;
  std::vector<StructuralMove> out;
  const std::uint32_t n = ctx.n;
  const GaloisField& f = *ctx.base;
  if (n % 8 == 0 && f.characteristic() != 2) {
    out.push_back({K::sigma, sigma_transform(n, f), false});
    for (std::uint32_t b = 8; b < n; b += 8) {
      if (n % b == 0) out.push_back({K::block_sigma, block_sigma_transform(n, b, f), false});
    }
  }
  if (n % 8 == 0) {
    const auto g = gamma_transform(n);
    out.push_back({K::gamma, g, false});
    out.push_back({K::gamma, g.inverse(f), true});
  }
  if (n % 9 == 0 && ctx.q == 4 && ctx.anchored) out.push_back({K::chi, chi_transform(n), false});
  return out;
}

}  // namespace

std::vector<Neighbour> cyclic_neighbours(const ContextPtr& ctx, const DefiningSet& a, const MapKinds& kinds) {
  using K = CertificateStep::Kind;
  if (is_constacyclic(*ctx)) throw std::invalid_argument("cyclic_neighbours: cyclic context required");
  const std::uint32_t n = ctx->n;
  std::vector<Neighbour> out;
  std::set<std::vector<std::uint32_t>> seen{a.elements()};
  auto add = [&](std::vector<std::uint32_t> elems, CertificateStep step) {
    std::sort(elems.begin(), elems.end());
    if (seen.contains(elems)) return;
    auto ds = try_set(*ctx, elems);
    if (!ds) return;
    seen.insert(elems);
    step.from = a;
    step.to = *ds;
    out.push_back({*ds, std::move(step)});
  };

  const auto units = units_mod(n);
  if (kinds.multiplier) {
    for (auto e : units) {
      CertificateStep s;
      s.kind = K::multiplier;
      s.maps = {IndexMap::multiplier(n, e)};
      s.transform = multiplier_transform(n, e);
      auto img = apply_map(s.maps.front(), a);
      add(std::move(img), std::move(s));
    }
  }
  if (kinds.affine && !a.empty()) {
    const std::uint64_t prod = a.size() * (ctx->q - 1);
    const auto b0 = static_cast<std::uint32_t>(n / std::gcd<std::uint64_t>(n, prod));
    for (std::uint32_t b = b0; b < n; b += b0) {
      for (auto e : units) {
        CertificateStep s;
        s.kind = e == 1 ? K::shift : K::affine;
        s.maps = {e == 1 ? IndexMap::shift(n, b) : IndexMap::affine(n, e, b)};
        auto img = apply_map(s.maps.front(), a);
        add(std::move(img), std::move(s));
      }
    }
  }

  std::optional<CyclicCode> code;
  auto image = [&](const MonomialTransform& t, CertificateStep step) {
    if (!code) code = build_cyclic(ctx, a);
    const LinearCode img = apply_monomial(code->code, t);
    auto ds = cyclic_defining_set(ctx, img);
    if (!ds || seen.contains(ds->elements())) return;
    seen.insert(ds->elements());
    step.from = a;
    step.to = *ds;
    step.transform = t;
    step.verified = true;
    step.verification = "code_equality";
    out.push_back({*ds, std::move(step)});
  };

  if (kinds.generalized_multiplier) {
    const auto [p, m] = prime_power(n);
    if (p > 2 && m >= 2) {
      std::uint32_t pk = 1;
      for (std::uint32_t k = 1; k < m; ++k) {
        pk *= static_cast<std::uint32_t>(p);
        for (std::uint32_t d = 2; d < pk; ++d) {
          if (std::gcd(d, pk) != 1) continue;
          CertificateStep s;
          s.kind = K::generalized_multiplier;
          s.maps = {IndexMap::generalized_multiplier(n, d, k)};
          auto t = index_permutation(s.maps.front());
          image(t, std::move(s));
        }
      }
    }
  }
  if (kinds.structural) {
    for (auto& mv : structural_moves(*ctx)) {
      CertificateStep s;
      s.kind = mv.kind;
      s.inverse = mv.inverse;
      image(mv.t, std::move(s));
    }
  }
  return out;
}

std::vector<Certificate> certify_equivalence(const CyclicCode& c1, const CyclicCode& c2, const CertifyOptions& opts) {
  using K = CertificateStep::Kind;
  std::vector<Certificate> out;
  const ContextPtr& ctx = c1.ctx;
  if (c1.ctx != c2.ctx) throw std::invalid_argument("certify_equivalence: codes from different contexts");
  if (c1.k() != c2.k()) return out;
  if (c1.defining_set == c2.defining_set) {
    CertificateStep s;
    s.kind = K::identity;
    s.from = c1.defining_set;
    s.to = c2.defining_set;
    verify_step(ctx, s);
    out.push_back({{std::move(s)}});
    return out;
  }

  // Single steps, one certificate per kind.
  std::set<K> kinds_found;
  for (auto& nb : cyclic_neighbours(ctx, c1.defining_set, opts.kinds)) {
    if (nb.to != c2.defining_set) continue;
    // The neighbour list keeps only the first map per image; other kinds that
    // hit the same target are probed below.
    if (kinds_found.contains(nb.step.kind)) continue;
    if (!nb.step.verified && !verify_step(ctx, nb.step)) continue;
    kinds_found.insert(nb.step.kind);
    out.push_back({{nb.step}});
  }
  // Structural maps are exact and cheap: report them even when a multiplier
  // already links the pair.
  if (opts.kinds.structural) {
    for (auto& mv : structural_moves(*ctx)) {
      if (kinds_found.contains(mv.kind)) continue;
      if (apply_monomial(c1.code, mv.t) != c2.code) continue;
      CertificateStep s;
      s.kind = mv.kind;
      s.inverse = mv.inverse;
      s.from = c1.defining_set;
      s.to = c2.defining_set;
      s.transform = mv.t;
      s.verified = true;
      s.verification = "code_equality";
      kinds_found.insert(mv.kind);
      out.push_back({{std::move(s)}});
    }
  }
  if (!out.empty()) return out;

  // Breadth-first compositions.
  if (opts.max_depth >= 2) {
    constexpr std::size_t kMaxNodes = 4096;
    std::map<std::vector<std::uint32_t>, std::pair<std::vector<std::uint32_t>, CertificateStep>> parent;
    std::deque<std::pair<DefiningSet, std::uint32_t>> queue{{c1.defining_set, 0}};
    parent.emplace(c1.defining_set.elements(), std::make_pair(std::vector<std::uint32_t>{}, CertificateStep{}));
    bool found = false;
    while (!queue.empty() && !found && parent.size() < kMaxNodes) {
      auto [cur, depth] = queue.front();
      queue.pop_front();
      if (depth >= opts.max_depth) continue;
      for (auto& nb : cyclic_neighbours(ctx, cur, opts.kinds)) {
        if (parent.contains(nb.to.elements())) continue;
        parent.emplace(nb.to.elements(), std::make_pair(cur.elements(), nb.step));
        if (nb.to == c2.defining_set) {
          found = true;
          break;
        }
        queue.emplace_back(nb.to, depth + 1);
      }
    }
    if (found) {
      Certificate cert;
      for (auto at = c2.defining_set.elements(); at != c1.defining_set.elements();) {
        auto& [prev, step] = parent.at(at);
        cert.steps.push_back(step);
        at = prev;
      }
      std::reverse(cert.steps.begin(), cert.steps.end());
      bool ok = true;
      for (auto& s : cert.steps) ok = ok && (s.verified || verify_step(ctx, s));
      if (ok) {
        out.push_back(std::move(cert));
        return out;
      }
    }
  }

  if (opts.brute_force && ctx->n <= opts.brute_force_max_n) {
    const auto r = brute_force_equivalence(c1.code, c2.code, EquivalenceMode::monomial, opts.brute_force_budget);
    if (r.status == EquivalenceResult::Status::equivalent && r.witness) {
      CertificateStep s;
      s.kind = K::explicit_monomial;
      s.from = c1.defining_set;
      s.to = c2.defining_set;
      s.transform = r.witness;
      verify_step(ctx, s);
      if (s.verified) out.push_back({{std::move(s)}});
    }
  }
  return out;
}

// ---- constructions ----

namespace {

TheoremInstance structural_instance(const ContextPtr& ctx, std::vector<std::uint32_t> e1,
                                    std::vector<std::uint32_t> e2, CertificateStep::Kind kind,
                                    const MonomialTransform& t, const GaloisField& f) {
  TheoremInstance inst;
  inst.a1 = set_of(*ctx, std::move(e1));
  inst.a2 = set_of(*ctx, std::move(e2));
  const CyclicCode c1 = build_cyclic(ctx, inst.a1);
  const CyclicCode c2 = build_cyclic(ctx, inst.a2);
  CertificateStep s;
  s.kind = kind;
  s.from = inst.a1;
  s.to = inst.a2;
  s.verification = "code_equality";
  if (apply_monomial(c1.code, t) == c2.code) {
    s.transform = t;
    s.verified = true;
  } else {
    const auto ti = t.inverse(f);
    s.transform = ti;
    s.inverse = true;
    s.verified = apply_monomial(c1.code, ti) == c2.code;
  }
  inst.certificate.steps.push_back(std::move(s));
  return inst;
}

}  // namespace

TheoremInstance theorem_monomial_action(const ContextPtr& ctx, const DefiningSet& a) {
  const std::uint32_t n = ctx->n;
  if (n % 8 != 0 || ctx->q % 2 == 0) throw std::invalid_argument("theorem_monomial_action: need 8 | n and odd q");
  for (auto x : a.elements()) {
    if (x % 2 == 0) throw std::invalid_argument("theorem_monomial_action: A must consist of odd elements");
  }
  std::vector<std::uint32_t> e1 = a.elements();
  e1.push_back(n / 4);
  e1.push_back(3 * n / 4);
  std::vector<std::uint32_t> e2{0, n / 2};
  for (auto x : a.elements()) e2.push_back((x + n / 2) % n);
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  return structural_instance(ctx, e1, e2, CertificateStep::Kind::sigma, sigma_transform(n, *ctx->base), *ctx->base);
}

TheoremInstance theorem_new_permutation(const ContextPtr& ctx, const DefiningSet& a) {
  const std::uint32_t n = ctx->n;
  if (n % 8 != 0 || ctx->q % 4 != 1) throw std::invalid_argument("theorem_new_permutation: need 8 | n and q = 1 mod 4");
  if (a.contains(n / 4) || a.contains(3 * n / 4)) {
    throw std::invalid_argument("theorem_new_permutation: A must avoid n/4 and 3n/4");
  }
  for (auto x : a.elements()) {
    if (x != 0 && x != n / 2 && !a.contains((x + n / 2) % n)) {
      throw std::invalid_argument("theorem_new_permutation: A must be closed under +n/2 outside {0, n/2}");
    }
  }
  auto e1 = a.elements();
  auto e2 = a.elements();
  e1.push_back(n / 4);
  e2.push_back(3 * n / 4);
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  return structural_instance(ctx, e1, e2, CertificateStep::Kind::gamma, gamma_transform(n), *ctx->base);
}

TheoremInstance theorem_F4_permutation(const ContextPtr& ctx, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& e_list) {
  const std::uint32_t n = ctx->n;
  if (ctx->q != 4 || n % 27 != 0 || !ctx->anchored) {
    throw std::invalid_argument("theorem_F4_permutation: need q = 4, 27 | n and an anchored root");
  }
  std::vector<std::uint32_t> common;
  for (auto x : b) {
    if (x % (n / 3) != 0) throw std::invalid_argument("theorem_F4_permutation: B must lie in {0, n/3, 2n/3}");
    common.push_back(x % n);
  }
  for (auto e : e_list) {
    const auto ae = build_Ae(n, e);
    common.insert(common.end(), ae.elements().begin(), ae.elements().end());
  }
  auto e1 = coset_union(*ctx, {n / 9}, common);
  auto e2 = coset_union(*ctx, {2 * n / 9}, common);
  return structural_instance(ctx, e1, e2, CertificateStep::Kind::chi, chi_transform(n), *ctx->base);
}

std::vector<DefiningSet> monomial_action_admissible(const ContextPtr& ctx) {
  std::vector<DefiningSet> out;
  for (auto& d : all_defining_sets(ctx->cosets)) {
    if (std::all_of(d.elements().begin(), d.elements().end(), [](auto x) { return x % 2 == 1; })) out.push_back(d);
  }
  return out;
}

std::vector<DefiningSet> new_permutation_admissible(const ContextPtr& ctx) {
  const std::uint32_t n = ctx->n;
  std::vector<DefiningSet> out;
  for (auto& d : all_defining_sets(ctx->cosets)) {
    if (d.contains(n / 4) || d.contains(3 * n / 4)) continue;
    bool ok = true;
    for (auto x : d.elements()) {
      if (x != 0 && x != n / 2 && !d.contains((x + n / 2) % n)) ok = false;
    }
    if (ok) out.push_back(d);
  }
  return out;
}

CyclicCode extend_length(const CyclicCode& c, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("extend_length: m must be positive");
  const auto ctx = cyclic_context(c.n() * m, c.ctx->q);
  const LinearCode code = code_from_generator(ctx->base, c.generator_poly, ctx->n);
  auto ds = cyclic_defining_set(ctx, code);
  if (!ds) throw std::logic_error("extend_length: extended code is not cyclic");
  return build_cyclic(ctx, *ds);
}

std::optional<MonomialTransform> extend_equivalence(const CyclicCode& c1, const CyclicCode& c2,
                                                    const MonomialTransform& t, std::uint32_t m) {
  if (apply_monomial(c1.code, t) != c2.code) return std::nullopt;
  const CyclicCode e1 = extend_length(c1, m);
  const CyclicCode e2 = extend_length(c2, m);
  auto block = block_repeat(t, m);
  if (apply_monomial(e1.code, block) != e2.code) return std::nullopt;
  return block;
}

std::vector<DefiningSet> all_defining_sets(const CosetTable& table, std::size_t k_min, std::size_t k_max,
                                           bool constacyclic) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!constacyclic || table.leaders()[i] % 3 == 1) idx.push_back(i);
  }
  if (idx.size() > 26) throw std::length_error("all_defining_sets: too many cosets to enumerate");
  const std::size_t n = constacyclic ? table.n() / 3 : table.n();
  std::vector<DefiningSet> out;
  const std::uint64_t total = std::uint64_t{1} << idx.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::size_t size = 0;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (mask >> b & 1) size += table.cosets()[idx[b]].size();
    }
    const std::size_t k = n - size;
    if (k < k_min || k > k_max) continue;
    std::vector<std::uint32_t> elems;
    elems.reserve(size);
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (mask >> b & 1) elems.insert(elems.end(), table.cosets()[idx[b]].begin(), table.cosets()[idx[b]].end());
    }
    out.push_back(DefiningSet::from_elements(table, std::move(elems)));
  }
  std::sort(out.begin(), out.end(), [&](const DefiningSet& x, const DefiningSet& y) {
    return x.leaders(table) < y.leaders(table);
  });
  return out;
}

}  // namespace codeq
