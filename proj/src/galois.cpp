#include "codeq/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace codeq {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

bool miller_rabin(u64 n, u64 a) {
  if (n % a == 0) return n == a;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    u64 r = 1;
    const u64 block = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(block, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Dense polynomials over GF(p), coefficients ascending.
using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, u64 p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const u64 lead_inv = static_cast<u64>(inverse_mod(static_cast<std::int64_t>(m.back()),
                                                    static_cast<std::int64_t>(p)));
  while (a.size() > dm) {
    const u64 c = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mul_mod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& m, u64 p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Rabin's test.
bool is_irreducible(const Poly& f, u64 p) {
  const u64 m = f.size() - 1;
  if (m == 1) return true;
  const Poly x{0, 1};
  // x^(p^i) mod f for i = 1..m.
  std::vector<Poly> frob(m + 1);
  frob[0] = poly_mod(x, f, p);
  for (u64 i = 1; i <= m; ++i) frob[i] = poly_powmod(frob[i - 1], p, f, p);
  if (poly_sub(frob[m], frob[0], p).size() != 0) return false;
  for (u64 r : prime_factors(m)) {
    Poly g = poly_gcd(f, poly_sub(frob[m / r], frob[0], p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

u64 pow_mod(u64 a, u64 e, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n == a) return true;
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<u64, std::uint32_t> prime_power(u64 q) {
  if (q < 2) return {0, 0};
  const auto f = prime_factors(q);
  if (f.size() != 1) return {0, 0};
  std::uint32_t s = 0;
  while (q > 1) {
    q /= f[0];
    ++s;
  }
  return {f[0], s};
}

u64 multiplicative_order_mod(u64 a, u64 n) {
  if (n == 1) return 1;
  if (std::gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order_mod: gcd(a, n) != 1");
  u64 ord = euler_phi(n);
  for (u64 r : prime_factors(ord)) {
    while (ord % r == 0 && pow_mod(a, ord / r, n) == 1) ord /= r;
  }
  return ord;
}

u64 euler_phi(u64 n) {
  u64 result = n;
  for (u64 p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) throw std::invalid_argument("inverse_mod: not invertible");
  return ((x % m) + m) % m;
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
  const u64 p = spec_.characteristic;
  const u64 m = spec_.degree;
  if (!is_prime(p)) throw std::invalid_argument("GaloisField: characteristic is not prime");
  if (m < 1) throw std::invalid_argument("GaloisField: degree must be >= 1");
  if (spec_.modulus.size() != m + 1 || spec_.modulus.back() != 1) {
    throw std::invalid_argument("GaloisField: modulus must be monic of the field degree");
  }
  Poly f(spec_.modulus.begin(), spec_.modulus.end());
  for (u64 c : f) {
    if (c >= p) throw std::invalid_argument("GaloisField: modulus coefficient out of range");
  }
  if (!is_irreducible(f, p)) throw std::invalid_argument("GaloisField: modulus is reducible");

  order_ = 1;
  place_.push_back(1);
  for (u64 i = 0; i < m; ++i) {
    if (order_ > (u64{1} << 62) / p) throw std::invalid_argument("GaloisField: field too large");
    order_ *= p;
    place_.push_back(order_);
  }
  factors_ = prime_factors(order_ - 1);

  for (Elem a = 1; a < order_; ++a) {
    if (is_primitive(a)) {
      primitive_ = a;
      break;
    }
  }
  if (order_ <= kTableLimit) {
    const u64 g = order_ - 1;
    exp_.resize(2 * g);
    log_.assign(order_, 0);
    Elem x = 1;
    for (u64 i = 0; i < g; ++i) {
      exp_[i] = x;
      exp_[i + g] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, primitive_);
    }
  }
}

Elem GaloisField::add(Elem a, Elem b) const {
  const u64 p = spec_.characteristic;
  if (p == 2) return a ^ b;
  if (spec_.degree == 1) return (a + b) % p;
  Elem r = 0;
  for (u64 i = 0; i < spec_.degree; ++i) {
    const u64 d = (a % p + b % p) % p;
    r += d * place_[i];
    a /= p;
    b /= p;
  }
  return r;
}

Elem GaloisField::neg(Elem a) const {
  const u64 p = spec_.characteristic;
  if (p == 2) return a;
  if (spec_.degree == 1) return (p - a) % p;
  Elem r = 0;
  for (u64 i = 0; i < spec_.degree; ++i) {
    r += ((p - a % p) % p) * place_[i];
    a /= p;
  }
  return r;
}

Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) return exp_[log_[a] + log_[b]];
  return slow_mul(a, b);
}

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("GaloisField::inv: zero has no inverse");
  if (!exp_.empty()) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return slow_pow(a, order_ - 2);
}

Elem GaloisField::pow(Elem a, u64 e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[mul_mod(log_[a], e % (order_ - 1), order_ - 1)];
  return slow_pow(a, e % (order_ - 1));
}

Elem GaloisField::constant(std::int64_t c) const {
  const auto p = static_cast<std::int64_t>(spec_.characteristic);
  return static_cast<Elem>(((c % p) + p) % p);
}

Elem GaloisField::frobenius(Elem a, unsigned times) const {
  for (unsigned i = 0; i < times; ++i) a = pow(a, spec_.characteristic);
  return a;
}

u64 GaloisField::multiplicative_order(Elem a) const {
  if (a == 0) throw std::domain_error("GaloisField::multiplicative_order: zero");
  u64 ord = order_ - 1;
  for (u64 r : factors_) {
    while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
  }
  return ord;
}

bool GaloisField::is_primitive(Elem a) const {
  if (a == 0 || a >= order_) return false;
  for (u64 r : factors_) {
    if (slow_pow(a, (order_ - 1) / r) == 1) return false;
  }
  return true;
}

u64 GaloisField::log(Elem a) const {
  if (exp_.empty()) throw std::logic_error("GaloisField::log: no tables for this field");
  if (a == 0) throw std::domain_error("GaloisField::log: zero");
  return log_[a];
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const {
  std::vector<std::uint32_t> d(spec_.degree);
  for (auto& x : d) {
    x = static_cast<std::uint32_t>(a % spec_.characteristic);
    a /= spec_.characteristic;
  }
  return d;
}

Elem GaloisField::from_digits(std::span<const std::uint32_t> d) const {
  Elem r = 0;
  for (std::size_t i = 0; i < d.size() && i < spec_.degree; ++i) {
    r += (d[i] % spec_.characteristic) * place_[i];
  }
  return r;
}

Elem GaloisField::slow_mul(Elem a, Elem b) const {
  const u64 p = spec_.characteristic;
  const u64 m = spec_.degree;
  if (m == 1) return mul_mod(a, b, p);
  if (p == 2) {
    u128 prod = 0;
    for (u64 i = 0; i < m; ++i) {
      if ((b >> i) & 1) prod ^= static_cast<u128>(a) << i;
    }
    u128 mod = 0;
    for (u64 i = 0; i <= m; ++i) mod |= static_cast<u128>(spec_.modulus[i] & 1) << i;
    for (int i = static_cast<int>(2 * m - 2); i >= static_cast<int>(m); --i) {
      if ((prod >> i) & 1) prod ^= mod << (i - m);
    }
    return static_cast<Elem>(prod);
  }
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<u64> prod(2 * m - 1, 0);
  for (u64 i = 0; i < m; ++i) {
    if (da[i] == 0) continue;
    for (u64 j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + u64{da[i]} * db[j]) % p;
  }
  for (int i = static_cast<int>(2 * m - 2); i >= static_cast<int>(m); --i) {
    const u64 c = prod[i];
    if (c == 0) continue;
    for (u64 j = 0; j <= m; ++j) {
      prod[i - m + j] = (prod[i - m + j] + (p - c) * spec_.modulus[j]) % p;
    }
  }
  Elem r = 0;
  for (u64 i = 0; i < m; ++i) r += prod[i] * place_[i];
  return r;
}

Elem GaloisField::slow_pow(Elem a, u64 e) const {
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = slow_mul(r, a);
    a = slow_mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldPtr build_field(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw std::invalid_argument("build_field: " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("build_field: degree must be >= 1");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, m}); it != cache.end()) return it->second;

  FieldSpec spec{p, m, {}};
  std::vector<std::uint32_t> low(m, 0);
  for (;;) {
    Poly f(low.begin(), low.end());
    f.push_back(1);
    if (is_irreducible(f, p)) {
      spec.modulus.assign(low.begin(), low.end());
      spec.modulus.push_back(1);
      break;
    }
    // Next lower-coefficient vector, constant term varying fastest.
    std::size_t i = 0;
    while (i < m && ++low[i] == p) low[i++] = 0;
    if (i == m) throw std::logic_error("build_field: no irreducible polynomial found");
  }
  auto field = std::make_shared<const GaloisField>(std::move(spec));
  cache.emplace(std::make_pair(p, m), field);
  return field;
}

FieldPtr splitting_field(u64 q, u64 n) {
  const auto [p, s] = prime_power(q);
  if (p == 0) throw std::invalid_argument("splitting_field: q is not a prime power");
  if (n == 0) throw std::invalid_argument("splitting_field: n must be positive");
  if (std::gcd(n, q) != 1) throw std::invalid_argument("splitting_field: gcd(n, q) != 1");
  const u64 m = multiplicative_order_mod(q % n, n);
  return build_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(s * m));
}

RootOfUnity primitive_nth_root(const GaloisField& field, u64 n) {
  if (n == 0 || (field.order() - 1) % n != 0) {
    throw std::invalid_argument("primitive_nth_root: n does not divide the multiplicative group order");
  }
  return {field.pow(field.primitive_element(), (field.order() - 1) / n), n};
}

RootOfUnity anchored_root(const GaloisField& field, u64 n, u64 anchor_power, Elem anchor_value) {
  const RootOfUnity base = primitive_nth_root(field, n);
  for (u64 j = 1; j <= std::max<u64>(n, 1); ++j) {
    if (std::gcd(j, n) != 1) continue;
    const Elem r = field.pow(base.element, j);
    if (field.pow(r, anchor_power) == anchor_value) return {r, n};
  }
  throw std::domain_error("anchored_root: no primitive root satisfies the anchor");
}

SubfieldEmbedding::SubfieldEmbedding(FieldPtr small, FieldPtr large)
    : small_(std::move(small)), large_(std::move(large)) {
  if (small_->characteristic() != large_->characteristic() ||
      large_->degree() % small_->degree() != 0) {
    throw std::invalid_argument("SubfieldEmbedding: not a subfield");
  }
  const GaloisField& L = *large_;
  const auto& mod = small_->spec().modulus;
  Elem root = 0;
  if (small_->degree() > 1) {
    bool found = false;
    const u64 step = (L.order() - 1) / (small_->order() - 1);
    const Elem h = L.pow(L.primitive_element(), step);
    Elem y = 1;
    for (u64 k = 0; k + 1 < small_->order(); ++k, y = L.mul(y, h)) {
      Elem v = 0;
      for (std::size_t i = mod.size(); i-- > 0;) v = L.add(L.mul(v, y), L.constant(mod[i]));
      if (v == 0 && (!found || y < root)) {
        root = y;
        found = true;
      }
    }
    if (!found) throw std::logic_error("SubfieldEmbedding: modulus has no root");
  }
  image_.resize(small_->order());
  for (Elem a = 0; a < small_->order(); ++a) {
    const auto d = small_->digits(a);
    Elem v = 0;
    Elem rp = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
      v = L.add(v, L.mul(L.constant(d[i]), rp));
      rp = L.mul(rp, root);
    }
    image_[a] = v;
    preimage_.emplace(v, a);
  }
}

Elem SubfieldEmbedding::down(Elem a) const {
  auto it = preimage_.find(a);
  if (it == preimage_.end()) throw std::domain_error("SubfieldEmbedding::down: element outside subfield");
  return it->second;
}

}  // namespace codeq
