#include "codeq/cosets.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "codeq/galois.hpp"

namespace codeq {

namespace {

std::uint32_t reduce(std::int64_t x, std::uint32_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(((x % m) + m) % m);
}

}  // namespace

CosetTable::CosetTable(std::uint32_t n, std::uint64_t q) : n_(n), q_(q) {
  if (n == 0) throw std::invalid_argument("coset_table: n must be positive");
  if (q < 2) throw std::invalid_argument("coset_table: q must be at least 2");
  if (std::gcd<std::uint64_t>(n, q) != 1) throw std::invalid_argument("coset_table: gcd(n, q) != 1");
  coset_of_.assign(n, UINT32_MAX);
  const std::uint64_t qn = q % n;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (coset_of_[a] != UINT32_MAX) continue;
    std::vector<std::uint32_t> c;
    std::uint64_t x = a;
    do {
      c.push_back(static_cast<std::uint32_t>(x));
      coset_of_[x] = static_cast<std::uint32_t>(cosets_.size());
      x = x * qn % n;
    } while (x != a);
    std::sort(c.begin(), c.end());
    leaders_.push_back(a);
    cosets_.push_back(std::move(c));
  }
}

bool CosetTable::is_union_of_cosets(const std::vector<std::uint32_t>& elements) const {
  std::vector<char> in(n_, 0);
  for (auto x : elements) {
    if (x >= n_) return false;
    in[x] = 1;
  }
  const std::uint64_t qn = q_ % n_;
  for (auto x : elements) {
    if (!in[static_cast<std::uint64_t>(x) * qn % n_]) return false;
  }
  return true;
}

CosetTable coset_table(std::uint32_t n, std::uint64_t q) { return CosetTable(n, q); }

DefiningSet DefiningSet::from_elements(const CosetTable& table, std::vector<std::uint32_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!table.is_union_of_cosets(elements)) {
    throw std::invalid_argument("DefiningSet: not a union of cyclotomic cosets");
  }
  DefiningSet s;
  s.n_ = table.n();
  s.q_ = table.q();
  s.elements_ = std::move(elements);
  return s;
}

DefiningSet DefiningSet::from_leaders(const CosetTable& table, const std::vector<std::uint32_t>& leaders) {
  std::vector<std::uint32_t> el;
  for (auto l : leaders) {
    if (l >= table.n()) throw std::invalid_argument("DefiningSet: leader out of range");
    const auto& c = table.coset_containing(l);
    el.insert(el.end(), c.begin(), c.end());
  }
  return from_elements(table, std::move(el));
}

DefiningSet DefiningSet::parse(const CosetTable& table, std::string_view text) {
  constexpr std::string_view kFull = "full:";
  if (text.substr(0, kFull.size()) == kFull) {
    return from_elements(table, parse_uint_list(text.substr(kFull.size())));
  }
  return from_leaders(table, parse_uint_list(text));
}

bool DefiningSet::contains(std::uint32_t a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

std::vector<std::uint32_t> DefiningSet::leaders(const CosetTable& table) const {
  std::vector<std::uint32_t> out;
  for (auto x : elements_) {
    if (table.coset_containing(x).front() == x) out.push_back(x);
  }
  return out;
}

std::string DefiningSet::to_string(const CosetTable& table) const {
  std::ostringstream os;
  bool first = true;
  for (auto l : leaders(table)) {
    os << (first ? "" : ",") << l;
    first = false;
  }
  return os.str();
}

IndexMap IndexMap::multiplier(std::uint32_t n, std::int64_t a) {
  const auto r = reduce(a, n);
  if (std::gcd<std::uint32_t>(r, n) != 1) throw std::invalid_argument("multiplier: gcd(a, n) != 1");
  IndexMap m;
  m.kind = Kind::multiplier;
  m.modulus = n;
  m.e = r;
  return m;
}

IndexMap IndexMap::generalized_multiplier(std::uint32_t n, std::uint32_t d, std::uint32_t k) {
  const auto [p, mm] = prime_power(n);
  if (p == 0 || p == 2) throw std::invalid_argument("generalized_multiplier: n must be an odd prime power");
  if (k < 1 || k > mm) throw std::invalid_argument("generalized_multiplier: need 1 <= k <= m");
  std::uint32_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk *= static_cast<std::uint32_t>(p);
  if (d < 1 || d >= pk || std::gcd(d, pk) != 1) {
    throw std::invalid_argument("generalized_multiplier: need 1 <= d < p^k, gcd(d, p^k) = 1");
  }
  IndexMap m;
  m.kind = Kind::generalized_multiplier;
  m.modulus = n;
  m.e = d;
  m.p = static_cast<std::uint32_t>(p);
  m.k = k;
  m.m = mm;
  return m;
}

IndexMap IndexMap::shift(std::uint32_t n, std::int64_t b) {
  IndexMap m;
  m.kind = Kind::shift;
  m.modulus = n;
  m.b = reduce(b, n);
  return m;
}

IndexMap IndexMap::affine(std::uint32_t n, std::int64_t e, std::int64_t b) {
  const auto r = reduce(e, n);
  if (std::gcd<std::uint32_t>(r, n) != 1) throw std::invalid_argument("affine: gcd(e, n) != 1");
  IndexMap m;
  m.kind = Kind::affine;
  m.modulus = n;
  m.e = r;
  m.b = reduce(b, n);
  return m;
}

std::uint32_t IndexMap::operator()(std::uint32_t x) const {
  const std::uint64_t n = modulus;
  x %= modulus;
  switch (kind) {
    case Kind::multiplier:
      return static_cast<std::uint32_t>(std::uint64_t{e} * x % n);
    case Kind::shift:
      return static_cast<std::uint32_t>((std::uint64_t{x} + b) % n);
    case Kind::affine:
      return static_cast<std::uint32_t>((std::uint64_t{e} * x + b) % n);
    case Kind::generalized_multiplier: {
      std::uint64_t pk = 1;
      for (std::uint32_t i = 0; i < k; ++i) pk *= p;
      const std::uint64_t i = x % pk;
      const std::uint64_t j = x / pk;
      return static_cast<std::uint32_t>((i * e) % pk + j * pk);
    }
  }
  return x;
}

std::string IndexMap::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::multiplier: os << "mu_" << e; break;
    case Kind::shift: os << "phi_" << b; break;
    case Kind::affine: os << "x -> " << e << "x + " << b; break;
    case Kind::generalized_multiplier: os << "M_" << e << " (k=" << k << ")"; break;
  }
  os << " mod " << modulus;
  return os.str();
}

std::vector<std::uint32_t> apply_map(const IndexMap& map, const std::vector<std::uint32_t>& set) {
  std::vector<std::uint32_t> out;
  out.reserve(set.size());
  for (auto x : set) out.push_back(map(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> apply_map(const IndexMap& map, const DefiningSet& set) {
  if (map.modulus != set.n()) throw std::invalid_argument("apply_map: modulus mismatch");
  return apply_map(map, set.elements());
}

bool shift_divisibility_cyclic(std::uint64_t n, std::uint64_t q, std::uint64_t setsize, std::uint64_t b) {
  if (n == 0) return false;
  // Reduce factor by factor to stay within 64 bits.
  const std::uint64_t r = (setsize % n) * ((q - 1) % n) % n;
  return static_cast<unsigned __int128>(r) * (b % n) % n == 0;
}

bool shift_divisibility_constacyclic(std::uint64_t n, std::uint64_t setsize, std::uint64_t b) {
  if (n == 0) return false;
  return b % 3 == 0 && static_cast<unsigned __int128>(b % n) * (setsize % n) % n == 0;
}

DefiningSet build_Ae(std::uint32_t n, std::uint32_t e) {
  std::uint32_t t = 0;
  std::uint32_t k = n;
  while (k > 0 && k % 3 == 0) {
    k /= 3;
    ++t;
  }
  if (n == 0 || t < 3 || n % 2 == 0) {
    throw std::invalid_argument("build_Ae: n must be odd of the form 3^t k with t >= 3, gcd(k, 3) = 1");
  }
  if (e < 1 || e >= n) throw std::invalid_argument("build_Ae: need 1 <= e <= n - 1");
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i + 1 < t; ++i) count *= 3;
  const std::uint32_t step = n / count;
  std::vector<std::uint32_t> el;
  for (std::uint32_t i = 0; i < count; ++i) {
    el.push_back(static_cast<std::uint32_t>((std::uint64_t{e} * k + std::uint64_t{i} * step) % n));
  }
  const CosetTable table(n, 4);
  if (!table.is_union_of_cosets(el)) throw std::logic_error("build_Ae: result is not coset-closed");
  return DefiningSet::from_elements(table, std::move(el));
}

std::vector<IndexMap> enumerate_affine_witnesses(const DefiningSet& a, const DefiningSet& b, CodeFamily mode) {
  std::vector<IndexMap> out;
  if (a.n() != b.n() || a.size() != b.size()) return out;
  const std::uint32_t mod = a.n();
  std::vector<char> target(mod, 0);
  for (auto x : b.elements()) target[x] = 1;
  const auto& src = a.elements();

  auto matches = [&](std::uint64_t e, std::uint64_t t) {
    for (auto x : src) {
      if (!target[(e * x + t) % mod]) return false;
    }
    return true;  // equal sizes and an injective map
  };

  if (mode == CodeFamily::cyclic) {
    for (std::uint32_t e = 1; e < std::max<std::uint32_t>(mod, 2); ++e) {
      if (std::gcd(e, mod) != 1) continue;
      for (std::uint32_t t = 0; t < mod; ++t) {
        if (!shift_divisibility_cyclic(mod, a.q(), a.size(), t)) continue;
        if (matches(e % mod, t)) out.push_back(IndexMap::affine(mod, e, t));
      }
    }
  } else {
    if (mod % 3 != 0) throw std::invalid_argument("enumerate_affine_witnesses: constacyclic modulus must be 3n");
    const std::uint32_t n = mod / 3;
    for (std::uint32_t e = 1; e < mod; e += 3) {
      if (std::gcd(e, mod) != 1) continue;
      for (std::uint32_t j = 1; j <= n; ++j) {
        if (static_cast<std::uint64_t>(3) * j * a.size() % n != 0) continue;
        const std::uint32_t t = (3 * j) % mod;
        if (matches(e, t)) out.push_back(IndexMap::affine(mod, e, t));
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> parse_uint_list(std::string_view text) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    auto tok = text.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) {
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("parse_uint_list: bad integer '" + std::string(tok) + "'");
      }
      out.push_back(v);
    }
    pos = next + 1;
  }
  return out;
}

}  // namespace codeq
