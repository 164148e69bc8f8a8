#include "codeq/quantum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace codeq {

namespace {

void require_gf4(const LinearCode& c, const char* what) {
  if (c.field()->order() != 4) throw std::invalid_argument(std::string(what) + ": code must be over GF(4)");
}

using Vec = std::vector<std::uint32_t>;

Vec row_of(const Matrix& m, std::size_t r) { return {m.row(r).begin(), m.row(r).end()}; }

/// v += a * w
void axpy(const GaloisField& f, Vec& v, Elem a, const Vec& w) {
  if (!a) return;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint32_t>(f.add(v[i], f.mul(a, w[i])));
}

/// Hermitian-orthonormal basis of span(w), which must carry a nondegenerate form.
std::vector<Vec> orthonormalize(const GaloisField& f, std::vector<Vec> w) {
  std::vector<Vec> out;
  while (!w.empty()) {
    std::size_t pick = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (hermitian_product(f, w[i], w[i]) != 0) {
        pick = i;
        break;
      }
    }
    if (pick == w.size()) {
      // Every vector is isotropic: <u + l v, u + l v> = Tr(l * conj(<u, v>)) for a nonzero <u, v>.
      bool fixed = false;
      for (std::size_t i = 0; i < w.size() && !fixed; ++i) {
        for (std::size_t j = 0; j < w.size() && !fixed; ++j) {
          const Elem c = hermitian_product(f, w[i], w[j]);
          if (i == j || c == 0) continue;
          for (Elem l = 1; l < 4 && !fixed; ++l) {
            Vec t = w[i];
            axpy(f, t, l, w[j]);
            if (hermitian_product(f, t, t) != 0) {
              w[i] = std::move(t);
              pick = i;
              fixed = true;
            }
          }
        }
      }
      if (!fixed) throw std::logic_error("orthonormalize: degenerate Hermitian form");
    }
    Vec u = std::move(w[pick]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(pick));
    // <u, u> lies in GF(2), so it is 1 here and u is already normalized.
    for (auto& v : w) axpy(f, v, hermitian_product(f, v, u), u);
    out.push_back(std::move(u));
  }
  return out;
}

bool rows_orthonormal(const GaloisField& f, const Matrix& u) {
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < u.rows(); ++j) {
      if (hermitian_product(f, u.row(i), u.row(j)) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(QuantumConstruction c) {
  return c == QuantumConstruction::crss ? "crss" : "nearly_self_orthogonal";
}

QuantumParameters crss(const LinearCode& c, const std::optional<DistanceOptions>& distance) {
  require_gf4(c, "crss");
  const LinearCode dual = hermitian_dual(c);
  if (!c.contains(dual)) throw std::invalid_argument("crss: code is not Hermitian dual-containing");
  QuantumParameters p;
  p.n_q = static_cast<std::uint32_t>(c.length());
  p.k_q = 2 * static_cast<std::int64_t>(c.dimension()) - static_cast<std::int64_t>(c.length());
  p.construction = QuantumConstruction::crss;
  if (distance) {
    p.distance = min_weight_outside(c, dual, *distance);
    p.d_lb = p.distance.lb;
    p.d_ub = p.distance.ub;
    p.distance_computed = true;
  }
  return p;
}

ExtensionResult nearly_self_orthogonal(const LinearCode& c, const ExtensionOptions& opts) {
  require_gf4(c, "nearly_self_orthogonal");
  const GaloisField& f = *c.field();
  const std::size_t n = c.length();
  const std::size_t k = c.dimension();
  const LinearCode b = hermitian_dual(c);
  const LinearCode hull = code_intersection(c, b);

  ExtensionResult res;
  res.hull = static_cast<std::uint32_t>(hull.dimension());
  res.e = static_cast<std::uint32_t>(n - k - hull.dimension());
  res.e_from_sum = static_cast<std::uint32_t>(code_sum(c, b).dimension() - k);
  if (res.e != res.e_from_sum) throw std::logic_error("nearly_self_orthogonal: the two formulas for e disagree");

  if (res.e == 0) {
    res.extended = c;
    res.params = crss(c, opts.distance);
    res.params.construction = QuantumConstruction::nearly_self_orthogonal;
    return res;
  }

  // Complement of the hull inside C^perp_h: the form is nondegenerate there.
  std::vector<Vec> w;
  {
    Matrix span = hull.generator();
    std::size_t r = hull.dimension();
    for (std::size_t i = 0; i < b.dimension(); ++i) {
      Matrix t = span;
      t.append_row(b.generator().row(i));
      if (rank(f, t) > r) {
        span = std::move(t);
        ++r;
        w.push_back(row_of(b.generator(), i));
      }
    }
  }
  if (w.size() != res.e) throw std::logic_error("nearly_self_orthogonal: complement has the wrong size");
  const auto ortho = orthonormalize(f, std::move(w));

  Matrix u(res.e, res.e);
  if (opts.unitary) {
    u = *opts.unitary;
    if (u.rows() != res.e || u.cols() != res.e || !rows_orthonormal(f, u)) {
      throw std::invalid_argument("nearly_self_orthogonal: block must be an e x e matrix with orthonormal rows");
    }
  } else {
    for (std::size_t i = 0; i < res.e; ++i) u(i, i) = 1;
  }

  // Self-orthogonal code S spanned by (hull | 0) and (w_j | u_j); E = S^perp_h.
  const std::size_t ne = n + res.e;
  Matrix s(0, ne);
  Vec row(ne);
  for (std::size_t i = 0; i < hull.dimension(); ++i) {
    std::fill(row.begin(), row.end(), 0);
    std::copy(hull.generator().row(i).begin(), hull.generator().row(i).end(), row.begin());
    s.append_row(row);
  }
  for (std::size_t j = 0; j < res.e; ++j) {
    std::copy(ortho[j].begin(), ortho[j].end(), row.begin());
    for (std::size_t t = 0; t < res.e; ++t) row[n + t] = u(j, t);
    s.append_row(row);
  }
  const LinearCode self_orth = LinearCode::from_rows(c.field(), s);
  res.extended = hermitian_dual(self_orth);
  const LinearCode ext_dual = hermitian_dual(res.extended);
  if (res.extended.dimension() != k + res.e || !res.extended.contains(ext_dual)) {
    throw std::logic_error("nearly_self_orthogonal: extended code is not dual-containing");
  }

  res.params.n_q = static_cast<std::uint32_t>(ne);
  res.params.k_q = 2 * static_cast<std::int64_t>(k) - static_cast<std::int64_t>(n) + res.e;
  res.params.e = res.e;
  res.params.construction = QuantumConstruction::nearly_self_orthogonal;
  if (opts.distance) {
    res.params.distance = min_weight_outside(res.extended, ext_dual, *opts.distance);
    res.params.d_lb = res.params.distance.lb;
    res.params.d_ub = res.params.distance.ub;
    res.params.distance_computed = true;
  }
  return res;
}

std::uint32_t ExtensionBound::lb() const { return std::min(code.lb, sum.lb + 1); }
std::uint32_t ExtensionBound::ub() const { return std::min(code.ub, sum.ub + 1); }

ExtensionBound extension_bound(const LinearCode& c, const DistanceOptions& opts) {
  require_gf4(c, "extension_bound");
  ExtensionBound b;
  b.code = min_distance(c, opts);
  b.sum = min_distance(code_sum(c, hermitian_dual(c)), opts);
  return b;
}

std::vector<Matrix> unitary_classes(std::uint32_t e) {
  if (e == 0 || e > 4) throw std::invalid_argument("unitary_classes: need 1 <= e <= 4");
  const auto f = build_field(2, 2);
  std::vector<Vec> unit;
  std::uint32_t total = 1;
  for (std::uint32_t i = 0; i < e; ++i) total *= 4;
  for (std::uint32_t x = 0; x < total; ++x) {
    Vec v(e);
    for (std::uint32_t i = 0, y = x; i < e; ++i, y /= 4) v[i] = y % 4;
    if (hermitian_product(*f, v, v) == 1) unit.push_back(std::move(v));
  }
  std::vector<std::uint32_t> perm(e);
  auto canonical = [&](const std::vector<Vec>& rows) {
    std::vector<std::uint32_t> best;
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      std::uint32_t scalings = 1;
      for (std::uint32_t i = 0; i < e; ++i) scalings *= 3;
      for (std::uint32_t sc = 0; sc < scalings; ++sc) {
        std::vector<std::uint32_t> flat;
        for (const auto& r : rows) {
          for (std::uint32_t t = 0, y = sc; t < e; ++t, y /= 3) {
            flat.push_back(static_cast<std::uint32_t>(f->mul(r[perm[t]], 1 + y % 3)));
          }
        }
        if (best.empty() || flat < best) best = std::move(flat);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<Matrix> out;
  std::vector<Vec> rows;
  auto rec = [&](auto&& self) -> void {
    if (rows.size() == e) {
      auto key = canonical(rows);
      if (seen.insert(key).second) {
        Matrix m(e, e);
        for (std::uint32_t i = 0; i < e; ++i) {
          for (std::uint32_t j = 0; j < e; ++j) m(i, j) = key[i * e + j];
        }
        out.push_back(std::move(m));
      }
      return;
    }
    for (const auto& v : unit) {
      bool ok = true;
      for (const auto& r : rows) ok = ok && hermitian_product(*f, v, r) == 0;
      if (!ok) continue;
      rows.push_back(v);
      self(self);
      rows.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace codeq
