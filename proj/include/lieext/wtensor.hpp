#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lieext/algebra.hpp"
#include "lieext/error.hpp"
#include "lieext/matrix.hpp"
#include "lieext/parallel.hpp"
#include "lieext/rational.hpp"

namespace lieext {

/// Index triple (i, j, s) of W^{ij}_s. All indices are 0-based.
using WIndex = std::array<std::size_t, 3>;

/// Three-index tensor W^{ij}_s defining
///   ([x, y]_W)_s = sum_{i,j} W^{ij}_s [x_i, y_j]
/// on n copies of a Lie algebra. Entries are stored as given; symmetry in
/// (i, j) is a checked property, not a storage convention.
class WTensor {
public:
  explicit WTensor(std::size_t n) : n_(n) { detail::require(n >= 1, "W-tensor needs n >= 1"); }

  [[nodiscard]] std::size_t n() const { return n_; }
  [[nodiscard]] const std::map<WIndex, Rational>& entries() const { return entries_; }

  [[nodiscard]] Rational get(std::size_t i, std::size_t j, std::size_t s) const {
    auto it = entries_.find({i, j, s});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  void set(std::size_t i, std::size_t j, std::size_t s, const Rational& value) {
    detail::require(i < n_ && j < n_ && s < n_, "W-tensor index out of range");
    if (value.is_zero()) entries_.erase({i, j, s});
    else entries_[{i, j, s}] = value;
  }

  /// Sets both W^{ij}_s and W^{ji}_s.
  void set_symmetric(std::size_t i, std::size_t j, std::size_t s, const Rational& value) {
    set(i, j, s, value);
    set(j, i, s, value);
  }

  friend bool operator==(const WTensor&, const WTensor&) = default;

private:
  std::size_t n_;
  std::map<WIndex, Rational> entries_;
};

/// Coefficient vector alpha in K^n; unit(n, i) is e_i.
struct AlphaVector {
  std::vector<Rational> coords;

  static AlphaVector unit(std::size_t n, std::size_t i) {
    detail::require(i < n, "unit vector index out of range");
    AlphaVector a{std::vector<Rational>(n)};
    a.coords[i] = 1;
    return a;
  }
  [[nodiscard]] std::size_t n() const { return coords.size(); }
};

/// n blocks (x_0, ..., x_{n-1}) of a common algebra.
struct GnElement {
  std::vector<AlgebraElement> blocks;

  static GnElement zero(std::size_t n, std::size_t dim) {
    return {std::vector<AlgebraElement>(n, AlgebraElement::zero(dim))};
  }
  /// Basis vector with flattened index block * dim + a.
  static GnElement basis(std::size_t n, std::size_t dim, std::size_t index) {
    detail::require(index < n * dim, "G^n basis index out of range");
    GnElement x = zero(n, dim);
    x.blocks[index / dim].coords[index % dim] = 1;
    return x;
  }

  [[nodiscard]] std::size_t n() const { return blocks.size(); }
  [[nodiscard]] std::size_t dim() const { return blocks.empty() ? 0 : blocks.front().dim(); }
  [[nodiscard]] bool is_zero() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.is_zero(); });
  }
  /// Flattened coordinates, block-major.
  [[nodiscard]] std::vector<Rational> flatten() const {
    std::vector<Rational> out;
    for (const auto& b : blocks) out.insert(out.end(), b.coords.begin(), b.coords.end());
    return out;
  }

  GnElement& operator+=(const GnElement& o) {
    detail::require(n() == o.n(), "G^n element size mismatch");
    for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] += o.blocks[i];
    return *this;
  }
  friend GnElement operator+(GnElement a, const GnElement& b) { return a += b; }
  friend bool operator==(const GnElement&, const GnElement&) = default;
};

// ---------------------------------------------------------------------------
// Slices and validity
// ---------------------------------------------------------------------------

/// (W^{(k)})_i^j = W^{kj}_i, row i, column j.
inline RationalMatrix slice_matrix(const WTensor& w, std::size_t k) {
  detail::require(k < w.n(), "slice index out of range");
  RationalMatrix m(w.n(), w.n());
  for (const auto& [idx, v] : w.entries())
    if (idx[0] == k) m(idx[2], idx[1]) = v;
  return m;
}

inline std::vector<RationalMatrix> slices(const WTensor& w) {
  std::vector<RationalMatrix> out(w.n(), RationalMatrix(w.n(), w.n()));
  for (const auto& [idx, v] : w.entries()) out[idx[0]](idx[2], idx[1]) = v;
  return out;
}

struct WViolation {
  enum class Kind { symmetry, associativity };
  Kind kind = Kind::symmetry;
  /// symmetry: (i, j, s) with i < j and W^{ij}_s != W^{ji}_s.
  /// associativity: (i, s, q, p) where
  ///   sum_k (W^{sk}_i W^{qp}_k - W^{qk}_i W^{sp}_k) != 0.
  std::vector<std::size_t> indices;
  Rational residual;
  friend bool operator==(const WViolation&, const WViolation&) = default;
};

struct WValidationReport {
  std::optional<WViolation> violation;
  [[nodiscard]] bool ok() const { return !violation.has_value(); }
};

inline std::optional<WViolation> symmetry_violation(const WTensor& w) {
  std::optional<WIndex> first;
  for (const auto& [idx, v] : w.entries()) {
    const WIndex mirror{idx[1], idx[0], idx[2]};
    if (w.get(mirror[0], mirror[1], mirror[2]) != v) {
      const WIndex lo = std::min(idx, mirror);
      if (!first || lo < *first) first = lo;
    }
  }
  if (!first) return std::nullopt;
  const auto [i, j, s] = *first;
  return WViolation{WViolation::Kind::symmetry, {i, j, s}, w.get(i, j, s) - w.get(j, i, s)};
}

/// Second validity condition evaluated index by index, in lexicographic
/// order of (i, s, q, p).
inline std::optional<WViolation> associativity_violation(const WTensor& w, std::size_t threads = 1) {
  const std::size_t n = w.n();
  std::vector<Rational> dense(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t s) -> const Rational& { return dense[(i * n + j) * n + s]; };
  for (const auto& [idx, v] : w.entries()) dense[(idx[0] * n + idx[1]) * n + idx[2]] = v;

  return detail::first_hit(n, threads, [&](std::size_t i) -> std::optional<WViolation> {
    std::vector<Rational> acc(n * n);
    for (std::size_t s = 0; s < n; ++s) {
      std::fill(acc.begin(), acc.end(), Rational(0));
      for (std::size_t k = 0; k < n; ++k) {
        if (const Rational& a = at(s, k, i); !a.is_zero())
          for (std::size_t q = 0; q < n; ++q)
            for (std::size_t p = 0; p < n; ++p)
              if (const Rational& b = at(q, p, k); !b.is_zero()) acc[q * n + p] += a * b;
      }
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t k = 0; k < n; ++k) {
          if (const Rational& a = at(q, k, i); !a.is_zero())
            for (std::size_t p = 0; p < n; ++p)
              if (const Rational& b = at(s, p, k); !b.is_zero()) acc[q * n + p] -= a * b;
        }
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t p = 0; p < n; ++p)
          if (!acc[q * n + p].is_zero())
            return WViolation{WViolation::Kind::associativity, {i, s, q, p}, acc[q * n + p]};
    }
    return std::nullopt;
  });
}

/// First pair s < q of non-commuting slices, with the offending entry.
struct SliceCommutatorWitness {
  std::size_t s = 0, q = 0, row = 0, col = 0;
  Rational value;
};

inline std::optional<SliceCommutatorWitness> slice_commutation_violation(const std::vector<RationalMatrix>& mats) {
  for (std::size_t s = 0; s < mats.size(); ++s)
    for (std::size_t q = s + 1; q < mats.size(); ++q) {
      const RationalMatrix c = commutator(mats[s], mats[q]);
      for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j)
          if (!c(i, j).is_zero()) return SliceCommutatorWitness{s, q, i, j, c(i, j)};
    }
  return std::nullopt;
}

/// Both validity conditions: W^{ij}_s = W^{ji}_s, and the index identity
/// that says the slice matrices commute. The index identity and the
/// slice-commutator test are evaluated separately and must agree.
inline WValidationReport wtensor_validate(const WTensor& w, const CheckOptions& options = {}) {
  const auto assoc = associativity_violation(w, options.threads);
  const auto commute = slice_commutation_violation(slices(w));
  detail::ensure(assoc.has_value() == commute.has_value(),
                 "W validation: index identity and slice commutation disagree");
  if (auto sym = symmetry_violation(w)) return {std::move(sym)};
  return {assoc};
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

/// W^{ij}_s = delta_s^i delta_s^j.
inline WTensor direct_sum_w(std::size_t n) {
  WTensor w(n);
  for (std::size_t i = 0; i < n; ++i) w.set(i, i, i, 1);
  return w;
}

/// W[alpha]^{sk}_i = alpha_{(s + k - i) mod n}.
inline WTensor circulant_w(const AlphaVector& alpha) {
  const std::size_t n = alpha.n();
  WTensor w(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) w.set(s, k, i, alpha.coords[(s + k + n - i) % n]);
  return w;
}

/// W^{ij}_k = 1 when k = i + j < n, no wrap-around.
inline WTensor leibnitz_w(std::size_t n) {
  WTensor w(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) w.set(i, j, i + j, 1);
  return w;
}

/// W^{sl}_i = 1 if s + l = i, lambda if s + l = i + n, else 0. Interpolates
/// between leibnitz_w (lambda = 0) and circulant_w(e_0) (lambda = 1).
inline WTensor leibnitz_deform(std::size_t n, const Rational& lambda) {
  WTensor w(n);
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t l = 0; l < n; ++l) {
      if (s + l < n) w.set(s, l, s + l, 1);
      else w.set(s, l, s + l - n, lambda);
    }
  return w;
}

/// Drops index 0 and shifts the rest down by one.
inline WTensor truncate_to_solvable(const WTensor& w) {
  detail::require(w.n() >= 2, "truncation needs n >= 2");
  detail::require(wtensor_validate(w).ok(), "truncation needs a valid W-tensor");
  WTensor out(w.n() - 1);
  for (const auto& [idx, v] : w.entries())
    if (idx[0] >= 1 && idx[1] >= 1 && idx[2] >= 1) out.set(idx[0] - 1, idx[1] - 1, idx[2] - 1, v);
  return out;
}

/// sum_k alpha_k W^{(s-k)} with W = circulant_w(e_0). Must equal the
/// directly computed slice of circulant_w(alpha).
inline RationalMatrix alpha_slice_expand(const AlphaVector& alpha, std::size_t s) {
  const std::size_t n = alpha.n();
  detail::require(s < n, "slice index out of range");
  RationalMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (alpha.coords[k].is_zero()) continue;
    const std::size_t shift = (s + n - k) % n;
    // W^{(shift)} e_i = e_{(i + shift) mod n}
    for (std::size_t i = 0; i < n; ++i) out((i + shift) % n, i) += alpha.coords[k];
  }
  detail::ensure(out == slice_matrix(circulant_w(alpha), s), "alpha slice expansion disagrees with slice_matrix");
  return out;
}

// ---------------------------------------------------------------------------
// The induced bracket on G^n
// ---------------------------------------------------------------------------

namespace detail {

/// (i, j) -> [(s, W^{ij}_s)], for the inner loops of the bracket.
inline std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>
products(const WTensor& w) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>> out;
  for (const auto& [idx, v] : w.entries()) out[{idx[0], idx[1]}].emplace_back(idx[2], v);
  return out;
}

inline GnElement extension_bracket_with(
    const std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, Rational>>>& prods,
    const StructureConstants& c, const GnElement& x, const GnElement& y) {
  GnElement out = GnElement::zero(x.n(), c.dim());
  for (std::size_t i = 0; i < x.n(); ++i) {
    if (x.blocks[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.n(); ++j) {
      auto it = prods.find({i, j});
      if (it == prods.end() || y.blocks[j].is_zero()) continue;
      const AlgebraElement b = bracket_eval(c, x.blocks[i], y.blocks[j]);
      if (b.is_zero()) continue;
      for (const auto& [s, v] : it->second) out.blocks[s] += v * b;
    }
  }
  return out;
}

}  // namespace detail

/// ([x, y]_W)_s = sum_{i,j} W^{ij}_s [x_i, y_j].
inline GnElement extension_bracket(const WTensor& w, const StructureConstants& c, const GnElement& x,
                                   const GnElement& y) {
  detail::require(x.n() == w.n() && y.n() == w.n(), "extension bracket: block count differs from n");
  for (const auto* e : {&x, &y})
    for (const auto& b : e->blocks) detail::require(b.dim() == c.dim(), "extension bracket: block dimension mismatch");
  return detail::extension_bracket_with(detail::products(w), c, x, y);
}

/// Structure constants of G^n_W on the basis (block s, base index a) with
/// flattened index s * dim + a. Defined by the pairs with smaller flattened
/// index first, which is the whole bracket when W is symmetric.
inline StructureConstants induced_structure_constants(const WTensor& w, const StructureConstants& c,
                                                      std::size_t cap = CheckOptions{}.cap) {
  const std::size_t d = c.dim();
  const std::size_t total = w.n() * d;
  if (total > cap) {
    throw CapExceeded("induced algebra dimension " + std::to_string(total) + " exceeds cap " + std::to_string(cap));
  }
  const detail::BracketCache cache(c);
  StructureConstants out(total, c.name().empty() ? std::string{} : c.name() + "^" + std::to_string(w.n()));
  for (const auto& [idx, v] : w.entries()) {
    const auto [i, j, s] = idx;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const std::size_t left = i * d + a, right = j * d + b;
        if (left >= right) continue;
        for (const auto& [e, coef] : cache(a, b)) out.add(left, right, s * d + e, v * coef);
      }
  }
  return out;
}

struct CertifyReport {
  enum class Kind { antisymmetry, jacobi };
  Kind kind = Kind::jacobi;
  /// Flattened basis indices; for antisymmetry only a and b are meaningful
  /// and f is the component of [e_a,e_b] + [e_b,e_a] that is nonzero.
  std::optional<JacobiViolation> violation;
  [[nodiscard]] bool ok() const { return !violation.has_value(); }
};

/// Brute-force check that [.,.]_W on G^n is a Lie bracket for the given G:
/// antisymmetry on basis pairs, then Jacobi on basis triples.
inline CertifyReport jacobi_certify(const WTensor& w, const StructureConstants& c, const CheckOptions& options = {}) {
  const std::size_t n = w.n(), d = c.dim(), total = n * d;
  if (total > options.cap) {
    throw CapExceeded("n*dim = " + std::to_string(total) + " exceeds cap " + std::to_string(options.cap));
  }
  const auto prods = detail::products(w);
  std::vector<GnElement> basis;
  basis.reserve(total);
  for (std::size_t k = 0; k < total; ++k) basis.push_back(GnElement::basis(n, d, k));
  auto bracket = [&](const GnElement& x, const GnElement& y) { return detail::extension_bracket_with(prods, c, x, y); };
  auto first_nonzero = [](const GnElement& g) -> std::optional<std::pair<std::size_t, Rational>> {
    const auto flat = g.flatten();
    for (std::size_t f = 0; f < flat.size(); ++f)
      if (!flat[f].is_zero()) return std::pair{f, flat[f]};
    return std::nullopt;
  };

  auto anti = detail::first_hit(total, options.threads, [&](std::size_t a) -> std::optional<JacobiViolation> {
    for (std::size_t b = a; b < total; ++b) {
      if (auto nz = first_nonzero(bracket(basis[a], basis[b]) + bracket(basis[b], basis[a])))
        return JacobiViolation{a, b, b, nz->first, nz->second};
    }
    return std::nullopt;
  });
  if (anti) return {CertifyReport::Kind::antisymmetry, std::move(anti)};

  std::vector<GnElement> pair_brackets(total * total);
  for (std::size_t a = 0; a < total; ++a)
    for (std::size_t b = a + 1; b < total; ++b) pair_brackets[a * total + b] = bracket(basis[a], basis[b]);
  auto pb = [&](std::size_t a, std::size_t b) -> GnElement {
    return a < b ? pair_brackets[a * total + b] : bracket(basis[a], basis[b]);
  };

  auto jac = detail::first_hit(total, options.threads, [&](std::size_t a) -> std::optional<JacobiViolation> {
    for (std::size_t b = a + 1; b < total; ++b)
      for (std::size_t x = b + 1; x < total; ++x) {
        GnElement r = bracket(pb(a, b), basis[x]);
        r += bracket(pb(b, x), basis[a]);
        r += bracket(pb(x, a), basis[b]);
        if (auto nz = first_nonzero(r)) return JacobiViolation{a, b, x, nz->first, nz->second};
      }
    return std::nullopt;
  });
  return {CertifyReport::Kind::jacobi, std::move(jac)};
}

// ---------------------------------------------------------------------------
// Filtration structure
// ---------------------------------------------------------------------------

struct SupportReport {
  std::optional<WIndex> violation;  // first nonzero (i, j, k) with k <= max(i, j)
  [[nodiscard]] bool ok() const { return !violation.has_value(); }
};

/// Every nonzero W^{ij}_k has k >= max(i, j) + 1, i.e. the bracket of the
/// components >= a and >= b lands in components >= max(a, b) + 1.
inline SupportReport filtration_support_check(const WTensor& w) {
  for (const auto& [idx, v] : w.entries())
    if (idx[2] < std::max(idx[0], idx[1]) + 1) return {idx};
  return {};
}

/// Smallest k such that components k..n-1 span an abelian subspace:
/// W^{ij}_s = 0 whenever i, j >= k. In solvable form this is an ideal.
inline std::size_t max_abelian_filtration_ideal(const WTensor& w) {
  detail::require(filtration_support_check(w).ok(), "abelian ideal search needs a W-tensor in solvable form");
  std::size_t k = 0;
  for (const auto& [idx, v] : w.entries()) k = std::max(k, std::min(idx[0], idx[1]) + 1);
  detail::ensure(k <= w.n() - 1 || w.n() == 1, "solvable form must leave the top component abelian");
  return k;
}

}  // namespace lieext
