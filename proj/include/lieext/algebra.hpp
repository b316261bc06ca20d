#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieext/error.hpp"
#include "lieext/matrix.hpp"
#include "lieext/parallel.hpp"
#include "lieext/rational.hpp"

namespace lieext {

/// Sparse vector e -> coefficient with no zero entries.
using SparseVector = std::map<std::size_t, Rational>;

inline void accumulate(SparseVector& into, std::size_t index, const Rational& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = into.try_emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) into.erase(it);
  }
}

/// Element of a d-dimensional algebra in its fixed basis.
struct AlgebraElement {
  std::vector<Rational> coords;

  static AlgebraElement zero(std::size_t dim) { return {std::vector<Rational>(dim)}; }
  static AlgebraElement basis(std::size_t dim, std::size_t index) {
    detail::require(index < dim, "basis index out of range");
    auto x = zero(dim);
    x.coords[index] = 1;
    return x;
  }

  [[nodiscard]] std::size_t dim() const { return coords.size(); }
  [[nodiscard]] bool is_zero() const {
    for (const auto& v : coords)
      if (!v.is_zero()) return false;
    return true;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    detail::require(dim() == o.dim(), "element dimension mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    detail::require(dim() == o.dim(), "element dimension mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  AlgebraElement& operator*=(const Rational& s) {
    for (auto& v : coords) v *= s;
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Rational& s, AlgebraElement a) { return a *= s; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// Structure constants c_ab^e of a bracket on a d-dimensional space. Only
/// pairs a < b are stored; c_ba^e = -c_ab^e and c_aa^e = 0 are implied.
class StructureConstants {
public:
  using Table = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

  explicit StructureConstants(std::size_t dim, std::string name = {}) : dim_(dim), name_(std::move(name)) {
    detail::require(dim >= 1, "structure constants need dim >= 1");
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  [[nodiscard]] const Table& table() const { return table_; }

  /// c_ab^e += value, folding (b,a) onto (a,b) with a sign.
  void add(std::size_t a, std::size_t b, std::size_t e, const Rational& value) {
    check_index(a);
    check_index(b);
    check_index(e);
    if (value.is_zero()) return;
    detail::require(a != b, "structure constants: c_aa must vanish");
    const bool flip = b < a;
    const auto key = flip ? std::pair{b, a} : std::pair{a, b};
    auto& entry = table_[key];
    accumulate(entry, e, flip ? -value : value);
    if (entry.empty()) table_.erase(key);
  }

  void set(std::size_t a, std::size_t b, std::size_t e, const Rational& value) {
    add(a, b, e, value - coefficient(a, b, e));
  }

  [[nodiscard]] Rational coefficient(std::size_t a, std::size_t b, std::size_t e) const {
    if (a == b) return 0;
    const bool flip = b < a;
    auto it = table_.find(flip ? std::pair{b, a} : std::pair{a, b});
    if (it == table_.end()) return 0;
    auto jt = it->second.find(e);
    if (jt == it->second.end()) return 0;
    return flip ? -jt->second : jt->second;
  }

  /// [e_a, e_b] as a sparse vector.
  [[nodiscard]] SparseVector basis_bracket(std::size_t a, std::size_t b) const {
    if (a == b) return {};
    const bool flip = b < a;
    auto it = table_.find(flip ? std::pair{b, a} : std::pair{a, b});
    if (it == table_.end()) return {};
    if (!flip) return it->second;
    SparseVector out;
    for (const auto& [e, v] : it->second) out.emplace(e, -v);
    return out;
  }

  [[nodiscard]] bool is_abelian() const { return table_.empty(); }

  friend bool operator==(const StructureConstants& x, const StructureConstants& y) {
    return x.dim_ == y.dim_ && x.table_ == y.table_;
  }

private:
  void check_index(std::size_t i) const {
    detail::require(i < dim_, "structure constants: basis index out of range");
  }

  std::size_t dim_;
  std::string name_;
  Table table_;
};

/// lambda * x + mu * y, entrywise on the tables.
inline StructureConstants linear_combination(const Rational& lambda, const StructureConstants& x,
                                             const Rational& mu, const StructureConstants& y) {
  detail::require(x.dim() == y.dim(), "linear combination: dimension mismatch");
  StructureConstants out(x.dim());
  for (const auto& [key, vec] : x.table())
    for (const auto& [e, v] : vec) out.add(key.first, key.second, e, lambda * v);
  for (const auto& [key, vec] : y.table())
    for (const auto& [e, v] : vec) out.add(key.first, key.second, e, mu * v);
  return out;
}

// ---------------------------------------------------------------------------
// Jacobi machinery
// ---------------------------------------------------------------------------

/// First basis triple (a < b < c) and output index f at which a trilinear
/// identity fails, with the nonzero residual.
struct JacobiViolation {
  std::size_t a = 0, b = 0, c = 0, f = 0;
  Rational residual;
  friend bool operator==(const JacobiViolation&, const JacobiViolation&) = default;
};

struct JacobiReport {
  std::optional<JacobiViolation> violation;
  [[nodiscard]] bool ok() const { return !violation.has_value(); }
};

namespace detail {

/// Dense cache of all ordered basis brackets, used in the cubic loops.
class BracketCache {
public:
  explicit BracketCache(const StructureConstants& c) : dim_(c.dim()), cache_(dim_ * dim_) {
    for (const auto& [key, vec] : c.table()) {
      const auto [a, b] = key;
      for (const auto& [e, v] : vec) {
        cache_[a * dim_ + b].emplace_back(e, v);
        cache_[b * dim_ + a].emplace_back(e, -v);
      }
    }
  }
  [[nodiscard]] const std::vector<std::pair<std::size_t, Rational>>& operator()(std::size_t a,
                                                                               std::size_t b) const {
    return cache_[a * dim_ + b];
  }
  [[nodiscard]] std::size_t dim() const { return dim_; }

private:
  std::size_t dim_;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> cache_;
};

/// [[x,y]_inner, z]_outer accumulated into `out`.
inline void nested(const BracketCache& outer, const BracketCache& inner, std::size_t x, std::size_t y,
                   std::size_t z, SparseVector& out) {
  for (const auto& [e, v] : inner(x, y))
    for (const auto& [f, w] : outer(e, z)) accumulate(out, f, v * w);
}

/// Scans a < b < c in lexicographic order; `residual(a,b,c)` returns the
/// sparse residual vector of the identity at that triple.
template <typename Residual>
JacobiReport scan_triples(std::size_t dim, std::size_t threads, Residual residual) {
  auto hit = first_hit(dim, threads, [&](std::size_t a) -> std::optional<JacobiViolation> {
    for (std::size_t b = a + 1; b < dim; ++b) {
      for (std::size_t c = b + 1; c < dim; ++c) {
        SparseVector r = residual(a, b, c);
        if (!r.empty()) {
          const auto& [f, v] = *r.begin();
          return JacobiViolation{a, b, c, f, v};
        }
      }
    }
    return std::nullopt;
  });
  return JacobiReport{std::move(hit)};
}

}  // namespace detail

/// Jacobi identity on all basis triples. Antisymmetry holds by storage.
inline JacobiReport validate_structure_constants(const StructureConstants& c, const CheckOptions& options = {}) {
  const detail::BracketCache cache(c);
  return detail::scan_triples(c.dim(), options.threads, [&](std::size_t a, std::size_t b, std::size_t x) {
    SparseVector r;
    detail::nested(cache, cache, a, b, x, r);
    detail::nested(cache, cache, b, x, a, r);
    detail::nested(cache, cache, x, a, b, r);
    return r;
  });
}

inline bool is_lie(const StructureConstants& c) { return validate_structure_constants(c).ok(); }

// ---------------------------------------------------------------------------
// Built-in algebras
// ---------------------------------------------------------------------------

namespace algebras {

inline StructureConstants abelian(std::size_t dim) {
  detail::require(dim >= 1, "abelian: dim must be >= 1");
  return StructureConstants(dim, "abelian(" + std::to_string(dim) + ")");
}

/// [e0,e1] = e2.
inline StructureConstants heisenberg3() {
  StructureConstants c(3, "heisenberg3");
  c.set(0, 1, 2, 1);
  return c;
}

/// Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline StructureConstants sl2() {
  StructureConstants c(3, "sl2");
  c.set(0, 1, 1, 2);
  c.set(0, 2, 2, -2);
  c.set(1, 2, 0, 1);
  return c;
}

/// [L0,L1] = L2 and cyclic.
inline StructureConstants so3() {
  StructureConstants c(3, "so3");
  c.set(0, 1, 2, 1);
  c.set(1, 2, 0, 1);
  c.set(2, 0, 1, 1);
  return c;
}

/// Index pairs (a, b), a < b, labelling the so(p) basis E_ab - E_ba.
inline std::vector<std::pair<std::size_t, std::size_t>> so_pairs(std::size_t p) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b) pairs.emplace_back(a, b);
  return pairs;
}

inline RationalMatrix so_basis_matrix(std::size_t p, std::size_t index) {
  const auto pairs = so_pairs(p);
  detail::require(index < pairs.size(), "so(p) basis index out of range");
  RationalMatrix m(p, p);
  m(pairs[index].first, pairs[index].second) = 1;
  m(pairs[index].second, pairs[index].first) = -1;
  return m;
}

/// Coordinates of an antisymmetric matrix in the E_ab - E_ba basis.
inline AlgebraElement so_coordinates(const RationalMatrix& m) {
  detail::require(m.square(), "so(p) coordinates need a square matrix");
  const std::size_t p = m.rows();
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      detail::ensure(m(i, j) == -m(j, i), "so(p) coordinates: matrix is not antisymmetric");
  AlgebraElement x;
  for (const auto& [a, b] : so_pairs(p)) x.coords.push_back(m(a, b));
  return x;
}

inline RationalMatrix so_matrix(std::size_t p, const AlgebraElement& x) {
  const auto pairs = so_pairs(p);
  detail::require(x.dim() == pairs.size(), "so(p) element has wrong dimension");
  RationalMatrix m(p, p);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    m(pairs[k].first, pairs[k].second) += x.coords[k];
    m(pairs[k].second, pairs[k].first) -= x.coords[k];
  }
  return m;
}

/// Structure constants of a bilinear antisymmetric operation on so(p),
/// computed from its action on basis matrices.
template <typename Product>
StructureConstants so_constants(std::size_t p, std::string name, Product product) {
  const std::size_t d = p * (p - 1) / 2;
  StructureConstants c(d, std::move(name));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const AlgebraElement z = so_coordinates(product(so_basis_matrix(p, i), so_basis_matrix(p, j)));
      for (std::size_t e = 0; e < d; ++e) c.add(i, j, e, z.coords[e]);
    }
  }
  return c;
}

/// so(p) in the basis E_ab - E_ba, a < b, ordered lexicographically.
inline StructureConstants so(std::size_t p) {
  detail::require(p >= 2, "so(p): p must be >= 2");
  return so_constants(p, "so(" + std::to_string(p) + ")",
                      [](const RationalMatrix& x, const RationalMatrix& y) { return commutator(x, y); });
}

/// gl(p) in the basis E_ab with index a*p + b.
inline StructureConstants gl(std::size_t p) {
  detail::require(p >= 1, "gl(p): p must be >= 1");
  StructureConstants c(p * p, "gl(" + std::to_string(p) + ")");
  auto idx = [p](std::size_t a, std::size_t b) { return a * p + b; };
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t x = 0; x < p; ++x)
        for (std::size_t y = 0; y < p; ++y) {
          const std::size_t left = idx(a, b), right = idx(x, y);
          if (left >= right) continue;
          if (b == x) c.add(left, right, idx(a, y), 1);
          if (y == a) c.add(left, right, idx(x, b), -1);
        }
  return c;
}

namespace detail_parse {
inline std::optional<std::size_t> parameter(std::string_view name, std::string_view prefix) {
  if (name.size() <= prefix.size() + 2 || name.substr(0, prefix.size()) != prefix) return std::nullopt;
  if (name[prefix.size()] != '(' || name.back() != ')') return std::nullopt;
  std::string_view digits = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  std::size_t value = 0;
  for (char ch : digits) {
    if (ch < '0' || ch > '9') return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  return value;
}
}  // namespace detail_parse

}  // namespace algebras

/// Looks up "abelian(d)", "heisenberg3", "sl2", "so3", "so(p)" or "gl(p)".
/// The result is checked against the Jacobi identity before returning.
inline StructureConstants builtin_algebra(std::string_view name) {
  using namespace algebras;
  std::optional<StructureConstants> c;
  if (name == "heisenberg3") c = heisenberg3();
  else if (name == "sl2") c = sl2();
  else if (name == "so3") c = so3();
  else if (auto d = detail_parse::parameter(name, "abelian")) {
    detail::require(*d >= 1, "abelian(d): d must be >= 1");
    c = abelian(*d);
  } else if (auto p = detail_parse::parameter(name, "so")) {
    detail::require(*p >= 2, "so(p): p must be >= 2");
    c = so(*p);
  } else if (auto q = detail_parse::parameter(name, "gl")) {
    detail::require(*q >= 2, "gl(p): p must be >= 2");
    c = gl(*q);
  } else {
    throw InvalidArgument("unknown algebra '" + std::string(name) + "'");
  }
  detail::ensure(is_lie(*c), "built-in algebra fails Jacobi: " + std::string(name));
  return std::move(*c);
}

// ---------------------------------------------------------------------------
// Brackets, adjoint action, center
// ---------------------------------------------------------------------------

inline AlgebraElement bracket_eval(const StructureConstants& c, const AlgebraElement& x, const AlgebraElement& y) {
  detail::require(x.dim() == c.dim() && y.dim() == c.dim(), "bracket: dimension mismatch");
  AlgebraElement z = AlgebraElement::zero(c.dim());
  for (const auto& [key, vec] : c.table()) {
    const auto [a, b] = key;
    // x^a y^b - x^b y^a multiplies c_ab^e.
    const Rational weight = x.coords[a] * y.coords[b] - x.coords[b] * y.coords[a];
    if (weight.is_zero()) continue;
    for (const auto& [e, v] : vec) z.coords[e] += weight * v;
  }
  return z;
}

/// Matrix of y -> [x, y].
inline RationalMatrix ad_matrix(const StructureConstants& c, const AlgebraElement& x) {
  detail::require(x.dim() == c.dim(), "ad: dimension mismatch");
  const std::size_t d = c.dim();
  RationalMatrix m(d, d);
  for (std::size_t a = 0; a < d; ++a) {
    if (x.coords[a].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b)
      for (const auto& [e, v] : c.basis_bracket(a, b)) m(e, b) += x.coords[a] * v;
  }
  return m;
}

/// Basis of {x : [x, y] = 0 for all y}, from the stacked system
/// sum_a x^a c_ab^e = 0 over every (b, e).
inline std::vector<AlgebraElement> center_basis(const StructureConstants& c) {
  const std::size_t d = c.dim();
  RationalMatrix system(d * d, d);
  for (const auto& [key, vec] : c.table()) {
    const auto [a, b] = key;
    for (const auto& [e, v] : vec) {
      system(b * d + e, a) += v;
      system(a * d + e, b) -= v;
    }
  }
  std::vector<AlgebraElement> out;
  for (auto& v : nullspace(system)) out.push_back(AlgebraElement{std::move(v)});
  return out;
}

/// dim [G, G]: rank of the span of all basis brackets.
inline std::size_t derived_dimension(const StructureConstants& c) {
  RationalMatrix m(c.table().size(), c.dim());
  std::size_t row = 0;
  for (const auto& [key, vec] : c.table()) {
    for (const auto& [e, v] : vec) m(row, e) = v;
    ++row;
  }
  return rank(m);
}

inline bool in_span(const std::vector<AlgebraElement>& basis, const AlgebraElement& v) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  RationalMatrix m(basis.size() + 1, v.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    detail::require(basis[i].dim() == v.dim(), "span membership: dimension mismatch");
    for (std::size_t j = 0; j < v.dim(); ++j) m(i, j) = basis[i].coords[j];
  }
  for (std::size_t j = 0; j < v.dim(); ++j) m(basis.size(), j) = v.coords[j];
  RationalMatrix head(basis.size(), v.dim());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) head(i, j) = m(i, j);
  return rank(head) == rank(m);
}

/// span(basis) closed under the bracket c.
inline bool is_subalgebra(const StructureConstants& c, const std::vector<AlgebraElement>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!in_span(basis, bracket_eval(c, basis[i], basis[j]))) return false;
  return true;
}

/// z lies in the center of c.
inline bool is_central(const StructureConstants& c, const AlgebraElement& z) { return ad_matrix(c, z).is_zero(); }

// ---------------------------------------------------------------------------
// Pairs of brackets
// ---------------------------------------------------------------------------

struct BracketPair {
  StructureConstants first;
  StructureConstants second;

  BracketPair(StructureConstants a, StructureConstants b) : first(std::move(a)), second(std::move(b)) {
    detail::require(first.dim() == second.dim(), "bracket pair: dimension mismatch");
  }
};

/// [X1,[X2,X3]_u]_v + [X1,[X2,X3]_v]_u + cyclic = 0 on all basis triples.
inline JacobiReport mixed_jacobi_check(const BracketPair& p, const CheckOptions& options = {}) {
  const detail::BracketCache u(p.first), v(p.second);
  return detail::scan_triples(p.first.dim(), options.threads, [&](std::size_t a, std::size_t b, std::size_t x) {
    SparseVector r;
    for (auto [i, j, k] : {std::array{a, b, x}, std::array{b, x, a}, std::array{x, a, b}}) {
      // [[Xj,Xk]_u, Xi]_v + [[Xj,Xk]_v, Xi]_u == -([Xi,[Xj,Xk]_u]_v + ...)
      detail::nested(v, u, j, k, i, r);
      detail::nested(u, v, j, k, i, r);
    }
    SparseVector negated;
    for (auto& [f, w] : r) negated.emplace(f, -w);
    return negated;
  });
}

enum class Compatibility { compatible, incompatible, first_not_lie, second_not_lie };

inline const char* to_string(Compatibility c) {
  switch (c) {
    case Compatibility::compatible: return "compatible";
    case Compatibility::incompatible: return "incompatible";
    case Compatibility::first_not_lie: return "first bracket is not a Lie bracket";
    case Compatibility::second_not_lie: return "second bracket is not a Lie bracket";
  }
  return "?";
}

struct CompatibilityReport {
  Compatibility status = Compatibility::compatible;
  std::optional<JacobiViolation> violation;  // mixed-identity or precondition failure
  [[nodiscard]] bool ok() const { return status == Compatibility::compatible; }
};

/// Decides whether the sum of two Lie brackets is a Lie bracket, by the
/// mixed identity and independently by Jacobi on the sum. The two routes
/// must agree.
inline CompatibilityReport compatibility_check(const BracketPair& p, const CheckOptions& options = {}) {
  if (auto r = validate_structure_constants(p.first, options); !r.ok())
    return {Compatibility::first_not_lie, r.violation};
  if (auto r = validate_structure_constants(p.second, options); !r.ok())
    return {Compatibility::second_not_lie, r.violation};
  const JacobiReport mixed = mixed_jacobi_check(p, options);
  const JacobiReport sum = validate_structure_constants(linear_combination(1, p.first, 1, p.second), options);
  detail::ensure(mixed.ok() == sum.ok(), "compatibility: mixed identity and sum-Jacobi disagree");
  if (!mixed.ok()) return {Compatibility::incompatible, mixed.violation};
  return {};
}

/// lambda [.,.]_1 + mu [.,.]_2 for a compatible pair.
inline StructureConstants pencil_bracket(const BracketPair& p, const Rational& lambda, const Rational& mu) {
  const CompatibilityReport r = compatibility_check(p);
  detail::require(r.ok(), std::string("pencil: ") + to_string(r.status));
  StructureConstants out = linear_combination(lambda, p.first, mu, p.second);
#ifndef NDEBUG
  detail::ensure(is_lie(out), "pencil of compatible brackets fails Jacobi");
#endif
  return out;
}

/// d beta(X,Y) = [X, beta Y] - [Y, beta X] - beta [X,Y] for a linear map
/// beta (column b is beta(e_b)). Returned as an antisymmetric table.
inline StructureConstants coboundary_of_one_cochain(const StructureConstants& c, const RationalMatrix& beta) {
  const std::size_t d = c.dim();
  detail::require(beta.rows() == d && beta.cols() == d, "coboundary: beta must be dim x dim");
  auto column = [&](std::size_t b) {
    AlgebraElement v = AlgebraElement::zero(d);
    for (std::size_t k = 0; k < d; ++k) v.coords[k] = beta(k, b);
    return v;
  };
  StructureConstants out(d, "coboundary");
  for (std::size_t a = 0; a < d; ++a) {
    const AlgebraElement ea = AlgebraElement::basis(d, a);
    for (std::size_t b = a + 1; b < d; ++b) {
      const AlgebraElement eb = AlgebraElement::basis(d, b);
      AlgebraElement value = bracket_eval(c, ea, column(b)) - bracket_eval(c, eb, column(a));
      const AlgebraElement inner = bracket_eval(c, ea, eb);
      value -= AlgebraElement{beta * std::span<const Rational>(inner.coords)};
      for (std::size_t e = 0; e < d; ++e) out.add(a, b, e, value.coords[e]);
    }
  }
  return out;
}

}  // namespace lieext
