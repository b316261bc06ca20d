#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieext/algebra.hpp"
#include "lieext/error.hpp"
#include "lieext/matrix.hpp"
#include "lieext/wtensor.hpp"

namespace lieext {

/// Element x = (x_0, ..., x_{n-1}) of A^n with A = Mat(p).
struct BlockVector {
  std::vector<RationalMatrix> blocks;

  explicit BlockVector(std::vector<RationalMatrix> b) : blocks(std::move(b)) {
    detail::require(!blocks.empty(), "block vector needs n >= 1");
    const std::size_t p = blocks.front().rows();
    detail::require(p >= 1, "block vector needs p >= 1");
    for (const auto& m : blocks) detail::require(m.rows() == p && m.cols() == p, "blocks must all be p x p");
  }

  static BlockVector zero(std::size_t n, std::size_t p) {
    detail::require(n >= 1 && p >= 1, "block vector needs n, p >= 1");
    return BlockVector(std::vector<RationalMatrix>(n, RationalMatrix(p, p)));
  }
  /// a_i = alpha_i * identity.
  static BlockVector scalar_pattern(const AlphaVector& alpha, std::size_t p) {
    BlockVector v = zero(alpha.n(), p);
    for (std::size_t i = 0; i < alpha.n(); ++i) v.blocks[i] = RationalMatrix::identity(p) * alpha.coords[i];
    return v;
  }
  /// a_0 = identity, others zero; embeds to the unit of the sandwich product.
  static BlockVector identity_pattern(std::size_t n, std::size_t p) {
    return scalar_pattern(AlphaVector::unit(n, 0), p);
  }

  [[nodiscard]] std::size_t n() const { return blocks.size(); }
  [[nodiscard]] std::size_t p() const { return blocks.front().rows(); }

  friend BlockVector operator-(const BlockVector& a, const BlockVector& b) {
    detail::require(a.n() == b.n() && a.p() == b.p(), "block vector size mismatch");
    BlockVector out = a;
    for (std::size_t i = 0; i < a.n(); ++i) out.blocks[i] -= b.blocks[i];
    return out;
  }
  friend bool operator==(const BlockVector& a, const BlockVector& b) { return a.blocks == b.blocks; }
};

namespace detail {

inline void require_same_shape(const BlockVector& a, const BlockVector& b) {
  require(a.n() == b.n() && a.p() == b.p(), "block vectors differ in n or p");
}

inline RationalMatrix block(const RationalMatrix& m, std::size_t p, std::size_t bi, std::size_t bj) {
  RationalMatrix out(p, p);
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < p; ++c) out(r, c) = m(bi * p + r, bj * p + c);
  return out;
}

}  // namespace detail

/// X with block (i, j) equal to x_{(i + j) mod n}.
inline RationalMatrix embed_circulant(const BlockVector& x) {
  const std::size_t n = x.n(), p = x.p();
  RationalMatrix m(n * p, n * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const RationalMatrix& b = x.blocks[(i + j) % n];
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c) m(i * p + r, j * p + c) = b(r, c);
    }
  return m;
}

/// Block (i, j) depends only on (i + j) mod n.
inline bool has_circulant_pattern(const RationalMatrix& m, std::size_t n, std::size_t p) {
  detail::require(m.rows() == n * p && m.cols() == n * p, "pattern check: wrong matrix size");
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c)
          if (m(i * p + r, j * p + c) != m(r, ((i + j) % n) * p + c)) return false;
  return true;
}

/// Block (i, j) depends only on (j - i) mod n.
inline bool has_shift_pattern(const RationalMatrix& m, std::size_t n, std::size_t p) {
  detail::require(m.rows() == n * p && m.cols() == n * p, "pattern check: wrong matrix size");
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < p; ++c)
          if (m(i * p + r, j * p + c) != m(r, ((j + n - i) % n) * p + c)) return false;
  return true;
}

/// Reads x_j = X_{0j} off block row 0.
inline BlockVector block_row0(const RationalMatrix& m, std::size_t n, std::size_t p) {
  detail::require(m.rows() == n * p && m.cols() == n * p, "block row: wrong matrix size");
  std::vector<RationalMatrix> blocks;
  for (std::size_t j = 0; j < n; ++j) blocks.push_back(detail::block(m, p, 0, j));
  return BlockVector(std::move(blocks));
}

/// z with embed(z) = embed(x) embed(a) embed(y).
inline BlockVector sandwich_product(const BlockVector& x, const BlockVector& a, const BlockVector& y) {
  detail::require_same_shape(x, a);
  detail::require_same_shape(x, y);
  const RationalMatrix product = embed_circulant(x) * embed_circulant(a) * embed_circulant(y);
  detail::ensure(has_circulant_pattern(product, x.n(), x.p()), "sandwich product left the circulant pattern");
  return block_row0(product, x.n(), x.p());
}

/// [X, Y]_A = XAY - YAX, computed through the embedding.
inline BlockVector bracket_sandwich(const BlockVector& x, const BlockVector& y, const BlockVector& a) {
  return sandwich_product(x, a, y) - sandwich_product(y, a, x);
}

/// z_i = sum_{s,k} (x_s a_{s+k-i} y_k - y_k a_{s+k-i} x_s), indices mod n.
inline BlockVector component_bracket(const BlockVector& x, const BlockVector& y, const BlockVector& a) {
  detail::require_same_shape(x, a);
  detail::require_same_shape(x, y);
  const std::size_t n = x.n();
  BlockVector z = BlockVector::zero(n, x.p());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t k = 0; k < n; ++k) {
        const RationalMatrix& as = a.blocks[(s + k + n - i) % n];
        z.blocks[i] += x.blocks[s] * as * y.blocks[k] - y.blocks[k] * as * x.blocks[s];
      }
  return z;
}

/// beta_A(M) = (AM + MA) / 2 on full np x np matrices.
inline RationalMatrix beta_matrix(const RationalMatrix& a, const RationalMatrix& m) {
  return (a * m + m * a) * Rational(1, 2);
}

/// (AX + XA) / 2 for embedded a and x. The result has block (i, j) depending
/// on (j - i) mod n, so block row 0 determines it.
inline BlockVector beta_map(const BlockVector& a, const BlockVector& x) {
  detail::require_same_shape(a, x);
  const RationalMatrix m = beta_matrix(embed_circulant(a), embed_circulant(x));
  detail::ensure(has_shift_pattern(m, x.n(), x.p()), "beta map result lost its block pattern");
  return block_row0(m, x.n(), x.p());
}

struct CoboundaryReport {
  std::optional<std::size_t> failing_trial;
  [[nodiscard]] bool ok() const { return !failing_trial.has_value(); }
};

/// XAY - YAX == [X, beta(Y)] - [Y, beta(X)] - beta([X, Y]) in Mat(np) for
/// every trial pair.
inline CoboundaryReport coboundary_identity_check(const BlockVector& a,
                                                  const std::vector<std::pair<BlockVector, BlockVector>>& trials) {
  const RationalMatrix am = embed_circulant(a);
  for (std::size_t t = 0; t < trials.size(); ++t) {
    const auto& [x, y] = trials[t];
    detail::require_same_shape(a, x);
    detail::require_same_shape(a, y);
    const RationalMatrix xm = embed_circulant(x), ym = embed_circulant(y);
    const RationalMatrix lhs = xm * am * ym - ym * am * xm;
    const RationalMatrix rhs = commutator(xm, beta_matrix(am, ym)) - commutator(ym, beta_matrix(am, xm)) -
                               beta_matrix(am, commutator(xm, ym));
    if (!(lhs == rhs)) return {t};
  }
  return {};
}

inline bool is_symmetric(const RationalMatrix& m) { return m == m.transpose(); }
inline bool is_antisymmetric(const RationalMatrix& m) { return m == m.transpose() * Rational(-1); }

/// Structure constants of [x, y]_a = x a y - y a x on so(p) for a symmetric
/// parameter a, in the E_ab - E_ba basis. a = identity gives so(p).
inline StructureConstants so_sym_bundle(const RationalMatrix& a) {
  detail::require(a.square() && a.rows() >= 2, "bundle parameter must be p x p with p >= 2");
  detail::require(is_symmetric(a), "bundle parameter must be symmetric");
  return algebras::so_constants(a.rows(), "so(" + std::to_string(a.rows()) + ")_a",
                                [&](const RationalMatrix& x, const RationalMatrix& y) { return x * a * y - y * a * x; });
}

/// Blocks of so(p) matrices as a G^n element in so(p) coordinates.
inline GnElement so_blocks_to_gn(const BlockVector& x) {
  GnElement g;
  for (const auto& b : x.blocks) g.blocks.push_back(algebras::so_coordinates(b));
  return g;
}

}  // namespace lieext
