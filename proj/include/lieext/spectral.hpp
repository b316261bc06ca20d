#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lieext/error.hpp"
#include "lieext/matrix.hpp"
#include "lieext/wtensor.hpp"

namespace lieext {

using Complex = std::complex<double>;

inline constexpr double default_tolerance = 1e-9;

namespace detail {

/// omega^k with omega = exp(2 pi i / n); the exponent is reduced mod n first.
inline Complex root_of_unity(long long k, std::size_t n) {
  const long long nn = static_cast<long long>(n);
  const long long r = ((k % nn) + nn) % nn;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == nn) return {-1.0, 0.0};
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
}

inline void ensure_finite(Complex z) {
  ensure(std::isfinite(z.real()) && std::isfinite(z.imag()), "non-finite complex value");
}

}  // namespace detail

/// C_ij = alpha_{(j - i) mod n}.
inline RationalMatrix circulant_matrix(const AlphaVector& alpha) {
  const std::size_t n = alpha.n();
  RationalMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = alpha.coords[(j + n - i) % n];
  return c;
}

/// Exact rank over Q of the circulant with first row alpha. Over C this is
/// the number of nonzero mu_i.
inline std::size_t circulant_rank_exact(const AlphaVector& alpha) {
  detail::require(alpha.n() >= 1, "alpha must be nonempty");
  return rank(circulant_matrix(alpha));
}

struct MuSpectrum {
  std::size_t n = 0;
  std::vector<Complex> values;
  std::vector<bool> zero_flags;
  std::size_t exact_zero_count = 0;
};

/// mu_i = sum_r alpha_r omega^{-r i}. The number of |mu_i| < tolerance must
/// match n - circulant_rank_exact(alpha); otherwise SpectralMismatch.
inline MuSpectrum mu_spectrum(const AlphaVector& alpha, double tolerance = default_tolerance) {
  const std::size_t n = alpha.n();
  detail::require(n >= 1, "alpha must be nonempty");
  detail::require(tolerance > 0 && std::isfinite(tolerance), "tolerance must be positive");
  MuSpectrum out;
  out.n = n;
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex mu{0.0, 0.0};
    for (std::size_t r = 0; r < n; ++r) {
      if (alpha.coords[r].is_zero()) continue;
      mu += alpha.coords[r].to_double() *
            detail::root_of_unity(-static_cast<long long>(r) * static_cast<long long>(i), n);
    }
    detail::ensure_finite(mu);
    out.values.push_back(mu);
    const bool zero = std::abs(mu) < tolerance;
    out.zero_flags.push_back(zero);
    flagged += zero ? 1 : 0;
  }
  out.exact_zero_count = n - circulant_rank_exact(alpha);
  if (flagged != out.exact_zero_count) {
    throw SpectralMismatch("mu spectrum: " + std::to_string(flagged) + " values below tolerance but exact count is " +
                           std::to_string(out.exact_zero_count));
  }
  return out;
}

/// Omega_i^j = omega^{-ij} / n and its inverse (Omega^{-1})_i^j = omega^{ij}.
struct DftMatrix {
  std::size_t n = 0;
  Matrix<Complex> forward;
  Matrix<Complex> inverse;

  static DftMatrix make(std::size_t n) {
    detail::require(n >= 1, "DFT size must be >= 1");
    DftMatrix d{n, Matrix<Complex>(n, n), Matrix<Complex>(n, n)};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long long ij = static_cast<long long>(i * j);
        d.forward(i, j) = detail::root_of_unity(-ij, n) / static_cast<double>(n);
        d.inverse(i, j) = detail::root_of_unity(ij, n);
      }
    return d;
  }
};

inline Matrix<Complex> to_complex(const RationalMatrix& m) {
  Matrix<Complex> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

inline double max_abs_difference(const Matrix<Complex>& a, const Matrix<Complex>& b) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch");
  double worst = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

/// Dense complex three-index tensor; at(i, j, k) holds T^{ij}_k.
struct ComplexTensor {
  std::size_t n = 0;
  std::vector<Complex> data;

  explicit ComplexTensor(std::size_t size) : n(size), data(size * size * size) {}
  Complex& at(std::size_t i, std::size_t j, std::size_t k) { return data[(i * n + j) * n + k]; }
  [[nodiscard]] const Complex& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data[(i * n + j) * n + k];
  }

  static ComplexTensor from(const WTensor& w) {
    ComplexTensor t(w.n());
    for (const auto& [idx, v] : w.entries()) t.at(idx[0], idx[1], idx[2]) = v.to_double();
    return t;
  }
};

namespace detail {

/// T'^{ij}_k = sum_{p,q,s} T^{pq}_s U[p][i] U[q][j] L[k][s], one mode at a time.
inline ComplexTensor change_basis(const ComplexTensor& t, const Matrix<Complex>& upper, const Matrix<Complex>& lower) {
  const std::size_t n = t.n;
  ComplexTensor a(n), b(n), c(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t s = 0; s < n; ++s) acc += lower(k, s) * t.at(p, q, s);
        a.at(p, q, k) = acc;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t p = 0; p < n; ++p) acc += upper(p, i) * a.at(p, q, k);
        b.at(i, q, k) = acc;
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Complex acc{};
        for (std::size_t q = 0; q < n; ++q) acc += upper(q, j) * b.at(i, q, k);
        ensure_finite(acc);
        c.at(i, j, k) = acc;
      }
  return c;
}

}  // namespace detail

/// W~^{ij}_k = sum W^{pq}_s Omega^p_i Omega^q_j (Omega^{-1})_k^s.
inline ComplexTensor transform_w(const WTensor& w) {
  const DftMatrix dft = DftMatrix::make(w.n());
  return detail::change_basis(ComplexTensor::from(w), dft.forward, dft.inverse);
}

/// Undoes transform_w.
inline ComplexTensor inverse_transform_w(const ComplexTensor& t) {
  const DftMatrix dft = DftMatrix::make(t.n);
  return detail::change_basis(t, dft.inverse, dft.forward);
}

/// max over (i,j,k) of |T^{ij}_k - mu_k delta_k^i delta_k^j|.
inline double diagonal_pattern_deviation(const ComplexTensor& t, const std::vector<Complex>& mu) {
  detail::require(mu.size() == t.n, "mu length differs from tensor size");
  double worst = 0;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k) {
        const Complex expected = (i == k && j == k) ? mu[k] : Complex{};
        worst = std::max(worst, std::abs(t.at(i, j, k) - expected));
      }
  return worst;
}

inline double max_abs_difference(const ComplexTensor& a, const ComplexTensor& b) {
  detail::require(a.n == b.n, "tensor size mismatch");
  double worst = 0;
  for (std::size_t k = 0; k < a.data.size(); ++k) worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
  return worst;
}

struct CirculantClassification {
  std::size_t m_nonabelian = 0;  // copies of G with its own bracket
  std::size_t n_abelian = 0;     // copies carrying the zero bracket
  MuSpectrum spectrum;
};

/// The circulant structure is a direct sum of m copies of G and n - m
/// abelian copies, where n - m counts the vanishing mu_i.
inline CirculantClassification classify_circulant(const AlphaVector& alpha, double tolerance = default_tolerance) {
  MuSpectrum spectrum = mu_spectrum(alpha, tolerance);
  const std::size_t m = circulant_rank_exact(alpha);
  return {m, alpha.n() - m, std::move(spectrum)};
}

struct CommutingFamilyReport {
  /// (tensor a, slice s, tensor b, slice q) of the first non-commuting pair.
  std::optional<std::array<std::size_t, 4>> violation;
  [[nodiscard]] bool ok() const { return !violation.has_value(); }
};

/// Every slice of every tensor commutes with every other slice, exactly.
inline CommutingFamilyReport commuting_family_check(const std::vector<WTensor>& tensors) {
  if (tensors.empty()) return {};
  const std::size_t n = tensors.front().n();
  std::vector<std::vector<RationalMatrix>> all;
  for (const auto& w : tensors) {
    detail::require(w.n() == n, "commuting family: tensors have different n");
    all.push_back(slices(w));
  }
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t b = a; b < all.size(); ++b)
        for (std::size_t q = (a == b ? s + 1 : 0); q < n; ++q)
          if (!commutator(all[a][s], all[b][q]).is_zero()) return {std::array{a, s, b, q}};
  return {};
}

/// W^{(0)} is the identity and every other slice is nilpotent.
inline bool semisimple_form_check(const WTensor& w) {
  const auto mats = slices(w);
  if (!(mats[0] == RationalMatrix::identity(w.n()))) return false;
  for (std::size_t s = 1; s < mats.size(); ++s)
    if (!is_nilpotent(mats[s])) return false;
  return true;
}

/// Every slice is nilpotent.
inline bool solvable_form_check(const WTensor& w) {
  for (const auto& m : slices(w))
    if (!is_nilpotent(m)) return false;
  return true;
}

}  // namespace lieext
