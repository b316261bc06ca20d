#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lieext/algebra.hpp"
#include "lieext/error.hpp"
#include "lieext/rational.hpp"

namespace lieext {

/// Exponent multi-index of a monomial xi_0^k0 ... xi_{d-1}^k{d-1}.
using Exponents = std::vector<std::uint32_t>;

/// Polynomial in the coordinates xi_a on the dual space, exact coefficients.
class PolyFunction {
public:
  explicit PolyFunction(std::size_t dim) : dim_(dim) { detail::require(dim >= 1, "polynomial needs dim >= 1"); }

  static PolyFunction constant(std::size_t dim, const Rational& value) {
    PolyFunction f(dim);
    f.add_term(Exponents(dim, 0), value);
    return f;
  }
  /// xi_a.
  static PolyFunction coordinate(std::size_t dim, std::size_t a) {
    detail::require(a < dim, "coordinate index out of range");
    PolyFunction f(dim);
    Exponents e(dim, 0);
    e[a] = 1;
    f.add_term(e, 1);
    return f;
  }
  /// sum_a v_a xi_a.
  static PolyFunction linear(const std::vector<Rational>& v) {
    PolyFunction f(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) {
      Exponents e(v.size(), 0);
      e[a] = 1;
      f.add_term(e, v[a]);
    }
    return f;
  }

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const std::map<Exponents, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& coefficient) {
    detail::require(e.size() == dim_, "monomial has wrong number of exponents");
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  [[nodiscard]] PolyFunction derivative(std::size_t a) const {
    detail::require(a < dim_, "derivative index out of range");
    PolyFunction out(dim_);
    for (const auto& [e, c] : terms_) {
      if (e[a] == 0) continue;
      Exponents lowered = e;
      --lowered[a];
      out.add_term(lowered, c * Rational(static_cast<std::int64_t>(e[a])));
    }
    return out;
  }

  PolyFunction& operator+=(const PolyFunction& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyFunction& operator-=(const PolyFunction& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend PolyFunction operator+(PolyFunction a, const PolyFunction& b) { return a += b; }
  friend PolyFunction operator-(PolyFunction a, const PolyFunction& b) { return a -= b; }
  friend PolyFunction operator*(const Rational& s, const PolyFunction& f) {
    PolyFunction out(f.dim_);
    for (const auto& [e, c] : f.terms_) out.add_term(e, s * c);
    return out;
  }
  friend PolyFunction operator*(const PolyFunction& f, const PolyFunction& g) {
    f.check(g);
    PolyFunction out(f.dim_);
    for (const auto& [e1, c1] : f.terms_)
      for (const auto& [e2, c2] : g.terms_) {
        Exponents e(f.dim_);
        for (std::size_t k = 0; k < f.dim_; ++k) e[k] = e1[k] + e2[k];
        out.add_term(e, c1 * c2);
      }
    return out;
  }
  friend bool operator==(const PolyFunction&, const PolyFunction&) = default;

private:
  void check(const PolyFunction& o) const { detail::require(dim_ == o.dim_, "polynomial dimension mismatch"); }

  std::size_t dim_;
  std::map<Exponents, Rational> terms_;
};

/// Linear Poisson tensor on the dual of the algebra with constants c.
struct PoissonTensor {
  StructureConstants constants;
  [[nodiscard]] std::size_t dim() const { return constants.dim(); }
};

/// {f, g}(xi) = sum_{a,b,e} c_ab^e xi_e d_a f d_b g.
inline PolyFunction lie_poisson_bracket(const PoissonTensor& t, const PolyFunction& f, const PolyFunction& g) {
  detail::require(f.dim() == t.dim() && g.dim() == t.dim(), "Poisson bracket: dimension mismatch");
  const std::size_t d = t.dim();
  std::vector<PolyFunction> df, dg;
  for (std::size_t a = 0; a < d; ++a) {
    df.push_back(f.derivative(a));
    dg.push_back(g.derivative(a));
  }
  PolyFunction out(d);
  for (const auto& [key, vec] : t.constants.table()) {
    const auto [a, b] = key;
    const PolyFunction cross = df[a] * dg[b] - df[b] * dg[a];
    if (cross.is_zero()) continue;
    PolyFunction linear(d);
    for (const auto& [e, v] : vec) {
      Exponents ex(d, 0);
      ex[e] = 1;
      linear.add_term(ex, v);
    }
    out += linear * cross;
  }
  return out;
}

/// {{xi_a, xi_b}, xi_c} + cyclic = 0 for a < b < c. Must agree with the
/// structure-constant Jacobi check.
inline JacobiReport poisson_jacobi_check(const PoissonTensor& t) {
  const std::size_t d = t.dim();
  std::vector<PolyFunction> xi;
  for (std::size_t a = 0; a < d; ++a) xi.push_back(PolyFunction::coordinate(d, a));
  JacobiReport report;
  for (std::size_t a = 0; a < d && report.ok(); ++a)
    for (std::size_t b = a + 1; b < d && report.ok(); ++b)
      for (std::size_t c = b + 1; c < d && report.ok(); ++c) {
        const PolyFunction r = lie_poisson_bracket(t, lie_poisson_bracket(t, xi[a], xi[b]), xi[c]) +
                               lie_poisson_bracket(t, lie_poisson_bracket(t, xi[b], xi[c]), xi[a]) +
                               lie_poisson_bracket(t, lie_poisson_bracket(t, xi[c], xi[a]), xi[b]);
        if (r.is_zero()) continue;
        // The residual is linear: its first term names the component.
        const auto& [exps, coef] = *r.terms().rbegin();
        std::size_t f = 0;
        while (exps[f] == 0) ++f;
        report.violation = JacobiViolation{a, b, c, f, coef};
      }
  detail::ensure(report.ok() == validate_structure_constants(t.constants).ok(),
                 "Poisson Jacobi check disagrees with structure-constant Jacobi check");
  return report;
}

/// Linear Casimirs: the center of the algebra read as linear functions.
inline std::vector<PolyFunction> casimir_linear_basis(const PoissonTensor& t) {
  std::vector<PolyFunction> out;
  for (const auto& z : center_basis(t.constants)) {
    PolyFunction f = PolyFunction::linear(z.coords);
    for (std::size_t a = 0; a < t.dim(); ++a)
      detail::ensure(lie_poisson_bracket(t, f, PolyFunction::coordinate(t.dim(), a)).is_zero(),
                     "linear Casimir fails to Poisson-commute with a coordinate");
    out.push_back(std::move(f));
  }
  return out;
}

/// Entry (i, j) is true when {f_i, f_j} vanishes under both tensors.
inline std::vector<std::vector<bool>> involution_check(const PoissonTensor& t1, const PoissonTensor& t2,
                                                       const std::vector<PolyFunction>& fs) {
  detail::require(t1.dim() == t2.dim(), "involution check: tensors differ in dimension");
  std::vector<std::vector<bool>> out(fs.size(), std::vector<bool>(fs.size(), true));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < fs.size(); ++j)
      out[i][j] = lie_poisson_bracket(t1, fs[i], fs[j]).is_zero() && lie_poisson_bracket(t2, fs[i], fs[j]).is_zero();
  return out;
}

}  // namespace lieext
