#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lieext;
using lieext::testing::Gen;

namespace {

WTensor from_entries(std::size_t n, std::initializer_list<std::pair<WIndex, std::int64_t>> entries) {
  WTensor w(n);
  for (const auto& [idx, v] : entries) w.set(idx[0], idx[1], idx[2], v);
  return w;
}

/// W^{00}_0 = W^{11}_0 = 1: symmetric, slices diag(1,0) and E_01 do not commute.
WTensor invalid_witness() { return from_entries(2, {{{0, 0, 0}, 1}, {{1, 1, 0}, 1}}); }

/// Structure tensor of K[t]/(t^2 - t - 1) in the basis (1, t).
WTensor golden_ratio_tensor() {
  return from_entries(2, {{{0, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 1, 1}, 1}, {{1, 0, 1}, 1}, {{1, 1, 1}, 1}});
}

GnElement gn(std::initializer_list<AlgebraElement> blocks) { return GnElement{std::vector<AlgebraElement>(blocks)}; }

AlgebraElement e3(std::size_t i, const Rational& s = 1) { return s * AlgebraElement::basis(3, i); }

AlgebraElement zero3() { return AlgebraElement::zero(3); }

}  // namespace

// --- validation -----------------------------------------------------------------

TEST(WTensorValidate, Examples) {
  EXPECT_TRUE(wtensor_validate(direct_sum_w(3)).ok());
  EXPECT_TRUE(wtensor_validate(circulant_w(AlphaVector::unit(3, 0))).ok());
  const auto r = wtensor_validate(from_entries(2, {{{0, 1, 0}, 1}}));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->kind, WViolation::Kind::symmetry);
  EXPECT_EQ(r.violation->indices, (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(r.violation->residual, Rational(1));
}

TEST(WTensorValidate, InvalidWitnessFailsAssociativity) {
  const auto r = wtensor_validate(invalid_witness());
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->kind, WViolation::Kind::associativity);
  EXPECT_TRUE(slice_commutation_violation(slices(invalid_witness())).has_value());
}

TEST(WTensorValidate, GoldenRatioTensorIsValid) {
  EXPECT_TRUE(wtensor_validate(golden_ratio_tensor()).ok());
  EXPECT_EQ(slice_matrix(golden_ratio_tensor(), 0), RationalMatrix::identity(2));
  EXPECT_TRUE(jacobi_certify(golden_ratio_tensor(), algebras::sl2()).ok());
}

TEST(WTensorValidate, ReportIsIndependentOfThreadCount) {
  Gen gen(17);
  for (int t = 0; t < 60; ++t) {
    const WTensor w = gen.symmetric_sign_tensor(2 + gen.index(4));
    const auto serial = wtensor_validate(w, {1, 64});
    for (std::size_t threads : {2u, 4u, 7u}) EXPECT_EQ(wtensor_validate(w, {threads, 64}).violation, serial.violation);
  }
}

TEST(WTensorValidate, AssociativityAndCommutationPathsAgree) {
  Gen gen(23);
  std::size_t valid = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + gen.index(5);
    WTensor w = gen.symmetric_sign_tensor(n);
    if (t % 4 == 0) w = circulant_w(gen.alpha(n));
    const bool assoc = !associativity_violation(w).has_value();
    const bool comm = !slice_commutation_violation(slices(w)).has_value();
    EXPECT_EQ(assoc, comm);
    valid += assoc ? 1 : 0;
  }
  EXPECT_GT(valid, 0u);
  EXPECT_LT(valid, 200u);
}

// --- slices ---------------------------------------------------------------------

TEST(SliceMatrix, DirectSumSlicesAreUnitProjectors) {
  const WTensor w = direct_sum_w(4);
  for (std::size_t k = 0; k < 4; ++k) {
    RationalMatrix expected(4, 4);
    expected(k, k) = 1;
    EXPECT_EQ(slice_matrix(w, k), expected);
  }
}

TEST(SliceMatrix, CirculantUnitSlicesArePermutations) {
  const std::size_t n = 5;
  const WTensor w = circulant_w(AlphaVector::unit(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    const RationalMatrix m = slice_matrix(w, k);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> basis(n);
      basis[i] = 1;
      const auto image = m * std::span<const Rational>(basis);
      for (std::size_t r = 0; r < n; ++r) EXPECT_EQ(image[r], Rational(r == (i + k) % n ? 1 : 0));
    }
  }
}

TEST(SliceMatrix, LeibnitzZeroSliceIsIdentity) {
  EXPECT_EQ(slice_matrix(leibnitz_w(4), 0), RationalMatrix::identity(4));
}

TEST(SliceMatrix, IndexOutOfRange) { EXPECT_THROW(slice_matrix(direct_sum_w(2), 2), InvalidArgument); }

// --- families -------------------------------------------------------------------

TEST(DirectSum, Entries) {
  EXPECT_EQ(direct_sum_w(1), from_entries(1, {{{0, 0, 0}, 1}}));
  EXPECT_EQ(direct_sum_w(3), from_entries(3, {{{0, 0, 0}, 1}, {{1, 1, 1}, 1}, {{2, 2, 2}, 1}}));
  EXPECT_TRUE(wtensor_validate(direct_sum_w(4)).ok());
}

TEST(Circulant, Formula) {
  Gen gen(2);
  for (std::size_t n = 1; n <= 6; ++n) {
    const AlphaVector a = gen.alpha(n);
    const WTensor w = circulant_w(a);
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(w.get(s, k, i), a.coords[(s + k + n - i) % n]);
  }
}

TEST(Circulant, UnitTwoExpansion) {
  const StructureConstants c = algebras::sl2();
  Gen gen(31);
  const WTensor w = circulant_w(AlphaVector::unit(2, 0));
  for (int t = 0; t < 10; ++t) {
    const GnElement x = gen.gn(2, 3), y = gen.gn(2, 3);
    const GnElement r = extension_bracket(w, c, x, y);
    EXPECT_EQ(r.blocks[0], bracket_eval(c, x.blocks[0], y.blocks[0]) + bracket_eval(c, x.blocks[1], y.blocks[1]));
    EXPECT_EQ(r.blocks[1], bracket_eval(c, x.blocks[0], y.blocks[1]) + bracket_eval(c, x.blocks[1], y.blocks[0]));
  }
}

TEST(Circulant, ZeroAlphaIsZeroTensor) {
  AlphaVector zero;
  zero.coords.assign(4, Rational(0));
  EXPECT_TRUE(circulant_w(zero).entries().empty());
}

TEST(Circulant, UnitOneSupport) {
  const WTensor w = circulant_w(AlphaVector::unit(3, 1));
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(w.get(s, k, i), Rational((s + k + 3 - i) % 3 == 1 ? 1 : 0));
}

TEST(Leibnitz, Entries) {
  const WTensor w = leibnitz_w(3);
  EXPECT_EQ(w.entries().size(), 6u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(w.get(i, j, k), Rational(i + j == k ? 1 : 0));
  EXPECT_EQ(leibnitz_w(1), direct_sum_w(1));
  EXPECT_TRUE(wtensor_validate(leibnitz_w(5)).ok());
}

TEST(Leibnitz, TwoCopyExpansion) {
  const StructureConstants c = algebras::so3();
  Gen gen(32);
  for (int t = 0; t < 10; ++t) {
    const GnElement x = gen.gn(2, 3), y = gen.gn(2, 3);
    const GnElement r = extension_bracket(leibnitz_w(2), c, x, y);
    EXPECT_EQ(r.blocks[0], bracket_eval(c, x.blocks[0], y.blocks[0]));
    EXPECT_EQ(r.blocks[1], bracket_eval(c, x.blocks[0], y.blocks[1]) + bracket_eval(c, x.blocks[1], y.blocks[0]));
  }
}

TEST(LeibnitzDeform, EndpointsAndTwoCopyExpansion) {
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(leibnitz_deform(n, 1), circulant_w(AlphaVector::unit(n, 0)));
    EXPECT_EQ(leibnitz_deform(n, 0), leibnitz_w(n));
  }
  const Rational lambda(-3, 7);
  const WTensor w = leibnitz_deform(2, lambda);
  const StructureConstants c = algebras::sl2();
  Gen gen(33);
  for (int t = 0; t < 10; ++t) {
    const GnElement x = gen.gn(2, 3), y = gen.gn(2, 3);
    const GnElement r = extension_bracket(w, c, x, y);
    EXPECT_EQ(r.blocks[0], bracket_eval(c, x.blocks[0], y.blocks[0]) + lambda * bracket_eval(c, x.blocks[1], y.blocks[1]));
    EXPECT_EQ(r.blocks[1], bracket_eval(c, x.blocks[0], y.blocks[1]) + bracket_eval(c, x.blocks[1], y.blocks[0]));
  }
  EXPECT_TRUE(wtensor_validate(leibnitz_deform(4, Rational(1, 2))).ok());
}

TEST(LeibnitzDeform, SplitsIntoCompatibleParts) {
  const StructureConstants c = algebras::sl2();
  for (std::size_t n = 2; n <= 4; ++n) {
    WTensor wrap(n);
    const WTensor full = leibnitz_deform(n, 1);
    for (const auto& [idx, v] : full.entries())
      if (idx[0] + idx[1] >= n) wrap.set(idx[0], idx[1], idx[2], v);
    const BracketPair pair(induced_structure_constants(leibnitz_w(n), c), induced_structure_constants(wrap, c));
    EXPECT_TRUE(mixed_jacobi_check(pair).ok());
    const Rational lambda(5, 3);
    EXPECT_EQ(linear_combination(1, pair.first, lambda, pair.second),
              induced_structure_constants(leibnitz_deform(n, lambda), c));
  }
}

TEST(Truncate, Examples) {
  const WTensor t = truncate_to_solvable(leibnitz_w(4));
  EXPECT_EQ(t.n(), 3u);
  EXPECT_EQ(t, from_entries(3, {{{0, 0, 1}, 1}, {{0, 1, 2}, 1}, {{1, 0, 2}, 1}}));
  EXPECT_EQ(truncate_to_solvable(direct_sum_w(3)), direct_sum_w(2));
  EXPECT_THROW(truncate_to_solvable(direct_sum_w(1)), InvalidArgument);
  EXPECT_THROW(truncate_to_solvable(invalid_witness()), InvalidArgument);
}

bool closed_without_zero(const WTensor& w) {
  for (const auto& [idx, v] : w.entries())
    if (idx[0] >= 1 && idx[1] >= 1 && idx[2] == 0) return false;
  return true;
}

TEST(Families, AllMembersAreValid) {
  Gen gen(41);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& m : lieext::testing::family_members(n, gen, 5)) {
      if (m.label.rfind("truncate(", 0) == 0) continue;
      SCOPED_TRACE(m.label + " n=" + std::to_string(n));
      EXPECT_TRUE(wtensor_validate(m.w).ok());
    }
}

TEST(Families, TruncationIsValidWhenHigherIndicesAvoidZero) {
  Gen gen(43);
  for (std::size_t n = 2; n <= 6; ++n)
    for (const auto& m : lieext::testing::family_members(n, gen, 5)) {
      if (m.label.rfind("truncate(", 0) == 0) continue;
      SCOPED_TRACE(m.label + " n=" + std::to_string(n));
      const bool valid = wtensor_validate(truncate_to_solvable(m.w)).ok();
      if (closed_without_zero(m.w)) {
        EXPECT_TRUE(valid);
      }
    }
  for (std::size_t n = 2; n <= 8; ++n) {
    EXPECT_TRUE(wtensor_validate(truncate_to_solvable(leibnitz_w(n))).ok());
    EXPECT_TRUE(wtensor_validate(truncate_to_solvable(leibnitz_deform(n, 0))).ok());
    EXPECT_TRUE(wtensor_validate(truncate_to_solvable(direct_sum_w(n))).ok());
  }
}

TEST(Families, TruncatedShiftIsNotValid) {
  const WTensor t = truncate_to_solvable(circulant_w(AlphaVector::unit(3, 0)));
  EXPECT_EQ(t, from_entries(2, {{{0, 0, 1}, 1}, {{1, 1, 0}, 1}}));
  EXPECT_FALSE(wtensor_validate(t).ok());
  EXPECT_FALSE(wtensor_validate(truncate_to_solvable(leibnitz_deform(3, 1))).ok());
}

// --- alpha slice expansion --------------------------------------------------------

TEST(AlphaSliceExpand, Examples) {
  for (std::size_t s = 0; s < 4; ++s)
    EXPECT_EQ(alpha_slice_expand(AlphaVector::unit(4, 0), s), slice_matrix(circulant_w(AlphaVector::unit(4, 0)), s));
  AlphaVector ones{{1, 1}};
  RationalMatrix all_ones(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) all_ones(i, j) = 1;
  EXPECT_EQ(alpha_slice_expand(ones, 0), all_ones);
  Gen gen(43);
  for (std::size_t n = 1; n <= 7; ++n) {
    const AlphaVector a = gen.alpha(n);
    for (std::size_t s = 0; s < n; ++s) EXPECT_EQ(alpha_slice_expand(a, s), slice_matrix(circulant_w(a), s));
  }
  EXPECT_THROW(alpha_slice_expand(ones, 2), InvalidArgument);
}

// --- extension bracket -------------------------------------------------------------

TEST(ExtensionBracket, Examples) {
  const StructureConstants c = algebras::sl2();
  EXPECT_EQ(extension_bracket(leibnitz_w(2), c, gn({e3(0), zero3()}), gn({e3(1), e3(1)})), gn({e3(1, 2), e3(1, 2)}));
  EXPECT_EQ(extension_bracket(direct_sum_w(2), c, gn({e3(0), e3(0)}), gn({e3(1), e3(2)})), gn({e3(1, 2), e3(2, -2)}));
  Gen gen(47);
  const GnElement x = gen.gn(3, 3);
  EXPECT_TRUE(extension_bracket(circulant_w(gen.alpha(3)), c, x, x).is_zero());
}

TEST(ExtensionBracket, SizeMismatchIsRejected) {
  const StructureConstants c = algebras::sl2();
  Gen gen(48);
  EXPECT_THROW(extension_bracket(direct_sum_w(2), c, gen.gn(3, 3), gen.gn(3, 3)), InvalidArgument);
  EXPECT_THROW(extension_bracket(direct_sum_w(2), c, gen.gn(2, 2), gen.gn(2, 2)), InvalidArgument);
}

TEST(InducedStructureConstants, AgreesWithExtensionBracket) {
  Gen gen(53);
  for (const char* name : {"sl2", "so3", "heisenberg3", "so(4)"}) {
    const StructureConstants c = builtin_algebra(name);
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const WTensor& w : {circulant_w(gen.alpha(n)), leibnitz_deform(n, gen.rational()), direct_sum_w(n)}) {
        const StructureConstants big = induced_structure_constants(w, c);
        EXPECT_EQ(big.dim(), n * c.dim());
        for (int t = 0; t < 5; ++t) {
          const GnElement x = gen.gn(n, c.dim()), y = gen.gn(n, c.dim());
          const AlgebraElement flat = bracket_eval(big, AlgebraElement{x.flatten()}, AlgebraElement{y.flatten()});
          EXPECT_EQ(flat.coords, extension_bracket(w, c, x, y).flatten());
        }
      }
    }
  }
}

TEST(InducedStructureConstants, Examples) {
  const StructureConstants sl2 = algebras::sl2();
  const StructureConstants ds = induced_structure_constants(direct_sum_w(2), sl2);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t e = 0; e < 3; ++e) {
        EXPECT_EQ(ds.coefficient(a, b, e), sl2.coefficient(a, b, e));
        EXPECT_EQ(ds.coefficient(3 + a, 3 + b, 3 + e), sl2.coefficient(a, b, e));
        EXPECT_EQ(ds.coefficient(a, 3 + b, e), Rational(0));
      }
  const StructureConstants nil = induced_structure_constants(leibnitz_w(2), algebras::heisenberg3());
  EXPECT_EQ(nil.dim(), 6u);
  EXPECT_TRUE(is_lie(nil));
  for (std::size_t k = 0; k < 6; ++k) EXPECT_TRUE(is_nilpotent(ad_matrix(nil, AlgebraElement::basis(6, k))));
  EXPECT_TRUE(is_lie(induced_structure_constants(circulant_w(AlphaVector{{1, 1}}), sl2)));
}

TEST(InducedStructureConstants, CapIsEnforced) {
  EXPECT_THROW(induced_structure_constants(leibnitz_w(10), algebras::gl(4)), CapExceeded);
  EXPECT_NO_THROW(induced_structure_constants(leibnitz_w(10), algebras::gl(4), 160));
}

// --- certification -----------------------------------------------------------------

TEST(JacobiCertify, Examples) {
  EXPECT_TRUE(jacobi_certify(leibnitz_w(3), algebras::sl2()).ok());
  EXPECT_TRUE(jacobi_certify(circulant_w(AlphaVector{{2, 0, 1}}), algebras::so3()).ok());
  const CertifyReport r = jacobi_certify(invalid_witness(), algebras::sl2());
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.kind, CertifyReport::Kind::jacobi);
  EXPECT_EQ(*r.violation, (JacobiViolation{0, 3, 4, 1, Rational(-4)}));
}

TEST(JacobiCertify, AsymmetricTensorFailsAntisymmetry) {
  const CertifyReport r = jacobi_certify(from_entries(2, {{{0, 1, 0}, 1}}), algebras::sl2());
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.kind, CertifyReport::Kind::antisymmetry);
}

TEST(JacobiCertify, CapExceeded) {
  EXPECT_THROW(jacobi_certify(leibnitz_w(10), algebras::gl(4)), CapExceeded);
}

TEST(JacobiCertify, AgreesWithOracleOnInducedAlgebras) {
  const io::Json cases = lieext::testing::load_data("induced_cases.json");
  const std::map<std::string, WTensor> tensors{
      {"leibnitz3", leibnitz_w(3)},
      {"circulant_2_0_1", circulant_w(AlphaVector{{2, 0, 1}})},
      {"circulant_1_1_1", circulant_w(AlphaVector{{1, 1, 1}})},
      {"invalid_witness", invalid_witness()},
      {"golden_ratio_tensor", golden_ratio_tensor()}};
  ASSERT_EQ(cases.size(), 15u);
  for (const auto& entry : cases) {
    const WTensor& w = tensors.at(entry["w"].get<std::string>());
    const StructureConstants c = builtin_algebra(entry["algebra"].get<std::string>());
    SCOPED_TRACE(entry["w"].get<std::string>() + " / " + c.name());
    const StructureConstants big = induced_structure_constants(w, c);
    EXPECT_EQ(center_basis(big).size(), entry["center_dim"].get<std::size_t>());
    for (std::size_t threads : {1u, 4u}) {
      const CertifyReport r = jacobi_certify(w, c, {threads, 64});
      const JacobiReport v = validate_structure_constants(big, {threads, 64});
      if (entry["violation"].is_null()) {
        EXPECT_TRUE(r.ok());
        EXPECT_TRUE(v.ok());
      } else {
        const auto& j = entry["violation"];
        const JacobiViolation expected{j["a"].get<std::size_t>(), j["b"].get<std::size_t>(), j["c"].get<std::size_t>(),
                                       j["f"].get<std::size_t>(),
                                       Rational::parse_canonical(j["residual"].get<std::string>())};
        ASSERT_FALSE(r.ok());
        EXPECT_EQ(*r.violation, expected);
        ASSERT_FALSE(v.ok());
        EXPECT_EQ(*v.violation, expected);
      }
    }
  }
}

TEST(JacobiCertify, ValidFamiliesCertifyOnNonabelianBuiltins) {
  Gen gen(59);
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& m : lieext::testing::family_members(n, gen, 2)) {
      if (!wtensor_validate(m.w).ok()) continue;
      for (const char* name : {"sl2", "so3", "heisenberg3"}) {
        SCOPED_TRACE(m.label + " / " + name);
        EXPECT_TRUE(jacobi_certify(m.w, builtin_algebra(name), {2, 64}).ok());
      }
    }
}

TEST(JacobiCertify, InvalidSymmetricTensorsFailOnSl2) {
  Gen gen(61);
  std::size_t checked = 0;
  for (int t = 0; t < 40 && checked < 10; ++t) {
    const WTensor w = gen.symmetric_sign_tensor(2);
    if (wtensor_validate(w).ok()) continue;
    ++checked;
    EXPECT_FALSE(jacobi_certify(w, algebras::sl2()).ok());
  }
  EXPECT_EQ(checked, 10u);
}

// --- filtration -------------------------------------------------------------------

TEST(FiltrationSupport, Examples) {
  EXPECT_TRUE(filtration_support_check(truncate_to_solvable(leibnitz_w(4))).ok());
  const auto r = filtration_support_check(direct_sum_w(2));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(*r.violation, (WIndex{0, 0, 0}));
  EXPECT_TRUE(filtration_support_check(WTensor(3)).ok());
}

TEST(MaxAbelianFiltrationIdeal, Examples) {
  EXPECT_EQ(max_abelian_filtration_ideal(truncate_to_solvable(leibnitz_w(4))), 1u);
  EXPECT_EQ(max_abelian_filtration_ideal(WTensor(3)), 0u);
  EXPECT_EQ(max_abelian_filtration_ideal(truncate_to_solvable(leibnitz_w(3))), 1u);
  EXPECT_EQ(max_abelian_filtration_ideal(truncate_to_solvable(leibnitz_w(6))), 2u);
  EXPECT_THROW(max_abelian_filtration_ideal(direct_sum_w(2)), InvalidArgument);
}

TEST(MaxAbelianFiltrationIdeal, ComponentsAboveKSpanAnAbelianIdeal) {
  const StructureConstants c = algebras::sl2();
  for (std::size_t n = 3; n <= 7; ++n) {
    const WTensor w = truncate_to_solvable(leibnitz_w(n));
    const std::size_t k = max_abelian_filtration_ideal(w);
    const StructureConstants big = induced_structure_constants(w, c);
    std::vector<AlgebraElement> ideal;
    for (std::size_t i = k * 3; i < w.n() * 3; ++i) ideal.push_back(AlgebraElement::basis(big.dim(), i));
    for (const auto& x : ideal) {
      for (const auto& y : ideal) EXPECT_TRUE(bracket_eval(big, x, y).is_zero());
      for (std::size_t a = 0; a < big.dim(); ++a)
        EXPECT_TRUE(in_span(ideal, bracket_eval(big, AlgebraElement::basis(big.dim(), a), x)));
    }
    if (k > 0) {
      std::vector<AlgebraElement> larger;
      for (std::size_t i = (k - 1) * 3; i < w.n() * 3; ++i) larger.push_back(AlgebraElement::basis(big.dim(), i));
      bool abelian = true;
      for (const auto& x : larger)
        for (const auto& y : larger) abelian = abelian && bracket_eval(big, x, y).is_zero();
      EXPECT_FALSE(abelian);
    }
  }
}
