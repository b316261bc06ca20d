#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace lieext;
using lieext::testing::Gen;

namespace {

io::Json parse(const std::string& text) { return io::parse_json(text, "test"); }

}  // namespace

TEST(StructureConstantsJson, RoundTrip) {
  for (const char* name : {"sl2", "so(4)", "gl(2)", "heisenberg3", "abelian(2)"}) {
    const StructureConstants c = builtin_algebra(name);
    const StructureConstants back = io::structure_constants_from_json(parse(io::to_json(c).dump()));
    EXPECT_EQ(back, c);
    EXPECT_EQ(back.name(), c.name());
  }
}

TEST(StructureConstantsJson, Format) {
  const io::Json j = io::to_json(algebras::heisenberg3());
  EXPECT_EQ(j.dump(), R"({"dim":3,"name":"heisenberg3","brackets":[{"a":0,"b":1,"coeffs":[{"e":2,"value":"1"}]}]})");
}

TEST(StructureConstantsJson, RejectsMalformedInput) {
  for (const char* text : {
           R"({"dim":3,"brackets":[{"a":1,"b":0,"coeffs":[{"e":2,"value":"1"}]}]})",
           R"({"dim":3,"brackets":[{"a":0,"b":3,"coeffs":[]}]})",
           R"({"dim":3,"brackets":[{"a":0,"b":1,"coeffs":[{"e":2,"value":"2/4"}]}]})",
           R"({"dim":3,"brackets":[{"a":0,"b":1,"coeffs":[{"e":2,"value":1}]}]})",
           R"({"dim":3,"brackets":[],"extra":1})",
           R"({"dim":0,"brackets":[]})",
           R"({"dim":3})",
           R"({"dim":-1,"brackets":[]})",
           R"({"dim":3,"brackets":[{"a":0,"b":1,"coeffs":[]},{"a":0,"b":1,"coeffs":[]}]})",
           R"({"dim":3,"brackets":[{"a":0,"b":1,"coeffs":[{"e":2,"value":"1"},{"e":2,"value":"1"}]}]})",
           R"([1,2,3])"}) {
    SCOPED_TRACE(text);
    EXPECT_THROW(io::structure_constants_from_json(parse(text)), InvalidArgument);
  }
  EXPECT_THROW(parse("{\"dim\": 3,"), InvalidArgument);
}

TEST(WTensorJson, RoundTripIsCanonical) {
  Gen gen(211);
  for (std::size_t n = 1; n <= 5; ++n) {
    const WTensor w = circulant_w(gen.alpha(n));
    const std::string text = io::to_json(w).dump(2);
    const WTensor back = io::wtensor_from_json(parse(text));
    EXPECT_EQ(back, w);
    EXPECT_EQ(io::to_json(back).dump(2), text);
  }
}

TEST(WTensorJson, LoaderSortsAndAcceptsMirroredPairs) {
  const WTensor w = io::wtensor_from_json(parse(R"({"n":2,"entries":[
      {"i":1,"j":0,"k":1,"value":"1"},{"i":0,"j":0,"k":0,"value":"1"},{"i":0,"j":1,"k":1,"value":"1"},
      {"i":0,"j":0,"k":0,"value":"1"},{"i":1,"j":1,"k":0,"value":"0"}]})"));
  EXPECT_EQ(w, leibnitz_w(2));
}

TEST(WTensorJson, OneSidedEntryLoadsAndFailsValidation) {
  const WTensor w = io::wtensor_from_json(parse(R"({"n":2,"entries":[{"i":0,"j":1,"k":0,"value":"1"}]})"));
  const auto r = wtensor_validate(w);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.violation->kind, WViolation::Kind::symmetry);
}

TEST(WTensorJson, RejectsContradictionsAndBadFields) {
  for (const char* text : {
           R"({"n":2,"entries":[{"i":0,"j":1,"k":0,"value":"1"},{"i":1,"j":0,"k":0,"value":"2"}]})",
           R"({"n":2,"entries":[{"i":0,"j":0,"k":0,"value":"1"},{"i":0,"j":0,"k":0,"value":"2"}]})",
           R"({"n":2,"entries":[{"i":0,"j":2,"k":0,"value":"1"}]})",
           R"({"n":0,"entries":[]})",
           R"({"n":2,"entries":[{"i":0,"j":0,"k":0,"value":"1","note":"x"}]})",
           R"({"n":2,"entries":[{"i":0,"j":0,"value":"1"}]})",
           R"({"n":2,"entries":{}})",
           R"({"n":2,"entries":[{"i":0,"j":0,"k":0,"value":"0/1"}]})"}) {
    SCOPED_TRACE(text);
    EXPECT_THROW(io::wtensor_from_json(parse(text)), InvalidArgument);
  }
}

TEST(PolyJson, RoundTrip) {
  Gen gen(223);
  for (int t = 0; t < 10; ++t) {
    const PolyFunction f = gen.poly(4, 5, 3);
    EXPECT_EQ(io::poly_from_json(parse(io::to_json(f).dump())), f);
  }
  EXPECT_THROW(io::poly_from_json(parse(R"({"dim":2,"terms":[{"exps":[1],"value":"1"}]})")), InvalidArgument);
  EXPECT_THROW(io::poly_from_json(parse(R"({"dim":2,"terms":[{"exps":[1,-1],"value":"1"}]})")), InvalidArgument);
}

TEST(SpectrumReport, Schema) {
  const io::Json j = io::spectrum_report(classify_circulant(AlphaVector{{1, 1, 1}}));
  EXPECT_EQ(j.dump(),
            R"({"n":3,"mu":[{"re":3.0,"im":0.0},{"re":0.0,"im":0.0},{"re":0.0,"im":0.0}],"zero_count":2,"m_nonabelian":1})");
}

TEST(DataFiles, StoredWitnessesLoad) {
  const WTensor witness = io::wtensor_from_json(lieext::testing::load_data("invalid_witness.json"));
  EXPECT_FALSE(wtensor_validate(witness).ok());
  EXPECT_FALSE(jacobi_certify(witness, algebras::sl2()).ok());
  const WTensor golden = io::wtensor_from_json(lieext::testing::load_data("golden_ratio_tensor.json"));
  EXPECT_TRUE(wtensor_validate(golden).ok());
  EXPECT_TRUE(jacobi_certify(golden, algebras::sl2()).ok());
}
