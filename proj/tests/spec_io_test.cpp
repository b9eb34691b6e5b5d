#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "grassmann/construction.hpp"
#include "grassmann/spec_io.hpp"
#include "oracles.hpp"

namespace grassmann {
namespace {

Element E(const char* text) { return parse_element(text); }

bool same_images(const AutomorphismSpec& a, const AutomorphismSpec& b, Index bound) {
  for (Index i = 1; i <= bound; ++i) {
    if (image_of_generator(a, i) != image_of_generator(b, i)) return false;
  }
  return true;
}

TEST(SpecIoTest, Homogeneous) {
  using V = HomogeneousKind::Variant;
  EXPECT_TRUE(same_images(parse_spec(R"({"kind":"homogeneous","variant":"k","k":2})"), homogeneous({V::K, 2}), 10));
  EXPECT_TRUE(same_images(parse_spec(R"({"kind":"homogeneous","variant":"kstar","k":3})"),
                          homogeneous({V::KStar, 3}), 10));
  EXPECT_TRUE(same_images(parse_spec(R"({"kind":"homogeneous","variant":"infty"})"), homogeneous({V::Infty, 0}), 10));
  EXPECT_TRUE(
      same_images(parse_spec(R"({"kind":"homogeneous","variant":"canonical"})"), homogeneous({V::Canonical, 0}), 10));
  EXPECT_TRUE(
      same_images(parse_spec(R"({"kind":"homogeneous","variant":"trivial"})"), homogeneous({V::Trivial, 0}), 10));
}

TEST(SpecIoTest, MethodA) {
  AutomorphismSpec s = parse_spec(R"({"kind":"methodA","Iplus":{"from":2},"Iminus":[],"d":{"1":"e2e3e4"}})");
  EXPECT_TRUE(same_images(s, testing::method_a_example(), 12));
  AutomorphismSpec cof = parse_spec(
      R"({"kind":"methodA","Iplus":{"complement":[1,3,4,10]},"Iminus":[4,10],
          "d":{"1":"e2e5e6 + e2e4e6e7e10 - 2*e9","3":"e2"}})");
  EXPECT_EQ(image_of_generator(cof, 4), E("-e4"));
  EXPECT_EQ(image_of_generator(cof, 3), E("-e3 + e2"));
  EXPECT_TRUE(check_involution(cof, 12).holds());
}

TEST(SpecIoTest, MethodAValidationSurfaces) {
  try {
    parse_spec(R"({"kind":"methodA","Iplus":{"from":2},"Iminus":[],"d":{"1":"e2e3"}})");
    FAIL() << "expected ConstructionError";
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.code(), ConstructionError::Code::InvalidD);
    EXPECT_EQ(e.condition(), 1);
  }
}

TEST(SpecIoTest, MethodB) {
  EXPECT_TRUE(same_images(parse_spec(R"({"kind":"methodB","k":0,"t":1,"lambda":2})"), testing::prop_minus(), 10));
  AutomorphismSpec s = parse_spec(R"({"kind":"methodB","k":1,"t":1,"lambda":"1/2","lambdas":{"4":"3"}})");
  EXPECT_EQ(image_of_generator(s, 3), E("-e3 + 1/2*e1e2e3"));
  EXPECT_EQ(image_of_generator(s, 4), E("-e4 + 3*e1e2e4"));
  EXPECT_THROW(parse_spec(R"({"kind":"methodB","k":0,"t":2,"lambda":1})"), ConstructionError);
  EXPECT_THROW(parse_spec(R"({"kind":"methodB","k":0,"t":1,"lambda":0})"), ConstructionError);
}

TEST(SpecIoTest, MethodCAndCustom) {
  EXPECT_TRUE(same_images(parse_spec(R"({"kind":"methodC"})"), method_c(), 12));
  AutomorphismSpec c = parse_spec(R"({"kind":"custom","name":"mine","images":{"1":"-e1+e2e3e4"},"defaultSign":1})");
  EXPECT_EQ(c.name, "mine");
  EXPECT_EQ(image_of_generator(c, 1), E("-e1 + e2e3e4"));
  EXPECT_EQ(image_of_generator(c, 7), E("e7"));
}

TEST(SpecIoTest, Errors) {
  EXPECT_THROW(parse_spec("{"), SpecError);
  EXPECT_THROW(parse_spec(R"({"kind":"nope"})"), SpecError);
  EXPECT_THROW(parse_spec(R"({"variant":"k"})"), SpecError);
  EXPECT_THROW(parse_spec(R"({"kind":"homogeneous","variant":"q"})"), SpecError);
  EXPECT_THROW(parse_spec(R"({"kind":"methodB","k":0,"t":1,"lambda":"x"})"), SpecError);
  EXPECT_THROW(parse_spec(R"({"kind":"custom","images":{"a":"e1"}})"), SpecError);
  EXPECT_THROW(parse_spec(R"({"kind":"custom","images":{"1":"e1 +"}})"), SpecError);
  try {
    parse_spec("{\n  \"kind\": \"methodC\",\n}");
    FAIL();
  } catch (const SpecError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load_spec_file("/nonexistent/spec.json"), SpecError);
}

TEST(SpecIoTest, LoadsFiles) {
  auto path = std::filesystem::temp_directory_path() / "grassmann_spec_io_test.json";
  std::ofstream(path) << R"({"kind":"methodC"})";
  EXPECT_TRUE(same_images(load_spec_file(path), method_c(), 8));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace grassmann
