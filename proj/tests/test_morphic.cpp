#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "avoid/catalog.hpp"
#include "avoid/morphic.hpp"
#include "avoid/words.hpp"

using namespace avoid;

namespace {

MorphicWordSpec inner_only(const Morphism& g, Letter seed = 0) {
  return MorphicWordSpec{"t", g, seed, std::nullopt};
}

}  // namespace

TEST_CASE("morphism parsing") {
  const Morphism tm = Morphism::parse("# swap doubling\n0 -> 01\n1 -> 10\n");
  CHECK(tm.domain().size() == 2);
  CHECK(tm.codomain().size() == 2);
  CHECK(tm.uniform_width() == 2);
  CHECK(tm.image(1).str() == "10");
  CHECK(tm.str() == "0 -> 01, 1 -> 10");

  const Morphism b3 = Morphism::parse("0 -> 012\n1 -> 02\n2 -> 1\n");
  CHECK(!b3.uniform_width().has_value());
  CHECK(b3.min_image_size() == 1);
  CHECK(b3.max_image_size() == 3);

  CHECK_THROWS_WITH_AS(Morphism::parse(""), "no rules found", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Morphism::parse("0 -> 01\n0 -> 1\n"), "duplicate rule for letter 0",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Morphism::parse("0 -> \n"), "empty image: 0 ->",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(Morphism::parse("0 -> 01\n2 -> 1\n"),
                       "domain letters must be 0..k-1 without gaps", std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("01 -> 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("0 -> ab\n"), std::invalid_argument);
  CHECK_THROWS_AS(Morphism::parse("squares\n"), std::invalid_argument);
}

TEST_CASE("applying morphisms") {
  const Morphism gy = Morphism::parse("0 -> 0111\n1 -> 01\n2 -> 00\n");
  const Word pre = Word::parse("012", Alphabet(3));
  CHECK(apply_morphism(gy, pre).str() == "01110100");
  CHECK_THROWS_AS(apply_morphism(gy, Word::parse("3", Alphabet(4))), std::invalid_argument);
}

TEST_CASE("fixed points by tag iteration") {
  const Morphism tm = Morphism::parse("0 -> 01\n1 -> 10\n");
  CHECK(fixed_point_prefix(inner_only(tm), 16).str() == "0110100110010110");

  const Morphism b3 = Morphism::parse("0 -> 012\n1 -> 02\n2 -> 1\n");
  CHECK(fixed_point_prefix(inner_only(b3), 12).str() == "012021012102");
  CHECK(is_square_free(fixed_point_prefix(inner_only(b3), 3000)));

  // not prolongable on the seed: image of 0 starts with 1
  const Morphism bad = Morphism::parse("0 -> 10\n1 -> 01\n");
  CHECK_THROWS_AS(fixed_point_prefix(inner_only(bad), 8), std::invalid_argument);
  // constant-length-1 image never grows
  const Morphism stall = Morphism::parse("0 -> 0\n1 -> 1\n");
  CHECK_THROWS_AS(fixed_point_prefix(inner_only(stall), 8), std::invalid_argument);
}

TEST_CASE("outer morphism composition") {
  const Morphism b3 = Morphism::parse("0 -> 012\n1 -> 02\n2 -> 1\n");
  const Morphism gy = Morphism::parse("0 -> 0111\n1 -> 01\n2 -> 00\n");
  MorphicWordSpec spec{"gy_b3", b3, 0, gy};
  const Word w = fixed_point_prefix(spec, 40);
  CHECK(w.str() == "0111010001110001011101000101110001110100");
  CHECK(w.alphabet().size() == 2);
}

TEST_CASE("synchronization") {
  const Morphism ten = load_catalog_morphism("m_aba_baab_bab_10", {});
  CHECK(is_synchronizing(ten).ok);

  const Morphism bad = Morphism::parse("0 -> 00\n1 -> 01\n2 -> 11\n");
  const SyncResult r = is_synchronizing(bad);
  CHECK(!r.ok);
  REQUIRE(r.witness.has_value());
  // an image sits strictly inside the image of some pair
  CHECK(r.witness->offset > 0);
}

TEST_CASE("factor sets stabilize") {
  const Morphism tm = Morphism::parse("0 -> 01\n1 -> 10\n");
  const auto f4 = morphic_factor_set(inner_only(tm), 4);
  CHECK(f4.size() == 10);  // Thue-Morse factor complexity at 4

  const Morphism b3 = Morphism::parse("0 -> 012\n1 -> 02\n2 -> 1\n");
  const auto direct = factors(fixed_point_prefix(inner_only(b3), 4096), 5);
  CHECK(morphic_factor_set(inner_only(b3), 5) == direct);

  const Morphism gy = Morphism::parse("0 -> 0111\n1 -> 01\n2 -> 00\n");
  MorphicWordSpec spec{"gy_b3", b3, 0, gy};
  const auto viaprefix = factors(fixed_point_prefix(spec, 8192), 6);
  CHECK(morphic_factor_set(spec, 6) == viaprefix);
}

TEST_CASE("square-free image factor pool") {
  const Morphism gy = Morphism::parse("0 -> 0111\n1 -> 01\n2 -> 00\n");
  // factors of length up to (span-2)*min_image are all covered
  const auto pool = sqf_image_factors(gy, 4, 4);
  const Word img = apply_morphism(gy, Word::parse("0120", Alphabet(3)));
  for (const Word& f : factors(img, 4)) CHECK(pool.count(f));
  CHECK_THROWS_AS(sqf_image_factors(gy, 3, 100), std::invalid_argument);
}

TEST_CASE("catalog morphisms load and match their files") {
  for (const MorphismClaim& claim : morphism_claims()) {
    const Morphism g = load_catalog_morphism(claim.file, {});
    CAPTURE(claim.file);
    REQUIRE(g.uniform_width().has_value());
    CHECK(*g.uniform_width() == claim.width);
  }
  for (const std::string& name : builtin_word_names()) {
    const MorphicWordSpec spec = builtin_word(name, {});
    CHECK(fixed_point_prefix(spec, 64).size() == 64);
  }
}
