#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "avoid/words.hpp"

using namespace avoid;

namespace {

Word w2(const std::string& s) { return Word::parse(s, Alphabet(2)); }
Word w3(const std::string& s) { return Word::parse(s, Alphabet(3)); }

// Independent square scan used to cross-check the incremental suffix check.
std::set<std::pair<int, int>> brute_squares(const Word& w) {
  std::set<std::pair<int, int>> hits;
  for (int pos = 0; pos < w.size(); ++pos)
    for (int per = 1; pos + 2 * per <= w.size(); ++per) {
      bool eq = true;
      for (int i = 0; i < per && eq; ++i) eq = w[pos + i] == w[pos + per + i];
      if (eq) hits.insert({pos, per});
    }
  return hits;
}

}  // namespace

TEST_CASE("alphabet basics") {
  Alphabet sigma(3);
  CHECK(sigma.size() == 3);
  CHECK(sigma.render(2) == '2');
  CHECK(sigma.parse_letter('1') == 1);
  CHECK_THROWS_AS(sigma.parse_letter('3'), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(0), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet(kMaxAlphabetSize + 1), std::invalid_argument);
}

TEST_CASE("word parse, render, subword") {
  const Word w = w3("01201");
  CHECK(w.size() == 5);
  CHECK(w.str() == "01201");
  CHECK(w[2] == 2);
  CHECK(w.subword(1, 3).str() == "120");
  CHECK(Word::empty_word(Alphabet(2)).empty());
  CHECK_THROWS_AS(w2("012"), std::invalid_argument);
  CHECK_THROWS_AS(w.subword(3, 4), std::out_of_range);
}

TEST_CASE("factors and containment") {
  const Word w = w2("0110");
  const std::set<Word> f2 = factors(w, 2);
  CHECK(f2 == std::set<Word>{w2("01"), w2("11"), w2("10")});
  CHECK(factors(w, 4) == std::set<Word>{w});
  CHECK(factors(w, 5).empty());
  CHECK(contains_factor(w, w2("11")));
  CHECK(!contains_factor(w, w2("00")));
  CHECK_THROWS_AS(contains_factor(w, Word::empty_word(Alphabet(2))), std::invalid_argument);
}

TEST_CASE("reverse and permute") {
  CHECK(reverse_word(w3("012")).str() == "210");
  CHECK(permute_letters(w3("0121"), {2, 0, 1}).str() == "2010");
  CHECK_THROWS_AS(permute_letters(w3("012"), {0, 0, 1}), std::invalid_argument);
}

TEST_CASE("square scan examples") {
  const auto hit = find_square(w2("0101"), 1, 4);
  REQUIRE(hit.has_value());
  CHECK(hit->position == 0);
  CHECK(hit->period == 2);

  const auto hit3 = find_square(w3("0120120"), 3, 3);
  REQUIRE(hit3.has_value());
  CHECK(hit3->position == 0);
  CHECK(hit3->period == 3);

  CHECK(!find_square(w3("012"), 1, 1).has_value());
  CHECK(!find_square(w2("0101"), 3, 10).has_value());
}

TEST_CASE("square scan against brute force") {
  for (int k = 2; k <= 3; ++k) {
    const Alphabet sigma(k);
    const int n = k == 2 ? 12 : 8;
    std::vector<Word> stack{Word::empty_word(sigma)};
    while (!stack.empty()) {
      const Word w = stack.back();
      stack.pop_back();
      if (w.size() < n)
        for (Letter a = 0; a < k; ++a) {
          std::vector<Letter> next(w.data(), w.data() + w.size());
          next.push_back(a);
          stack.push_back(Word(sigma, std::move(next)));
        }
      const auto brute = brute_squares(w);
      for (int tmin = 1; tmin <= 3; ++tmin) {
        // full-word scan returns the first hit in position-then-period order
        std::optional<SquareHit> expect;
        for (const auto& [pos, per] : brute) {
          if (per < tmin) continue;
          if (!expect || pos < expect->position ||
              (pos == expect->position && per < expect->period))
            expect = SquareHit{pos, per};
        }
        CHECK(find_square(w, tmin, std::max(tmin, w.size())) == expect);

        // suffix check: some square with period in range ends at the end
        bool ends = false;
        for (const auto& [pos, per] : brute)
          ends = ends || (per >= tmin && pos + 2 * per == w.size());
        CHECK(square_ending_at(w.data(), w.size(), tmin, w.size() / 2) == ends);
      }
    }
  }
}

TEST_CASE("square-free enumeration counts") {
  CHECK(enumerate_square_free(3, 1).size() == 3);
  CHECK(enumerate_square_free(3, 2).size() == 6);
  CHECK(enumerate_square_free(3, 3).size() == 12);
  CHECK(enumerate_square_free(3, 4).size() == 18);
  CHECK(enumerate_square_free(3, 5).size() == 30);
  CHECK(enumerate_square_free(3, 6).size() == 42);
  CHECK(enumerate_square_free(2, 3).size() == 2);
  CHECK(enumerate_square_free(2, 4).empty());
  for (const Word& w : enumerate_square_free(3, 6)) CHECK(is_square_free(w));
}

TEST_CASE("packing round trip") {
  for (const Word& w : enumerate_square_free(3, 7)) {
    REQUIRE(packable(w));
    CHECK(unpack_word(pack_word(w), w.alphabet()) == w);
  }
  const Word long2 = w2("0110100110010110100101100110100");
  CHECK(long2.size() == kMaxPackedLength);
  CHECK(packable(long2));
  CHECK(unpack_word(pack_word(long2), Alphabet(2)) == long2);
  CHECK(pack_word(w2("0")) != pack_word(w2("00")));
  CHECK(pack_word(w2("01")) != pack_word(w2("010")));
}
