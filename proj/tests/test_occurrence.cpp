#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "avoid/occurrence.hpp"

using namespace avoid;

namespace {

Word wparse(const std::string& s, int k) { return Word::parse(s, Alphabet(k)); }

std::vector<Word> all_words(int k, int n) {
  std::vector<Word> out;
  std::vector<Word> cur{Word::empty_word(Alphabet(k))};
  for (int len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (const Word& w : cur)
      for (Letter a = 0; a < k; ++a) {
        std::vector<Letter> ls(w.data(), w.data() + w.size());
        ls.push_back(a);
        next.push_back(Word(Alphabet(k), std::move(ls)));
      }
    for (const Word& w : next) out.push_back(w);
    cur = std::move(next);
  }
  return out;
}

// Independent occurrence detector: every variable image is itself a factor of
// the target, so enumerate assignments over distinct factors directly.
bool brute_has_occurrence(const Word& w, const Formula& f) {
  const std::string& vars = f.variables();
  std::vector<std::string> cands;
  const std::string s = w.str();
  std::set<std::string> seen;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t len = 1; i + len <= s.size(); ++len) seen.insert(s.substr(i, len));
  cands.assign(seen.begin(), seen.end());

  std::vector<int> pick(vars.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t vi) {
    if (vi == vars.size()) {
      for (const std::string& fr : f.fragments()) {
        std::string img;
        for (char c : fr) img += cands[pick[vars.find(c)]];
        if (s.find(img) == std::string::npos) return false;
      }
      return true;
    }
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      pick[vi] = static_cast<int>(ci);
      if (rec(vi + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("avoids agrees with a brute-force assignment search") {
  const std::vector<Formula> formulas = {
      parse_formula("AA"),          parse_formula("AAA"),       parse_formula("ABA.AABB"),
      parse_formula("AA.ABAB.BB"),  parse_formula("ABAAB"),     parse_formula("AABB.ABBA"),
      parse_formula("ABA.BAAB.BAB")};
  for (const Word& w : all_words(2, 9))
    for (const Formula& f : formulas) {
      CAPTURE(w.str());
      CAPTURE(format_formula(f));
      REQUIRE(avoids(w, f) == !brute_has_occurrence(w, f));
    }
  for (const Word& w : all_words(3, 6))
    for (const Formula& f : formulas) REQUIRE(avoids(w, f) == !brute_has_occurrence(w, f));
}

TEST_CASE("find_occurrence returns the least witness and it validates") {
  const auto occ = find_occurrence(wparse("0110", 2), parse_formula("AA"));
  REQUIRE(occ.has_value());
  CHECK(occ->assignment.at('A').str() == "1");

  // shortlex least: images ordered by variable name, then shortlex
  const auto occ2 = find_occurrence(wparse("010011", 2), parse_formula("AABB"));
  REQUIRE(occ2.has_value());
  CHECK(occ2->assignment.at('A').str() == "0");
  CHECK(occ2->assignment.at('B').str() == "1");  // 0011 via A=0, B=1

  CHECK(!find_occurrence(wparse("012", 3), parse_formula("AA")).has_value());

  for (const Word& w : all_words(2, 8))
    for (const char* fs : {"AA", "ABA.AABB", "AA.ABAB.BB"}) {
      const Formula f = parse_formula(fs);
      const auto o = find_occurrence(w, f);
      CHECK(o.has_value() == !avoids(w, f));
      if (o) CHECK(occurrence_valid(w, f, *o));
    }
}

TEST_CASE("occurrence_valid rejects tampered witnesses") {
  const Word w = wparse("001011", 2);
  const Formula f = parse_formula("AA");
  Occurrence occ;
  occ.assignment.insert_or_assign('A', wparse("10", 2));  // 1010 is not a factor
  CHECK(!occurrence_valid(w, f, occ));
  occ.assignment.insert_or_assign('A', wparse("0", 2));
  CHECK(occurrence_valid(w, f, occ));
}

TEST_CASE("avoids_extension matches avoids along every binary word") {
  const Formula f = parse_formula("ABA.AABB");
  const Alphabet sigma(2);
  std::function<void(const Word&, const ExtensionContext&, int)> walk =
      [&](const Word& w, const ExtensionContext& ctx, int depth) {
        if (depth == 0) return;
        for (Letter a = 0; a < 2; ++a) {
          std::vector<Letter> ls(w.data(), w.data() + w.size());
          ls.push_back(a);
          const Word next(sigma, std::move(ls));
          const auto [ok, nctx] = avoids_extension(w, a, f, ctx);
          REQUIRE(ok == avoids(next, f));
          if (ok) walk(next, nctx, depth - 1);
        }
      };
  const Word root = Word::empty_word(sigma);
  walk(root, make_extension_context(root, f), 12);
}

TEST_CASE("extension context must match the word") {
  const Formula f = parse_formula("AA");
  const Word w = wparse("01", 2);
  const auto ctx = make_extension_context(w, f);
  CHECK_THROWS_AS(avoids_extension(wparse("10", 2), 0, f, ctx), std::logic_error);
  CHECK_THROWS_AS(make_extension_context(wparse("00", 2), f), std::invalid_argument);
  CHECK_THROWS_AS(avoids_extension(w, 7, f, ctx), std::invalid_argument);
}

TEST_CASE("divisibility facts") {
  const Formula big = parse_formula("AABA.AABBA");
  for (const char* small : {"AA.ABA.ABBA", "AABA.ABB.BBA", "ABA.AABB", "BBA.ABA.AABB",
                            "AABA.AABB"})
    CHECK(is_divisible_by(big, parse_formula(small)));
  CHECK(!is_divisible_by(big, parse_formula("AAA")));
  CHECK(!is_divisible_by(parse_formula("AA.ABAB.BB"), parse_formula("AAA")));
  CHECK(is_divisible_by(parse_formula("AAA"), parse_formula("AA")));
  CHECK(is_divisible_by(parse_formula("BBA.ABA.AABB"), parse_formula("ABA.AABB")));
  CHECK(is_divisible_by(parse_formula("AABA.AABB"), parse_formula("ABA.AABB")));
  // divisibility is reflexive
  CHECK(is_divisible_by(big, big));
}
