#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace avoid {

// A pattern is a non-empty word over the variable alphabet A..Z.
class Pattern {
 public:
  explicit Pattern(std::string symbols);
  const std::string& symbols() const { return symbols_; }
  int size() const { return static_cast<int>(symbols_.size()); }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::string symbols_;
};

// A formula is a set of fragments (patterns). Canonical storage: fragments
// sorted by (length, lexicographic), duplicates and fragments that are
// factors of other fragments removed. Strictly constructed formulas have no
// variable occurring exactly once overall; pattern_to_formula may produce
// such a variable, mirroring the usual dot-replacement convention.
class Formula {
 public:
  const std::vector<std::string>& fragments() const { return fragments_; }
  const std::string& variables() const { return variables_; }  // sorted, distinct
  int max_fragment_size() const;

  friend bool operator==(const Formula&, const Formula&) = default;
  friend auto operator<=>(const Formula&, const Formula&) = default;

 private:
  friend Formula make_formula(std::vector<std::string> fragments, bool strict);
  std::vector<std::string> fragments_;
  std::string variables_;
};

// Grammar: FORMULA := FRAGMENT ('.' FRAGMENT)*, FRAGMENT := [A-Z]+.
// Normalizes and rejects formulas in which a variable occurs exactly once.
Formula parse_formula(std::string_view text);

std::string format_formula(const Formula& f);

// Drop duplicate fragments and fragments that are factors of other fragments,
// then sort canonically. Errors if a variable ends up occurring exactly once.
Formula normalize_formula(std::vector<std::string> fragments);

// Replace each variable that occurs exactly once in p by a fragment break.
// Errors when every variable is isolated (no fragment survives).
Formula pattern_to_formula(const Pattern& p);

// Fragments reversed, then renormalized.
Formula reverse_formula(const Formula& f);

// Lexicographically least formula over all bijective renamings of the
// occurring variables onto an initial segment of A, B, C, ...
Formula canonical_form(const Formula& f);

// Every variable occurs at least twice in p.
bool is_doubled(const Pattern& p);

// Every variable of f occurs inside a square factor of some fragment.
bool is_easy(const Formula& f);

}  // namespace avoid
