#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "avoid/formula.hpp"
#include "avoid/words.hpp"

namespace avoid {

// An occurrence of a formula in a word: a non-erasing assignment of variables
// to words such that the image of every fragment is a factor of the word.
struct Occurrence {
  std::map<char, Word> assignment;
};

// Least witness when one exists: assignments compared variable by variable in
// alphabetical order, images compared shortlex.
std::optional<Occurrence> find_occurrence(const Word& w, const Formula& f);

bool avoids(const Word& w, const Formula& f);

// Independent validation used by tests and reports: images non-empty and each
// fragment image a factor of w, checked by a naive scan.
bool occurrence_valid(const Word& w, const Formula& f, const Occurrence& h);

// Incremental avoidance. The context remembers which word (and formula) it
// was built for; extending anything else is an error.
class ExtensionContext;
ExtensionContext make_extension_context(const Word& w, const Formula& f);
// Does w followed by letter a still avoid f? On success the returned context
// belongs to the extended word; on failure it is the unchanged input context.
std::pair<bool, ExtensionContext> avoids_extension(const Word& w, Letter a, const Formula& f,
                                                   const ExtensionContext& ctx);

// f is divisible by f_small when some non-erasing substitution of the
// variables of f_small by words over the variables of f sends every fragment
// of f_small into a factor of some fragment of f.
bool is_divisible_by(const Formula& f, const Formula& f_small);

// ---- low-level matching kernel, shared with the search and morphic code ----

// Formula preprocessed for repeated matching. Fragment processing orders put
// the most constrained fragment first (more distinct variables, then longer).
struct CompiledFormula {
  std::vector<std::string> frags;
  std::vector<std::vector<int>> order_for_anchor;  // [a] followed by the rest
  std::vector<int> order_plain;
  explicit CompiledFormula(const Formula& f);
};

// Does some occurrence of f inside w[0..len) have a fragment image ending at
// position len-1? This is the incremental check: a word that avoids f stays
// avoiding after appending a letter iff no such occurrence appears.
bool occurrence_using_end(const Letter* w, int len, const CompiledFormula& f);

bool occurrence_anywhere(const Letter* w, int len, const CompiledFormula& f);

// Factor-language matching: every fragment image must occur inside some
// target word (not necessarily the same one). caps bounds the image length
// per variable (index 0 = variable A); images found are reported through
// witness when non-null.
struct TargetSpan {
  const Letter* p;
  int n;
};
bool occurrence_in_targets(std::span<const TargetSpan> targets, const CompiledFormula& f,
                           const std::array<int, 26>& caps,
                           std::map<char, std::vector<Letter>>* witness);

class ExtensionContext {
 public:
  const Word& word() const { return word_; }

 private:
  friend ExtensionContext make_extension_context(const Word& w, const Formula& f);
  friend std::pair<bool, ExtensionContext> avoids_extension(const Word&, Letter, const Formula&,
                                                            const ExtensionContext&);
  ExtensionContext(Word w, Formula f) : word_(std::move(w)), formula_(std::move(f)) {}
  Word word_;
  Formula formula_;
};

}  // namespace avoid
