#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "avoid/formula.hpp"
#include "avoid/morphic.hpp"
#include "avoid/search.hpp"
#include "avoid/words.hpp"

namespace avoid {

// certified    - the claim holds for the whole (infinite) image language
// refuted      - a concrete counterexample was found
// bounded_only - bounded checks passed but no finiteness argument closed
enum class Verdict { certified, refuted, bounded_only };
std::string verdict_name(Verdict v);

struct CheckResult {
  std::string name;
  std::string detail;   // what was scanned and how far
  bool pass = false;
  std::string witness;  // counterexample description when failed
};

struct CertificateSection {
  std::string title;
  Verdict verdict = Verdict::certified;
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

struct VerifyOptions {
  int x_bound = 8;  // context half-length for the large-image reduction scan
};

// Images of square-free words under the uniform morphism g contain no square
// of period >= t. The verdict is certified or refuted.
CertificateSection verify_squares(const Morphism& g, int t);

// Images of square-free words under g avoid the formula f, given that they
// avoid squares of period >= t. Easy formulas (every variable inside a
// square) always certify or refute; formulas with one square-free variable go
// through a gap-divisibility argument or a reduction scan and may end
// bounded_only.
CertificateSection verify_formula(const Morphism& g, const Formula& f, int t,
                                  const VerifyOptions& opts = {});

// ---- essential avoidance ----

struct EssentialReport {
  bool pass = false;
  int n = 0;
  int margin = 0;
  std::vector<std::string> generators;
  std::set<Word> only_search;      // extendable factors missing from every generator
  std::set<Word> only_generators;  // generator factors the search never extends
  std::vector<std::string> generator_violations;
};

// The factors of length n at the centre of constraint-respecting words of
// length n+2m must be exactly the length-n factors of the given words.
EssentialReport essential_avoidance_check(const std::vector<MorphicWordSpec>& generators,
                                          const ConstraintSet& c, int n, int margin,
                                          const SearchOptions& opts = {});

}  // namespace avoid
