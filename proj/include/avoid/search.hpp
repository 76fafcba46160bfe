#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "avoid/formula.hpp"
#include "avoid/words.hpp"

namespace avoid {

// Optional constraint: no factor of the shape  letter Y Y  with |Y| >= min_period.
struct AnchoredSquareRule {
  Letter letter = 0;
  int min_period = 1;
  friend bool operator==(const AnchoredSquareRule&, const AnchoredSquareRule&) = default;
};

struct ConstraintSet {
  std::vector<Formula> formulas;
  std::vector<Word> forbidden_factors;
  int square_floor = 0;  // when > 0, forbid squares of period >= square_floor
  std::optional<AnchoredSquareRule> anchored_square;
};

// Words of length zero are not counted; totals therefore match tables that
// tally the nonempty avoiding words.
enum class Convention { nonempty, with_empty };
inline constexpr Convention kCountingConvention = Convention::nonempty;
std::string convention_name();

struct AvoidanceTable {
  std::map<int, std::uint64_t> counts;  // length -> avoiding words of that length
  std::optional<int> max_length;        // present only when the search exhausted
  bool exhausted = false;               // no avoiding word beyond max_length
  bool budget_exhausted = false;
  std::optional<Word> witness_longest;  // least avoiding word of maximal seen length
  std::uint64_t nodes_visited = 0;
  std::uint64_t total() const;
};

struct SearchOptions {
  int threads = 0;         // 0 = runtime default
  int split_depth = 12;    // prefix depth explored serially before fanning out
  std::uint64_t node_budget = 1'000'000'000;
  bool serial = false;
};

// Depth-first enumeration of every word over the given alphabet that respects
// the constraint set, up to the length limit. Parallel when built with OpenMP.
AvoidanceTable enumerate_avoiders(const ConstraintSet& c, int alphabet_size, int limit,
                                  const SearchOptions& opts = {});

// Plain single-threaded reference used to validate the parallel engine.
AvoidanceTable enumerate_avoiders_serial(const ConstraintSet& c, int alphabet_size, int limit,
                                         const SearchOptions& opts = {});

// Exact maximal length when the language is finite and the search exhausted
// it below the limit; nullopt otherwise.
std::optional<int> max_avoiding_length(const ConstraintSet& c, int alphabet_size, int limit,
                                       const SearchOptions& opts = {});

enum class Growth { exponential, polynomial, inconclusive };

struct GrowthOptions {
  int limit = 30;
  double ratio_threshold = 1.02;   // geometric mean growth per letter
  std::uint64_t diff_bound = 100;  // largest count step tolerated as polynomial
  int window = 10;
  SearchOptions search;
};

struct GrowthVerdict {
  Growth growth = Growth::inconclusive;
  double mean_ratio = 0.0;
  std::uint64_t max_difference = 0;
  AvoidanceTable table;
};

// Heuristic classification of the growth of the language avoiding f; throws
// when the language is finite (growth is undefined).
GrowthVerdict classify_growth(const Formula& f, int alphabet_size,
                              const GrowthOptions& opts = {});

// Factors sitting at the centre of constraint-respecting words of length
// n + 2m: every such factor of length n extends m letters to each side.
std::set<Word> extendable_words(const ConstraintSet& c, int alphabet_size, int n, int m,
                                const SearchOptions& opts = {});

}  // namespace avoid
