#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "avoid/words.hpp"

namespace avoid {

// Non-erasing morphism between letter alphabets.
class Morphism {
 public:
  Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images);

  // Text form: one "d -> image" line per domain letter, '#' comments allowed.
  // The codomain is the smallest alphabet containing every image.
  static Morphism parse(std::string_view text);
  static Morphism load(const std::filesystem::path& file);

  const Alphabet& domain() const { return domain_; }
  const Alphabet& codomain() const { return codomain_; }
  const Word& image(Letter a) const;
  std::optional<int> uniform_width() const;  // common image size, if any
  int min_image_size() const;
  int max_image_size() const;
  std::string str() const;

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  Alphabet domain_;
  Alphabet codomain_;
  std::vector<Word> images_;
};

Word apply_morphism(const Morphism& g, const Word& w);

// An infinite word: fixed point of a prolongable endomorphism, optionally
// followed by another morphism applied on top.
struct MorphicWordSpec {
  std::string name;
  Morphism inner;
  Letter seed = 0;
  std::optional<Morphism> outer;
};

// First n letters of the word described by spec.
Word fixed_point_prefix(const MorphicWordSpec& spec, int n);

struct SyncWitness {
  Letter a = 0, b = 0, c = 0;
  int offset = 0;
};
struct SyncResult {
  bool ok = false;
  std::optional<SyncWitness> witness;  // interior occurrence when not ok
};
// g is synchronizing when g(a) occurs in g(bc) only as a prefix or a suffix.
SyncResult is_synchronizing(const Morphism& g);

// Factors of length exactly n of images of square-free words over the domain.
// Pre-images of length up to span are scanned; span must satisfy
// (span - 2) * min_image_size >= n so that no factor is missed.
std::set<Word> sqf_image_factors(const Morphism& g, int span, int n);

// Factors of length n of the infinite word described by spec, collected from
// prefixes of doubling length until the factor set stabilizes.
std::set<Word> morphic_factor_set(const MorphicWordSpec& spec, int n);

}  // namespace avoid
