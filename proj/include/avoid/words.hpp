#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace avoid {

using Letter = std::uint8_t;

inline constexpr int kMaxAlphabetSize = 10;

// Letters are the integers 0..size-1, rendered as digit characters.
class Alphabet {
 public:
  explicit Alphabet(int size);

  int size() const { return size_; }
  bool contains(Letter a) const { return a < size_; }
  char render(Letter a) const;
  Letter parse_letter(char c) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
  friend auto operator<=>(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
};

// A finite word over a small alphabet. Immutable after construction.
class Word {
 public:
  Word(Alphabet alphabet, std::vector<Letter> letters);
  static Word parse(std::string_view digits, Alphabet alphabet);
  static Word empty_word(Alphabet alphabet) { return Word(alphabet, {}); }

  const Alphabet& alphabet() const { return alphabet_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<Letter>& letters() const { return letters_; }
  const Letter* data() const { return letters_.data(); }

  std::string str() const;
  Word subword(int pos, int len) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

struct SquareHit {
  int position = 0;  // start of the square uu
  int period = 0;    // |u|
  friend bool operator==(const SquareHit&, const SquareHit&) = default;
};

// All distinct factors of length n (n >= 1).
std::set<Word> factors(const Word& w, int n);

// Whether the non-empty word u occurs contiguously in w. Alphabets must match.
bool contains_factor(const Word& w, const Word& u);

Word reverse_word(const Word& w);

// pi maps each letter to its image; must be a bijection on the alphabet.
Word permute_letters(const Word& w, const std::vector<Letter>& pi);

// First square uu with tmin <= |u| <= tmax, scanning positions outer and
// periods inner; nullopt when none.
std::optional<SquareHit> find_square(const Word& w, int tmin, int tmax);

bool is_square_free(const Word& w);

// All square-free words of length n over k letters, in lexicographic order.
std::vector<Word> enumerate_square_free(int k, int n);

// Low-level helper shared with the search engine: does a square uu with
// tmin <= |u| <= tmax end exactly at position len-1 of w?
bool square_ending_at(const Letter* w, int len, int tmin, int tmax);

// 2-bit packing for alphabets of size <= 4 and length <= kMaxPackedLength.
// The key encodes the length with a marker bit above the top letter, so
// distinct words always get distinct keys.
inline constexpr int kMaxPackedLength = 31;

bool packable(const Word& w);
std::uint64_t pack_letters(const Letter* w, int len);
std::uint64_t pack_word(const Word& w);
Word unpack_word(std::uint64_t key, Alphabet alphabet);

}  // namespace avoid
