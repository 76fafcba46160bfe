#include "avoid/words.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace avoid {

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 1 || size > kMaxAlphabetSize)
    throw std::invalid_argument("alphabet size must be in 1..10");
}

char Alphabet::render(Letter a) const {
  if (!contains(a)) throw std::invalid_argument("letter out of range");
  return static_cast<char>('0' + a);
}

Letter Alphabet::parse_letter(char c) const {
  if (c < '0' || c > '9') throw std::invalid_argument("letter must be a digit");
  Letter a = static_cast<Letter>(c - '0');
  if (!contains(a))
    throw std::invalid_argument(std::string("letter ") + c + " outside alphabet of size " +
                                std::to_string(size_));
  return a;
}

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter a : letters_)
    if (!alphabet_.contains(a)) throw std::invalid_argument("letter out of range for alphabet");
}

Word Word::parse(std::string_view digits, Alphabet alphabet) {
  std::vector<Letter> ls;
  ls.reserve(digits.size());
  for (char c : digits) ls.push_back(alphabet.parse_letter(c));
  return Word(alphabet, std::move(ls));
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter a : letters_) s.push_back(alphabet_.render(a));
  return s;
}

Word Word::subword(int pos, int len) const {
  if (pos < 0 || len < 0 || pos + len > size()) throw std::out_of_range("subword out of range");
  return Word(alphabet_, std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + len));
}

std::set<Word> factors(const Word& w, int n) {
  if (n < 1) throw std::invalid_argument("factor length must be >= 1");
  std::set<Word> out;
  for (int i = 0; i + n <= w.size(); ++i) out.insert(w.subword(i, n));
  return out;
}

bool contains_factor(const Word& w, const Word& u) {
  if (u.empty()) throw std::invalid_argument("factor must be non-empty");
  if (!(w.alphabet() == u.alphabet())) throw std::invalid_argument("alphabet mismatch");
  return std::search(w.letters().begin(), w.letters().end(), u.letters().begin(),
                     u.letters().end()) != w.letters().end();
}

Word reverse_word(const Word& w) {
  std::vector<Letter> ls(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet(), std::move(ls));
}

Word permute_letters(const Word& w, const std::vector<Letter>& pi) {
  const int k = w.alphabet().size();
  if (static_cast<int>(pi.size()) != k)
    throw std::invalid_argument("permutation size must equal alphabet size");
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  for (Letter a : pi) {
    if (a >= k || seen[a]) throw std::invalid_argument("not a permutation of the alphabet");
    seen[a] = true;
  }
  std::vector<Letter> ls;
  ls.reserve(w.letters().size());
  for (Letter a : w.letters()) ls.push_back(pi[a]);
  return Word(w.alphabet(), std::move(ls));
}

std::optional<SquareHit> find_square(const Word& w, int tmin, int tmax) {
  if (tmin < 1 || tmax < tmin) throw std::invalid_argument("bad period range");
  const Letter* p = w.data();
  const int n = w.size();
  for (int i = 0; i + 2 * tmin <= n; ++i) {
    const int pmax = std::min(tmax, (n - i) / 2);
    for (int t = tmin; t <= pmax; ++t) {
      bool eq = true;
      for (int j = 0; j < t; ++j)
        if (p[i + j] != p[i + t + j]) {
          eq = false;
          break;
        }
      if (eq) return SquareHit{i, t};
    }
  }
  return std::nullopt;
}

bool square_ending_at(const Letter* w, int len, int tmin, int tmax) {
  const int pmax = std::min(tmax, len / 2);
  for (int t = tmin; t <= pmax; ++t) {
    bool eq = true;
    for (int i = len - 1; i >= len - t; --i)
      if (w[i] != w[i - t]) {
        eq = false;
        break;
      }
    if (eq) return true;
  }
  return false;
}

bool is_square_free(const Word& w) {
  if (w.empty()) return true;
  return !find_square(w, 1, w.size() / 2 == 0 ? 1 : w.size() / 2).has_value();
}

std::vector<Word> enumerate_square_free(int k, int n) {
  Alphabet sigma(k);
  if (n < 0) throw std::invalid_argument("length must be >= 0");
  std::vector<Word> out;
  std::vector<Letter> buf(static_cast<std::size_t>(n), 0);
  // DFS in letter order; a word is square-free iff no square ends at any prefix.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.emplace_back(sigma, buf);
      return;
    }
    for (Letter a = 0; a < k; ++a) {
      buf[static_cast<std::size_t>(depth)] = a;
      if (!square_ending_at(buf.data(), depth + 1, 1, (depth + 1) / 2)) self(self, depth + 1);
    }
  };
  rec(rec, 0);
  return out;
}

bool packable(const Word& w) {
  return w.alphabet().size() <= 4 && w.size() <= kMaxPackedLength;
}

std::uint64_t pack_letters(const Letter* w, int len) {
  std::uint64_t key = 1ull << (2 * len);  // length marker
  for (int i = 0; i < len; ++i) key |= static_cast<std::uint64_t>(w[i]) << (2 * i);
  return key;
}

std::uint64_t pack_word(const Word& w) {
  if (!packable(w)) throw std::invalid_argument("word not packable (k <= 4, length <= 31)");
  return pack_letters(w.data(), w.size());
}

Word unpack_word(std::uint64_t key, Alphabet alphabet) {
  if (key == 0) throw std::invalid_argument("bad packed word");
  const int top = 63 - std::countl_zero(key);
  if (top % 2 != 0) throw std::invalid_argument("bad packed word");
  const int len = top / 2;
  std::vector<Letter> ls(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) ls[static_cast<std::size_t>(i)] = (key >> (2 * i)) & 3u;
  return Word(alphabet, std::move(ls));
}

}  // namespace avoid
