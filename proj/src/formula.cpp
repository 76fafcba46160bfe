#include "avoid/formula.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace avoid {

namespace {

void check_fragment(const std::string& frag) {
  if (frag.empty()) throw std::invalid_argument("empty fragment");
  for (char c : frag)
    if (c < 'A' || c > 'Z')
      throw std::invalid_argument(std::string("bad variable character '") + c + "'");
}

bool frag_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Pattern::Pattern(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("empty pattern");
  check_fragment(symbols_);
}

int Formula::max_fragment_size() const {
  int m = 0;
  for (const auto& f : fragments_) m = std::max<int>(m, static_cast<int>(f.size()));
  return m;
}

Formula make_formula(std::vector<std::string> fragments, bool strict) {
  for (const auto& f : fragments) check_fragment(f);
  if (fragments.empty()) throw std::invalid_argument("formula needs at least one fragment");

  // Keep longest fragments first so that anything that is a factor of a kept
  // fragment (including duplicates) gets dropped.
  std::sort(fragments.begin(), fragments.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<std::string> kept;
  for (const auto& f : fragments) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.find(f) != std::string::npos) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end(), frag_less);

  std::array<int, 26> count{};
  for (const auto& f : kept)
    for (char c : f) count[static_cast<std::size_t>(c - 'A')]++;
  std::string vars;
  for (int v = 0; v < 26; ++v) {
    if (count[static_cast<std::size_t>(v)] == 1 && strict)
      throw std::invalid_argument(std::string("variable ") + static_cast<char>('A' + v) +
                                  " occurs exactly once");
    if (count[static_cast<std::size_t>(v)] > 0) vars.push_back(static_cast<char>('A' + v));
  }

  Formula out;
  out.fragments_ = std::move(kept);
  out.variables_ = std::move(vars);
  return out;
}

Formula parse_formula(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty formula");
  std::vector<std::string> frags;
  std::string cur;
  for (char c : text) {
    if (c == '.') {
      if (cur.empty()) throw std::invalid_argument("empty fragment in formula");
      frags.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (cur.empty()) throw std::invalid_argument("empty fragment in formula");
  frags.push_back(cur);
  return make_formula(std::move(frags), /*strict=*/true);
}

std::string format_formula(const Formula& f) {
  std::string out;
  for (std::size_t i = 0; i < f.fragments().size(); ++i) {
    if (i) out.push_back('.');
    out += f.fragments()[i];
  }
  return out;
}

Formula normalize_formula(std::vector<std::string> fragments) {
  return make_formula(std::move(fragments), /*strict=*/true);
}

Formula pattern_to_formula(const Pattern& p) {
  std::array<int, 26> count{};
  for (char c : p.symbols()) count[static_cast<std::size_t>(c - 'A')]++;
  std::vector<std::string> frags;
  std::string cur;
  for (char c : p.symbols()) {
    if (count[static_cast<std::size_t>(c - 'A')] == 1) {
      if (!cur.empty()) frags.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) frags.push_back(cur);
  if (frags.empty())
    throw std::invalid_argument("every variable of the pattern is isolated");
  // Factor-dropping may leave a variable with a single occurrence here; that
  // is accepted for the pattern conversion path.
  return make_formula(std::move(frags), /*strict=*/false);
}

Formula reverse_formula(const Formula& f) {
  std::vector<std::string> frags;
  for (const auto& frag : f.fragments()) frags.emplace_back(frag.rbegin(), frag.rend());
  // u is a factor of v iff reverse(u) is a factor of reverse(v), so the same
  // fragments get dropped and variable counts are preserved.
  return make_formula(std::move(frags), /*strict=*/false);
}

namespace {

bool formula_frags_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), frag_less);
}

}  // namespace

Formula canonical_form(const Formula& f) {
  const std::string& vars = f.variables();
  const int v = static_cast<int>(vars.size());
  std::vector<int> perm(static_cast<std::size_t>(v));
  std::iota(perm.begin(), perm.end(), 0);

  bool first = true;
  Formula best;
  do {
    std::array<char, 26> rename{};
    for (int i = 0; i < v; ++i)
      rename[static_cast<std::size_t>(vars[static_cast<std::size_t>(i)] - 'A')] =
          static_cast<char>('A' + perm[static_cast<std::size_t>(i)]);
    std::vector<std::string> frags;
    for (const auto& frag : f.fragments()) {
      std::string r;
      r.reserve(frag.size());
      for (char c : frag) r.push_back(rename[static_cast<std::size_t>(c - 'A')]);
      frags.push_back(std::move(r));
    }
    Formula cand = make_formula(std::move(frags), /*strict=*/false);
    if (first || formula_frags_less(cand.fragments(), best.fragments())) best = cand;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool is_doubled(const Pattern& p) {
  std::array<int, 26> count{};
  for (char c : p.symbols()) count[static_cast<std::size_t>(c - 'A')]++;
  for (int c : count)
    if (c == 1) return false;
  return true;
}

bool is_easy(const Formula& f) {
  std::array<bool, 26> covered{};
  for (const auto& frag : f.fragments()) {
    const int n = static_cast<int>(frag.size());
    for (int i = 0; i < n; ++i)
      for (int t = 1; i + 2 * t <= n; ++t) {
        if (frag.compare(i, static_cast<std::size_t>(t), frag, i + t, static_cast<std::size_t>(t)) != 0)
          continue;
        for (int j = i; j < i + 2 * t; ++j)
          covered[static_cast<std::size_t>(frag[static_cast<std::size_t>(j)] - 'A')] = true;
      }
  }
  for (char v : f.variables())
    if (!covered[static_cast<std::size_t>(v - 'A')]) return false;
  return true;
}

}  // namespace avoid
