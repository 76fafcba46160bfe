#include "avoid/morphic.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace avoid {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Morphism::Morphism(Alphabet domain, Alphabet codomain, std::vector<Word> images)
    : domain_(domain), codomain_(codomain), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != domain_.size())
    throw std::invalid_argument("one image per domain letter required");
  for (const Word& u : images_) {
    if (u.empty()) throw std::invalid_argument("erasing morphisms are not supported");
    if (u.alphabet() != codomain_) throw std::invalid_argument("image outside the codomain");
  }
}

Morphism Morphism::parse(std::string_view text) {
  std::map<int, std::string> rules;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("expected 'letter -> image': " + line);
    const std::string lhs = trim(line.substr(0, arrow));
    const std::string rhs = trim(line.substr(arrow + 2));
    if (lhs.size() != 1 || lhs[0] < '0' || lhs[0] > '9')
      throw std::invalid_argument("left side must be a single digit: " + line);
    if (rhs.empty()) throw std::invalid_argument("empty image: " + line);
    if (!rules.emplace(lhs[0] - '0', rhs).second)
      throw std::invalid_argument("duplicate rule for letter " + lhs);
  }
  if (rules.empty()) throw std::invalid_argument("no rules found");
  const int m = static_cast<int>(rules.size());
  int top = 0;
  for (const auto& [d, img] : rules) {
    if (d >= m) throw std::invalid_argument("domain letters must be 0..k-1 without gaps");
    for (char c : img) {
      if (c < '0' || c > '9') throw std::invalid_argument("image letters must be digits");
      top = std::max(top, c - '0');
    }
  }
  Alphabet codomain(top + 1);
  std::vector<Word> images;
  for (const auto& [d, img] : rules) images.push_back(Word::parse(img, codomain));
  return Morphism(Alphabet(m), codomain, std::move(images));
}

Morphism Morphism::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open morphism file: " + file.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse(text.str());
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
}

const Word& Morphism::image(Letter a) const {
  if (a >= images_.size()) throw std::out_of_range("letter outside the domain");
  return images_[a];
}

std::optional<int> Morphism::uniform_width() const {
  const int q = images_[0].size();
  for (const Word& u : images_)
    if (u.size() != q) return std::nullopt;
  return q;
}

int Morphism::min_image_size() const {
  int m = images_[0].size();
  for (const Word& u : images_) m = std::min(m, u.size());
  return m;
}

int Morphism::max_image_size() const {
  int m = 0;
  for (const Word& u : images_) m = std::max(m, u.size());
  return m;
}

std::string Morphism::str() const {
  std::string out;
  for (Letter a = 0; a < domain_.size(); ++a) {
    if (a) out += ", ";
    out += domain_.render(a);
    out += " -> ";
    out += images_[a].str();
  }
  return out;
}

Word apply_morphism(const Morphism& g, const Word& w) {
  if (w.alphabet().size() > g.domain().size())
    throw std::invalid_argument("word alphabet exceeds the morphism domain");
  std::vector<Letter> out;
  for (int i = 0; i < w.size(); ++i) {
    const Word& img = g.image(w[i]);
    out.insert(out.end(), img.data(), img.data() + img.size());
  }
  return Word(g.codomain(), std::move(out));
}

Word fixed_point_prefix(const MorphicWordSpec& spec, int n) {
  if (n < 0) throw std::invalid_argument("negative prefix length");
  const Morphism& g = spec.inner;
  if (g.domain() != g.codomain())
    throw std::invalid_argument("fixed points need an endomorphism");
  if (spec.seed >= g.domain().size()) throw std::invalid_argument("seed outside the domain");
  const Word& first = g.image(spec.seed);
  if (first.size() < 2 || first[0] != spec.seed)
    throw std::invalid_argument("morphism is not prolongable on the seed");

  // The word grows faster than it is consumed, so this never stalls.
  std::vector<Letter> w{spec.seed};
  std::size_t i = 0;
  while (static_cast<int>(w.size()) < n) {
    const Word& img = g.image(w[i]);
    const int from = i == 0 ? 1 : 0;  // w[0] already starts with the seed
    for (int j = from; j < img.size(); ++j) w.push_back(img[j]);
    ++i;
  }
  w.resize(n);
  Word inner(g.domain(), std::move(w));
  if (!spec.outer) return inner;

  if (spec.outer->domain().size() < g.domain().size())
    throw std::invalid_argument("outer morphism domain too small");
  Word mapped = apply_morphism(*spec.outer, inner);
  return mapped.subword(0, std::min(n, mapped.size()));
}

SyncResult is_synchronizing(const Morphism& g) {
  const int k = g.domain().size();
  for (Letter a = 0; a < k; ++a) {
    const Word& u = g.image(a);
    for (Letter b = 0; b < k; ++b) {
      for (Letter c = 0; c < k; ++c) {
        const Word& ib = g.image(b);
        const Word& ic = g.image(c);
        std::vector<Letter> w(ib.data(), ib.data() + ib.size());
        w.insert(w.end(), ic.data(), ic.data() + ic.size());
        const int n = static_cast<int>(w.size());
        for (int pos = 1; pos + u.size() < n; ++pos) {  // interior offsets only
          if (std::equal(u.data(), u.data() + u.size(), w.begin() + pos))
            return {false, SyncWitness{a, b, c, pos}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::set<Word> sqf_image_factors(const Morphism& g, int span, int n) {
  if (n < 1) throw std::invalid_argument("factor length must be positive");
  if ((span - 2) * g.min_image_size() < n)
    throw std::invalid_argument("span too small for the requested factor length");
  std::set<Word> out;
  for (int len = 1; len <= span; ++len)
    for (const Word& x : enumerate_square_free(g.domain().size(), len)) {
      const Word img = apply_morphism(g, x);
      for (const Word& f : factors(img, n)) out.insert(f);
    }
  return out;
}

std::set<Word> morphic_factor_set(const MorphicWordSpec& spec, int n) {
  if (n < 1) throw std::invalid_argument("factor length must be positive");
  int len = std::max(4 * n, 4096);
  std::set<Word> prev;
  for (int round = 0; round < 12; ++round, len *= 2) {
    std::set<Word> cur = factors(fixed_point_prefix(spec, len), n);
    if (round > 0 && cur == prev) return cur;
    prev = std::move(cur);
  }
  throw std::runtime_error("factor set did not stabilize on doubling prefixes");
}

}  // namespace avoid
