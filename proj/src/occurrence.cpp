#include "avoid/occurrence.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>
#include <string>

namespace avoid {
namespace {

bool spans_equal(const Letter* a, const Letter* b, int n) {
  for (int i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// Backtracking matcher over one compiled formula and a set of target words.
// Variable images are represented as pointers into target memory (or caller
// supplied candidate storage), so binding an unbound variable costs nothing.
struct Matcher {
  std::span<const TargetSpan> targets;
  const CompiledFormula* cf = nullptr;
  const std::vector<int>* order = nullptr;
  int anchor_target = -1;  // stage 0 fragment image must end this target
  std::array<int, 26> caps{};

  struct Bind {
    const Letter* p = nullptr;
    int len = 0;
  };
  std::array<Bind, 26> bind{};

  // Minimal length of the image of fr[from..] under the current binding.
  int min_span(const std::string& fr, std::size_t from) const {
    int s = 0;
    for (std::size_t i = from; i < fr.size(); ++i) {
      const Bind& b = bind[fr[i] - 'A'];
      s += b.p ? b.len : 1;
    }
    return s;
  }

  int min_span_prefix(const std::string& fr, int upto) const {  // fr[0..upto]
    int s = 0;
    for (int i = 0; i <= upto; ++i) {
      const Bind& b = bind[fr[i] - 'A'];
      s += b.p ? b.len : 1;
    }
    return s;
  }

  bool run(std::size_t stage) {
    if (stage == order->size()) return true;
    const int fi = (*order)[stage];
    const std::string& fr = cf->frags[fi];
    if (stage == 0 && anchor_target >= 0)
      return match_rtl(fr, static_cast<int>(fr.size()) - 1, targets[anchor_target].n, stage);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const int reach = targets[t].n - min_span(fr, 0);
      for (int pos = 0; pos <= reach; ++pos)
        if (match_ltr(fr, 0, static_cast<int>(t), pos, stage)) return true;
    }
    return false;
  }

  // Left-to-right from a fixed start position inside one target.
  bool match_ltr(const std::string& fr, std::size_t si, int t, int pos, std::size_t stage) {
    if (si == fr.size()) return run(stage + 1);
    const int v = fr[si] - 'A';
    const Letter* tp = targets[t].p;
    const int n = targets[t].n;
    if (bind[v].p) {
      const int l = bind[v].len;
      if (pos + l + min_span(fr, si + 1) > n) return false;
      if (!spans_equal(tp + pos, bind[v].p, l)) return false;
      return match_ltr(fr, si + 1, t, pos + l, stage);
    }
    const int maxl = std::min(caps[v], n - pos - min_span(fr, si + 1));
    for (int l = 1; l <= maxl; ++l) {
      bind[v] = {tp + pos, l};
      if (match_ltr(fr, si + 1, t, pos + l, stage)) return true;
    }
    bind[v] = {};
    return false;
  }

  // Right-to-left with the image of fr ending exactly at offset rpos of the
  // anchor target.
  bool match_rtl(const std::string& fr, int si, int rpos, std::size_t stage) {
    if (si < 0) return run(stage + 1);
    const int v = fr[si] - 'A';
    const Letter* tp = targets[anchor_target].p;
    if (bind[v].p) {
      const int l = bind[v].len;
      if (l + min_span_prefix(fr, si - 1) > rpos) return false;
      if (!spans_equal(tp + rpos - l, bind[v].p, l)) return false;
      return match_rtl(fr, si - 1, rpos - l, stage);
    }
    const int maxl = std::min(caps[v], rpos - min_span_prefix(fr, si - 1));
    for (int l = 1; l <= maxl; ++l) {
      bind[v] = {tp + rpos - l, l};
      if (match_rtl(fr, si - 1, rpos - l, stage)) return true;
    }
    bind[v] = {};
    return false;
  }
};

std::array<int, 26> unlimited_caps() {
  std::array<int, 26> caps{};
  caps.fill(INT_MAX);
  return caps;
}

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f) : frags(f.fragments()) {
  const int m = static_cast<int>(frags.size());
  auto constrainedness = [&](int i) {
    std::set<char> vars(frags[i].begin(), frags[i].end());
    return std::pair<int, int>(static_cast<int>(vars.size()), static_cast<int>(frags[i].size()));
  };
  auto more_constrained = [&](int a, int b) {
    auto ca = constrainedness(a), cb = constrainedness(b);
    if (ca != cb) return ca > cb;
    return a < b;
  };
  order_plain.resize(m);
  for (int i = 0; i < m; ++i) order_plain[i] = i;
  std::sort(order_plain.begin(), order_plain.end(), more_constrained);
  order_for_anchor.resize(m);
  for (int a = 0; a < m; ++a) {
    order_for_anchor[a].push_back(a);
    for (int i : order_plain)
      if (i != a) order_for_anchor[a].push_back(i);
  }
}

bool occurrence_using_end(const Letter* w, int len, const CompiledFormula& f) {
  TargetSpan target{w, len};
  for (std::size_t a = 0; a < f.frags.size(); ++a) {
    Matcher m;
    m.targets = std::span<const TargetSpan>(&target, 1);
    m.cf = &f;
    m.order = &f.order_for_anchor[a];
    m.anchor_target = 0;
    m.caps = unlimited_caps();
    if (m.run(0)) return true;
  }
  return false;
}

bool occurrence_anywhere(const Letter* w, int len, const CompiledFormula& f) {
  TargetSpan target{w, len};
  Matcher m;
  m.targets = std::span<const TargetSpan>(&target, 1);
  m.cf = &f;
  m.order = &f.order_plain;
  m.caps = unlimited_caps();
  return m.run(0);
}

bool occurrence_in_targets(std::span<const TargetSpan> targets, const CompiledFormula& f,
                           const std::array<int, 26>& caps,
                           std::map<char, std::vector<Letter>>* witness) {
  Matcher m;
  m.targets = targets;
  m.cf = &f;
  m.order = &f.order_plain;
  m.caps = caps;
  if (!m.run(0)) return false;
  if (witness) {
    witness->clear();
    for (int v = 0; v < 26; ++v)
      if (m.bind[v].p)
        (*witness)['A' + v] = std::vector<Letter>(m.bind[v].p, m.bind[v].p + m.bind[v].len);
  }
  return true;
}

bool avoids(const Word& w, const Formula& f) {
  CompiledFormula cf(f);
  return !occurrence_anywhere(w.data(), w.size(), cf);
}

std::optional<Occurrence> find_occurrence(const Word& w, const Formula& f) {
  CompiledFormula cf(f);
  if (!occurrence_anywhere(w.data(), w.size(), cf)) return std::nullopt;

  // An occurrence exists; hunt down the least witness. Candidate images are
  // the distinct factors of w in shortlex order, variables are assigned in
  // alphabetical order, and every partial assignment is pruned against each
  // fragment, so the first complete assignment reached is the least one.
  std::vector<Word> cands;
  for (int n = 1; n <= w.size(); ++n)
    for (const Word& u : factors(w, n)) cands.push_back(u);

  const std::string& vars = f.variables();
  Matcher m;
  TargetSpan target{w.data(), w.size()};
  m.targets = std::span<const TargetSpan>(&target, 1);
  m.cf = &cf;
  m.caps = unlimited_caps();

  auto feasible = [&]() {
    for (std::size_t i = 0; i < cf.frags.size(); ++i) {
      std::vector<int> single{static_cast<int>(i)};
      m.order = &single;
      const auto saved = m.bind;
      const bool ok = m.run(0);
      m.bind = saved;  // drop images bound during the probe
      if (!ok) return false;
    }
    return true;
  };

  std::vector<int> chosen(vars.size(), -1);
  auto assign = [&](auto&& self, std::size_t vi) -> bool {
    if (vi == vars.size()) return true;
    const int v = vars[vi] - 'A';
    for (std::size_t c = 0; c < cands.size(); ++c) {
      m.bind[v] = {cands[c].data(), cands[c].size()};
      if (feasible()) {
        chosen[vi] = static_cast<int>(c);
        if (self(self, vi + 1)) return true;
      }
    }
    m.bind[v] = {};
    return false;
  };
  if (!assign(assign, 0))
    throw std::logic_error("occurrence detected but witness search failed");

  Occurrence occ;
  for (std::size_t vi = 0; vi < vars.size(); ++vi)
    occ.assignment.insert_or_assign(vars[vi], cands[chosen[vi]]);
  return occ;
}

bool occurrence_valid(const Word& w, const Formula& f, const Occurrence& h) {
  for (const std::string& fr : f.fragments()) {
    std::vector<Letter> image;
    for (char s : fr) {
      auto it = h.assignment.find(s);
      if (it == h.assignment.end() || it->second.size() == 0) return false;
      if (it->second.alphabet() != w.alphabet()) return false;
      image.insert(image.end(), it->second.data(), it->second.data() + it->second.size());
    }
    bool found = false;
    const int n = w.size(), m = static_cast<int>(image.size());
    for (int pos = 0; pos + m <= n && !found; ++pos) {
      bool eq = true;
      for (int i = 0; i < m && eq; ++i) eq = (w[pos + i] == image[i]);
      found = eq;
    }
    if (!found) return false;
  }
  return true;
}

ExtensionContext make_extension_context(const Word& w, const Formula& f) {
  if (!avoids(w, f)) throw std::invalid_argument("word does not avoid the formula");
  return ExtensionContext(w, f);
}

std::pair<bool, ExtensionContext> avoids_extension(const Word& w, Letter a, const Formula& f,
                                                   const ExtensionContext& ctx) {
  if (ctx.word_ != w || ctx.formula_ != f)
    throw std::invalid_argument("extension context does not belong to this word and formula");
  if (a >= w.alphabet().size()) throw std::invalid_argument("letter outside the alphabet");
  std::vector<Letter> buf(w.data(), w.data() + w.size());
  buf.push_back(a);
  CompiledFormula cf(f);
  if (occurrence_using_end(buf.data(), static_cast<int>(buf.size()), cf)) return {false, ctx};
  return {true, ExtensionContext(Word(w.alphabet(), std::move(buf)), f)};
}

bool is_divisible_by(const Formula& f, const Formula& f_small) {
  // Targets are the fragments of f viewed as words over its variables.
  std::vector<std::vector<Letter>> frag_words;
  for (const std::string& fr : f.fragments()) {
    std::vector<Letter> fw;
    for (char s : fr) fw.push_back(static_cast<Letter>(s - 'A'));
    frag_words.push_back(std::move(fw));
  }
  std::vector<TargetSpan> targets;
  for (const auto& fw : frag_words) targets.push_back({fw.data(), static_cast<int>(fw.size())});
  std::array<int, 26> caps{};
  caps.fill(f.max_fragment_size());
  CompiledFormula cf(f_small);
  return occurrence_in_targets(targets, cf, caps, nullptr);
}

}  // namespace avoid
