#include "avoid/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "avoid/occurrence.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace avoid {

std::string convention_name() {
  return kCountingConvention == Convention::nonempty ? "nonempty" : "with-empty";
}

std::uint64_t AvoidanceTable::total() const {
  std::uint64_t t = kCountingConvention == Convention::with_empty ? 1 : 0;
  for (const auto& [len, n] : counts) t += n;
  return t;
}

namespace {

struct Engine {
  int k = 2;
  std::vector<CompiledFormula> formulas;
  std::vector<std::vector<Letter>> forbidden;
  int square_floor = 0;
  std::optional<AnchoredSquareRule> anchored;

  std::uint64_t budget = 0;
  std::uint64_t flush_every = 1024;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};

  Engine(const ConstraintSet& c, int alphabet_size, const SearchOptions& opts)
      : k(alphabet_size), budget(opts.node_budget) {
    if (k < 1 || k > kMaxAlphabetSize) throw std::invalid_argument("bad alphabet size");
    for (const Formula& f : c.formulas) formulas.emplace_back(f);
    for (const Word& u : c.forbidden_factors) {
      if (u.empty()) throw std::invalid_argument("empty forbidden factor");
      if (u.alphabet().size() > k)
        throw std::invalid_argument("forbidden factor outside the alphabet");
      forbidden.emplace_back(u.data(), u.data() + u.size());
    }
    square_floor = c.square_floor;
    if (square_floor < 0) throw std::invalid_argument("negative square period floor");
    anchored = c.anchored_square;
    if (anchored && (anchored->letter >= k || anchored->min_period < 1))
      throw std::invalid_argument("bad anchored square rule");
    if (budget == 0) budget = UINT64_MAX;
    flush_every = budget < 1u << 20 ? 1 : 1024;
  }

  bool stop() const { return aborted.load(std::memory_order_relaxed); }

  // One unit of work per attempted extension; false when the budget ran out.
  bool charge(std::uint64_t& local) {
    if (++local < flush_every) return true;
    const std::uint64_t total = nodes.fetch_add(local, std::memory_order_relaxed) + local;
    local = 0;
    if (total >= budget) {
      aborted.store(true, std::memory_order_relaxed);
      return false;
    }
    return true;
  }

  void settle(std::uint64_t& local) {
    nodes.fetch_add(local, std::memory_order_relaxed);
    local = 0;
  }

  // Is w[0..len) still admissible after its last letter was appended? Only
  // violations that use the last position need checking.
  bool extension_ok(const Letter* w, int len) const {
    for (const auto& u : forbidden) {
      const int m = static_cast<int>(u.size());
      if (m <= len && std::equal(u.begin(), u.end(), w + len - m)) return false;
    }
    if (square_floor > 0 && len / 2 >= square_floor &&
        square_ending_at(w, len, square_floor, len / 2))
      return false;
    if (anchored) {
      for (int p = anchored->min_period; 2 * p + 1 <= len; ++p) {
        if (w[len - 2 * p - 1] != anchored->letter) continue;
        if (std::equal(w + len - 2 * p, w + len - p, w + len - p)) return false;
      }
    }
    for (const CompiledFormula& cf : formulas)
      if (occurrence_using_end(w, len, cf)) return false;
    return true;
  }
};

// The enumeration is letter-symmetric when every constraint is preserved by
// every permutation of the alphabet; then only words starting with 0 need
// visiting and counts scale by k.
bool letter_symmetric(const Engine& e) {
  if (e.anchored) return false;
  if (e.k < 2 || e.k > 4) return e.forbidden.empty();
  std::vector<Letter> pi(e.k);
  std::iota(pi.begin(), pi.end(), Letter{0});
  auto key = [](const std::vector<Letter>& v) {
    std::string s;
    for (Letter a : v) s.push_back(static_cast<char>('0' + a));
    return s;
  };
  std::set<std::string> closed;
  for (const auto& u : e.forbidden) closed.insert(key(u));
  while (std::next_permutation(pi.begin(), pi.end())) {
    for (const auto& u : e.forbidden) {
      std::vector<Letter> img(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) img[i] = pi[u[i]];
      if (!closed.count(key(img))) return false;
    }
  }
  return true;
}

struct Accum {
  std::vector<std::uint64_t> counts;
  int best_len = 0;
  std::vector<Letter> best_word;

  explicit Accum(int limit) : counts(limit + 1, 0) {}
  void visit(const Letter* w, int len) {
    ++counts[len];
    if (len > best_len) {
      best_len = len;
      best_word.assign(w, w + len);
    }
  }
};

// Depth-first walk over admissible words; vis(buf, len) fires once per word.
template <typename Vis>
void dfs(Engine& e, Letter* buf, int depth, int limit, std::uint64_t& local, Vis&& vis) {
  if (depth >= limit || e.stop()) return;
  for (Letter a = 0; a < e.k; ++a) {
    buf[depth] = a;
    if (!e.charge(local)) return;
    if (!e.extension_ok(buf, depth + 1)) continue;
    vis(buf, depth + 1);
    dfs(e, buf, depth + 1, limit, local, vis);
    if (e.stop()) return;
  }
}

AvoidanceTable finalize(Engine& e, const Accum& acc, int limit, int scale) {
  AvoidanceTable out;
  out.budget_exhausted = e.stop();
  out.nodes_visited = e.nodes.load();
  for (int n = 1; n <= acc.best_len; ++n)
    out.counts[n] = acc.counts[n] * static_cast<std::uint64_t>(scale);
  out.exhausted = !out.budget_exhausted && acc.best_len < limit;
  if (out.exhausted) out.max_length = acc.best_len;
  if (acc.best_len > 0)
    out.witness_longest = Word(Alphabet(e.k), acc.best_word);
  return out;
}

AvoidanceTable run_serial(Engine& e, int limit, bool symmetric) {
  Accum acc(limit);
  std::vector<Letter> buf(limit);
  std::uint64_t local = 0;
  auto vis = [&](const Letter* w, int len) { acc.visit(w, len); };
  if (symmetric) {
    buf[0] = 0;
    if (e.charge(local) && e.extension_ok(buf.data(), 1)) {
      vis(buf.data(), 1);
      dfs(e, buf.data(), 1, limit, local, vis);
    }
  } else {
    dfs(e, buf.data(), 0, limit, local, vis);
  }
  e.settle(local);
  return finalize(e, acc, limit, symmetric ? e.k : 1);
}

AvoidanceTable run_parallel(Engine& e, int limit, bool symmetric, const SearchOptions& opts) {
  const int split = std::clamp(opts.split_depth, 1, limit);
  Accum acc(limit);
  std::vector<std::vector<Letter>> roots;
  std::vector<Letter> buf(limit);
  std::uint64_t local = 0;
  auto vis = [&](const Letter* w, int len) {
    acc.visit(w, len);
    if (len == split) roots.emplace_back(w, w + len);
  };
  if (symmetric) {
    buf[0] = 0;
    if (e.charge(local) && e.extension_ok(buf.data(), 1)) {
      vis(buf.data(), 1);
      dfs(e, buf.data(), 1, split, local, vis);
    }
  } else {
    dfs(e, buf.data(), 0, split, local, vis);
  }
  e.settle(local);

  if (split >= limit || roots.empty() || e.stop())
    return finalize(e, acc, limit, symmetric ? e.k : 1);

  struct RootBest {
    int len = 0;
    std::vector<Letter> word;
  };
  std::vector<RootBest> best(roots.size());
  const int nroots = static_cast<int>(roots.size());

#ifdef _OPENMP
  if (opts.threads > 0) omp_set_num_threads(opts.threads);
#pragma omp parallel
#endif
  {
    std::vector<std::uint64_t> cnt(limit + 1, 0);
    std::vector<Letter> wbuf(limit);
    std::uint64_t lc = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
    for (int r = 0; r < nroots; ++r) {
      if (e.stop()) continue;
      std::copy(roots[r].begin(), roots[r].end(), wbuf.begin());
      RootBest rb;
      dfs(e, wbuf.data(), split, limit, lc, [&](const Letter* w, int len) {
        ++cnt[len];
        if (len > rb.len) {
          rb.len = len;
          rb.word.assign(w, w + len);
        }
      });
      best[r] = std::move(rb);
    }
    e.settle(lc);
#ifdef _OPENMP
#pragma omp critical
#endif
    {
      for (int n = 0; n <= limit; ++n) acc.counts[n] += cnt[n];
    }
  }

  // Roots were collected in lexicographic order, so the first root attaining
  // the best depth holds the least witness of that length.
  for (const RootBest& rb : best)
    if (rb.len > acc.best_len) {
      acc.best_len = rb.len;
      acc.best_word = rb.word;
    }
  return finalize(e, acc, limit, symmetric ? e.k : 1);
}

}  // namespace

AvoidanceTable enumerate_avoiders(const ConstraintSet& c, int alphabet_size, int limit,
                                  const SearchOptions& opts) {
  if (limit < 1) throw std::invalid_argument("limit must be positive");
  Engine e(c, alphabet_size, opts);
  const bool symmetric = letter_symmetric(e);
  if (opts.serial) return run_serial(e, limit, symmetric);
  return run_parallel(e, limit, symmetric, opts);
}

AvoidanceTable enumerate_avoiders_serial(const ConstraintSet& c, int alphabet_size, int limit,
                                         const SearchOptions& opts) {
  if (limit < 1) throw std::invalid_argument("limit must be positive");
  Engine e(c, alphabet_size, opts);
  return run_serial(e, limit, letter_symmetric(e));
}

std::optional<int> max_avoiding_length(const ConstraintSet& c, int alphabet_size, int limit,
                                       const SearchOptions& opts) {
  return enumerate_avoiders(c, alphabet_size, limit, opts).max_length;
}

GrowthVerdict classify_growth(const Formula& f, int alphabet_size, const GrowthOptions& opts) {
  ConstraintSet c;
  c.formulas.push_back(f);
  GrowthVerdict v;
  v.table = enumerate_avoiders(c, alphabet_size, opts.limit, opts.search);
  if (v.table.exhausted)
    throw std::invalid_argument("the formula is avoided by finitely many words; growth undefined");
  if (v.table.budget_exhausted) return v;

  const int last = opts.limit;
  const int window = std::min(opts.window, last - 1);
  if (window < 1) throw std::invalid_argument("growth window too small");
  auto count = [&](int n) -> std::uint64_t {
    auto it = v.table.counts.find(n);
    return it == v.table.counts.end() ? 0 : it->second;
  };
  if (count(last - window) == 0) throw std::logic_error("counts vanished without exhausting");

  for (int n = last - window + 1; n <= last; ++n) {
    const std::uint64_t a = count(n - 1), b = count(n);
    v.max_difference = std::max(v.max_difference, b > a ? b - a : a - b);
  }
  v.mean_ratio = std::pow(static_cast<double>(count(last)) / count(last - window), 1.0 / window);

  if (v.max_difference <= opts.diff_bound)
    v.growth = Growth::polynomial;
  else if (v.mean_ratio >= opts.ratio_threshold)
    v.growth = Growth::exponential;
  return v;
}

std::set<Word> extendable_words(const ConstraintSet& c, int alphabet_size, int n, int m,
                                const SearchOptions& opts) {
  if (n < 1 || m < 0) throw std::invalid_argument("bad window parameters");
  Engine e(c, alphabet_size, opts);
  const int full = n + 2 * m;
  const Alphabet sigma(alphabet_size);

  const bool packed = alphabet_size <= 4 && n <= kMaxPackedLength;
  std::unordered_set<std::uint64_t> keys;
  std::set<Word> middles;
  auto emit = [&](const Letter* w) {
    if (packed)
      keys.insert(pack_letters(w + m, n));
    else
      middles.insert(Word(sigma, std::vector<Letter>(w + m, w + m + n)));
  };

  const int split = std::clamp(opts.split_depth, 1, full);
  std::vector<std::vector<Letter>> roots;
  std::vector<Letter> buf(full);
  std::uint64_t local = 0;
  dfs(e, buf.data(), 0, split, local, [&](const Letter* w, int len) {
    if (len == split) roots.emplace_back(w, w + len);
    if (len == full) emit(w);  // only when split == full
  });
  e.settle(local);

  if (split < full && !roots.empty() && !e.stop()) {
    const int nroots = static_cast<int>(roots.size());
#ifdef _OPENMP
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
#pragma omp parallel if (!opts.serial)
#endif
    {
      std::unordered_set<std::uint64_t> lk;
      std::set<Word> lm;
      std::vector<Letter> wbuf(full);
      std::uint64_t lc = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
      for (int r = 0; r < nroots; ++r) {
        if (e.stop()) continue;
        std::copy(roots[r].begin(), roots[r].end(), wbuf.begin());
        dfs(e, wbuf.data(), split, full, lc, [&](const Letter* w, int len) {
          if (len != full) return;
          if (packed)
            lk.insert(pack_letters(w + m, n));
          else
            lm.insert(Word(sigma, std::vector<Letter>(w + m, w + m + n)));
        });
      }
      e.settle(lc);
#ifdef _OPENMP
#pragma omp critical
#endif
      {
        keys.merge(lk);
        for (const Word& w : lm) middles.insert(w);
      }
    }
  }

  if (e.stop()) throw std::runtime_error("node budget exhausted while collecting factors");
  if (packed)
    for (std::uint64_t key : keys) middles.insert(unpack_word(key, sigma));
  return middles;
}

}  // namespace avoid
