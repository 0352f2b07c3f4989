#include "hc3/packing_solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace hc3 {

unsigned default_thread_count() {
  if (const char* env = std::getenv("THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

using Word = std::uint64_t;

enum class Mode { Maximum, Feasible, Count };

struct Task {
  std::vector<Word> cand;
  std::size_t size;
  std::vector<std::uint32_t> chosen;
};

}  // namespace

struct MisSolver::Impl {
  std::size_t n;
  std::size_t words;
  std::vector<Word> adj;  // n rows of `words` words
  SolverOptions options;

  // Shared search state.
  Mode mode = Mode::Maximum;
  std::size_t target = 0;
  const Permutations* group = nullptr;
  std::atomic<std::size_t> best{0};
  std::atomic<bool> found{false};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> total{0};
  std::mutex error_mutex;
  std::exception_ptr error;

  explicit Impl(const ExclusionGraph& g, SolverOptions opts)
      : n(g.n), words((g.n + 63) / 64), adj(g.n * ((g.n + 63) / 64), 0), options(opts) {
    for (std::size_t v = 0; v < n; ++v)
      for (std::uint32_t u : g.adj[v]) adj[v * words + u / 64] |= Word{1} << (u % 64);
  }

  const Word* row(std::size_t v) const { return adj.data() + v * words; }

  std::vector<Word> full() const {
    std::vector<Word> b(words, ~Word{0});
    if (n % 64 != 0) b[words - 1] = (Word{1} << (n % 64)) - 1;
    if (n == 0) b.clear();
    return b;
  }

  static bool empty(const Word* b, std::size_t w) {
    for (std::size_t i = 0; i < w; ++i)
      if (b[i]) return false;
    return true;
  }

  static std::size_t first(const Word* b, std::size_t w) {
    for (std::size_t i = 0; i < w; ++i)
      if (b[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(b[i]));
    return SIZE_MAX;
  }

  // Greedy clique cover of `cand`, using `r` and `c` as scratch.
  std::size_t cover(const Word* cand, Word* r, Word* c) const {
    std::copy(cand, cand + words, r);
    std::size_t cliques = 0;
    for (std::size_t u = first(r, words); u != SIZE_MAX; u = first(r, words)) {
      ++cliques;
      r[u / 64] &= ~(Word{1} << (u % 64));
      const Word* nu = row(u);
      for (std::size_t i = 0; i < words; ++i) c[i] = r[i] & nu[i];
      for (std::size_t w = first(c, words); w != SIZE_MAX; w = first(c, words)) {
        r[w / 64] &= ~(Word{1} << (w % 64));
        const Word* nw = row(w);
        for (std::size_t i = 0; i < words; ++i) c[i] &= nw[i];
      }
    }
    return cliques;
  }

  std::size_t branch_vertex(const Word* cand) const {
    std::size_t best_v = SIZE_MAX;
    int best_d = -1;
    for (std::size_t i = 0; i < words; ++i) {
      Word b = cand[i];
      while (b) {
        std::size_t v = i * 64 + static_cast<std::size_t>(std::countr_zero(b));
        b &= b - 1;
        const Word* nv = row(v);
        int d = 0;
        for (std::size_t j = 0; j < words; ++j) d += std::popcount(cand[j] & nv[j]);
        if (d > best_d) {
          best_d = d;
          best_v = v;
        }
      }
    }
    return best_v;
  }

  bool is_canonical(const std::vector<std::uint32_t>& chosen) const {
    std::vector<std::uint32_t> sorted = chosen, image(chosen.size());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& perm : *group) {
      for (std::size_t i = 0; i < sorted.size(); ++i) image[i] = perm[sorted[i]];
      std::sort(image.begin(), image.end());
      if (image < sorted) return false;
    }
    return true;
  }

  // Per-thread search with its own bitset arena.
  struct Worker {
    Impl& s;
    std::vector<Word> arena;
    std::vector<Word> scratch;
    std::vector<std::uint32_t> chosen;
    std::uint64_t local_nodes = 0;
    std::uint64_t count = 0;

    explicit Worker(Impl& impl)
        : s(impl), arena((impl.n + 2) * impl.words), scratch(2 * impl.words) {}

    void tick() {
      if (++local_nodes == 1024) flush();
    }
    void flush() {
      std::uint64_t total = s.nodes.fetch_add(local_nodes) + local_nodes;
      local_nodes = 0;
      if (s.options.node_budget != 0 && total > s.options.node_budget)
        throw BudgetExhausted("node budget of " + std::to_string(s.options.node_budget) + " exhausted", total);
    }
    void finish() {
      s.nodes.fetch_add(local_nodes);
      local_nodes = 0;
    }

    bool halted() const { return s.stop.load(std::memory_order_relaxed) || s.found.load(std::memory_order_relaxed); }

    void leaf(std::size_t size) {
      switch (s.mode) {
        case Mode::Maximum: {
          std::size_t cur = s.best.load();
          while (size > cur && !s.best.compare_exchange_weak(cur, size)) {
          }
          break;
        }
        case Mode::Feasible:
          if (size >= s.target) s.found = true;
          break;
        case Mode::Count:
          if (size == s.target && (!s.group || s.is_canonical(chosen))) ++count;
          break;
      }
    }

    void search(std::size_t depth, std::size_t size) {
      if (halted()) return;
      tick();
      Word* cand = arena.data() + depth * s.words;
      if (s.mode != Mode::Maximum && size == s.target) {
        leaf(size);
        return;
      }
      if (empty(cand, s.words)) {
        leaf(size);
        return;
      }
      std::size_t bound = size + s.cover(cand, scratch.data(), scratch.data() + s.words);
      if (s.mode == Mode::Maximum ? bound <= s.best.load(std::memory_order_relaxed) : bound < s.target) return;
      std::size_t v = s.branch_vertex(cand);
      Word* child = cand + s.words;
      const Word* nv = s.row(v);
      for (std::size_t i = 0; i < s.words; ++i) child[i] = cand[i] & ~nv[i];
      child[v / 64] &= ~(Word{1} << (v % 64));
      chosen.push_back(static_cast<std::uint32_t>(v));
      search(depth + 1, size + 1);
      chosen.pop_back();
      cand[v / 64] &= ~(Word{1} << (v % 64));
      search(depth, size);
    }

    void run(const Task& t) {
      std::copy(t.cand.begin(), t.cand.end(), arena.begin());
      chosen = t.chosen;
      search(0, t.size);
    }
  };

  // Expands the first levels of the tree into independent tasks, in DFS order.
  void split(Task t, std::size_t depth, std::vector<Task>& out) {
    if (depth == 0 || empty(t.cand.data(), words) || (mode != Mode::Maximum && t.size == target)) {
      out.push_back(std::move(t));
      return;
    }
    std::size_t v = branch_vertex(t.cand.data());
    Task inc{t.cand, t.size + 1, t.chosen};
    const Word* nv = row(v);
    for (std::size_t i = 0; i < words; ++i) inc.cand[i] &= ~nv[i];
    inc.cand[v / 64] &= ~(Word{1} << (v % 64));
    inc.chosen.push_back(static_cast<std::uint32_t>(v));
    split(std::move(inc), depth - 1, out);
    t.cand[v / 64] &= ~(Word{1} << (v % 64));
    split(std::move(t), depth - 1, out);
  }

  void run(Task root) {
    unsigned threads = options.threads == 0 ? default_thread_count() : options.threads;
    std::vector<Task> tasks;
    std::size_t depth = 0;
    if (threads > 1)
      while ((std::size_t{1} << depth) < 8 * static_cast<std::size_t>(threads) && depth < 16) ++depth;
    split(std::move(root), depth, tasks);
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, tasks.size()));

    std::atomic<std::size_t> next{0};
    auto body = [&] {
      Worker w(*this);
      try {
        for (std::size_t i = next++; i < tasks.size() && !stop && !found; i = next++) w.run(tasks[i]);
        w.finish();
        total += w.count;
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    };
    if (threads <= 1) {
      body();
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(body);
      for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
  }

  void reset(Mode m, std::size_t t) {
    mode = m;
    target = t;
    best = 0;
    found = false;
    stop = false;
    total = 0;
    error = nullptr;
  }
};

namespace {

template <class F>
auto timed(SolverStats& stats, std::atomic<std::uint64_t>& nodes, F&& f) {
  auto start = std::chrono::steady_clock::now();
  nodes = 0;
  struct Record {
    SolverStats& stats;
    std::atomic<std::uint64_t>& nodes;
    std::chrono::steady_clock::time_point start;
    ~Record() {
      stats.nodes += nodes.load();
      stats.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  } record{stats, nodes, start};
  return f();
}

}  // namespace

MisSolver::MisSolver(const ExclusionGraph& g, SolverOptions options) : g_(g), options_(options) {}

std::size_t MisSolver::maximum(bool vertex_transitive) {
  Impl impl(g_, options_);
  if (impl.n == 0) return 0;
  return timed(stats_, impl.nodes, [&] {
    impl.reset(Mode::Maximum, 0);
    Task root{impl.full(), 0, {}};
    if (vertex_transitive) {
      const Word* n0 = impl.row(0);
      for (std::size_t i = 0; i < impl.words; ++i) root.cand[i] &= ~n0[i];
      root.cand[0] &= ~Word{1};
      root.size = 1;
      root.chosen = {0};
      impl.best = 1;
    }
    impl.run(std::move(root));
    return impl.best.load();
  });
}

std::optional<std::vector<std::uint32_t>> MisSolver::lex_least(std::size_t size) {
  Impl impl(g_, options_);
  return timed(stats_, impl.nodes, [&]() -> std::optional<std::vector<std::uint32_t>> {
    std::vector<std::uint32_t> chosen;
    if (size == 0) return chosen;
    std::vector<Word> cand = impl.full();
    for (std::size_t v = Impl::first(cand.data(), impl.words); v != SIZE_MAX && chosen.size() < size;
         v = Impl::first(cand.data(), impl.words)) {
      Task t{cand, chosen.size() + 1, chosen};
      const Word* nv = impl.row(v);
      for (std::size_t i = 0; i < impl.words; ++i) t.cand[i] &= ~nv[i];
      t.cand[v / 64] &= ~(Word{1} << (v % 64));
      t.chosen.push_back(static_cast<std::uint32_t>(v));
      impl.reset(Mode::Feasible, size);
      std::vector<Word> next = t.cand;
      impl.run(std::move(t));
      if (impl.found) {
        chosen.push_back(static_cast<std::uint32_t>(v));
        cand = std::move(next);
      } else {
        cand[v / 64] &= ~(Word{1} << (v % 64));
      }
    }
    if (chosen.size() < size) return std::nullopt;
    return chosen;
  });
}

std::uint64_t MisSolver::count(std::size_t size, const Permutations* group) {
  Impl impl(g_, options_);
  return timed(stats_, impl.nodes, [&] {
    impl.reset(Mode::Count, size);
    impl.group = group;
    impl.run(Task{impl.full(), 0, {}});
    return impl.total.load();
  });
}

std::size_t MisSolver::cover_bound() const {
  Impl impl(g_, options_);
  std::vector<Word> all = impl.full(), r(impl.words), c(impl.words);
  return impl.cover(all.data(), r.data(), c.data());
}

Permutations translation_permutations(const Quotient& q) {
  std::vector<Site> reps = q.representatives();
  Permutations perms(q.size(), std::vector<std::uint32_t>(q.size()));
  for (std::size_t t = 0; t < q.size(); ++t)
    for (std::size_t i = 0; i < q.size(); ++i)
      perms[t][i] = static_cast<std::uint32_t>(q.index_of(reps[i] + reps[t]));
  return perms;
}

namespace {

PackingResult solve(const Quotient& q, Int d2, bool counting, bool modulo_translations,
                    const SolverOptions& options) {
  ExclusionGraph g = build_exclusion_graph(q, d2);
  MisSolver solver(g, options);
  std::size_t opt = solver.maximum(true);
  auto witness = solver.lex_least(opt);
  if (!witness) throw Error("internal error: no witness at the proved optimum");
  std::vector<Site> sites;
  for (std::uint32_t v : *witness) sites.push_back(q.rep(v));
  std::optional<std::uint64_t> count;
  if (counting) {
    if (modulo_translations) {
      Permutations group = translation_permutations(q);
      count = solver.count(opt, &group);
    } else {
      count = solver.count(opt);
    }
  }
  return PackingResult{opt, Configuration(q, d2, sites), count, solver.stats()};
}

}  // namespace

PackingResult max_packing(const Quotient& q, Int d2, const SolverOptions& options) {
  return solve(q, d2, false, false, options);
}

PackingResult max_packing_with_count(const Quotient& q, Int d2, bool modulo_translations,
                                     const SolverOptions& options) {
  return solve(q, d2, true, modulo_translations, options);
}

std::uint64_t count_optima(const Quotient& q, Int d2, bool modulo_translations, const SolverOptions& options) {
  return *max_packing_with_count(q, d2, modulo_translations, options).count;
}

std::size_t clique_cover_bound(const Quotient& q, Int d2) {
  ExclusionGraph g = build_exclusion_graph(q, d2);
  return MisSolver(g).cover_bound();
}

}  // namespace hc3
