#include "birack/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "birack/error.hpp"

namespace birack {

namespace {

// Cells 0..N-1 hold the up table (a*n + x is x^a), cells N..2N-1 the down table.
// Each triple contributes the three component equations of B3. An equation is parked on
// the watch list of the first unassigned cell its evaluation reaches, or, once fully
// evaluated, of the latest-assigned cell it read; it is re-evaluated only when that cell
// is assigned. When one side is known and the other is blocked only at its final lookup,
// the blocked cell is forced. Every leaf is re-verified in full.
class Solver {
 public:
  Solver(int n, const std::optional<ActionTable>& fixed_down, std::atomic<std::uint64_t>& nodes,
         std::uint64_t limit)
      : n_(n), N_(n * n), val_(2 * n * n, -1), when_(2 * n * n, -1), dom_(2 * n * n, (1U << n) - 1),
        col_used_(2 * n, 0), pair_used_(n * n, 0), marked_(2 * n * n, 0), watch_(2 * n * n), nodes_(nodes),
        limit_(limit) {
    if (fixed_down) {
      for (int b = 0; b < n; ++b) {
        auto img = (*fixed_down)[b].raw();
        for (int x = 0; x < n; ++x) {
          val_[N_ + b * n + x] = static_cast<std::int8_t>(img[x]);
          col_used_[n + b] |= 1U << img[x];
        }
      }
      restrict_up_domains();
    }
    for (int c = 0; c < 2 * N_; ++c) {
      if (val_[c] < 0) order_.push_back(c);
    }
    // Interleave columns: up 0, down 0, up 1, down 1, ...
    std::stable_sort(order_.begin(), order_.end(), [this](int p, int q) { return rank(p) < rank(q); });
    for (int id = 0; id < 3 * N_ * n; ++id) {
      Eval r = eval(id);
      if (r.status == kFail) infeasible_ = true;
      if (r.status == kForced) forced_at_start_.push_back({r.cell, r.value});
      if (r.status == kForced || r.status == kBlocked) watch_[r.cell].push_back(id);
    }
  }

  void run(int worker, int jobs, const RawSolutionFn& emit) {
    if (infeasible_) return;
    worker_ = worker;
    jobs_ = jobs;
    emit_ = &emit;
    for (auto [cell, v] : forced_at_start_) {
      if (val_[cell] >= 0) {
        if (val_[cell] != v) return;
        continue;
      }
      if (!set(cell, v) || !propagate()) return;
    }
    dfs(0, true);
    flush_nodes();
  }

 private:
  enum Status { kOk, kFail, kBlocked, kForced };
  struct Eval {
    Status status;
    int cell = -1;
    int value = -1;
    int latest = -1;  // cell with the latest trail position read, for kOk
  };

  int rank(int c) const { return c < N_ ? 2 * (c / n_) : 2 * ((c - N_) / n_) + 1; }

  void restrict_up_domains() {
    // (a_b)_c = (a_{c^b})_{b_c} pins the column of c^b once the down table is known.
    const int n = n_;
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        std::uint32_t mask = 0;
        for (int y = 0; y < n; ++y) {
          bool ok = true;
          for (int a = 0; a < n && ok; ++a) {
            int lhs = val_[N_ + c * n + val_[N_ + b * n + a]];
            int rhs = val_[N_ + val_[N_ + c * n + b] * n + val_[N_ + y * n + a]];
            ok = lhs == rhs;
          }
          if (ok) mask |= 1U << y;
        }
        dom_[b * n + c] = mask;
      }
    }
  }

  // Evaluates a lookup chain. On success returns the value; otherwise records the
  // blocking cell and whether it was the final lookup of the chain.
  struct Side {
    int value = -1;
    int blocked = -1;
    bool final_lookup = false;
    int latest = -1;
    int latest_when = -2;
  };

  void touch(Side& s, int cell) const {
    if (when_[cell] > s.latest_when) {
      s.latest_when = when_[cell];
      s.latest = cell;
    }
  }

  // Reads cell for side s; returns false if blocked.
  bool read(Side& s, int cell, int& out, bool final_lookup) const {
    int v = val_[cell];
    if (v < 0) {
      s.blocked = cell;
      s.final_lookup = final_lookup;
      return false;
    }
    touch(s, cell);
    out = v;
    return true;
  }

  int up(int act, int x) const { return act * n_ + x; }
  int dn(int act, int x) const { return N_ + act * n_ + x; }

  Side side(int eq, bool left, int a, int b, int c) const {
    Side s;
    int ab, ba, cb, cab, acb, bc;
    switch (eq) {
      case 0:
        // (a_b)_c = (a_{c^b})_{b_c}
        if (left) {
          if (read(s, dn(b, a), ab, false)) read(s, dn(c, ab), s.value, true);
        } else {
          if (read(s, dn(c, b), bc, false) && read(s, up(b, c), cb, false) && read(s, dn(cb, a), acb, false))
            read(s, dn(bc, acb), s.value, true);
        }
        break;
      case 1:
        // (c^{a_b})^{b^a} = (c^b)^a
        if (left) {
          if (read(s, dn(b, a), ab, false) && read(s, up(a, b), ba, false) && read(s, up(ab, c), cab, false))
            read(s, up(ba, cab), s.value, true);
        } else {
          if (read(s, up(b, c), cb, false)) read(s, up(a, cb), s.value, true);
        }
        break;
      default:
        // (b^a)_{c^{a_b}} = (b_c)^{a_{c^b}}
        if (left) {
          if (read(s, dn(b, a), ab, false) && read(s, up(a, b), ba, false) && read(s, up(ab, c), cab, false))
            read(s, dn(cab, ba), s.value, true);
        } else {
          if (read(s, up(b, c), cb, false) && read(s, dn(cb, a), acb, false) && read(s, dn(c, b), bc, false))
            read(s, up(acb, bc), s.value, true);
        }
        break;
    }
    if (s.blocked >= 0) s.value = -1;
    return s;
  }

  Eval eval(int id) const {
    const int n = n_;
    const int eq = id % 3;
    const int t = id / 3;
    const int c = t % n, b = (t / n) % n, a = t / (n * n);
    Side l = side(eq, true, a, b, c);
    Side r = side(eq, false, a, b, c);
    if (l.value >= 0 && r.value >= 0) {
      if (l.value != r.value) return {kFail};
      return {kOk, -1, -1, l.latest_when >= r.latest_when ? l.latest : r.latest};
    }
    if (l.value >= 0 && r.final_lookup) return {kForced, r.blocked, l.value};
    if (r.value >= 0 && l.final_lookup) return {kForced, l.blocked, r.value};
    return {kBlocked, l.blocked >= 0 ? l.blocked : r.blocked};
  }

  int partner(int cell) const {
    if (cell < N_) return N_ + (cell % n_) * n_ + cell / n_;
    int d = cell - N_;
    return (d % n_) * n_ + d / n_;
  }

  int column(int cell) const { return cell / n_; }

  // Sets a value and checks the column and pair constraints.
  bool set(int cell, int v) {
    if (!((dom_[cell] & ~col_used_[column(cell)]) >> v & 1U)) return false;
    val_[cell] = static_cast<std::int8_t>(v);
    when_[cell] = static_cast<int>(trail_.size());
    trail_.push_back(cell);
    col_used_[column(cell)] |= 1U << v;
    int p = partner(cell);
    if (val_[p] >= 0) {
      int pi = cell < N_ ? v * n_ + val_[p] : val_[p] * n_ + v;
      if (pair_used_[pi]) return false;
      pair_used_[pi] = 1;
      marked_[cell] = static_cast<std::int16_t>(pi + 1);
    }
    queue_.push_back(cell);
    return true;
  }

  bool propagate() {
    while (qhead_ < queue_.size()) {
      int cell = queue_[qhead_++];
      auto& lst = watch_[cell];
      for (std::size_t i = 0; i < lst.size();) {
        int id = lst[i];
        Eval r = eval(id);
        int dest = -1;
        if (r.status == kFail) return false;
        if (r.status == kOk) dest = r.latest;
        else dest = r.cell;
        if (dest != cell) {
          watch_[dest].push_back(id);
          lst[i] = lst.back();
          lst.pop_back();
        } else {
          ++i;
        }
        if (r.status == kForced && !set(r.cell, r.value)) return false;
      }
    }
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      int cell = trail_.back();
      trail_.pop_back();
      if (marked_[cell]) {
        pair_used_[marked_[cell] - 1] = 0;
        marked_[cell] = 0;
      }
      col_used_[column(cell)] &= ~(1U << val_[cell]);
      val_[cell] = -1;
      when_[cell] = -1;
    }
    queue_.clear();
    qhead_ = 0;
  }

  void count_node() {
    if (++local_nodes_ == 4096) flush_nodes();
  }

  void flush_nodes() {
    std::uint64_t total = nodes_.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total > limit_) throw BudgetExceeded("birack search", limit_);
  }

  bool leaf_ok() const {
    for (int id = 0; id < 3 * N_ * n_; ++id) {
      if (eval(id).status != kOk) return false;
    }
    return true;
  }

  void dfs(std::size_t k, bool top) {
    while (k < order_.size() && val_[order_[k]] >= 0) ++k;
    if (k == order_.size()) {
      if (!leaf_ok()) return;
      std::span<const std::uint8_t> cells(reinterpret_cast<const std::uint8_t*>(val_.data()), val_.size());
      (*emit_)(cells.subspan(0, N_), cells.subspan(N_, N_));
      return;
    }
    int cell = order_[k];
    std::uint32_t avail = dom_[cell] & ~col_used_[column(cell)];
    int branch = 0;
    while (avail) {
      int v = __builtin_ctz(avail);
      avail &= avail - 1;
      if (top && branch++ % jobs_ != worker_) continue;
      count_node();
      std::size_t mark = trail_.size();
      queue_.clear();
      qhead_ = 0;
      if (set(cell, v) && propagate()) dfs(k + 1, false);
      undo_to(mark);
    }
  }

  int n_, N_;
  std::vector<std::int8_t> val_;
  std::vector<int> when_;
  std::vector<std::uint32_t> dom_;
  std::vector<std::uint32_t> col_used_;
  std::vector<std::uint8_t> pair_used_;
  std::vector<std::int16_t> marked_;
  std::vector<std::vector<int>> watch_;
  std::vector<int> order_;
  std::vector<int> trail_;
  std::vector<int> queue_;
  std::size_t qhead_ = 0;
  std::vector<std::pair<int, int>> forced_at_start_;
  bool infeasible_ = false;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t limit_;
  std::uint64_t local_nodes_ = 0;
  int worker_ = 0, jobs_ = 1;
  const RawSolutionFn* emit_ = nullptr;
};

Name next_name(ClassKind kind, int n, KindCounts& seen) {
  int* slot = nullptr;
  switch (kind) {
    case ClassKind::quandle: slot = &seen.quandles; break;
    case ClassKind::rack: slot = &seen.racks; break;
    case ClassKind::biquandle: slot = &seen.biquandles; break;
    case ClassKind::birack: slot = &seen.biracks; break;
    case ClassKind::not_birack: throw Error("emitting a non-birack");
  }
  return Name{name_kind(kind), ++*slot, n};
}

Catalog build_catalog(int n, EquivalenceMode mode, const std::set<CanonicalKey>& keys,
                      std::optional<ClassKind> filter) {
  Catalog cat;
  cat.size = n;
  cat.mode = mode;
  KindCounts seen;
  for (const auto& key : keys) {
    Switch sw = switch_from_key(key);
    AxiomReport r = verify_axioms(sw);
    if (!r.birack()) throw Error("search emitted a switch failing B2/B3");
    ClassKind kind = classify(sw);
    if (filter && kind != *filter) continue;
    Fingerprint fp = fingerprint(sw);
    cat.entries.push_back(CatalogEntry{next_name(kind, n, seen), std::move(sw), kind, fp, key, std::nullopt});
  }
  return cat;
}

// Least relabeled up table over the given relabelings, which all fix the down table.
std::vector<std::uint8_t> local_up_key(int n, std::span<const std::uint8_t> up,
                                       const std::vector<std::vector<std::uint8_t>>& group,
                                       const std::vector<std::vector<std::uint8_t>>& inverses) {
  std::vector<std::uint8_t> best(up.begin(), up.end()), buf(n * n);
  for (std::size_t g = 0; g < group.size(); ++g) {
    const auto& sg = group[g];
    const auto& tau = inverses[g];
    bool less = false;
    int idx = 0;
    for (int i = 0; i < n; ++i) {
      for (int x = 0; x < n; ++x, ++idx) {
        std::uint8_t v = sg[up[tau[i] * n + tau[x]]];
        if (!less) {
          if (v > best[idx]) goto next;
          if (v < best[idx]) less = true;
        }
        buf[idx] = v;
      }
    }
    if (less) best.swap(buf);
  next:;
  }
  return best;
}

std::set<std::vector<std::uint8_t>> up_tables_over(int n, const ActionTable& down, std::uint64_t limit, int jobs,
                                                   std::atomic<std::uint64_t>& nodes) {
  std::vector<std::vector<std::uint8_t>> group, inverses;
  for (const auto& p : automorphisms(Switch(down, down))) {
    Perm inv = p.inverse();
    group.emplace_back(p.raw().begin(), p.raw().end());
    inverses.emplace_back(inv.raw().begin(), inv.raw().end());
  }
  std::mutex mu;
  std::set<std::vector<std::uint8_t>> found;
  auto on_solution = [&](std::span<const std::uint8_t> up, std::span<const std::uint8_t>) {
    auto k = local_up_key(n, up, group, inverses);
    std::lock_guard<std::mutex> lock(mu);
    found.insert(std::move(k));
  };
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](int w) {
    try {
      Solver s(n, down, nodes, limit);
      s.run(w, jobs, RawSolutionFn(on_solution));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs <= 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return found;
}

}  // namespace

std::uint64_t search_raw_biracks(int n, std::optional<ActionTable> fixed_down, std::uint64_t node_limit, int jobs,
                                 const RawSolutionFn& on_solution) {
  if (n < 1 || n > kMaxLabels) throw Error("size out of range");
  if (fixed_down && (static_cast<int>(fixed_down->size()) != n)) throw Error("fixed down table has wrong size");
  jobs = std::max(1, jobs);
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::exception_ptr> errors(jobs);
  auto work = [&](int w) {
    try {
      Solver s(n, fixed_down, nodes, node_limit);
      s.run(w, jobs, on_solution);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return nodes.load();
}

Catalog enumerate_biracks(const SearchOptions& opts) {
  if (opts.quandle_related) {
    Catalog c = enumerate_quandle_related(opts.size, opts.mode, opts.node_limit, opts.jobs);
    if (!opts.kind_filter) return c;
    Catalog f = c;
    f.entries.clear();
    KindCounts seen;
    for (auto& e : c.entries) {
      if (e.kind != *opts.kind_filter) continue;
      e.name = next_name(e.kind, c.size, seen);
      f.entries.push_back(e);
    }
    return f;
  }
  const int n = opts.size;
  std::mutex mu;
  std::set<CanonicalKey> keys;
  search_raw_biracks(n, opts.fixed_down, opts.node_limit, opts.jobs,
                     [&](std::span<const std::uint8_t> up, std::span<const std::uint8_t> down) {
                       CanonicalKey k = canonical_key(switch_from_flat(n, up, down), opts.mode);
                       std::lock_guard<std::mutex> lock(mu);
                       keys.insert(std::move(k));
                     });
  return build_catalog(n, opts.mode, keys, opts.kind_filter);
}

Catalog enumerate_quandle_related(int n, EquivalenceMode mode, std::uint64_t node_limit, int jobs) {
  jobs = std::max(1, jobs);
  std::atomic<std::uint64_t> nodes{0};
  const ActionTable trivial = identity_table(n);
  // Racks and quandles first: up tables over the trivial down table, up to relabeling.
  auto racks = up_tables_over(n, trivial, node_limit, jobs, nodes);
  std::vector<ActionTable> quandles;
  std::set<CanonicalKey> keys;
  std::vector<std::uint8_t> id_down(n * n);
  for (int b = 0; b < n; ++b) {
    for (int x = 0; x < n; ++x) id_down[b * n + x] = static_cast<std::uint8_t>(x);
  }
  for (const auto& up : racks) {
    Switch sw = switch_from_flat(n, up, id_down);
    if (b1_x_half(sw) && b1_y_half(sw)) quandles.push_back(sw.up());
    keys.insert(canonical_key(sw, mode));
  }
  for (const auto& q : quandles) {
    if (is_identity_table(q)) continue;
    Switch dq(identity_table(n), q);
    auto ups = up_tables_over(n, q, node_limit, jobs, nodes);
    for (const auto& up : ups) {
      keys.insert(canonical_key(switch_from_flat(n, up, dq.down_flat()), mode));
    }
  }
  return build_catalog(n, mode, keys, std::nullopt);
}

namespace {

// S as a sequence of pair images, pairs (a, b) taken in lexicographic order.
std::vector<std::uint8_t> pair_images(const Switch& s) {
  const int n = s.size();
  auto up = s.up_flat();
  auto down = s.down_flat();
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) v[a * n + b] = static_cast<std::uint8_t>(up[a * n + b] * n + down[b * n + a]);
  return v;
}

}  // namespace

Catalog search_order(const Catalog& c) {
  const int n = c.size;
  const auto& perms = all_raw_permutations(n);
  std::vector<SymmetryElement> group = {SymmetryElement::identity};
  if (c.mode == EquivalenceMode::isomorphism_and_symmetry)
    group = {SymmetryElement::identity, SymmetryElement::mirror, SymmetryElement::reverse,
             SymmetryElement::mirror_reverse};

  struct Found {
    std::vector<std::uint8_t> when;
    Switch rep;
    ClassKind kind;
  };
  std::vector<Found> found;
  for (const auto& e : c.entries) {
    const bool rack = e.kind == ClassKind::rack || e.kind == ClassKind::quandle;
    std::optional<Found> best;
    for (auto g : group) {
      const Switch img = symmetry_image(g, e.sw);
      for (const auto& raw : perms) {
        Switch m = relabel(Perm::from_raw(raw), img);
        auto key = pair_images(m);
        if (!best || (rack ? key > best->when : key < best->when)) best = Found{std::move(key), std::move(m), e.kind};
      }
    }
    if (rack) best->rep = normalize_entry(best->rep);
    found.push_back(std::move(*best));
  }
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.when < b.when; });

  Catalog out{n, c.mode, {}};
  std::map<NameKind, int> next;
  for (auto& f : found) {
    const NameKind k = name_kind(f.kind);
    out.entries.push_back(make_entry(Name{k, ++next[k], n}, std::move(f.rep), c.mode));
  }
  return out;
}

}  // namespace birack
