#include "qrw/search.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "qrw/axioms.hpp"

namespace qrw {

namespace {

constexpr std::uint8_t kUnset = 0xFF;
constexpr std::size_t kCells = kMaxExhaustiveOrder * kMaxExhaustiveOrder;

using Domain = std::uint8_t;  // bit v set: value v allowed

// Which catalog entries the generated models must satisfy, unpacked.
struct Profile {
  bool refl, trans, assoc, comm, unit, top, res, compat, link, w1, w2, w3, w4;
  bool strict;

  static Profile of(const SearchConfig& cfg) {
    const AxiomSet a = cfg.axioms;
    return Profile{a.contains(AxiomId::kQoRefl), a.contains(AxiomId::kQoTrans),
                   a.contains(AxiomId::kMonAssoc), a.contains(AxiomId::kMonComm),
                   a.contains(AxiomId::kMonUnit), a.contains(AxiomId::kTop),
                   a.contains(AxiomId::kRes),     a.contains(AxiomId::kCompat),
                   a.contains(AxiomId::kLink),    a.contains(AxiomId::kW1),
                   a.contains(AxiomId::kW2),      a.contains(AxiomId::kW3),
                   a.contains(AxiomId::kW4),      cfg.strict_link};
  }

  bool needs_mul() const { return assoc || comm || unit || res || compat; }
  // With residuation and a unit, y ≼ z iff 1 ≼ y→z, so the order is fixed
  // by the set U = {w : 1 ≼ w}.
  bool residuated() const { return res && unit; }
};

// Partial imp table plus, on the residuated path, the set U.
struct ImpState {
  std::array<std::uint8_t, kCells> imp;
  std::array<Domain, kCells> dom;
  std::uint8_t u = 0;
};

struct Collector {
  std::vector<FiniteStructure> accepted;
  std::uint64_t candidates = 0;
  std::uint64_t budget = 0;  // 0: unlimited
  bool stopped = false;
};

class Engine {
 public:
  explicit Engine(const SearchConfig& cfg)
      : cfg_(cfg), p_(Profile::of(cfg)), n_(cfg.order), one_(static_cast<std::uint8_t>(n_ - 1)) {
    // Unit row first, then the top column, then the rest by cell index.
    for (std::size_t y = 0; y < n_; ++y) order_.push_back(one_ * n_ + y);
    for (std::size_t x = 0; x < n_; ++x) {
      if (x != one_) order_.push_back(x * n_ + one_);
    }
    for (std::size_t c = 0; c < n_ * n_; ++c) {
      if (c / n_ != one_ && c % n_ != one_) order_.push_back(c);
    }
  }

  std::size_t cell_count() const { return order_.size(); }

  std::vector<ImpState> roots() const {
    std::vector<ImpState> out;
    const unsigned u_count = p_.residuated() ? (1U << n_) : 1U;
    for (unsigned u = 0; u < u_count; ++u) {
      ImpState st;
      st.imp.fill(kUnset);
      st.u = static_cast<std::uint8_t>(u);
      bool ok = true;
      for (std::size_t c = 0; c < n_ * n_ && ok; ++c) {
        st.dom[c] = initial_domain(c / n_, c % n_, st.u);
        ok = st.dom[c] != 0;
      }
      if (ok) out.push_back(st);
    }
    return out;
  }

  // Depth-first over imp cells from position `pos`. States reaching
  // `split` are appended to `frontier` when it is non-null.
  void expand(ImpState& st, std::size_t pos, std::size_t split, std::vector<ImpState>* frontier,
              Collector& out) const {
    if (out.stopped) return;
    if (frontier && pos == split) {
      frontier->push_back(st);
      return;
    }
    if (pos == order_.size()) {
      complete_imp(st, out);
      return;
    }
    const std::size_t cell = order_[pos];
    for (std::uint8_t v = 0; v < n_; ++v) {
      if (!((st.dom[cell] >> v) & 1U)) continue;
      st.imp[cell] = v;
      if (imp_consistent(st)) expand(st, pos + 1, split, frontier, out);
      if (out.stopped) break;
    }
    st.imp[cell] = kUnset;
  }

 private:
  Domain full() const { return static_cast<Domain>((1U << n_) - 1); }
  Domain bit(std::size_t v) const { return static_cast<Domain>(1U << v); }

  Domain initial_domain(std::size_t x, std::size_t y, std::uint8_t u) const {
    Domain d = full();
    if (p_.w1 && x == one_) d &= bit(y);
    if (p_.residuated()) {
      if (p_.link) {
        if (!((u >> one_) & 1U)) d &= static_cast<Domain>(~bit(one_));
        if (p_.strict) d &= static_cast<Domain>(~(u & ~bit(one_)));
      }
      if (p_.refl && x == y) d &= u;
      if (p_.top && y == one_) d &= u;
    } else if (p_.strict && p_.link) {
      if (p_.refl && x == y) d &= bit(one_);
      if (p_.top && y == one_) d &= bit(one_);
    }
    return d;
  }

  static std::uint8_t look(const std::array<std::uint8_t, kCells>& t, std::size_t n,
                           std::uint8_t a, std::uint8_t b) {
    if (a == kUnset || b == kUnset) return kUnset;
    return t[a * n + b];
  }

  // 1 / 0 / kUnset
  std::uint8_t in_u(std::uint8_t u, std::uint8_t v) const {
    return v == kUnset ? kUnset : static_cast<std::uint8_t>((u >> v) & 1U);
  }

  bool imp_consistent(const ImpState& st) const {
    const auto& t = st.imp;
    const std::size_t n = n_;
    auto L = [&](std::uint8_t a, std::uint8_t b) { return look(t, n, a, b); };
    for (std::uint8_t x = 0; x < n; ++x) {
      for (std::uint8_t y = 0; y < n; ++y) {
        const std::uint8_t xy = t[x * n + y];
        if (p_.w3 && x < y && xy != kUnset) {
          const std::uint8_t lhs = L(xy, y);
          const std::uint8_t rhs = L(L(y, x), x);
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
        for (std::uint8_t z = 0; z < n; ++z) {
          if (p_.w2 && xy != kUnset) {
            const std::uint8_t e = L(xy, L(L(y, z), L(x, z)));
            if (e != kUnset && e != one_) return false;
          }
          if (p_.residuated()) {
            if (p_.trans) {
              if (in_u(st.u, xy) == 1 && in_u(st.u, t[y * n + z]) == 1 &&
                  in_u(st.u, t[x * n + z]) == 0) {
                return false;
              }
            }
            // x ≼ y→z iff x⊙y ≼ z iff y ≼ x→z.
            if (p_.comm && x < y) {
              const std::uint8_t a = in_u(st.u, L(x, t[y * n + z]));
              const std::uint8_t b = in_u(st.u, L(y, t[x * n + z]));
              if (a != kUnset && b != kUnset && a != b) return false;
            }
          }
        }
      }
    }
    return true;
  }

  FiniteStructure skeleton(const ImpState& st) const {
    FiniteStructure s;
    s.n = n_;
    s.one = one_;
    s.imp = Table(n_);
    for (std::size_t c = 0; c < n_ * n_; ++c) s.imp(c / n_, c % n_) = st.imp[c];
    s.order = QuasiOrder(n_);
    return s;
  }

  void complete_imp(const ImpState& st, Collector& out) const {
    FiniteStructure s = skeleton(st);
    if (p_.residuated()) {
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) s.order.set(x, y, (st.u >> s.imp(x, y)) & 1U);
      }
      complete_order(s, out);
      return;
    }
    search_orders(s, out);
  }

  // Generic path: every relation allowed by the requested order axioms.
  void search_orders(FiniteStructure& s, Collector& out) const {
    // 1 forced, 0 forced, 2 free
    std::vector<std::uint8_t> rel(n_ * n_, 2);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        const bool is_one = s.imp(x, y) == one_;
        std::uint8_t& r = rel[x * n_ + y];
        if (p_.link && p_.strict) r = is_one ? 1 : 0;
        if ((p_.link && is_one) || (p_.refl && x == y) || (p_.top && y == one_)) {
          if (r == 0) return;
          r = 1;
        }
      }
    }
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n_ * n_; ++c) {
      if (rel[c] == 2) free.push_back(c);
    }
    order_step(s, rel, free, 0, out);
  }

  bool trans_consistent(const std::vector<std::uint8_t>& rel) const {
    if (!p_.trans) return true;
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        if (rel[x * n_ + y] != 1) continue;
        for (std::size_t z = 0; z < n_; ++z) {
          if (rel[y * n_ + z] == 1 && rel[x * n_ + z] == 0) return false;
        }
      }
    }
    return true;
  }

  void order_step(FiniteStructure& s, std::vector<std::uint8_t>& rel,
                  const std::vector<std::size_t>& free, std::size_t i, Collector& out) const {
    if (out.stopped) return;
    if (i == free.size()) {
      if (!trans_consistent(rel)) return;
      for (std::size_t c = 0; c < n_ * n_; ++c) s.order.set(c / n_, c % n_, rel[c] == 1);
      complete_order(s, out);
      return;
    }
    for (std::uint8_t v = 0; v < 2; ++v) {
      rel[free[i]] = v;
      if (trans_consistent(rel)) order_step(s, rel, free, i + 1, out);
    }
    rel[free[i]] = 2;
  }

  bool order_axioms_hold(const FiniteStructure& s) const {
    for (std::size_t x = 0; x < n_; ++x) {
      if (p_.refl && !s.order.leq(x, x)) return false;
      if (p_.top && !s.order.leq(x, one_)) return false;
      for (std::size_t y = 0; y < n_; ++y) {
        const bool is_one = s.imp(x, y) == one_;
        const bool rel = s.order.leq(x, y);
        if (p_.link && (p_.strict ? is_one != rel : (is_one && !rel))) return false;
        if (!p_.trans || !rel) continue;
        for (std::size_t z = 0; z < n_; ++z) {
          if (s.order.leq(y, z) && !s.order.leq(x, z)) return false;
        }
      }
    }
    if (p_.w4) {
      if (auto neg = effective_negation(s)) {
        for (std::size_t x = 0; x < n_; ++x) {
          for (std::size_t y = 0; y < n_; ++y) {
            if (s.imp(s.imp((*neg)[x], (*neg)[y]), s.imp(y, x)) != one_) return false;
          }
        }
      }
    }
    return true;
  }

  void complete_order(FiniteStructure& s, Collector& out) const {
    if (!order_axioms_hold(s)) return;
    if (!p_.needs_mul()) {
      s.mul.reset();
      emit(s, out);
      return;
    }
    // Residuation pins x⊙y down to the elements w with
    // w ≼ z iff x ≼ y→z for every z.
    std::vector<Domain> dom(n_ * n_, full());
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        Domain& d = dom[x * n_ + y];
        if (p_.res) {
          Domain cand = 0;
          for (std::size_t w = 0; w < n_; ++w) {
            bool ok = true;
            for (std::size_t z = 0; z < n_ && ok; ++z) {
              ok = s.order.leq(w, z) == s.order.leq(x, s.imp(y, z));
            }
            if (ok) cand |= bit(w);
          }
          d &= cand;
        }
        if (p_.unit && x == one_) d &= bit(y);
        if (p_.unit && y == one_) d &= bit(x);
        if (d == 0) return;
      }
    }
    if (p_.comm) {
      for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = x + 1; y < n_; ++y) {
          const Domain both = dom[x * n_ + y] & dom[y * n_ + x];
          if (both == 0) return;
          dom[x * n_ + y] = dom[y * n_ + x] = both;
        }
      }
    }
    std::vector<std::size_t> cells;
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = p_.comm ? x : 0; y < n_; ++y) cells.push_back(x * n_ + y);
    }
    std::array<std::uint8_t, kCells> mul;
    mul.fill(kUnset);
    mul_step(s, dom, cells, 0, mul, out);
  }

  bool mul_consistent(const FiniteStructure& s, const std::array<std::uint8_t, kCells>& m) const {
    auto L = [&](std::uint8_t a, std::uint8_t b) { return look(m, n_, a, b); };
    for (std::uint8_t x = 0; x < n_; ++x) {
      for (std::uint8_t y = 0; y < n_; ++y) {
        const std::uint8_t xy = m[x * n_ + y];
        const bool xley = s.order.leq(x, y);
        for (std::uint8_t z = 0; z < n_; ++z) {
          if (p_.assoc && xy != kUnset) {
            const std::uint8_t lhs = L(xy, z);
            const std::uint8_t rhs = L(x, m[y * n_ + z]);
            if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
          }
          if (p_.compat && xley) {
            const std::uint8_t a = m[x * n_ + z];
            const std::uint8_t b = m[y * n_ + z];
            if (a != kUnset && b != kUnset && !s.order.leq(a, b)) return false;
          }
        }
      }
    }
    return true;
  }

  void mul_step(FiniteStructure& s, const std::vector<Domain>& dom,
                const std::vector<std::size_t>& cells, std::size_t i,
                std::array<std::uint8_t, kCells>& m, Collector& out) const {
    if (out.stopped) return;
    if (i == cells.size()) {
      s.mul = Table(n_);
      for (std::size_t c = 0; c < n_ * n_; ++c) (*s.mul)(c / n_, c % n_) = m[c];
      emit(s, out);
      return;
    }
    const std::size_t cell = cells[i];
    const std::size_t x = cell / n_;
    const std::size_t y = cell % n_;
    const std::size_t mirror = y * n_ + x;
    for (std::uint8_t v = 0; v < n_; ++v) {
      if (!((dom[cell] >> v) & 1U)) continue;
      m[cell] = v;
      if (p_.comm) m[mirror] = v;
      if (mul_consistent(s, m)) mul_step(s, dom, cells, i + 1, m, out);
      if (out.stopped) break;
    }
    m[cell] = kUnset;
    if (p_.comm) m[mirror] = kUnset;
  }

  void emit(const FiniteStructure& s, Collector& out) const {
    ++out.candidates;
    if (validate(s, p_.strict).satisfies(cfg_.axioms)) out.accepted.push_back(s);
    if (out.budget && out.candidates >= out.budget) out.stopped = true;
  }

  const SearchConfig& cfg_;
  Profile p_;
  std::size_t n_;
  std::uint8_t one_;
  std::vector<std::size_t> order_;
};

int worker_count(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

// Canonicalizes, sorts and deduplicates.
ModelStream finish(std::vector<FiniteStructure> accepted, SearchStats stats, int threads) {
  std::vector<Model> models(accepted.size());
  const auto count = static_cast<std::int64_t>(accepted.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count(threads))
  for (std::int64_t i = 0; i < count; ++i) {
    auto& m = models[static_cast<std::size_t>(i)];
    m.structure = canonical_structure(accepted[static_cast<std::size_t>(i)]);
    m.key = canonical_form(m.structure);
  }
  std::stable_sort(models.begin(), models.end(),
                   [](const Model& a, const Model& b) { return a.key < b.key; });
  models.erase(std::unique(models.begin(), models.end(),
                           [](const Model& a, const Model& b) { return a.key == b.key; }),
               models.end());
  stats.unique = models.size();
  return ModelStream{std::move(models), stats};
}

ModelStream exhaustive(const SearchConfig& cfg, bool partition) {
  const Engine engine(cfg);
  auto roots = engine.roots();
  SearchStats stats;

  if (!partition || cfg.budget > 0) {
    Collector out;
    out.budget = cfg.budget;
    for (auto& root : roots) {
      engine.expand(root, 0, 0, nullptr, out);
      if (out.stopped) break;
    }
    stats.candidates = out.candidates;
    stats.accepted = out.accepted.size();
    stats.budget_exhausted = out.stopped;
    return finish(std::move(out.accepted), stats, cfg.threads);
  }

  // Split on the first cells until there is enough work to share.
  const std::size_t wanted = 16 * static_cast<std::size_t>(worker_count(cfg.threads));
  std::vector<ImpState> tasks;
  std::size_t split = 0;
  while (true) {
    std::vector<ImpState> next;
    Collector unused;
    for (auto root : roots) engine.expand(root, 0, split, &next, unused);
    tasks = std::move(next);
    if (tasks.size() >= wanted || split >= engine.cell_count()) break;
    ++split;
  }

  std::vector<Collector> results(tasks.size());
  const auto task_count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count(cfg.threads))
  for (std::int64_t i = 0; i < task_count; ++i) {
    auto st = tasks[static_cast<std::size_t>(i)];
    engine.expand(st, split, split, nullptr, results[static_cast<std::size_t>(i)]);
  }

  std::vector<FiniteStructure> accepted;
  for (auto& r : results) {
    stats.candidates += r.candidates;
    for (auto& s : r.accepted) accepted.push_back(std::move(s));
  }
  stats.accepted = accepted.size();
  return finish(std::move(accepted), stats, cfg.threads);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Componentwise Łukasiewicz order and product on a product of chains whose
// sizes multiply to n, relabeled at random with the top kept at n-1.
void chain_product(FiniteStructure& s, std::mt19937_64& rng) {
  const std::size_t n = s.n;
  std::vector<std::size_t> sizes;
  for (std::size_t rest = n; rest > 1;) {
    std::vector<std::size_t> divisors;
    for (std::size_t d = 2; d <= rest; ++d) {
      if (rest % d == 0) divisors.push_back(d);
    }
    const std::size_t d = divisors[rng() % divisors.size()];
    sizes.push_back(d);
    rest /= d;
  }
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end() - 1, rng);

  auto digits = [&](std::size_t code) {
    std::vector<int> out;
    for (std::size_t k : sizes) {
      out.push_back(static_cast<int>(code % k));
      code /= k;
    }
    return out;
  };
  auto encode = [&](const std::vector<int>& ds) {
    std::size_t code = 0;
    for (std::size_t i = sizes.size(); i-- > 0;) code = code * sizes[i] + static_cast<std::size_t>(ds[i]);
    return code;
  };
  s.mul = Table(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto da = digits(a);
      const auto db = digits(b);
      std::vector<int> prod(sizes.size());
      bool leq = true;
      for (std::size_t i = 0; i < sizes.size(); ++i) {
        const int top = static_cast<int>(sizes[i]) - 1;
        prod[i] = std::max(0, da[i] + db[i] - top);
        leq = leq && da[i] <= db[i];
      }
      (*s.mul)(label[a], label[b]) = static_cast<Element>(label[encode(prod)]);
      s.order.set(label[a], label[b], leq);
    }
  }
}

// One random candidate: order and product first, imp as the residual.
std::optional<FiniteStructure> random_candidate(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto one = static_cast<Element>(n - 1);
  FiniteStructure s;
  s.n = n;
  s.one = one;
  s.order = QuasiOrder(n);

  const auto strategy = rng() % 3;
  if (strategy == 0) {
    chain_product(s, rng);
  } else {
    if (strategy == 1) {
      // A chain with 1 on top.
      std::vector<Element> rank(n - 1);
      for (std::size_t i = 0; i + 1 < n; ++i) rank[i] = static_cast<Element>(i);
      std::shuffle(rank.begin(), rank.end(), rng);
      std::vector<std::size_t> pos(n);
      for (std::size_t i = 0; i + 1 < n; ++i) pos[rank[i]] = i;
      pos[one] = n - 1;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) s.order.set(x, y, pos[x] <= pos[y]);
      }
    } else {
      std::bernoulli_distribution edge(1.0 / 3.0);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) s.order.set(x, y, x == y || y == one || edge(rng));
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t x = 0; x < n; ++x) {
          if (!s.order.leq(x, k)) continue;
          for (std::size_t y = 0; y < n; ++y) {
            if (s.order.leq(k, y)) s.order.set(x, y, true);
          }
        }
      }
    }

    // Commutative product with unit; x⊙y is drawn from common lower bounds
    // when there are any.
    s.mul = Table(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        Element v;
        if (x == one) {
          v = static_cast<Element>(y);
        } else if (y == one) {
          v = static_cast<Element>(x);
        } else {
          std::vector<Element> lower;
          for (std::size_t w = 0; w < n; ++w) {
            if (s.order.leq(w, x) && s.order.leq(w, y)) lower.push_back(static_cast<Element>(w));
          }
          if (lower.empty()) {
            v = static_cast<Element>(rng() % n);
          } else {
            v = lower[rng() % lower.size()];
          }
        }
        (*s.mul)(x, y) = (*s.mul)(y, x) = v;
      }
    }
  }

  // x→y = greatest z with x⊙z ≼ y; ties go to the smallest index.
  s.imp = Table(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::optional<Element> greatest;
      for (std::size_t z = 0; z < n && !greatest; ++z) {
        if (!s.order.leq((*s.mul)(x, z), y)) continue;
        bool above_all = true;
        for (std::size_t w = 0; w < n && above_all; ++w) {
          if (s.order.leq((*s.mul)(x, w), y)) above_all = s.order.leq(w, z);
        }
        if (above_all) greatest = static_cast<Element>(z);
      }
      if (!greatest) return std::nullopt;
      s.imp(x, y) = *greatest;
    }
  }

  // Collapsing the order of a product of chains keeps every axiom except
  // strict LINK, and yields non-antisymmetric candidates.
  if (strategy == 0 && rng() % 4 == 0) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) s.order.set(x, y, true);
    }
  }
  return s;
}

ModelStream random_search(const SearchConfig& cfg) {
  const auto budget = static_cast<std::int64_t>(cfg.budget);
  const int workers = worker_count(cfg.threads);
  std::vector<std::vector<std::pair<std::int64_t, FiniteStructure>>> per_thread(
      static_cast<std::size_t>(workers));
#pragma omp parallel num_threads(workers)
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < budget; ++i) {
      const std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(i)));
      auto s = random_candidate(cfg.order, seed);
      if (s && validate(*s, cfg.strict_link).satisfies(cfg.axioms)) {
        local.emplace_back(i, std::move(*s));
      }
    }
  }
  std::vector<std::pair<std::int64_t, FiniteStructure>> all;
  for (auto& v : per_thread) {
    for (auto& e : v) all.push_back(std::move(e));
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FiniteStructure> accepted;
  accepted.reserve(all.size());
  for (auto& e : all) accepted.push_back(std::move(e.second));

  SearchStats stats;
  stats.candidates = cfg.budget;
  stats.accepted = accepted.size();
  stats.budget_exhausted = true;
  return finish(std::move(accepted), stats, cfg.threads);
}

}  // namespace

std::string_view hunt_name(HuntId id) {
  switch (id) {
    case HuntId::kFilterNotImplicative: return "filter-not-implicative";
    case HuntId::kEquivalenceDisagreement: return "prop-2.1.9-disagreement";
    case HuntId::kNonAntisymmetricModel: return "non-antisymmetric-valid-model";
  }
  return "?";
}

std::optional<HuntId> hunt_from_name(std::string_view name) {
  for (HuntId id : {HuntId::kFilterNotImplicative, HuntId::kEquivalenceDisagreement,
                    HuntId::kNonAntisymmetricModel}) {
    if (hunt_name(id) == name) return id;
  }
  return std::nullopt;
}

void check_config(const SearchConfig& cfg) {
  if (cfg.order < 1) throw std::invalid_argument("search order must be at least 1");
  if (cfg.mode == SearchMode::kExhaustive && cfg.order > kMaxExhaustiveOrder) {
    throw std::invalid_argument("exhaustive search supports order at most " +
                                std::to_string(kMaxExhaustiveOrder) + "; use random mode");
  }
  if (cfg.mode == SearchMode::kRandom) {
    if (cfg.order > kMaxCanonicalOrder) {
      throw std::invalid_argument("random search supports order at most " +
                                  std::to_string(kMaxCanonicalOrder));
    }
    if (cfg.budget == 0) throw std::invalid_argument("random search needs a positive count");
  }
}

ModelStream enumerate_models(const SearchConfig& cfg) {
  check_config(cfg);
  if (cfg.mode == SearchMode::kRandom) return random_search(cfg);
  return exhaustive(cfg, true);
}

ModelStream enumerate_models_serial(const SearchConfig& cfg) {
  check_config(cfg);
  if (cfg.mode == SearchMode::kRandom) {
    SearchConfig one = cfg;
    one.threads = 1;
    return random_search(one);
  }
  return exhaustive(cfg, false);
}

}  // namespace qrw
