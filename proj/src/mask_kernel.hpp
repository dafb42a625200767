#pragma once

// Bitmask predicates over subsets of a small carrier, and the OpenMP scans
// that drive them. Masks put element i at bit i.

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "qrw/structure.hpp"

namespace qrw::detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kMaxMaskCarrier = 63;

inline bool has(Mask m, std::size_t e) { return (m >> e) & 1U; }

class MaskKernel {
 public:
  explicit MaskKernel(const FiniteStructure& s)
      : n_(s.n), one_bit_(Mask{1} << s.one), up_(s.n, 0), pre_(s.n * s.n, 0) {
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t p = 0; p < n_; ++p) {
        if (s.order.leq(r, p)) up_[r] |= Mask{1} << p;
        pre_[r * n_ + s.imp(r, p)] |= Mask{1} << p;
      }
    }
    if (s.mul) {
      mul_pre_.assign(n_ * n_, 0);
      for (std::size_t t = 0; t < n_; ++t) {
        for (std::size_t z = 0; z < n_; ++z) mul_pre_[t * n_ + (*s.mul)(t, z)] |= Mask{1} << z;
      }
    }
    imp_ = s.imp;
  }

  std::size_t size() const { return n_; }
  Mask one_bit() const { return one_bit_; }

  /// {p : r→p ∈ m}
  Mask preimage(std::size_t r, Mask m) const {
    Mask out = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (has(m, v)) out |= pre_[r * n_ + v];
    }
    return out;
  }

  bool contains_one(Mask m) const { return (m & one_bit_) != 0; }

  bool upward_closed(Mask m) const {
    for (std::size_t r = 0; r < n_; ++r) {
      if (has(m, r) && (up_[r] & ~m)) return false;
    }
    return true;
  }

  bool modus_ponens_closed(Mask m) const {
    for (std::size_t r = 0; r < n_; ++r) {
      if (has(m, r) && (preimage(r, m) & ~m)) return false;
    }
    return true;
  }

  // r→(p→k) ∈ m and r→p ∈ m imply r→k ∈ m. With A = preimage(r, m) this
  // reads: for p ∈ A, {k : p→k ∈ A} ⊆ A.
  bool implicative_closed(Mask m) const {
    for (std::size_t r = 0; r < n_; ++r) {
      const Mask a = preimage(r, m);
      for (std::size_t p = 0; p < n_; ++p) {
        if (has(a, p) && (preimage(p, a) & ~a)) return false;
      }
    }
    return true;
  }

  // τ→(τ→k) ∈ m implies τ→k ∈ m.
  bool contraction_closed(Mask m) const {
    for (std::size_t t = 0; t < n_; ++t) {
      const Mask a = preimage(t, m);
      if (preimage(t, a) & ~a) return false;
    }
    return true;
  }

  // τ→(ς→k) ∈ m implies (τ→ς)→(τ→k) ∈ m.
  bool distributive_closed(Mask m) const {
    for (std::size_t t = 0; t < n_; ++t) {
      const Mask a = preimage(t, m);
      for (std::size_t c = 0; c < n_; ++c) {
        const Mask premise = preimage(c, a);
        const Mask conclusion = preimage(t, preimage(imp_(t, c), m));
        if (premise & ~conclusion) return false;
      }
    }
    return true;
  }

  // ς ∈ m and ς→(τ→(τ→k)) ∈ m imply τ→k ∈ m.
  bool auxiliary_member_closed(Mask m) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (!has(m, c)) continue;
      const Mask b = preimage(c, m);
      for (std::size_t t = 0; t < n_; ++t) {
        if (preimage(t, preimage(t, b)) & ~preimage(t, m)) return false;
      }
    }
    return true;
  }

  bool has_mul() const { return !mul_pre_.empty(); }

  // τ ∈ m and τ⊙ζ ∈ m imply ζ ∈ m. Requires a mul table.
  bool product_cancel_closed(Mask m) const {
    for (std::size_t t = 0; t < n_; ++t) {
      if (!has(m, t)) continue;
      Mask reach = 0;
      for (std::size_t v = 0; v < n_; ++v) {
        if (has(m, v)) reach |= mul_pre_[t * n_ + v];
      }
      if (reach & ~m) return false;
    }
    return true;
  }

  bool is_filter(Mask m) const {
    return contains_one(m) && upward_closed(m) && modus_ponens_closed(m);
  }

  bool is_implicative(Mask m) const {
    return contains_one(m) && upward_closed(m) && implicative_closed(m);
  }

 private:
  std::size_t n_;
  Mask one_bit_;
  std::vector<Mask> up_;
  std::vector<Mask> pre_;      // pre_[r*n + v] = {p : r→p = v}
  std::vector<Mask> mul_pre_;  // mul_pre_[t*n + v] = {z : t⊙z = v}
  Table imp_;
};

// Spreads the bits of t around the fixed bit position `pinned`, which is
// set in the result. Order preserving in t.
inline Mask with_pinned_bit(Mask t, std::size_t pinned) {
  const Mask low = t & ((Mask{1} << pinned) - 1);
  const Mask high = t >> pinned;
  return low | (Mask{1} << pinned) | (high << (pinned + 1));
}

/// Every mask over n elements (optionally only those containing `pinned`)
/// satisfying pred, ascending. Deterministic for any thread count.
template <class Pred>
std::vector<Mask> scan_masks(std::size_t n, std::optional<std::size_t> pinned, Pred&& pred,
                             int threads) {
  const std::size_t free_bits = pinned ? n - 1 : n;
  const std::int64_t total = std::int64_t{1} << free_bits;
  std::vector<std::vector<Mask>> per_thread;
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  per_thread.resize(static_cast<std::size_t>(workers));
#pragma omp parallel num_threads(workers)
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t t = 0; t < total; ++t) {
      const Mask m = pinned ? with_pinned_bit(static_cast<Mask>(t), *pinned) : static_cast<Mask>(t);
      if (pred(m)) local.push_back(m);
    }
  }
  std::vector<Mask> out;
  for (auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Least mask satisfying pred, or nullopt.
template <class Pred>
std::optional<Mask> first_mask(std::size_t n, std::optional<std::size_t> pinned, Pred&& pred,
                               int threads) {
  const std::size_t free_bits = pinned ? n - 1 : n;
  const std::int64_t total = std::int64_t{1} << free_bits;
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
#pragma omp parallel for schedule(dynamic, 256) reduction(min : best) num_threads(workers)
  for (std::int64_t t = 0; t < total; ++t) {
    if (t >= best) continue;
    const Mask m = pinned ? with_pinned_bit(static_cast<Mask>(t), *pinned) : static_cast<Mask>(t);
    if (pred(m)) best = std::min(best, t);
  }
  if (best == std::numeric_limits<std::int64_t>::max()) return std::nullopt;
  return pinned ? with_pinned_bit(static_cast<Mask>(best), *pinned) : static_cast<Mask>(best);
}

}  // namespace qrw::detail
