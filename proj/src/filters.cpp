#include "qrw/filters.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "mask_kernel.hpp"

namespace qrw {

Subset::Subset(std::size_t n, std::initializer_list<Element> members) : bits_(n, false) {
  for (Element e : members) {
    if (e >= n) throw std::out_of_range("subset member " + std::to_string(e) + " out of range");
    bits_[e] = true;
  }
}

Subset Subset::full(std::size_t n) {
  Subset s(n);
  s.bits_.assign(n, true);
  return s;
}

Subset Subset::from_mask(std::size_t n, std::uint64_t mask) {
  Subset s(n);
  for (std::size_t i = 0; i < n && i < 64; ++i) s.bits_[i] = (mask >> i) & 1U;
  return s;
}

Subset Subset::from_elements(std::size_t n, const std::vector<Element>& members) {
  Subset s(n);
  for (Element e : members) {
    if (e >= n) throw std::out_of_range("subset member " + std::to_string(e) + " out of range");
    s.bits_[e] = true;
  }
  return s;
}

std::size_t Subset::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

bool Subset::is_subset_of(const Subset& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] && !other.bits_[i]) return false;
  }
  return true;
}

std::vector<Element> Subset::elements() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::uint64_t Subset::mask() const {
  if (bits_.size() > 64) throw std::length_error("subset too large for a 64-bit mask");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

bool Subset::operator<(const Subset& other) const {
  if (size() != other.size()) return size() < other.size();
  for (std::size_t i = bits_.size(); i-- > 0;) {
    if (bits_[i] != other.bits_[i]) return other.bits_[i];
  }
  return false;
}

std::size_t enumeration_limit() {
  if (const char* env = std::getenv("QRW_ENUM_LIMIT")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      return std::min(static_cast<std::size_t>(value), kHardEnumerationLimit);
    }
  }
  return kDefaultEnumerationLimit;
}

void require_enumerable(std::size_t n, std::size_t limit) {
  limit = std::min(limit, kHardEnumerationLimit);
  if (n > limit) {
    throw LimitError("carrier size " + std::to_string(n) + " exceeds the subset enumeration limit " +
                     std::to_string(limit) + " (set QRW_ENUM_LIMIT, at most " +
                     std::to_string(kHardEnumerationLimit) + ")");
  }
}

void require_same_size(const FiniteStructure& s, const Subset& m) {
  if (m.size() != s.n) {
    throw std::invalid_argument("subset has length " + std::to_string(m.size()) +
                                " but the carrier has " + std::to_string(s.n) + " elements");
  }
}

std::string_view clause_name(FilterClause c) {
  switch (c) {
    case FilterClause::kF1: return "F1";
    case FilterClause::kF2: return "F2";
    case FilterClause::kF3: return "F3";
    case FilterClause::kI1: return "I1";
    case FilterClause::kI2: return "I2";
    case FilterClause::kI3: return "I3";
  }
  return "?";
}

std::string_view kind_name(FilterKind k) {
  return k == FilterKind::kFilter ? "filter" : "implicative";
}

namespace {

std::string labels(const FiniteStructure& s, const std::vector<Element>& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << s.label(w[i]);
  out << ")";
  return out.str();
}

FilterVerdict fail(const FiniteStructure& s, FilterKind kind, FilterClause clause,
                   std::vector<Element> witness, const std::string& why) {
  FilterVerdict v;
  v.kind = kind;
  v.holds = false;
  v.failed_clause = clause;
  v.witness = std::move(witness);
  v.detail = std::string(clause_name(clause)) + " fails at " + labels(s, v.witness) + ": " + why;
  return v;
}

// Shared by both predicates: contains 1 and upward closed.
std::optional<FilterVerdict> check_common(const FiniteStructure& s, const Subset& m,
                                          FilterKind kind) {
  const bool implicative = kind == FilterKind::kImplicative;
  if (!m.contains(s.one)) {
    return fail(s, kind, implicative ? FilterClause::kI1 : FilterClause::kF1, {s.one},
                "1 is not a member");
  }
  for (std::size_t r = 0; r < s.n; ++r) {
    if (!m.contains(static_cast<Element>(r))) continue;
    for (std::size_t p = 0; p < s.n; ++p) {
      if (s.order.leq(r, p) && !m.contains(static_cast<Element>(p))) {
        return fail(s, kind, implicative ? FilterClause::kI2 : FilterClause::kF2,
                    {static_cast<Element>(r), static_cast<Element>(p)},
                    "r is a member and r ≼ p, but p is not");
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FilterVerdict is_filter(const FiniteStructure& s, const Subset& m) {
  require_same_size(s, m);
  if (auto v = check_common(s, m, FilterKind::kFilter)) return *v;
  for (Element r = 0; r < s.n; ++r) {
    if (!m.contains(r)) continue;
    for (Element p = 0; p < s.n; ++p) {
      if (m.contains(s.imp(r, p)) && !m.contains(p)) {
        return fail(s, FilterKind::kFilter, FilterClause::kF3, {r, p},
                    "r and r→p are members, but p is not");
      }
    }
  }
  return FilterVerdict{FilterKind::kFilter, true, std::nullopt, {}, "subset is a filter"};
}

FilterVerdict is_implicative_filter(const FiniteStructure& s, const Subset& m) {
  require_same_size(s, m);
  if (auto v = check_common(s, m, FilterKind::kImplicative)) return *v;
  for (Element r = 0; r < s.n; ++r) {
    for (Element p = 0; p < s.n; ++p) {
      if (!m.contains(s.imp(r, p))) continue;
      for (Element k = 0; k < s.n; ++k) {
        if (m.contains(s.imp(r, s.imp(p, k))) && !m.contains(s.imp(r, k))) {
          return fail(s, FilterKind::kImplicative, FilterClause::kI3, {r, p, k},
                      "r→(p→k) and r→p are members, but r→k is not");
        }
      }
    }
  }
  return FilterVerdict{FilterKind::kImplicative, true, std::nullopt, {},
                       "subset is an implicative filter"};
}

FilterVerdict check_filter(const FiniteStructure& s, const Subset& m, FilterKind kind) {
  return kind == FilterKind::kFilter ? is_filter(s, m) : is_implicative_filter(s, m);
}

Subset up_interval(const FiniteStructure& s, Element psi) {
  Subset out(s.n);
  for (Element r = 0; r < s.n; ++r) {
    if (s.order.leq(psi, r)) out.insert(r);
  }
  return out;
}

Subset generated_filter(const FiniteStructure& s, const Subset& seed) {
  require_same_size(s, seed);
  Subset m = seed;
  m.insert(s.one);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element r = 0; r < s.n; ++r) {
      if (!m.contains(r)) continue;
      for (Element p = 0; p < s.n; ++p) {
        if (m.contains(p)) continue;
        if (s.order.leq(r, p) || m.contains(s.imp(r, p))) {
          m.insert(p);
          changed = true;
        }
      }
    }
  }
  return m;
}

std::vector<Subset> enumerate_filters(const FiniteStructure& s, FilterKind kind,
                                      const EnumerationOptions& options) {
  require_enumerable(s.n, options.limit);
  const detail::MaskKernel kernel(s);
  // Every candidate must contain 1, so that bit is pinned and the scan
  // covers half the power set.
  auto masks = kind == FilterKind::kFilter
                   ? detail::scan_masks(
                         s.n, s.one, [&](detail::Mask m) { return kernel.is_filter(m); },
                         options.threads)
                   : detail::scan_masks(
                         s.n, s.one, [&](detail::Mask m) { return kernel.is_implicative(m); },
                         options.threads);
  std::vector<Subset> out;
  out.reserve(masks.size());
  for (auto m : masks) out.push_back(Subset::from_mask(s.n, m));
  return out;
}

std::vector<Subset> enumerate_filters_reference(const FiniteStructure& s, FilterKind kind,
                                                std::size_t limit) {
  require_enumerable(s.n, limit);
  std::vector<Subset> out;
  const std::uint64_t total = std::uint64_t{1} << s.n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Subset m = Subset::from_mask(s.n, mask);
    if (check_filter(s, m, kind).holds) out.push_back(m);
  }
  return out;
}

}  // namespace qrw
