#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qrw/structure.hpp"

namespace qrw {

/// Characteristic vector over a carrier of fixed size.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t n) : bits_(n, false) {}
  Subset(std::size_t n, std::initializer_list<Element> members);

  static Subset full(std::size_t n);
  /// Bit i of `mask` (least significant first) is membership of element i.
  static Subset from_mask(std::size_t n, std::uint64_t mask);
  static Subset from_elements(std::size_t n, const std::vector<Element>& members);

  std::size_t size() const { return bits_.size(); }
  bool contains(Element e) const { return bits_[e]; }
  void insert(Element e) { bits_[e] = true; }
  void erase(Element e) { bits_[e] = false; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool is_subset_of(const Subset& other) const;
  std::vector<Element> elements() const;
  /// Requires size() <= 64.
  std::uint64_t mask() const;

  bool operator==(const Subset&) const = default;
  /// Ascending bitmask order, element 0 least significant.
  bool operator<(const Subset& other) const;

 private:
  std::vector<bool> bits_;
};

/// Raised when a subset-enumeration request exceeds the configured cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default cap on carrier size for power-set scans.
inline constexpr std::size_t kDefaultEnumerationLimit = 20;
/// No override may raise the cap beyond this.
inline constexpr std::size_t kHardEnumerationLimit = 25;

/// The active cap: QRW_ENUM_LIMIT when set (clamped to the hard cap),
/// otherwise the default.
std::size_t enumeration_limit();

/// Throws LimitError when n exceeds `limit`.
void require_enumerable(std::size_t n, std::size_t limit);

enum class FilterKind { kFilter, kImplicative };

enum class FilterClause { kF1, kF2, kF3, kI1, kI2, kI3 };

std::string_view clause_name(FilterClause c);
std::string_view kind_name(FilterKind k);

struct FilterVerdict {
  FilterKind kind = FilterKind::kFilter;
  bool holds = true;
  std::optional<FilterClause> failed_clause;
  std::vector<Element> witness;
  std::string detail;
};

/// F1: 1 ∈ M. F2: r ∈ M, r ≼ p imply p ∈ M. F3: r ∈ M, r→p ∈ M imply p ∈ M.
FilterVerdict is_filter(const FiniteStructure& s, const Subset& m);

/// I1: 1 ∈ M. I2: upward closure. I3: r→(p→k) ∈ M and r→p ∈ M imply
/// r→k ∈ M.
FilterVerdict is_implicative_filter(const FiniteStructure& s, const Subset& m);

FilterVerdict check_filter(const FiniteStructure& s, const Subset& m, FilterKind kind);

/// {r : ψ ≼ r}
Subset up_interval(const FiniteStructure& s, Element psi);

/// Least superset of S ∪ {1} closed under upward closure and modus ponens.
Subset generated_filter(const FiniteStructure& s, const Subset& seed);

struct EnumerationOptions {
  std::size_t limit = enumeration_limit();
  int threads = 0;  // 0: OpenMP default
};

/// All subsets passing the predicate, in ascending bitmask order. Runs the
/// parallel bitmask kernel.
std::vector<Subset> enumerate_filters(const FiniteStructure& s, FilterKind kind,
                                      const EnumerationOptions& options = {});

/// Serial reference: evaluates the clause predicate on every subset of the
/// power set. Kept for testing the kernel.
std::vector<Subset> enumerate_filters_reference(const FiniteStructure& s, FilterKind kind,
                                                std::size_t limit = enumeration_limit());

void require_same_size(const FiniteStructure& s, const Subset& m);

}  // namespace qrw
