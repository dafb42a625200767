#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrw {

/// Index of a carrier element. Valid values are [0, n) for the owning
/// structure.
using Element = std::uint16_t;

/// Largest carrier the library accepts.
inline constexpr std::size_t kMaxCarrier = 256;

/// Thrown when a structure violates its shape invariants (bad table size,
/// out-of-range entry). The message names the offending table cell.
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major n x n table of elements.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Element fill = 0) : n_(n), cells_(n * n, fill) {}
  Table(std::size_t n, std::vector<Element> cells);

  std::size_t size() const { return n_; }
  Element operator()(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
  Element& operator()(std::size_t x, std::size_t y) { return cells_[x * n_ + y]; }
  const std::vector<Element>& cells() const { return cells_; }

  bool operator==(const Table&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

/// A binary relation on the carrier, stored packed per row.
/// leq(i, j) == true means element i precedes element j (i ≼ j).
/// Nothing about reflexivity or transitivity is enforced here; the
/// validator reports those.
class QuasiOrder {
 public:
  QuasiOrder() = default;
  explicit QuasiOrder(std::size_t n);

  /// Builds from a row-major boolean matrix of n*n entries.
  static QuasiOrder from_matrix(std::size_t n, const std::vector<bool>& rows);

  std::size_t size() const { return n_; }
  bool leq(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void set(std::size_t i, std::size_t j, bool value);

  /// The packed words of row i (words_per_row() of them).
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * words_; }
  std::size_t words_per_row() const { return words_; }

  std::vector<std::vector<bool>> matrix() const;

  bool operator==(const QuasiOrder&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// A finite algebra given by operation tables.
///
/// `imp` is always present. `mul` and `neg` are optional; checks that need
/// them report "not applicable" when absent. `order` always has n rows,
/// even when it was derived from `imp` at load time.
struct FiniteStructure {
  std::size_t n = 0;
  Table imp;
  std::optional<Table> mul;
  std::optional<std::vector<Element>> neg;
  Element one = 0;
  QuasiOrder order;
  std::optional<std::vector<std::string>> names;

  /// Throws StructureError naming the first cell that breaks a shape
  /// invariant.
  void check_well_formed() const;

  std::string label(Element e) const;

  bool operator==(const FiniteStructure&) const = default;
};

/// Relabels the carrier: element x of `s` becomes perm[x] in the result.
/// `perm` must be a permutation of [0, n).
FiniteStructure permute(const FiniteStructure& s, const std::vector<Element>& perm);

}  // namespace qrw
