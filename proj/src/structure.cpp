#include "qrw/structure.hpp"

#include <algorithm>

namespace qrw {

Table::Table(std::size_t n, std::vector<Element> cells) : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n * n) {
    throw StructureError("table has " + std::to_string(cells_.size()) + " cells, expected " +
                         std::to_string(n * n));
  }
}

QuasiOrder::QuasiOrder(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

QuasiOrder QuasiOrder::from_matrix(std::size_t n, const std::vector<bool>& rows) {
  if (rows.size() != n * n) {
    throw StructureError("order has " + std::to_string(rows.size()) + " entries, expected " +
                         std::to_string(n * n));
  }
  QuasiOrder q(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q.set(i, j, rows[i * n + j]);
  }
  return q;
}

void QuasiOrder::set(std::size_t i, std::size_t j, bool value) {
  std::uint64_t& word = bits_[i * words_ + j / 64];
  const std::uint64_t bit = std::uint64_t{1} << (j % 64);
  word = value ? (word | bit) : (word & ~bit);
}

std::vector<std::vector<bool>> QuasiOrder::matrix() const {
  std::vector<std::vector<bool>> out(n_, std::vector<bool>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = leq(i, j);
  }
  return out;
}

namespace {

std::string cell_name(const char* table, std::size_t x, std::size_t y) {
  return std::string(table) + "[" + std::to_string(x) + "][" + std::to_string(y) + "]";
}

void check_table(const char* name, const Table& t, std::size_t n) {
  if (t.size() != n || t.cells().size() != n * n) {
    throw StructureError(std::string(name) + " table is " + std::to_string(t.size()) + "x" +
                         std::to_string(t.size()) + ", expected " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (t(x, y) >= n) {
        throw StructureError(cell_name(name, x, y) + " = " + std::to_string(t(x, y)) +
                             " is not an element index below " + std::to_string(n));
      }
    }
  }
}

}  // namespace

void FiniteStructure::check_well_formed() const {
  if (n == 0) throw StructureError("carrier size must be at least 1");
  if (n > kMaxCarrier) {
    throw StructureError("carrier size " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxCarrier));
  }
  if (one >= n) throw StructureError("one = " + std::to_string(one) + " is out of range");
  check_table("imp", imp, n);
  if (mul) check_table("mul", *mul, n);
  if (neg) {
    if (neg->size() != n) {
      throw StructureError("neg has " + std::to_string(neg->size()) + " entries, expected " +
                           std::to_string(n));
    }
    for (std::size_t x = 0; x < n; ++x) {
      if ((*neg)[x] >= n) {
        throw StructureError("neg[" + std::to_string(x) + "] = " + std::to_string((*neg)[x]) +
                             " is out of range");
      }
    }
  }
  if (order.size() != n) {
    throw StructureError("order has " + std::to_string(order.size()) + " rows, expected " +
                         std::to_string(n));
  }
  if (names && names->size() != n) {
    throw StructureError("names has " + std::to_string(names->size()) + " entries, expected " +
                         std::to_string(n));
  }
}

std::string FiniteStructure::label(Element e) const {
  if (names && e < names->size()) return (*names)[e];
  return std::to_string(e);
}

FiniteStructure permute(const FiniteStructure& s, const std::vector<Element>& perm) {
  const std::size_t n = s.n;
  if (perm.size() != n) throw StructureError("permutation length does not match carrier");
  std::vector<bool> seen(n, false);
  for (Element p : perm) {
    if (p >= n || seen[p]) throw StructureError("not a permutation of the carrier");
    seen[p] = true;
  }

  FiniteStructure out;
  out.n = n;
  out.one = perm[s.one];
  out.imp = Table(n);
  out.order = QuasiOrder(n);
  if (s.mul) out.mul = Table(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      out.imp(perm[x], perm[y]) = perm[s.imp(x, y)];
      if (s.mul) (*out.mul)(perm[x], perm[y]) = perm[(*s.mul)(x, y)];
      out.order.set(perm[x], perm[y], s.order.leq(x, y));
    }
  }
  if (s.neg) {
    out.neg = std::vector<Element>(n);
    for (std::size_t x = 0; x < n; ++x) (*out.neg)[perm[x]] = perm[(*s.neg)[x]];
  }
  if (s.names) {
    out.names = std::vector<std::string>(n);
    for (std::size_t x = 0; x < n; ++x) (*out.names)[perm[x]] = (*s.names)[x];
  }
  return out;
}

}  // namespace qrw
