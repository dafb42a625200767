#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qrw/axioms.hpp"
#include "qrw/search.hpp"

namespace qrw {

FiniteStructure gen_lukasiewicz(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Łukasiewicz chain needs at least 2 elements");
  if (n > kMaxCarrier) throw std::invalid_argument("Łukasiewicz chain too large");
  const int top = static_cast<int>(n) - 1;
  FiniteStructure s;
  s.n = n;
  s.one = static_cast<Element>(top);
  s.imp = Table(n);
  s.mul = Table(n);
  for (int x = 0; x <= top; ++x) {
    for (int y = 0; y <= top; ++y) {
      s.imp(x, y) = static_cast<Element>(std::min(top, top - x + y));
      (*s.mul)(x, y) = static_cast<Element>(std::max(0, x + y - top));
    }
  }
  s.order = derived_order(s);
  return s;
}

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

namespace {

// Serialization layout: n, mul flag, imp cells, mul cells, order bits, all
// row-major in the new labels.
class Canonicalizer {
 public:
  explicit Canonicalizer(const FiniteStructure& s) : s_(s), n_(s.n) {
    if (n_ > kMaxCanonicalOrder) {
      throw std::invalid_argument("canonical form supports at most " +
                                  std::to_string(kMaxCanonicalOrder) + " elements");
    }
    const std::size_t len = 2 + n_ * n_ * (s.mul ? 3 : 2);
    candidate_.resize(len);
    for (std::size_t e = 0; e < n_; ++e) {
      if (e != s.one) old_of_.push_back(static_cast<Element>(e));
    }
    old_of_.push_back(s.one);
    new_of_.resize(n_);
  }

  void run() {
    do {
      for (std::size_t i = 0; i < n_; ++i) new_of_[old_of_[i]] = static_cast<Element>(i);
      evaluate();
    } while (std::next_permutation(old_of_.begin(), old_of_.end() - 1));
  }

  const std::vector<std::uint8_t>& best() const { return best_; }
  const std::vector<Element>& best_new_of() const { return best_new_of_; }

 private:
  // Writes the serialization under the current labeling, abandoning it as
  // soon as it is known to exceed the best so far.
  void evaluate() {
    std::size_t idx = 0;
    bool less = best_.empty();
    auto put = [&](std::uint8_t v) {
      if (!less) {
        if (v > best_[idx]) return false;
        if (v < best_[idx]) less = true;
      }
      candidate_[idx++] = v;
      return true;
    };
    if (!put(static_cast<std::uint8_t>(n_)) || !put(s_.mul ? 1 : 0)) return;
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (!put(static_cast<std::uint8_t>(new_of_[s_.imp(old_of_[a], old_of_[b])]))) return;
      }
    }
    if (s_.mul) {
      for (std::size_t a = 0; a < n_; ++a) {
        for (std::size_t b = 0; b < n_; ++b) {
          if (!put(static_cast<std::uint8_t>(new_of_[(*s_.mul)(old_of_[a], old_of_[b])]))) return;
        }
      }
    }
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (!put(s_.order.leq(old_of_[a], old_of_[b]) ? 1 : 0)) return;
      }
    }
    if (less) {
      best_ = candidate_;
      best_new_of_ = new_of_;
    }
  }

  const FiniteStructure& s_;
  std::size_t n_;
  std::vector<Element> old_of_;
  std::vector<Element> new_of_;
  std::vector<std::uint8_t> candidate_;
  std::vector<std::uint8_t> best_;
  std::vector<Element> best_new_of_;
};

}  // namespace

CanonicalForm canonical_form(const FiniteStructure& s) {
  Canonicalizer c(s);
  c.run();
  return CanonicalForm{c.best()};
}

FiniteStructure canonical_structure(const FiniteStructure& s) {
  Canonicalizer c(s);
  c.run();
  return permute(s, c.best_new_of());
}

}  // namespace qrw
