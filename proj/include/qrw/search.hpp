#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrw/axioms.hpp"
#include "qrw/filters.hpp"
#include "qrw/structure.hpp"

namespace qrw {

/// The Łukasiewicz chain on {0, 1/(n-1), ..., 1}; element i stands for
/// i/(n-1). Carries imp, mul and the natural order; no neg table.
FiniteStructure gen_lukasiewicz(std::size_t n);

/// Isomorphism-invariant key: the lexicographically least serialization of
/// (imp, mul, order) over all relabelings that send the unit to n-1. For
/// structures whose unit already sits at n-1 these are exactly the
/// unit-fixing permutations.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Largest order accepted by canonical_form and random search.
inline constexpr std::size_t kMaxCanonicalOrder = 12;
/// Largest order accepted by exhaustive search.
inline constexpr std::size_t kMaxExhaustiveOrder = 6;

CanonicalForm canonical_form(const FiniteStructure& s);

/// The relabeled structure that realises canonical_form(s).
FiniteStructure canonical_structure(const FiniteStructure& s);

enum class SearchMode { kExhaustive, kRandom };

enum class HuntId {
  kFilterNotImplicative,
  kEquivalenceDisagreement,  // "prop-2.1.9-disagreement"
  kNonAntisymmetricModel,
};

std::string_view hunt_name(HuntId id);
std::optional<HuntId> hunt_from_name(std::string_view name);

struct SearchConfig {
  std::size_t order = 2;
  AxiomSet axioms = AxiomSet::all();
  bool strict_link = false;
  SearchMode mode = SearchMode::kExhaustive;
  std::uint64_t seed = 0;
  /// Candidates examined. 0 means unlimited in exhaustive mode; random
  /// mode requires a positive budget. A bounded exhaustive search runs
  /// serially so the cut-off point is reproducible.
  std::uint64_t budget = 0;
  std::optional<HuntId> hunt;
  int threads = 0;  // 0: OpenMP default
};

/// Throws std::invalid_argument when the configuration is out of range.
void check_config(const SearchConfig& cfg);

struct Model {
  FiniteStructure structure;
  CanonicalForm key;
};

struct SearchStats {
  std::uint64_t candidates = 0;  // complete assignments examined
  std::uint64_t accepted = 0;    // candidates passing every requested axiom
  std::uint64_t unique = 0;      // after isomorph rejection
  bool budget_exhausted = false;
};

/// Models in ascending canonical-form order, one per isomorphism class.
struct ModelStream {
  std::vector<Model> models;
  SearchStats stats;
};

/// Exhaustive: backtracking over the imp table (unit row and top column
/// first), then the order, then the mul table, pruning on partial
/// assignments. Random: `budget` seeded candidates built from a random
/// order and product with imp derived as the residual. A third of the
/// candidates use a relabeled product of Łukasiewicz chains, sometimes with
/// the order collapsed to the all-true relation afterwards.
ModelStream enumerate_models(const SearchConfig& cfg);

/// Single-threaded exhaustive search from the root, no partitioning.
/// Reference for the parallel driver.
ModelStream enumerate_models_serial(const SearchConfig& cfg);

struct Finding {
  std::size_t model_index = 0;  // position in the searched stream
  FiniteStructure structure;
  std::optional<Subset> subset;
  std::vector<Element> witness;
  std::string detail;
};

struct HuntOptions {
  AxiomSet axioms = AxiomSet::all();  // validity required by the non-antisymmetry hunt
  bool strict_link = false;
  int threads = 0;
  std::size_t limit = enumeration_limit();
};

/// Every occurrence of the hunted phenomenon in one structure, ascending.
std::vector<Finding> hunt_in(const FiniteStructure& s, HuntId id, const HuntOptions& options = {});

struct HuntResult {
  ModelStream stream;
  std::vector<Finding> findings;
};

/// Searches per `cfg`, then hunts in every emitted model. Requires cfg.hunt.
HuntResult hunt(const SearchConfig& cfg);

}  // namespace qrw
