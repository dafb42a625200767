#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qrw/filters.hpp"
#include "qrw/structure.hpp"

namespace qrw {

/// Checkers for the implicative-filter propositions. Each one evaluates
/// its hypotheses and conclusion separately on a concrete instance; a
/// conditional whose hypotheses fail is reported as vacuous rather than
/// assumed.
///
/// Proposition identifiers are the public names used on the command line
/// and in reports: "2.1.2", "2.1.3", "2.1.4", "2.1.5", "2.1.7", "2.1.8",
/// "2.1.9", "2.1.10".

enum class PropStatus {
  kHolds,          // hypotheses and conclusion both hold
  kVacuous,        // some hypothesis fails, so the conditional holds
  kFails,          // the checked statement is false on this instance
  kNotApplicable,  // a required table or relation is missing
};

std::string_view status_name(PropStatus s);

/// Reading of the undefined "r.p" in the product-closure proposition.
enum class ProductReading {
  kUpwardClosure,   // A: r ∈ M, r ≼ p imply p ∈ M
  kProductClosure,  // B: r, p ∈ M imply r⊙p ∈ M
};

struct PropVerdict {
  std::string prop_id;
  PropStatus status = PropStatus::kHolds;
  bool holds = true;  // status != kFails
  /// Subsets that make up the witness (the offending subset for law checks,
  /// or the inputs to a per-subset check).
  std::vector<Subset> witness_subsets;
  /// Element tuple instantiating the violated clause, if any.
  std::vector<Element> witness_elements;
  /// Name of the clause the element witness violates, e.g. "clause",
  /// "I3", "hypothesis-iii", "condition-ii".
  std::string witness_clause;
  /// Condition values of the four-way equivalence, in order.
  std::vector<bool> conditions;
  std::string detail;
};

inline constexpr std::array<std::string_view, 8> kPropIds = {
    "2.1.2", "2.1.3", "2.1.4", "2.1.5", "2.1.7", "2.1.8", "2.1.9", "2.1.10",
};

bool is_prop_id(std::string_view id);

/// Every implicative filter is a filter, scanned over the whole power set.
/// The witness is the least offending subset in bitmask order.
PropVerdict check_implicative_is_filter(const FiniteStructure& s,
                                        const EnumerationOptions& options = {});

/// ∀r,p,k: r→(p→(p→k)) ∈ M and r→p ∈ M imply r→k ∈ M. `holds` reflects the
/// clause; `conditions` records {M is a filter, clause, M is implicative}.
PropVerdict check_double_premise_clause(const FiniteStructure& s, const Subset& m);

/// ∀r,p: r→(r→p) ∈ M implies r→p ∈ M.
PropVerdict check_contraction_clause(const FiniteStructure& s, const Subset& m);

/// M1 ⊆ M2, M1 implicative, M2 a filter imply M2 implicative. Not
/// applicable when M1 ⊄ M2.
PropVerdict check_extension(const FiniteStructure& s, const Subset& m1, const Subset& m2);

/// {1} is implicative iff every up-interval Y(ψ) is implicative.
PropVerdict check_up_interval_equivalence(const FiniteStructure& s);

PropVerdict check_product_condition(const FiniteStructure& s, const Subset& m,
                                    ProductReading reading);

/// The four equivalent characterisations; holds iff all four agree.
PropVerdict check_equivalent_conditions(const FiniteStructure& s, const Subset& m);

/// Non-empty M with hypotheses (i) τ ∈ M, τ⊙ζ ∈ M ⟹ ζ ∈ M,
/// (ii) τ ∈ M, τ→ζ ∈ M ⟹ ζ ∈ M, (iii) τ→(τ→ζ) ∈ M ⟹ τ→ζ ∈ M
/// is an implicative filter. Hypothesis (i) is skipped without a mul table.
PropVerdict check_sufficient_conditions(const FiniteStructure& s, const Subset& m);

/// Law forms over all relevant subsets, used when no subset is supplied:
///   2.1.3  every filter satisfying the clause is implicative;
///   2.1.4  every implicative filter satisfies the contraction clause;
///   2.1.5  the extension check on every (implicative, filter) nested pair;
///   2.1.8  every implicative filter satisfies the chosen reading;
///   2.1.9  the four conditions agree on every subset;
///   2.1.10 the sufficiency check on every subset.
/// 2.1.2 and 2.1.7 take no subset and are returned as-is.
PropVerdict check_law(const FiniteStructure& s, std::string_view prop_id,
                      std::optional<ProductReading> reading = std::nullopt,
                      const EnumerationOptions& options = {});

/// Per-instance dispatch by id. `subsets` must hold two subsets for
/// "2.1.5", one for the other subset-taking checks, none for 2.1.2/2.1.7.
PropVerdict check_prop(const FiniteStructure& s, std::string_view prop_id,
                       const std::vector<Subset>& subsets,
                       std::optional<ProductReading> reading = std::nullopt,
                       const EnumerationOptions& options = {});

}  // namespace qrw
