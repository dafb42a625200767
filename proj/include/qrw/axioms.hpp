#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrw/structure.hpp"

namespace qrw {

/// The axiom catalog, in the order diagnostics are reported.
enum class AxiomId : std::uint8_t {
  kQoRefl,
  kQoTrans,
  kMonAssoc,
  kMonComm,
  kMonUnit,
  kTop,
  kRes,
  kCompat,
  kLink,
  kW1,
  kW2,
  kW3,
  kW4,
};

inline constexpr std::size_t kAxiomCount = 13;

inline constexpr std::array<AxiomId, kAxiomCount> kAllAxioms = {
    AxiomId::kQoRefl, AxiomId::kQoTrans, AxiomId::kMonAssoc, AxiomId::kMonComm, AxiomId::kMonUnit,
    AxiomId::kTop,    AxiomId::kRes,     AxiomId::kCompat,   AxiomId::kLink,    AxiomId::kW1,
    AxiomId::kW2,     AxiomId::kW3,      AxiomId::kW4,
};

/// Short code such as "QO-REFL" or "W3".
std::string_view axiom_code(AxiomId id);
std::optional<AxiomId> axiom_from_code(std::string_view code);

/// Number of elements in a witness tuple for the axiom.
std::size_t axiom_arity(AxiomId id);

/// A set of axioms, used to select which ones generated models must satisfy.
class AxiomSet {
 public:
  constexpr AxiomSet() = default;
  static constexpr AxiomSet all() { return AxiomSet((1U << kAxiomCount) - 1); }
  /// Parses "all" or a comma separated list of axiom codes.
  static AxiomSet parse(std::string_view text);

  constexpr bool contains(AxiomId id) const { return (bits_ >> static_cast<unsigned>(id)) & 1U; }
  constexpr AxiomSet with(AxiomId id) const {
    return AxiomSet(bits_ | (1U << static_cast<unsigned>(id)));
  }
  constexpr AxiomSet without(AxiomId id) const {
    return AxiomSet(bits_ & ~(1U << static_cast<unsigned>(id)));
  }
  constexpr bool empty() const { return bits_ == 0; }
  std::vector<AxiomId> members() const;
  std::string to_string() const;

  constexpr bool operator==(const AxiomSet&) const = default;

 private:
  constexpr explicit AxiomSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// One axiom verdict. When `holds` is false the witness instantiates the
/// failure: re-evaluating the axiom at the witness yields false.
struct Diagnostic {
  AxiomId axiom;
  bool applicable = true;
  bool holds = true;
  std::vector<Element> witness;
  std::string detail;
};

/// Witness is a pair of distinct mutually related elements when the
/// order is not antisymmetric.
struct AntisymmetryNote {
  bool holds = true;
  std::vector<Element> witness;
  std::string detail;
};

enum class Classification {
  kQuasiOrderedRlWajsberg,
  kResiduatedSystemOnly,
  kWajsbergOnly,
  kInvalid,
};

std::string_view classification_name(Classification c);

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;  // one per catalog entry, catalog order
  Classification classification = Classification::kInvalid;
  bool strict_link = false;
  /// Informational only; antisymmetry is never an axiom.
  AntisymmetryNote antisymmetry;

  const Diagnostic& get(AxiomId id) const { return diagnostics[static_cast<std::size_t>(id)]; }
  /// True when every applicable diagnostic in `axioms` holds.
  bool satisfies(AxiomSet axioms) const;
};

/// x ≼ y iff x→y = 1.
QuasiOrder derived_order(const FiniteStructure& s);

/// The negation used by W4: the explicit table when present, otherwise
/// x→z for the unique least element z. Empty when neither exists.
std::optional<std::vector<Element>> effective_negation(const FiniteStructure& s);

/// Runs every axiom in the catalog. Throws StructureError when `s` is
/// malformed.
ValidationReport validate(const FiniteStructure& s, bool strict_link = false);

/// Evaluates a single axiom instance. `at` must have axiom_arity(id)
/// entries. Returns true for instances of axioms that are not applicable.
bool axiom_holds_at(const FiniteStructure& s, AxiomId id, std::span<const Element> at,
                    bool strict_link = false);

/// Join derived from the implication: (x→y)→y.
Element join(const FiniteStructure& s, Element x, Element y);

}  // namespace qrw
