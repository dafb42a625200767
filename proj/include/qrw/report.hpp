#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrw/axioms.hpp"
#include "qrw/filters.hpp"
#include "qrw/propositions.hpp"
#include "qrw/search.hpp"

namespace qrw::report {

using Json = nlohmann::ordered_json;

/// Ascending list of member indices.
Json subset_json(const Subset& m);
Json subsets_json(const std::vector<Subset>& ms);

Json diagnostic_json(const Diagnostic& d);
Json filter_verdict_json(const FilterVerdict& v);
Json prop_verdict_json(const PropVerdict& v);

/// Top-level document for the per-structure commands. Sections that the
/// command did not compute are null; the key set and key order are fixed.
struct Document {
  std::string command;
  std::string input;
  ValidationReport validation;
  std::optional<std::vector<Subset>> filters;
  std::optional<std::vector<Subset>> implicative_filters;
  std::optional<FilterVerdict> check;
  std::optional<std::vector<PropVerdict>> prop_verdicts;
};

Json document_json(const Document& doc);

struct SearchFile {
  std::size_t model_index = 0;
  std::string path;
};

/// Summary of a search run. `files` lists the structure files written for
/// models (or findings, when hunting), in stream order.
Json search_json(const SearchConfig& cfg, const ModelStream& stream,
                 const std::optional<std::vector<Finding>>& findings,
                 const std::vector<std::string>& files);

/// Sidecar describing one finding.
Json finding_json(const Finding& f, std::optional<HuntId> hunt);

/// Two-space indentation and a trailing newline. Parsing the output into
/// Json and dumping it again yields the same bytes.
std::string dump(const Json& j);

}  // namespace qrw::report
