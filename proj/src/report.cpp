#include "qrw/report.hpp"

namespace qrw::report {

namespace {

Json elements_json(const std::vector<Element>& es) {
  Json out = Json::array();
  for (Element e : es) out.push_back(e);
  return out;
}

template <class T, class F>
Json optional_list(const std::optional<std::vector<T>>& xs, F&& each) {
  if (!xs) return nullptr;
  Json out = Json::array();
  for (const auto& x : *xs) out.push_back(each(x));
  return out;
}

std::string_view mode_name(SearchMode m) {
  return m == SearchMode::kExhaustive ? "exhaustive" : "random";
}

}  // namespace

Json subset_json(const Subset& m) { return elements_json(m.elements()); }

Json subsets_json(const std::vector<Subset>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(subset_json(m));
  return out;
}

Json diagnostic_json(const Diagnostic& d) {
  Json j;
  j["axiom_id"] = axiom_code(d.axiom);
  j["applicable"] = d.applicable;
  j["holds"] = d.holds;
  j["witness"] = elements_json(d.witness);
  j["detail"] = d.detail;
  return j;
}

Json filter_verdict_json(const FilterVerdict& v) {
  Json j;
  j["kind"] = kind_name(v.kind);
  j["holds"] = v.holds;
  j["failed_clause"] = v.failed_clause ? Json(clause_name(*v.failed_clause)) : Json(nullptr);
  j["witness"] = elements_json(v.witness);
  j["detail"] = v.detail;
  return j;
}

Json prop_verdict_json(const PropVerdict& v) {
  Json j;
  j["prop_id"] = v.prop_id;
  j["status"] = status_name(v.status);
  j["holds"] = v.holds;
  j["witness_subsets"] = subsets_json(v.witness_subsets);
  j["witness_elements"] = elements_json(v.witness_elements);
  j["witness_clause"] = v.witness_clause;
  Json conds = Json::array();
  for (bool c : v.conditions) conds.push_back(c);
  j["conditions"] = conds;
  j["detail"] = v.detail;
  return j;
}

Json document_json(const Document& doc) {
  Json j;
  j["command"] = doc.command;
  j["input"] = doc.input;
  j["classification"] = classification_name(doc.validation.classification);
  j["strict_link"] = doc.validation.strict_link;
  Json diags = Json::array();
  for (const auto& d : doc.validation.diagnostics) diags.push_back(diagnostic_json(d));
  j["diagnostics"] = diags;
  Json anti;
  anti["holds"] = doc.validation.antisymmetry.holds;
  anti["witness"] = elements_json(doc.validation.antisymmetry.witness);
  anti["detail"] = doc.validation.antisymmetry.detail;
  j["antisymmetry"] = anti;
  j["filters"] = optional_list(doc.filters, subset_json);
  j["implicative_filters"] = optional_list(doc.implicative_filters, subset_json);
  j["check"] = doc.check ? filter_verdict_json(*doc.check) : Json(nullptr);
  j["prop_verdicts"] = optional_list(doc.prop_verdicts, prop_verdict_json);
  return j;
}

Json finding_json(const Finding& f, std::optional<HuntId> hunt) {
  Json j;
  j["hunt"] = hunt ? Json(hunt_name(*hunt)) : Json(nullptr);
  j["model_index"] = f.model_index;
  j["subset"] = f.subset ? subset_json(*f.subset) : Json(nullptr);
  j["witness"] = elements_json(f.witness);
  j["detail"] = f.detail;
  return j;
}

Json search_json(const SearchConfig& cfg, const ModelStream& stream,
                 const std::optional<std::vector<Finding>>& findings,
                 const std::vector<std::string>& files) {
  Json j;
  j["command"] = "search";
  j["order"] = cfg.order;
  j["mode"] = mode_name(cfg.mode);
  j["axioms"] = cfg.axioms.to_string();
  j["strict_link"] = cfg.strict_link;
  j["seed"] = cfg.seed;
  j["budget"] = cfg.budget;
  j["hunt"] = cfg.hunt ? Json(hunt_name(*cfg.hunt)) : Json(nullptr);
  Json stats;
  stats["candidates"] = stream.stats.candidates;
  stats["accepted"] = stream.stats.accepted;
  stats["unique"] = stream.stats.unique;
  stats["budget_exhausted"] = stream.stats.budget_exhausted;
  j["stats"] = stats;
  Json models = Json::array();
  for (std::size_t i = 0; i < stream.models.size(); ++i) {
    Json m;
    m["index"] = i;
    m["key"] = stream.models[i].key.hex();
    m["classification"] =
        classification_name(validate(stream.models[i].structure, cfg.strict_link).classification);
    models.push_back(m);
  }
  j["models"] = models;
  j["findings"] = optional_list(findings, [&](const Finding& f) { return finding_json(f, cfg.hunt); });
  Json paths = Json::array();
  for (const auto& p : files) paths.push_back(p);
  j["files"] = paths;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace qrw::report
