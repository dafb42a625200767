// Command-line front end. Exit codes: 0 verdict holds, 1 verdict fails,
// 2 parse or usage error. Machine output goes to stdout only.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrw/axioms.hpp"
#include "qrw/filters.hpp"
#include "qrw/io.hpp"
#include "qrw/propositions.hpp"
#include "qrw/report.hpp"
#include "qrw/search.hpp"

namespace {

using qrw::report::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string tuple_text(const std::vector<qrw::Element>& es) {
  std::string out = "(";
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? "," : "") + std::to_string(es[i]);
  return out + ")";
}

std::string subset_text(const qrw::Subset& m) {
  std::string out = "{";
  const auto es = m.elements();
  for (std::size_t i = 0; i < es.size(); ++i) out += (i ? "," : "") + std::to_string(es[i]);
  return out + "}";
}

qrw::Subset parse_subset(const std::string& text, std::size_t n) {
  qrw::Subset m(n);
  if (text.empty() || text == "-") return m;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 6) {
      throw UsageError("bad subset element '" + item + "' in '" + text + "'");
    }
    const auto e = std::stoul(item);
    if (e >= n) {
      throw UsageError("subset element " + item + " is out of range for size " + std::to_string(n));
    }
    m.insert(static_cast<qrw::Element>(e));
  }
  return m;
}

void emit(const Json& j) { std::cout << qrw::report::dump(j); }

struct Common {
  std::string file;
  bool json = false;
};

// validate

struct ValidateArgs : Common {
  bool strict_link = false;
};

int run_validate(const ValidateArgs& a) {
  const auto s = qrw::load(a.file);
  qrw::report::Document doc;
  doc.command = "validate";
  doc.input = a.file;
  doc.validation = qrw::validate(s, a.strict_link);
  if (a.json) {
    emit(qrw::report::document_json(doc));
  } else {
    std::cout << "classification: " << qrw::classification_name(doc.validation.classification)
              << '\n';
    for (const auto& d : doc.validation.diagnostics) {
      std::cout << qrw::axiom_code(d.axiom) << ": ";
      if (!d.applicable) {
        std::cout << "not applicable";
      } else if (d.holds) {
        std::cout << "holds";
      } else {
        std::cout << "fails at " << tuple_text(d.witness);
      }
      if (!d.detail.empty()) std::cout << " (" << d.detail << ")";
      std::cout << '\n';
    }
    const auto& anti = doc.validation.antisymmetry;
    std::cout << "antisymmetry: "
              << (anti.holds ? "holds" : "fails at " + tuple_text(anti.witness)) << '\n';
  }
  return doc.validation.classification == qrw::Classification::kQuasiOrderedRlWajsberg ? 0 : 1;
}

// check

struct CheckArgs : Common {
  std::string subset;
  bool implicative = false;
};

int run_check(const CheckArgs& a) {
  const auto s = qrw::load(a.file);
  const auto m = parse_subset(a.subset, s.n);
  const auto kind = a.implicative ? qrw::FilterKind::kImplicative : qrw::FilterKind::kFilter;
  qrw::report::Document doc;
  doc.command = "check";
  doc.input = a.file;
  doc.validation = qrw::validate(s);
  doc.check = qrw::check_filter(s, m, kind);
  if (a.json) {
    emit(qrw::report::document_json(doc));
  } else {
    std::cout << subset_text(m) << ' ' << qrw::kind_name(kind) << ": "
              << (doc.check->holds ? "holds" : "fails") << '\n';
    if (!doc.check->holds) {
      std::cout << "clause " << qrw::clause_name(*doc.check->failed_clause) << " witness "
                << tuple_text(doc.check->witness) << '\n';
    }
    if (!doc.check->detail.empty()) std::cout << doc.check->detail << '\n';
  }
  return doc.check->holds ? 0 : 1;
}

// filters

struct FiltersArgs : Common {
  bool implicative = false;
};

int run_filters(const FiltersArgs& a) {
  const auto s = qrw::load(a.file);
  qrw::report::Document doc;
  doc.command = "filters";
  doc.input = a.file;
  doc.validation = qrw::validate(s);
  doc.filters = qrw::enumerate_filters(s, qrw::FilterKind::kFilter);
  doc.implicative_filters = qrw::enumerate_filters(s, qrw::FilterKind::kImplicative);
  if (a.json) {
    emit(qrw::report::document_json(doc));
  } else {
    const auto& list = a.implicative ? *doc.implicative_filters : *doc.filters;
    for (const auto& m : list) std::cout << subset_text(m) << '\n';
  }
  return 0;
}

// props

struct PropsArgs : Common {
  std::string prop;
  std::vector<std::string> subsets;
  std::string reading;
};

int run_props(const PropsArgs& a) {
  std::optional<qrw::ProductReading> reading;
  if (a.reading == "A") {
    reading = qrw::ProductReading::kUpwardClosure;
  } else if (a.reading == "B") {
    reading = qrw::ProductReading::kProductClosure;
  } else if (!a.reading.empty()) {
    throw UsageError("--p218-reading must be A or B");
  }
  if (!a.prop.empty() && !qrw::is_prop_id(a.prop)) {
    throw UsageError("unknown proposition id '" + a.prop + "'");
  }
  const bool explicit_prop = !a.prop.empty();
  if (explicit_prop && a.prop == "2.1.8" && !reading) {
    throw UsageError("--prop 2.1.8 needs --p218-reading A or B");
  }
  if (explicit_prop && a.prop == "2.1.5" && !a.subsets.empty() && a.subsets.size() != 2) {
    throw UsageError("--prop 2.1.5 takes two --subset values (M1 then M2)");
  }

  const auto s = qrw::load(a.file);
  std::vector<qrw::Subset> subsets;
  for (const auto& text : a.subsets) subsets.push_back(parse_subset(text, s.n));

  std::vector<std::string_view> ids;
  if (explicit_prop) {
    ids.push_back(a.prop);
  } else {
    ids.assign(qrw::kPropIds.begin(), qrw::kPropIds.end());
  }

  std::vector<qrw::PropVerdict> verdicts;
  for (auto id : ids) {
    if (id == "2.1.8" && !reading) {
      std::cerr << "note: 2.1.8 skipped; it needs --p218-reading A or B\n";
      continue;
    }
    if (id == "2.1.2" || id == "2.1.7" || subsets.empty()) {
      verdicts.push_back(qrw::check_prop(s, id, {}, reading));
    } else if (id == "2.1.5") {
      verdicts.push_back(subsets.size() == 2 ? qrw::check_prop(s, id, subsets, reading)
                                             : qrw::check_prop(s, id, {}, reading));
    } else {
      for (const auto& m : subsets) verdicts.push_back(qrw::check_prop(s, id, {m}, reading));
    }
  }

  bool all_hold = true;
  for (const auto& v : verdicts) all_hold = all_hold && v.holds;

  if (a.json) {
    qrw::report::Document doc;
    doc.command = "props";
    doc.input = a.file;
    doc.validation = qrw::validate(s);
    doc.prop_verdicts = verdicts;
    emit(qrw::report::document_json(doc));
  } else {
    for (const auto& v : verdicts) {
      std::cout << v.prop_id << ": " << qrw::status_name(v.status);
      if (!v.witness_elements.empty()) {
        std::cout << " [" << v.witness_clause << ' ' << tuple_text(v.witness_elements) << ']';
      }
      std::cout << " " << v.detail << '\n';
    }
  }
  return all_hold ? 0 : 1;
}

// search

struct SearchArgs {
  std::size_t order = 0;
  bool exhaustive = false;
  bool random = false;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  std::uint64_t budget = 0;
  std::string hunt;
  std::string axioms = "all";
  bool strict_link = false;
  int threads = 0;
  bool json = false;
  std::string out;
};

std::string numbered(const std::string& stem, std::size_t i, const std::string& ext) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04zu", i);
  return stem + "_" + buf + ext;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

int run_search(const SearchArgs& a) {
  qrw::SearchConfig cfg;
  cfg.order = a.order;
  cfg.mode = a.random ? qrw::SearchMode::kRandom : qrw::SearchMode::kExhaustive;
  cfg.seed = a.seed;
  cfg.budget = a.random && a.count ? a.count : a.budget;
  cfg.strict_link = a.strict_link;
  cfg.threads = a.threads;
  try {
    cfg.axioms = qrw::AxiomSet::parse(a.axioms);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.hunt.empty()) {
    cfg.hunt = qrw::hunt_from_name(a.hunt);
    if (!cfg.hunt) throw UsageError("unknown hunt id '" + a.hunt + "'");
  }
  try {
    qrw::check_config(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  qrw::ModelStream stream;
  std::optional<std::vector<qrw::Finding>> findings;
  if (cfg.hunt) {
    auto result = qrw::hunt(cfg);
    stream = std::move(result.stream);
    findings = std::move(result.findings);
  } else {
    stream = qrw::enumerate_models(cfg);
  }

  std::vector<std::string> files;
  if (!a.out.empty()) {
    const std::filesystem::path dir(a.out);
    std::filesystem::create_directories(dir);
    if (findings) {
      for (std::size_t i = 0; i < findings->size(); ++i) {
        const auto& f = (*findings)[i];
        const auto file = dir / numbered("finding", i, ".qrw");
        const auto side = dir / numbered("finding", i, ".witness.json");
        qrw::save(file, f.structure);
        write_text(side, qrw::report::dump(qrw::report::finding_json(f, cfg.hunt)));
        files.push_back(file.string());
        files.push_back(side.string());
      }
    } else {
      for (std::size_t i = 0; i < stream.models.size(); ++i) {
        const auto file = dir / numbered("model", i, ".qrw");
        qrw::save(file, stream.models[i].structure);
        files.push_back(file.string());
      }
    }
  }

  if (a.json) {
    emit(qrw::report::search_json(cfg, stream, findings, files));
  } else {
    std::cout << "candidates: " << stream.stats.candidates << '\n'
              << "accepted: " << stream.stats.accepted << '\n'
              << "unique: " << stream.stats.unique << '\n';
    if (stream.stats.budget_exhausted) std::cout << "budget exhausted\n";
    for (std::size_t i = 0; i < stream.models.size(); ++i) {
      std::cout << numbered("model", i, "") << ' ' << stream.models[i].key.hex() << '\n';
    }
    if (findings) {
      std::cout << "findings: " << findings->size() << '\n';
      for (const auto& f : *findings) {
        std::cout << "model " << f.model_index;
        if (f.subset) std::cout << " subset " << subset_text(*f.subset);
        std::cout << " witness " << tuple_text(f.witness) << ' ' << f.detail << '\n';
      }
    }
  }
  return findings && !findings->empty() ? 1 : 0;
}

// gen

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  if (a.family != "luk") throw UsageError("unknown family '" + a.family + "' (expected luk)");
  qrw::FiniteStructure s;
  try {
    s = qrw::gen_lukasiewicz(a.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.out.empty()) {
    std::cout << qrw::render(s);
  } else {
    qrw::save(a.out, s);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quasi-ordered residuated/Wajsberg structure toolkit", "qrw"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check the axiom catalog on a structure file");
  validate->add_option("FILE", va.file, "Structure file")->required();
  validate->add_flag("--strict-link", va.strict_link, "Require x ≼ y to imply x→y = 1 as well");
  validate->add_flag("--json", va.json, "JSON report on stdout");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Test one subset for the filter clauses");
  check->add_option("FILE", ca.file, "Structure file")->required();
  check->add_option("--subset", ca.subset, "Comma separated element indices")->required();
  check->add_flag("--implicative", ca.implicative, "Check the implicative clauses");
  check->add_flag("--json", ca.json, "JSON report on stdout");

  FiltersArgs fa;
  auto* filters = app.add_subcommand("filters", "List all filters of a structure");
  filters->add_option("FILE", fa.file, "Structure file")->required();
  filters->add_flag("--implicative", fa.implicative, "List implicative filters");
  filters->add_flag("--json", fa.json, "JSON report on stdout");

  PropsArgs pa;
  auto* props = app.add_subcommand("props", "Evaluate the implicative-filter propositions");
  props->add_option("FILE", pa.file, "Structure file")->required();
  props->add_option("--prop", pa.prop, "Proposition id, e.g. 2.1.9");
  props->add_option("--subset", pa.subsets, "Subset to check (repeatable)");
  props->add_option("--p218-reading", pa.reading, "Reading of the product in 2.1.8: A or B");
  props->add_flag("--json", pa.json, "JSON report on stdout");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Enumerate models of a given order");
  search->add_option("--order", sa.order, "Carrier size")->required();
  auto* exhaustive = search->add_flag("--exhaustive", sa.exhaustive, "Exhaustive search (default)");
  auto* random = search->add_flag("--random", sa.random, "Random sampling");
  exhaustive->excludes(random);
  search->add_option("--seed", sa.seed, "Random seed");
  search->add_option("--count", sa.count, "Random candidates to draw");
  search->add_option("--budget", sa.budget, "Cap on candidates examined");
  search->add_option("--hunt", sa.hunt,
                     "filter-not-implicative | prop-2.1.9-disagreement | "
                     "non-antisymmetric-valid-model");
  search->add_option("--axioms", sa.axioms, "'all' or a comma separated list of axiom codes");
  search->add_flag("--strict-link", sa.strict_link, "Strict LINK");
  search->add_option("--threads", sa.threads, "Worker threads (0: default)");
  search->add_flag("--json", sa.json, "JSON summary on stdout");
  search->add_option("--out", sa.out, "Directory for structure files and witness sidecars");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Write a generated structure");
  gen->add_option("FAMILY", ga.family, "Family name (luk)")->required();
  gen->add_option("N", ga.n, "Carrier size")->required();
  gen->add_option("-o,--output", ga.out, "Output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    if (*validate) return run_validate(va);
    if (*check) return run_check(ca);
    if (*filters) return run_filters(fa);
    if (*props) return run_props(pa);
    if (*search) return run_search(sa);
    if (*gen) return run_gen(ga);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return 2;
  } catch (const qrw::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qrw::StructureError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const qrw::LimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
