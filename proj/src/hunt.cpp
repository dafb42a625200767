#include <stdexcept>

#include "mask_kernel.hpp"
#include "qrw/propositions.hpp"
#include "qrw/search.hpp"

namespace qrw {

std::vector<Finding> hunt_in(const FiniteStructure& s, HuntId id, const HuntOptions& options) {
  std::vector<Finding> out;
  switch (id) {
    case HuntId::kFilterNotImplicative: {
      require_enumerable(s.n, options.limit);
      const detail::MaskKernel kernel(s);
      const auto masks = detail::scan_masks(
          s.n, s.one,
          [&](detail::Mask m) { return kernel.is_filter(m) && !kernel.is_implicative(m); },
          options.threads);
      for (auto m : masks) {
        const Subset subset = Subset::from_mask(s.n, m);
        const auto verdict = is_implicative_filter(s, subset);
        out.push_back(Finding{0, s, subset, verdict.witness,
                              "filter that is not implicative: " + verdict.detail});
      }
      break;
    }
    case HuntId::kEquivalenceDisagreement: {
      require_enumerable(s.n, options.limit);
      const detail::MaskKernel kernel(s);
      const auto masks = detail::scan_masks(
          s.n, std::nullopt,
          [&](detail::Mask m) {
            const bool filter = kernel.is_filter(m);
            const bool c1 = kernel.is_implicative(m);
            const bool c2 = filter && kernel.contraction_closed(m);
            const bool c3 = filter && kernel.distributive_closed(m);
            const bool c4 = kernel.contains_one(m) && kernel.auxiliary_member_closed(m);
            return !(c1 == c2 && c2 == c3 && c3 == c4);
          },
          options.threads);
      for (auto m : masks) {
        const Subset subset = Subset::from_mask(s.n, m);
        const auto verdict = check_equivalent_conditions(s, subset);
        out.push_back(Finding{0, s, subset, verdict.witness_elements, verdict.detail});
      }
      break;
    }
    case HuntId::kNonAntisymmetricModel: {
      const auto report = validate(s, options.strict_link);
      if (report.satisfies(options.axioms) && !report.antisymmetry.holds) {
        out.push_back(Finding{0, s, std::nullopt, report.antisymmetry.witness,
                              report.antisymmetry.detail});
      }
      break;
    }
  }
  return out;
}

HuntResult hunt(const SearchConfig& cfg) {
  if (!cfg.hunt) throw std::invalid_argument("hunt needs a predicate id");
  HuntResult result;
  result.stream = enumerate_models(cfg);
  HuntOptions options;
  options.axioms = cfg.axioms;
  options.strict_link = cfg.strict_link;
  options.threads = cfg.threads;
  for (std::size_t i = 0; i < result.stream.models.size(); ++i) {
    for (auto& f : hunt_in(result.stream.models[i].structure, *cfg.hunt, options)) {
      f.model_index = i;
      result.findings.push_back(std::move(f));
    }
  }
  return result;
}

}  // namespace qrw
