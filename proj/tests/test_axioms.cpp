#include <filesystem>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qrw/axioms.hpp"
#include "qrw/io.hpp"
#include "qrw/search.hpp"

namespace {

qrw::FiniteStructure fixture(const char* name) {
  return qrw::load(std::filesystem::path(QRW_FIXTURES) / name);
}

// Gödel chain: x→y = 1 if x ≤ y else y, product = min.
qrw::FiniteStructure goedel(std::size_t n) {
  auto s = qrw::gen_lukasiewicz(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      s.imp(x, y) = static_cast<qrw::Element>(x <= y ? n - 1 : y);
      (*s.mul)(x, y) = static_cast<qrw::Element>(std::min(x, y));
    }
  }
  return s;
}

// First failing tuple in lexicographic order, from the oracle.
std::optional<std::vector<qrw::Element>> first_failure(const qrw::FiniteStructure& s,
                                                       qrw::AxiomId id, bool strict) {
  const std::size_t k = qrw::axiom_arity(id);
  std::vector<qrw::Element> t(k, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= s.n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t i = k; i-- > 0;) {
      t[i] = static_cast<qrw::Element>(c % s.n);
      c /= s.n;
    }
    if (!oracle::axiom(s, id, t, strict)) return t;
  }
  return std::nullopt;
}

void expect_matches_oracle(const qrw::FiniteStructure& s, bool strict) {
  const auto report = qrw::validate(s, strict);
  ASSERT_EQ(report.diagnostics.size(), qrw::kAxiomCount);
  for (const auto& d : report.diagnostics) {
    const auto expected = first_failure(s, d.axiom, strict);
    EXPECT_EQ(d.holds, !expected.has_value()) << qrw::axiom_code(d.axiom);
    if (!d.holds) {
      ASSERT_TRUE(expected.has_value());
      EXPECT_EQ(d.witness, *expected) << qrw::axiom_code(d.axiom);
      EXPECT_FALSE(oracle::axiom(s, d.axiom, d.witness, strict)) << qrw::axiom_code(d.axiom);
      EXPECT_FALSE(qrw::axiom_holds_at(s, d.axiom, d.witness, strict));
    }
  }
}

}  // namespace

TEST(Validate, LukasiewiczChainsAreModels) {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto s = qrw::gen_lukasiewicz(n);
    EXPECT_EQ(s, oracle::lukasiewicz(static_cast<int>(n)));
    for (bool strict : {false, true}) {
      const auto r = qrw::validate(s, strict);
      EXPECT_EQ(r.classification, qrw::Classification::kQuasiOrderedRlWajsberg) << n;
      for (const auto& d : r.diagnostics) {
        EXPECT_TRUE(d.applicable) << qrw::axiom_code(d.axiom);
        EXPECT_TRUE(d.holds) << qrw::axiom_code(d.axiom) << " on L" << n;
      }
      EXPECT_TRUE(r.antisymmetry.holds);
    }
  }
}

TEST(Validate, DerivedOrderOfL2) {
  const auto o = qrw::derived_order(qrw::gen_lukasiewicz(2));
  EXPECT_TRUE(o.leq(0, 0));
  EXPECT_TRUE(o.leq(0, 1));
  EXPECT_FALSE(o.leq(1, 0));
  EXPECT_TRUE(o.leq(1, 1));
}

TEST(Validate, JoinOnL3) {
  const auto s = qrw::gen_lukasiewicz(3);
  EXPECT_EQ(qrw::join(s, 1, 0), 1);
  EXPECT_EQ(qrw::join(s, 0, 1), 1);
  EXPECT_EQ(qrw::join(s, 2, 0), 2);
  for (qrw::Element x = 0; x < 3; ++x) {
    for (qrw::Element y = 0; y < 3; ++y) EXPECT_EQ(qrw::join(s, x, y), std::max(x, y));
  }
}

TEST(Validate, ClassificationGroups) {
  EXPECT_EQ(qrw::validate(goedel(3)).classification,
            qrw::Classification::kResiduatedSystemOnly);
  EXPECT_FALSE(qrw::validate(goedel(3)).get(qrw::AxiomId::kW3).holds);

  auto wajsberg = qrw::gen_lukasiewicz(3);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      (*wajsberg.mul)(x, y) = static_cast<qrw::Element>(std::min(x, y));
    }
  }
  const auto r = qrw::validate(wajsberg);
  EXPECT_EQ(r.classification, qrw::Classification::kWajsbergOnly);
  EXPECT_FALSE(r.get(qrw::AxiomId::kRes).holds);

  EXPECT_EQ(qrw::validate(fixture("l3_broken.qrw")).classification,
            qrw::Classification::kInvalid);
}

TEST(Validate, MissingMulIsNotApplicable) {
  const auto r = qrw::validate(fixture("l3_imp_only.qrw"), true);
  for (auto id : {qrw::AxiomId::kMonAssoc, qrw::AxiomId::kMonComm, qrw::AxiomId::kMonUnit,
                  qrw::AxiomId::kRes, qrw::AxiomId::kCompat}) {
    EXPECT_FALSE(r.get(id).applicable);
    EXPECT_TRUE(r.get(id).holds);
  }
  EXPECT_TRUE(r.get(qrw::AxiomId::kW4).applicable);
  EXPECT_EQ(r.classification, qrw::Classification::kQuasiOrderedRlWajsberg);
}

TEST(Validate, NonAntisymmetricOrderIsInformational) {
  const auto s = fixture("l2_coarse.qrw");
  const auto loose = qrw::validate(s, false);
  EXPECT_EQ(loose.classification, qrw::Classification::kQuasiOrderedRlWajsberg);
  EXPECT_FALSE(loose.antisymmetry.holds);
  EXPECT_EQ(loose.antisymmetry.witness, (std::vector<qrw::Element>{0, 1}));
  EXPECT_FALSE(loose.get(qrw::AxiomId::kW4).applicable);

  const auto strict = qrw::validate(s, true);
  EXPECT_FALSE(strict.get(qrw::AxiomId::kLink).holds);
  EXPECT_EQ(strict.get(qrw::AxiomId::kLink).witness, (std::vector<qrw::Element>{1, 0}));
  EXPECT_NE(strict.classification, qrw::Classification::kQuasiOrderedRlWajsberg);
}

TEST(Validate, EffectiveNegation) {
  EXPECT_EQ(qrw::effective_negation(qrw::gen_lukasiewicz(3)),
            (std::vector<qrw::Element>{2, 1, 0}));
  EXPECT_FALSE(qrw::effective_negation(fixture("l2_coarse.qrw")).has_value());
  EXPECT_EQ(qrw::effective_negation(fixture("bool4.qrw")),
            (std::vector<qrw::Element>{3, 2, 1, 0}));
}

TEST(Validate, WitnessesMatchOracleOnRandomStructures) {
  std::mt19937_64 rng(20261019);
  for (int i = 0; i < 400; ++i) {
    const auto s = oracle::random_structure(rng, 2 + i % 3);
    expect_matches_oracle(s, i % 2 == 0);
  }
}

TEST(Validate, WitnessesMatchOracleOnMutatedChains) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (int i = 0; i < 60; ++i) {
      auto s = qrw::gen_lukasiewicz(n);
      std::uniform_int_distribution<std::size_t> cell(0, n - 1);
      const std::size_t x = cell(rng), y = cell(rng);
      switch (i % 3) {
        case 0: s.imp(x, y) = static_cast<qrw::Element>(cell(rng)); break;
        case 1: (*s.mul)(x, y) = static_cast<qrw::Element>(cell(rng)); break;
        default: s.order.set(x, y, !s.order.leq(x, y)); break;
      }
      expect_matches_oracle(s, i % 2 == 1);
    }
  }
}

TEST(Validate, Deterministic) {
  const auto s = fixture("l3_broken.qrw");
  const auto a = qrw::validate(s);
  const auto b = qrw::validate(s);
  ASSERT_EQ(a.diagnostics.size(), b.diagnostics.size());
  for (std::size_t i = 0; i < a.diagnostics.size(); ++i) {
    EXPECT_EQ(a.diagnostics[i].holds, b.diagnostics[i].holds);
    EXPECT_EQ(a.diagnostics[i].witness, b.diagnostics[i].witness);
    EXPECT_EQ(a.diagnostics[i].detail, b.diagnostics[i].detail);
  }
}

TEST(Validate, MalformedStructureNamesTheCell) {
  auto s = qrw::gen_lukasiewicz(3);
  s.imp(1, 2) = 7;
  try {
    qrw::validate(s);
    FAIL();
  } catch (const qrw::StructureError& e) {
    EXPECT_NE(std::string(e.what()).find("imp[1][2]"), std::string::npos) << e.what();
  }
}

TEST(AxiomHoldsAt, ChecksArity) {
  const auto s = qrw::gen_lukasiewicz(3);
  const std::vector<qrw::Element> pair = {0, 1};
  EXPECT_THROW(qrw::axiom_holds_at(s, qrw::AxiomId::kW2, pair), std::invalid_argument);
  EXPECT_TRUE(qrw::axiom_holds_at(s, qrw::AxiomId::kW3, pair));
}

TEST(AxiomSet, ParseAndPrint) {
  EXPECT_EQ(qrw::AxiomSet::parse("all"), qrw::AxiomSet::all());
  const auto w = qrw::AxiomSet::parse("W1,W2");
  EXPECT_TRUE(w.contains(qrw::AxiomId::kW1));
  EXPECT_TRUE(w.contains(qrw::AxiomId::kW2));
  EXPECT_FALSE(w.contains(qrw::AxiomId::kRes));
  EXPECT_EQ(qrw::AxiomSet::parse(w.to_string()), w);
  EXPECT_THROW(qrw::AxiomSet::parse("W9"), std::invalid_argument);
  for (auto id : qrw::kAllAxioms) {
    EXPECT_EQ(qrw::axiom_from_code(qrw::axiom_code(id)), id);
  }
}

TEST(AxiomSet, SatisfiesIgnoresUnrequestedFailures) {
  const auto r = qrw::validate(goedel(3));
  EXPECT_FALSE(r.satisfies(qrw::AxiomSet::all()));
  EXPECT_FALSE(r.satisfies(qrw::AxiomSet::all().without(qrw::AxiomId::kW3)));
  EXPECT_TRUE(
      r.satisfies(qrw::AxiomSet::all().without(qrw::AxiomId::kW3).without(qrw::AxiomId::kW4)));
}
