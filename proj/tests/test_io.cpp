#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qrw/axioms.hpp"
#include "qrw/io.hpp"
#include "qrw/search.hpp"

namespace {

const char* kL3 =
    "qrw 1\n"
    "size 3\n"
    "one 2\n"
    "imp\n"
    "2 2 2\n"
    "1 2 2\n"
    "0 1 2\n"
    "mul\n"
    "0 0 0\n"
    "0 0 1\n"
    "0 1 2\n"
    "order\n"
    "1 1 1\n"
    "0 1 1\n"
    "0 0 1\n";

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

qrw::ParseError parse_error(const std::string& text) {
  try {
    qrw::parse(text);
  } catch (const qrw::ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return qrw::ParseError(qrw::ParseError::Kind::kSemantic, 0, 0, "");
}

}  // namespace

TEST(Parse, L3FileIsTheGeneratedChain) {
  EXPECT_EQ(qrw::parse(kL3), qrw::gen_lukasiewicz(3));
}

TEST(Render, GeneratedL3MatchesFileBytes) {
  EXPECT_EQ(qrw::render(qrw::gen_lukasiewicz(3)), kL3);
}

TEST(Parse, MissingOrderInstallsDerivedOrder) {
  const auto s = qrw::parse("qrw 1\nsize 3\none 2\nimp\n2 2 2\n1 2 2\n0 1 2\n");
  EXPECT_EQ(s.order, qrw::derived_order(s));
  EXPECT_FALSE(s.mul.has_value());
  EXPECT_FALSE(s.neg.has_value());
}

TEST(Parse, CommentsAndLooseWhitespace) {
  const auto messy = qrw::load(std::filesystem::path(QRW_TEST_DATA) / "l3_messy.qrw");
  EXPECT_EQ(qrw::render(messy), kL3);
}

TEST(Parse, ShortImpBlockNamesTheBlock) {
  const auto e = parse_error("qrw 1\nsize 3\none 2\nimp\n2 2 2\n1 2 2\norder\n1 1 1\n0 1 1\n0 0 1\n");
  EXPECT_EQ(e.kind(), qrw::ParseError::Kind::kSemantic);
  EXPECT_NE(std::string(e.what()).find("imp block: expected 9 entries, found 6"), std::string::npos)
      << e.what();
  EXPECT_EQ(e.line(), 7U);
  EXPECT_EQ(e.column(), 1U);
}

TEST(Parse, ShortBlockAtEndOfInput) {
  const auto e = parse_error("qrw 1\nsize 2\none 1\nimp\n1 1\n0\n");
  EXPECT_NE(std::string(e.what()).find("imp block: expected 4 entries, found 3"), std::string::npos);
}

TEST(Parse, VersionMismatch) {
  const auto e = parse_error("qrw 2\nsize 1\none 0\nimp\n0\n");
  EXPECT_EQ(e.kind(), qrw::ParseError::Kind::kVersion);
  EXPECT_EQ(e.line(), 1U);
  EXPECT_EQ(e.column(), 5U);
}

TEST(Parse, LexicalErrorHasPosition) {
  const auto e = parse_error("qrw 1\nsize 2\none 1\nimp\n1 1\n0 x1\n");
  EXPECT_EQ(e.kind(), qrw::ParseError::Kind::kLexical);
  EXPECT_EQ(e.line(), 6U);
  EXPECT_EQ(e.column(), 3U);
}

TEST(Parse, OrderEntriesMustBeBits) {
  const auto e = parse_error("qrw 1\nsize 2\none 1\nimp\n1 1\n0 1\norder\n1 2\n0 1\n");
  EXPECT_EQ(e.kind(), qrw::ParseError::Kind::kLexical);
  EXPECT_EQ(e.line(), 8U);
}

TEST(Parse, IndexOutOfRange) {
  const auto e = parse_error("qrw 1\nsize 2\none 1\nimp\n1 1\n0 2\n");
  EXPECT_EQ(e.kind(), qrw::ParseError::Kind::kSemantic);
  EXPECT_EQ(e.line(), 6U);
  EXPECT_EQ(e.column(), 3U);
  EXPECT_EQ(parse_error("qrw 1\nsize 2\none 5\nimp\n1 1\n0 1\n").line(), 3U);
}

TEST(Parse, SizeMustComeFirst) {
  const auto e = parse_error("qrw 1\none 1\nsize 2\nimp\n1 1\n0 1\n");
  EXPECT_EQ(e.kind(), qrw::ParseError::Kind::kSemantic);
  EXPECT_EQ(e.line(), 2U);
}

TEST(Parse, RejectsUnknownAndDuplicateDirectives) {
  EXPECT_EQ(parse_error("qrw 1\nsize 2\none 1\njoin\nimp\n1 1\n0 1\n").line(), 4U);
  const auto dup = parse_error("qrw 1\nsize 2\none 1\none 1\nimp\n1 1\n0 1\n");
  EXPECT_NE(std::string(dup.what()).find("duplicate"), std::string::npos);
}

TEST(Parse, MissingMandatoryParts) {
  EXPECT_NE(std::string(parse_error("qrw 1\nsize 2\nimp\n1 1\n0 1\n").what()).find("one"),
            std::string::npos);
  EXPECT_NE(std::string(parse_error("qrw 1\nsize 2\none 1\n").what()).find("imp"),
            std::string::npos);
  EXPECT_EQ(parse_error("").kind(), qrw::ParseError::Kind::kSemantic);
  EXPECT_EQ(parse_error("# only a comment\n").kind(), qrw::ParseError::Kind::kSemantic);
  EXPECT_EQ(parse_error("qrw 1\nsize 0\none 0\nimp\n").kind(), qrw::ParseError::Kind::kSemantic);
}

TEST(Parse, NamesAndNegation) {
  const auto s = qrw::parse(
      "qrw 1\nsize 2\none 1\nnames bot top\nneg 1 0\nimp\n1 1\n0 1\n");
  ASSERT_TRUE(s.names.has_value());
  EXPECT_EQ((*s.names)[1], "top");
  ASSERT_TRUE(s.neg.has_value());
  EXPECT_EQ((*s.neg)[0], 1);
  EXPECT_EQ(qrw::render(s),
            "qrw 1\nsize 2\none 1\nnames bot top\nimp\n1 1\n0 1\nneg 1 0\norder\n1 1\n0 1\n");
}

TEST(Render, OneElementStructure) {
  qrw::FiniteStructure s;
  s.n = 1;
  s.imp = qrw::Table(1);
  s.order = qrw::QuasiOrder(1);
  s.order.set(0, 0, true);
  const std::string text = qrw::render(s);
  EXPECT_EQ(text, "qrw 1\nsize 1\none 0\nimp\n0\norder\n1\n");
  EXPECT_EQ(qrw::parse(text), s);
}

TEST(Render, RefusesMalformedStructure) {
  auto s = qrw::gen_lukasiewicz(3);
  s.imp(1, 2) = 7;
  EXPECT_THROW(qrw::render(s), qrw::StructureError);
}

TEST(RoundTrip, EveryFixtureIsCanonical) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(QRW_FIXTURES)) {
    if (entry.path().extension() != ".qrw") continue;
    const std::string bytes = slurp(entry.path());
    const auto s = qrw::parse(bytes);
    EXPECT_EQ(qrw::render(s), bytes) << entry.path();
    EXPECT_EQ(qrw::parse(qrw::render(s)), s) << entry.path();
    ++seen;
  }
  EXPECT_GE(seen, 8U);
}

TEST(RoundTrip, GeneratedChainsAndRelabelings) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto s = qrw::gen_lukasiewicz(n);
    EXPECT_EQ(qrw::parse(qrw::render(s)), s);
    std::vector<qrw::Element> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<qrw::Element>((i + 1) % n);
    const auto p = qrw::permute(s, perm);
    EXPECT_EQ(qrw::parse(qrw::render(p)), p);
  }
}

TEST(RoundTrip, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "qrw_io_roundtrip.qrw";
  const auto s = qrw::gen_lukasiewicz(4);
  qrw::save(path, s);
  EXPECT_EQ(qrw::load(path), s);
  std::filesystem::remove(path);
  EXPECT_THROW(qrw::load(path), std::runtime_error);
}
