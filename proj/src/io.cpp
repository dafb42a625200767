#include "qrw/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>

#include "qrw/axioms.hpp"

namespace qrw {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

constexpr std::array<std::string_view, 7> kDirectives = {"size", "one", "names", "imp",
                                                         "mul",  "neg", "order"};

bool is_directive(std::string_view word) {
  for (auto d : kDirectives) {
    if (d == word) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view row = text.substr(pos, end - pos);
    const std::size_t first = row.find_first_not_of(" \t\r\f\v");
    if (first == std::string_view::npos || row[first] != '#') {
      std::size_t i = 0;
      while (i < row.size()) {
        const auto c = static_cast<unsigned char>(row[i]);
        if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
          ++i;
          continue;
        }
        const std::size_t start = i;
        while (i < row.size()) {
          const auto d = static_cast<unsigned char>(row[i]);
          if (d == ' ' || d == '\t' || d == '\r' || d == '\f' || d == '\v') break;
          if (d < 0x20 || d == 0x7f) {
            throw ParseError(ParseError::Kind::kLexical, line, i + 1, "control character in input");
          }
          ++i;
        }
        out.push_back(Token{std::string(row.substr(start, i - start)), line, start + 1});
      }
    }
    if (end == text.size()) break;
    pos = end + 1;
    ++line;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  FiniteStructure run() {
    header();
    FiniteStructure s;
    bool seen_one = false;
    bool seen_order = false;
    std::vector<std::string> seen;
    while (!at_end()) {
      const Token& t = next();
      if (!is_directive(t.text)) semantic(t, "unknown directive '" + t.text + "'");
      for (const auto& d : seen) {
        if (d == t.text) semantic(t, "duplicate directive '" + t.text + "'");
      }
      if (seen.empty() && t.text != "size") {
        semantic(t, "'size' must appear before '" + t.text + "'");
      }
      seen.push_back(t.text);

      if (t.text == "size") {
        const Token& v = expect_value(t, "size");
        n_ = number(v, "size");
        if (n_ < 1 || n_ > kMaxCarrier) {
          semantic(v, "size must be between 1 and " + std::to_string(kMaxCarrier));
        }
        s.n = n_;
      } else if (t.text == "one") {
        const Token& v = expect_value(t, "one");
        s.one = element(v, "one");
        seen_one = true;
      } else if (t.text == "names") {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n_; ++i) {
          if (at_end()) semantic(t, arity_message("names", n_, i, nullptr));
          const Token& v = next();
          if (is_directive(v.text)) semantic(v, arity_message("names", n_, i, &v));
          names.push_back(v.text);
        }
        s.names = std::move(names);
      } else if (t.text == "imp") {
        s.imp = Table(n_, block(t, "imp", n_ * n_, false));
      } else if (t.text == "mul") {
        s.mul = Table(n_, block(t, "mul", n_ * n_, false));
      } else if (t.text == "neg") {
        s.neg = block(t, "neg", n_, false);
      } else if (t.text == "order") {
        const auto bits = block(t, "order", n_ * n_, true);
        std::vector<bool> rows(bits.begin(), bits.end());
        s.order = QuasiOrder::from_matrix(n_, rows);
        seen_order = true;
      }
    }
    const Token& last = tokens_.empty() ? Token{"", 1, 1} : tokens_.back();
    if (n_ == 0) semantic(last, "missing 'size' directive");
    if (!seen_one) semantic(last, "missing 'one' directive");
    if (std::find(seen.begin(), seen.end(), "imp") == seen.end()) {
      semantic(last, "missing 'imp' block");
    }
    if (!seen_order) s.order = derived_order(s);
    return s;
  }

 private:
  bool at_end() const { return pos_ >= tokens_.size(); }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void semantic(const Token& t, const std::string& msg) const {
    throw ParseError(ParseError::Kind::kSemantic, t.line, t.column, msg);
  }

  void header() {
    if (tokens_.empty()) throw ParseError(ParseError::Kind::kSemantic, 1, 1, "empty input");
    const Token& magic = next();
    if (magic.text != "qrw") semantic(magic, "expected header 'qrw 1'");
    if (at_end()) semantic(magic, "missing format version after 'qrw'");
    const Token& version = next();
    if (version.text != "1") {
      throw ParseError(ParseError::Kind::kVersion, version.line, version.column,
                       "unsupported format version '" + version.text + "' (expected 1)");
    }
  }

  const Token& expect_value(const Token& directive, const std::string& name) {
    if (at_end()) semantic(directive, "'" + name + "' needs a value");
    return next();
  }

  std::size_t number(const Token& t, const std::string& what) const {
    if (t.text.empty() || t.text.size() > 9 ||
        t.text.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(ParseError::Kind::kLexical, t.line, t.column,
                       "expected a decimal number for " + what + ", found '" + t.text + "'");
    }
    return static_cast<std::size_t>(std::stoul(t.text));
  }

  Element element(const Token& t, const std::string& what) const {
    const std::size_t v = number(t, what);
    if (v >= n_) {
      semantic(t, what + " entry " + t.text + " is not an element index below " +
                      std::to_string(n_));
    }
    return static_cast<Element>(v);
  }

  static std::string arity_message(const std::string& block, std::size_t expected,
                                   std::size_t found, const Token* stop) {
    std::string msg = block + " block: expected " + std::to_string(expected) + " entries, found " +
                      std::to_string(found);
    msg += stop ? " before '" + stop->text + "'" : " before end of input";
    return msg;
  }

  std::vector<Element> block(const Token& head, const std::string& name, std::size_t count,
                             bool boolean) {
    std::vector<Element> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (at_end()) semantic(head, arity_message(name, count, i, nullptr));
      const Token& t = next();
      if (is_directive(t.text)) semantic(t, arity_message(name, count, i, &t));
      if (boolean) {
        if (t.text != "0" && t.text != "1") {
          throw ParseError(ParseError::Kind::kLexical, t.line, t.column,
                           "order entries must be 0 or 1, found '" + t.text + "'");
        }
        out.push_back(t.text == "1" ? 1 : 0);
      } else {
        out.push_back(element(t, name));
      }
    }
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t n_ = 0;
};

void write_table(std::ostringstream& out, const Table& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) out << (y ? " " : "") << t(x, y);
    out << '\n';
  }
}

}  // namespace

FiniteStructure parse(std::string_view text) {
  Parser parser(tokenize(text));
  FiniteStructure s = parser.run();
  s.check_well_formed();
  return s;
}

FiniteStructure load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string render(const FiniteStructure& s) {
  s.check_well_formed();
  std::ostringstream out;
  out << "qrw 1\n";
  out << "size " << s.n << '\n';
  out << "one " << s.one << '\n';
  if (s.names) {
    out << "names";
    for (const auto& name : *s.names) out << ' ' << name;
    out << '\n';
  }
  out << "imp\n";
  write_table(out, s.imp);
  if (s.mul) {
    out << "mul\n";
    write_table(out, *s.mul);
  }
  if (s.neg) {
    out << "neg";
    for (Element e : *s.neg) out << ' ' << e;
    out << '\n';
  }
  out << "order\n";
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = 0; y < s.n; ++y) out << (y ? " " : "") << (s.order.leq(x, y) ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

void save(const std::filesystem::path& path, const FiniteStructure& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << render(s);
}

}  // namespace qrw
