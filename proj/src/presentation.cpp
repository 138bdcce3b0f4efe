#include "charvar/presentation.hpp"

#include <cctype>
#include <set>

#include "charvar/error.hpp"

namespace charvar {

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                           GroupTags tags)
    : names_(std::move(generator_names)), tags_(std::move(tags)) {
  if (names_.empty()) throw Error("EmptyGenerators", "presentation needs at least one generator");
  std::set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw Error("DuplicateGenerator", "duplicate generator '" + n + "'");
  for (auto& r : relators) {
    if (r.generator_bound() > names_.size())
      throw Error("UnknownGenerator", "relator uses a generator index out of range");
    relators_.push_back(Word(r.syllables()));
  }
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::string Presentation::to_text() const {
  std::string out = "gens ";
  for (std::size_t i = 0; i < names_.size(); ++i) out += (i ? "," : "") + names_[i];
  out += ";\n";
  for (const auto& r : relators_) {
    out += "rel ";
    if (r.is_identity()) {
      // The empty relator is written as x x^-1 so it stays parseable.
      out += names_[0] + " " + names_[0] + "^-1";
    } else {
      out += r.to_string(names_);
    }
    out += ";\n";
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse() {
    skip_space();
    expect_keyword("gens");
    skip_space();
    if (peek() == ';') fail("EmptyGenerators", "empty generator list");
    std::vector<std::string> names;
    for (;;) {
      skip_space();
      names.push_back(identifier());
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      break;
    }
    expect(';');
    names_ = names;
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second) fail("DuplicateGenerator", "duplicate generator '" + n + "'");

    std::vector<Word> relators;
    for (;;) {
      skip_space();
      if (at_end()) break;
      expect_keyword("rel");
      relators.push_back(word_until(';'));
      expect(';');
    }
    return Presentation(std::move(names), std::move(relators));
  }

 private:
  [[noreturn]] void fail(const std::string& code, const std::string& what) const {
    throw Error(code, std::to_string(line_) + ":" + std::to_string(col_) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail("SyntaxError", std::string("expected '") + c + "'");
    advance();
  }

  void expect_keyword(std::string_view kw) {
    auto start_line = line_, start_col = col_;
    std::string got = at_end() ? std::string() : identifier();
    if (got != kw) {
      line_ = start_line;
      col_ = start_col;
      fail("SyntaxError", "expected keyword '" + std::string(kw) + "'");
    }
  }

  std::string identifier() {
    char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      fail("SyntaxError", "expected identifier");
    std::string id;
    while (!at_end()) {
      c = peek();
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        id += c;
        advance();
      } else {
        break;
      }
    }
    return id;
  }

  long integer() {
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("SyntaxError", "expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) fail("SyntaxError", "exponent too large");
      advance();
    }
    return neg ? -v : v;
  }

  Word generator_token() {
    auto l = line_, c = col_;
    std::string id = identifier();
    long sign = 1;
    auto idx = index(id);
    if (!idx) {
      // Case-paired inverse: "A" is a^-1 when "a" is a generator and "A" is not.
      std::string lower = id;
      for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      bool has_upper = lower != id;
      if (has_upper && std::isupper(static_cast<unsigned char>(id[0]))) {
        std::string paired = id;
        paired[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(id[0])));
        idx = index(paired);
        sign = -1;
      }
    }
    if (!idx) {
      line_ = l;
      col_ = c;
      fail("UnknownGenerator", "unknown generator '" + id + "'");
    }
    return Word::generator(*idx, sign);
  }

  Word power_suffix(Word base) {
    skip_space();
    if (peek() != '^') return base;
    advance();
    skip_space();
    long e = integer();
    Word out;
    Word step = e >= 0 ? base : base.inverse();
    for (long i = 0; i < (e >= 0 ? e : -e); ++i) out = out * step;
    return out;
  }

  Word factor() {
    skip_space();
    if (peek() == '[') {
      advance();
      Word x = word_until(',');
      expect(',');
      Word y = word_until(']');
      expect(']');
      return power_suffix(commutator(x, y));
    }
    if (peek() == '(') {
      advance();
      Word inner = word_until(')');
      expect(')');
      return power_suffix(inner);
    }
    if (peek() == '1') {
      advance();
      return power_suffix(Word());
    }
    return power_suffix(generator_token());
  }

  Word word_until(char terminator) {
    Word w;
    bool any = false;
    for (;;) {
      skip_space();
      if (at_end()) fail("SyntaxError", std::string("unterminated word, expected '") + terminator + "'");
      char c = peek();
      if (c == terminator) break;
      if (c == ';' || c == ',' || c == ']' || c == ')')
        fail("SyntaxError", std::string("unexpected '") + c + "'");
      w = w * factor();
      any = true;
    }
    if (!any) fail("SyntaxError", "empty word");
    return w;
  }

  std::optional<std::size_t> index(const std::string& id) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == id) return i;
    return std::nullopt;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::vector<std::string> names_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).parse(); }

}  // namespace charvar
