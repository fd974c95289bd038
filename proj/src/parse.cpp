#include "gindepth/parse.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>

#include "gindepth/errors.hpp"

namespace gindepth {
namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& what) {
  std::ostringstream out;
  out << "line " << line << ", column " << col << ": " << what;
  fail(ErrorKind::parse, out.str());
}

struct Token {
  enum Kind { integer, variable, plus, minus, star, caret, end };
  Kind kind;
  std::size_t line;
  std::size_t col;
  unsigned long long value;  // literal value, or variable index
};

const char* describe(Token::Kind k) {
  switch (k) {
    case Token::integer: return "integer";
    case Token::variable: return "variable";
    case Token::plus: return "'+'";
    case Token::minus: return "'-'";
    case Token::star: return "'*'";
    case Token::caret: return "'^'";
    case Token::end: return "end of line";
  }
  return "token";
}

// Strips the comment tail and tokenizes one line.
std::vector<Token> tokenize_line(const std::string& text, std::size_t line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size() && text[i] != '#') {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '+') {
      tokens.push_back({Token::plus, line, col, 0});
      ++i;
    } else if (c == '-') {
      tokens.push_back({Token::minus, line, col, 0});
      ++i;
    } else if (c == '*') {
      tokens.push_back({Token::star, line, col, 0});
      ++i;
    } else if (c == '^') {
      tokens.push_back({Token::caret, line, col, 0});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        const unsigned digit = static_cast<unsigned>(text[i] - '0');
        if (value > (std::numeric_limits<unsigned long long>::max() - digit) / 10)
          parse_fail(line, col, "integer constant too large");
        value = value * 10 + digit;
        ++i;
      }
      tokens.push_back({Token::integer, line, col, value});
    } else if (c == 'x') {
      std::size_t j = i + 1;
      unsigned long long index = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        const unsigned digit = static_cast<unsigned>(text[j] - '0');
        if (index > (std::numeric_limits<unsigned long long>::max() - digit) / 10)
          parse_fail(line, col, "variable index too large");
        index = index * 10 + digit;
        ++j;
      }
      if (j == i + 1) parse_fail(line, col, "expected a variable index after 'x'");
      tokens.push_back({Token::variable, line, col, index});
      i = j;
    } else {
      parse_fail(line, col, std::string("unexpected character '") + c + "'");
    }
  }
  std::size_t end_col = text.size() + 1;
  if (!tokens.empty()) end_col = tokens.back().col + 1;
  tokens.push_back({Token::end, line, end_col, 0});
  return tokens;
}

class PolynomialParser {
 public:
  PolynomialParser(std::vector<Token> tokens, std::size_t ring, const Field& field)
      : tokens_(std::move(tokens)), ring_(ring), field_(field) {}

  Polynomial parse() {
    Polynomial result(ring_, field_);
    bool negative = false;
    if (peek().kind == Token::plus) {
      next();
    } else if (peek().kind == Token::minus) {
      negative = true;
      next();
    }
    while (true) {
      result = result + parse_term(negative);
      const Token& t = peek();
      if (t.kind == Token::end) break;
      if (t.kind == Token::plus) {
        negative = false;
        next();
      } else if (t.kind == Token::minus) {
        negative = true;
        next();
      } else {
        parse_fail(t.line, t.col,
                   std::string("expected '+', '-' or end of line, got ") + describe(t.kind));
      }
    }
    return result;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  static long long checked_mul(long long a, long long b, const Token& at) {
    const __int128 wide = static_cast<__int128>(a) * static_cast<__int128>(b);
    if (wide > std::numeric_limits<long long>::max() ||
        wide < std::numeric_limits<long long>::min())
      parse_fail(at.line, at.col, "coefficient too large");
    return static_cast<long long>(wide);
  }

  // factor := INTEGER ['^' INTEGER] | VARIABLE ['^' INTEGER]
  void parse_factor(long long& coefficient, std::vector<std::uint32_t>& exponents) {
    const Token t = next();
    if (t.kind == Token::integer) {
      if (t.value > static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
        parse_fail(t.line, t.col, "integer constant too large");
      long long base = static_cast<long long>(t.value);
      long long power = base;
      if (const auto e = parse_exponent()) {
        power = 1;
        for (std::uint32_t k = 0; k < *e; ++k) power = checked_mul(power, base, t);
      }
      coefficient = checked_mul(coefficient, power, t);
    } else if (t.kind == Token::variable) {
      if (t.value == 0) parse_fail(t.line, t.col, "variable index must be at least 1");
      if (t.value > ring_) parse_fail(t.line, t.col, "variable index exceeds ring size");
      std::uint32_t e = 1;
      if (const auto given = parse_exponent()) e = *given;
      const std::size_t var = static_cast<std::size_t>(t.value) - 1;
      if (exponents[var] > std::numeric_limits<std::uint32_t>::max() - e)
        parse_fail(t.line, t.col, "exponent too large");
      exponents[var] += e;
    } else {
      parse_fail(t.line, t.col,
                 std::string("expected an integer or a variable, got ") + describe(t.kind));
    }
  }

  std::optional<std::uint32_t> parse_exponent() {
    if (peek().kind != Token::caret) return std::nullopt;
    next();
    const Token t = next();
    if (t.kind != Token::integer)
      parse_fail(t.line, t.col, std::string("expected an exponent, got ") + describe(t.kind));
    if (t.value > 1u << 20) parse_fail(t.line, t.col, "exponent too large");
    return static_cast<std::uint32_t>(t.value);
  }

  // term := factor ('*' factor)*
  Polynomial parse_term(bool negative) {
    long long coefficient = 1;
    std::vector<std::uint32_t> exponents(ring_, 0);
    parse_factor(coefficient, exponents);
    while (true) {
      const Token& t = peek();
      if (t.kind == Token::star) {
        next();
        parse_factor(coefficient, exponents);
      } else if (t.kind == Token::integer || t.kind == Token::variable) {
        parse_fail(t.line, t.col, "juxtaposition is not allowed; separate factors with '*'");
      } else {
        break;
      }
    }
    if (negative) coefficient = -coefficient;
    return Polynomial::term(Scalar::from_int(coefficient, field_),
                            Monomial(std::move(exponents)));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t ring_;
  Field field_;
};

// Splits into lines, keeping 1-based indices; tolerates a missing final newline.
std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (const char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

bool significant(const std::string& line) {
  for (const char c : line) {
    if (c == '#') return false;
    if (!std::isspace(static_cast<unsigned char>(c))) return true;
  }
  return false;
}

std::size_t parse_ring_line(const std::string& line, std::size_t line_number) {
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  skip_space();
  const std::string keyword = "ring";
  if (line.compare(i, keyword.size(), keyword) != 0)
    parse_fail(line_number, i + 1, "expected 'ring <n>' as the first declaration");
  i += keyword.size();
  if (i >= line.size() || !std::isspace(static_cast<unsigned char>(line[i])))
    parse_fail(line_number, i + 1, "expected 'ring <n>' as the first declaration");
  skip_space();
  const std::size_t digits_at = i;
  unsigned long long n = 0;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
    n = n * 10 + static_cast<unsigned>(line[i] - '0');
    if (n > 10000) parse_fail(line_number, digits_at + 1, "ring size too large");
    ++i;
  }
  if (i == digits_at) parse_fail(line_number, i + 1, "expected the ring size");
  skip_space();
  if (i < line.size() && line[i] != '#')
    parse_fail(line_number, i + 1, "unexpected text after the ring size");
  if (n == 0) parse_fail(line_number, digits_at + 1, "ring size must be positive");
  return static_cast<std::size_t>(n);
}

}  // namespace

IdealFile parse_ideal(const std::string& text, const Field& field) {
  const std::vector<std::string> lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && !significant(lines[first])) ++first;
  if (first == lines.size())
    fail(ErrorKind::parse, "line 1, column 1: expected 'ring <n>' as the first declaration");
  const std::size_t ring = parse_ring_line(lines[first], first + 1);

  std::vector<std::string> sources;
  std::vector<Polynomial> generators;
  bool monomial = true;
  for (std::size_t k = first + 1; k < lines.size(); ++k) {
    if (!significant(lines[k])) continue;
    PolynomialParser parser(tokenize_line(lines[k], k + 1), ring, field);
    Polynomial p = parser.parse();
    if (!p.is_zero() && !p.is_monomial_times_scalar()) monomial = false;
    sources.push_back(lines[k]);
    generators.push_back(std::move(p));
  }
  if (generators.empty()) monomial = true;
  PolynomialIdeal ideal = PolynomialIdeal::make(ring, field, std::move(generators));
  return IdealFile{ring, field, std::move(sources), std::move(ideal), monomial};
}

Field parse_field(const std::string& name) {
  if (name == "q" || name == "Q") return Field::rationals();
  if (name.rfind("p:", 0) == 0) {
    const std::string digits = name.substr(2);
    if (digits.empty()) fail(ErrorKind::parse, "field: expected a prime after 'p:'");
    unsigned long long p = 0;
    for (const char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(ErrorKind::parse, "field: expected a prime after 'p:'");
      p = p * 10 + static_cast<unsigned>(c - '0');
      if (p > std::numeric_limits<std::uint32_t>::max())
        fail(ErrorKind::parse, "field: prime too large");
    }
    return Field::fp(static_cast<std::uint32_t>(p));
  }
  fail(ErrorKind::parse, "field must be 'q' or 'p:<odd prime>'");
}

}  // namespace gindepth
