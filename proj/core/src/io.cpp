#include "superschur/io.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "superschur/errors.hpp"

namespace superschur {

namespace {

bool is_id_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_id_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

/// Cursor over one line; columns are 1-based.
class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !is_id_start(text_[pos_])) fail("expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_id_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool at_identifier() { return is_id_start(peek()); }
  bool at_number() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  Scalar number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den) fail("expected denominator");
    }
    Scalar out;
    if (!parse_scalar(text_.substr(start, pos_ - start), out)) {
      pos_ = start;
      fail("malformed rational literal");
    }
    return out;
  }

  std::string quoted() {
    expect('"');
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
    if (pos_ >= text_.size()) fail("unterminated string");
    std::string out(text_.substr(start, pos_ - start));
    ++pos_;
    return out;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(line_, column(), message);
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

/// Strips a trailing `#` comment that is not inside a quoted string.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

struct Term {
  Scalar coef;
  std::string id;
  std::size_t column;
};

struct Declared {
  std::string id;
  std::size_t line, column;
};

struct PendingBracket {
  std::string lhs, rhs;
  std::size_t lhs_column, rhs_column;
  std::vector<Term> terms;
  std::size_t line;
};

std::vector<Term> parse_rhs(LineCursor& cur) {
  std::vector<Term> terms;
  if (cur.at_number()) {
    // A lone "0" is the zero bracket.
    Scalar value = cur.number();
    if (cur.done()) {
      if (value != 0) cur.fail("bare coefficient needs an identifier");
      return terms;
    }
    const std::size_t id_column = cur.column();
    terms.push_back({value, cur.identifier(), id_column});
  } else {
    bool negative = cur.accept('-');
    Scalar coef = 1;
    if (cur.at_number()) coef = cur.number();
    const std::size_t id_column = cur.column();
    terms.push_back({negative ? Scalar(-coef) : coef, cur.identifier(), id_column});
  }
  while (!cur.done()) {
    bool negative;
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      cur.fail("expected '+' or '-'");
    }
    Scalar coef = 1;
    if (cur.at_number()) coef = cur.number();
    const std::size_t id_column = cur.column();
    terms.push_back({negative ? Scalar(-coef) : coef, cur.identifier(), id_column});
  }
  return terms;
}

std::string format_term(const Scalar& coef, const std::string& id, bool first) {
  const Scalar magnitude = abs(coef);
  std::string out;
  if (first) {
    if (coef < 0) out += "-";
  } else {
    out += coef < 0 ? " - " : " + ";
  }
  if (magnitude != 1) out += to_string(magnitude) + " ";
  return out + id;
}

}  // namespace

LieSuperalgebra parse_algebra(std::string_view text) {
  std::string name;
  std::optional<std::vector<std::string>> even, odd;
  std::vector<Declared> even_ids, odd_ids;
  std::vector<PendingBracket> brackets;
  bool seen_header = false, seen_anything = false, seen_bracket = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    start = end + 1;
    ++line_no;

    LineCursor cur(strip_comment(raw), line_no);
    if (cur.done()) continue;

    if (cur.peek() == '[') {
      seen_bracket = true;
      PendingBracket b;
      b.line = line_no;
      cur.expect('[');
      b.lhs_column = cur.column();
      b.lhs = cur.identifier();
      cur.expect(',');
      b.rhs_column = cur.column();
      b.rhs = cur.identifier();
      cur.expect(']');
      cur.expect('=');
      b.terms = parse_rhs(cur);
      brackets.push_back(std::move(b));
      seen_anything = true;
      continue;
    }

    const std::size_t keyword_column = cur.column();
    const std::string keyword = cur.identifier();
    if (keyword == "algebra") {
      if (seen_header || seen_anything) {
        throw SyntaxError(line_no, keyword_column, "'algebra' must be the first directive");
      }
      name = cur.quoted();
      if (!cur.done()) cur.fail("unexpected text after algebra name");
      seen_header = true;
    } else if (keyword == "even" || keyword == "odd") {
      auto& section = keyword == "even" ? even : odd;
      auto& declared = keyword == "even" ? even_ids : odd_ids;
      if (section) {
        throw SyntaxError(line_no, keyword_column, "duplicate '" + keyword + "' section");
      }
      if (seen_bracket) {
        throw SyntaxError(line_no, keyword_column, "'" + keyword + "' must precede brackets");
      }
      section.emplace();
      while (!cur.done()) {
        const std::size_t column = cur.column();
        section->push_back(cur.identifier());
        declared.push_back({section->back(), line_no, column});
      }
    } else {
      throw SyntaxError(line_no, keyword_column, "unknown directive '" + keyword + "'");
    }
    seen_anything = true;
  }

  std::map<std::string, std::size_t> index;
  std::vector<Parity> parities;
  std::vector<std::string> labels;
  auto declare = [&](const std::vector<Declared>& ids, Parity p) {
    for (const auto& d : ids) {
      if (index.count(d.id)) {
        throw DuplicateIdentifier(d.line, d.column, "duplicate identifier '" + d.id + "'");
      }
      index.emplace(d.id, labels.size());
      labels.push_back(d.id);
      parities.push_back(p);
    }
  };
  declare(even_ids, Parity::Even);
  declare(odd_ids, Parity::Odd);

  const std::size_t n = labels.size();
  StructureConstants constants;
  for (const auto& b : brackets) {
    auto lookup = [&](const std::string& id, std::size_t col) {
      const auto it = index.find(id);
      if (it == index.end()) throw UnknownIdentifier(b.line, col, "unknown identifier '" + id + "'");
      return it->second;
    };
    std::size_t i = lookup(b.lhs, b.lhs_column);
    std::size_t j = lookup(b.rhs, b.rhs_column);
    Vec v(n);
    for (const auto& t : b.terms) v[lookup(t.id, t.column)] += t.coef;
    if (i > j) {
      v = scaled(v, -sign(parities[i], parities[j]));
      std::swap(i, j);
    }
    if (i == j && parities[i] == Parity::Even && !is_zero(v)) {
      throw InconsistentBracket(b.line, b.lhs_column,
                                "[" + b.lhs + "," + b.rhs + "] must vanish for even " + b.lhs);
    }
    const auto [it, inserted] = constants.emplace(std::pair{i, j}, v);
    if (!inserted && it->second != v) {
      throw InconsistentBracket(b.line, b.lhs_column,
                                "bracket [" + b.lhs + "," + b.rhs +
                                    "] contradicts an earlier definition");
    }
  }
  return LieSuperalgebra::validate(name, std::move(parities), std::move(constants),
                                   std::move(labels));
}

std::string emit_algebra(const LieSuperalgebra& L) {
  std::ostringstream out;
  out << "algebra \"" << L.name() << "\"\n";
  for (Parity p : {Parity::Even, Parity::Odd}) {
    out << (p == Parity::Even ? "even" : "odd");
    for (std::size_t i = L.begin(p); i < L.end(p); ++i) out << ' ' << L.labels()[i];
    out << '\n';
  }
  for (const auto& [key, vec] : L.constants()) {
    out << '[' << L.labels()[key.first] << ',' << L.labels()[key.second] << "] = ";
    bool first = true;
    for (std::size_t k = 0; k < vec.size(); ++k) {
      if (vec[k] == 0) continue;
      out << format_term(vec[k], L.labels()[k], first);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace superschur
