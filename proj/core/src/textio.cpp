#include "gzoo/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "gzoo/error.hpp"

namespace gzoo::textio {
namespace {

struct Line {
  std::string_view text;  // comment stripped
  std::size_t number;     // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number});
    ++number;
    start = end + 1;
  }
  return lines;
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

/// Column offset of the first non-space char, or npos.
std::size_t first_non_space(std::string_view s, std::size_t from = 0) {
  for (std::size_t i = from; i < s.size(); ++i) {
    if (!is_space(s[i])) return i;
  }
  return std::string_view::npos;
}

/// If `line` starts with `header` (after leading spaces), returns the offset
/// just past it.
std::optional<std::size_t> match_header(std::string_view line,
                                        std::string_view header) {
  std::size_t i = first_non_space(line);
  if (i == std::string_view::npos) return std::nullopt;
  if (line.substr(i, header.size()) == header) return i + header.size();
  return std::nullopt;
}

/// Recursive-descent parser for one relator/subgroup token.
class WordParser {
 public:
  WordParser(std::string_view text, std::size_t line, std::size_t column0,
             const Presentation& p)
      : text_(text), line_(line), column0_(column0), p_(p) {}

  Word parse_all() {
    Word w = parse_product();
    skip_spaces();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column0_ + pos_ + 1);
  }

  void skip_spaces() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  bool at_factor_start() {
    skip_spaces();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '[' ||
           c == '1';
  }

  Word parse_product() {
    Word w;
    bool have_factor = false;
    while (true) {
      skip_spaces();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        if (!have_factor) fail("'*' without a left operand");
        ++pos_;
        if (!at_factor_start()) fail("expected a factor after '*'");
        continue;
      }
      if (!at_factor_start()) break;
      w *= parse_power();
      have_factor = true;
    }
    return w;
  }

  Word parse_power() {
    Word base = parse_atom();
    skip_spaces();
    while (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_spaces();
      base = base.power(parse_int());
      skip_spaces();
    }
    return base;
  }

  long parse_int() {
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer exponent");
    }
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("exponent too large");
      ++pos_;
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    skip_spaces();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  Word parse_atom() {
    skip_spaces();
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return Word{};
    }
    if (c == '(') {
      ++pos_;
      Word inner = parse_product();
      expect(')');
      return inner;
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_product();
      skip_spaces();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        Word y = parse_product();
        expect(']');
        return Word::commutator(x, y);
      }
      // One-argument brackets group, e.g. [ab^2]^12 = (ab^2)^12.
      expect(']');
      return x;
    }
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (int g = 0; g < 2; ++g) {
      if (p_.generator_names[g] == lower) {
        ++pos_;
        return Word{Letter::of(g, lower != c)};
      }
    }
    fail(std::string("undeclared generator '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column0_;
  const Presentation& p_;
};

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column0;
};

/// Splits a section body into whitespace-separated tokens at bracket depth 0.
std::vector<Token> tokenize(std::string_view body, std::size_t line,
                            std::size_t column0) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < body.size()) {
    while (i < body.size() && is_space(body[i])) ++i;
    if (i >= body.size()) break;
    const std::size_t start = i;
    int depth = 0;
    while (i < body.size() && (depth > 0 || !is_space(body[i]))) {
      const char c = body[i];
      if (c == '(' || c == '[') ++depth;
      if (c == ')' || c == ']') {
        if (depth == 0) throw ParseError("unbalanced bracket", line, column0 + i + 1);
        --depth;
      }
      ++i;
    }
    if (depth != 0) throw ParseError("unbalanced bracket", line, column0 + start + 1);
    tokens.push_back({body.substr(start, i - start), line, column0 + start});
  }
  return tokens;
}

enum class Section { kNone, kGens, kRels, kSub };

}  // namespace

GroupFile parse_group_file(std::string_view text) {
  GroupFile out;
  bool have_gens = false;
  Section section = Section::kNone;
  std::vector<Token> rel_tokens;
  std::vector<Token> sub_tokens;
  bool have_sub = false;

  for (const Line& line : split_lines(text)) {
    std::string_view body = line.text;
    std::size_t offset = 0;
    if (auto h = match_header(body, "gens:")) {
      section = Section::kGens;
      offset = *h;
    } else if (auto h2 = match_header(body, "rels:")) {
      section = Section::kRels;
      offset = *h2;
    } else if (auto h3 = match_header(body, "sub:")) {
      section = Section::kSub;
      have_sub = true;
      offset = *h3;
    }
    body = body.substr(offset);
    if (first_non_space(body) == std::string_view::npos) continue;

    switch (section) {
      case Section::kNone:
        throw ParseError("content before any 'gens:', 'rels:' or 'sub:' header",
                         line.number, offset + first_non_space(body) + 1);
      case Section::kGens: {
        if (have_gens) {
          throw ParseError("generators declared twice", line.number, offset + 1);
        }
        std::vector<Token> names = tokenize(body, line.number, offset);
        if (names.size() != 2) {
          throw ParseError("exactly two generators are supported, got " +
                               std::to_string(names.size()),
                           line.number, offset + 1);
        }
        for (std::size_t i = 0; i < 2; ++i) {
          const auto& t = names[i];
          if (t.text.size() != 1 ||
              !std::islower(static_cast<unsigned char>(t.text[0]))) {
            throw ParseError("generator names must be single lowercase letters",
                             t.line, t.column0 + 1);
          }
          out.presentation.generator_names[i] = t.text[0];
        }
        if (out.presentation.generator_names[0] ==
            out.presentation.generator_names[1]) {
          throw ParseError("duplicate generator name", line.number, offset + 1);
        }
        have_gens = true;
        break;
      }
      case Section::kRels:
      case Section::kSub: {
        auto tokens = tokenize(body, line.number, offset);
        auto& dst = section == Section::kRels ? rel_tokens : sub_tokens;
        dst.insert(dst.end(), tokens.begin(), tokens.end());
        break;
      }
    }
  }
  if (!have_gens) throw ParseError("missing 'gens:' line", 1, 1);

  for (const Token& t : rel_tokens) {
    Word w = WordParser(t.text, t.line, t.column0, out.presentation).parse_all();
    if (!w.empty()) out.presentation.relators.push_back(std::move(w));
  }
  if (have_sub) {
    SubgroupSpec sub;
    for (const Token& t : sub_tokens) {
      sub.generators.push_back(
          WordParser(t.text, t.line, t.column0, out.presentation).parse_all());
    }
    out.subgroup = std::move(sub);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  return parse_group_file(text).presentation;
}

SubgroupSpec parse_subgroup(std::string_view text, const Presentation& p) {
  SubgroupSpec sub;
  for (const Line& line : split_lines(text)) {
    std::string_view body = line.text;
    std::size_t offset = 0;
    if (auto h = match_header(body, "sub:")) offset = *h;
    body = body.substr(offset);
    for (const Token& t : tokenize(body, line.number, offset)) {
      sub.generators.push_back(WordParser(t.text, t.line, t.column0, p).parse_all());
    }
  }
  return sub;
}

Word parse_word(std::string_view text, const Presentation& p) {
  return WordParser(text, 1, 0, p).parse_all();
}

PermutationInput parse_permutations(std::string_view text) {
  PermutationInput out;
  bool have_degree = false;
  for (const Line& line : split_lines(text)) {
    std::string_view body = line.text;
    if (first_non_space(body) == std::string_view::npos) continue;
    if (auto h = match_header(body, "degree:")) {
      if (have_degree) throw ParseError("degree declared twice", line.number, 1);
      std::size_t i = first_non_space(body, *h);
      std::size_t n = 0;
      bool digits = false;
      while (i != std::string_view::npos && i < body.size() &&
             std::isdigit(static_cast<unsigned char>(body[i]))) {
        n = n * 10 + static_cast<std::size_t>(body[i] - '0');
        if (n > 100'000'000) throw ParseError("degree too large", line.number, i + 1);
        digits = true;
        ++i;
      }
      if (!digits || n == 0) {
        throw ParseError("degree must be a positive integer", line.number, *h + 1);
      }
      if (i < body.size() && first_non_space(body, i) != std::string_view::npos) {
        throw ParseError("trailing text after degree", line.number, i + 1);
      }
      out.degree = n;
      have_degree = true;
      continue;
    }
    if (!have_degree) {
      throw ParseError("missing 'degree:' line before generators", line.number, 1);
    }

    std::vector<std::vector<Point>> cycles;
    std::vector<bool> used(out.degree, false);
    std::size_t i = 0;
    while (i < body.size()) {
      if (is_space(body[i])) {
        ++i;
        continue;
      }
      if (body[i] != '(') {
        throw ParseError("expected '('", line.number, i + 1);
      }
      ++i;
      std::vector<Point> cycle;
      bool closed = false;
      while (i < body.size()) {
        const char c = body[i];
        if (c == ')') {
          ++i;
          closed = true;
          break;
        }
        if (c == ',' || is_space(c)) {
          ++i;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError(std::string("unexpected '") + c + "' in cycle",
                           line.number, i + 1);
        }
        const std::size_t column = i + 1;
        std::size_t v = 0;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
          v = v * 10 + static_cast<std::size_t>(body[i] - '0');
          if (v > out.degree) break;
          ++i;
        }
        if (v == 0 || v > out.degree) {
          throw ParseError("point out of range 1.." + std::to_string(out.degree),
                           line.number, column);
        }
        if (used[v - 1]) {
          throw ParseError("point " + std::to_string(v) +
                               " repeated within one permutation",
                           line.number, column);
        }
        used[v - 1] = true;
        cycle.push_back(static_cast<Point>(v - 1));
      }
      if (!closed) throw ParseError("unterminated cycle", line.number, i + 1);
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    out.generators.push_back(Permutation::from_cycles(out.degree, cycles));
  }
  if (!have_degree) throw ParseError("missing 'degree:' line", 1, 1);
  if (out.generators.empty()) throw ParseError("empty generator list", 1, 1);
  return out;
}

std::string format_word(const Word& w, const Presentation& p) {
  return gzoo::format_word(w, p.generator_names[0], p.generator_names[1]);
}

std::string format_presentation(const Presentation& p,
                                const std::optional<SubgroupSpec>& sub) {
  std::ostringstream os;
  os << "gens: " << p.generator_names[0] << ' ' << p.generator_names[1] << '\n';
  os << "rels:";
  for (const Word& r : p.relators) os << ' ' << format_word(r, p);
  os << '\n';
  if (sub) os << format_subgroup(*sub, p);
  return os.str();
}

std::string format_subgroup(const SubgroupSpec& s, const Presentation& p) {
  std::string out = "sub:";
  for (const Word& w : s.generators) {
    out += ' ';
    out += format_word(w, p);
  }
  out += '\n';
  return out;
}

std::string format_permutations(const PermutationInput& input) {
  std::ostringstream os;
  os << "degree: " << input.degree << '\n';
  for (const Permutation& g : input.generators) os << format_cycles(g) << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace gzoo::textio
