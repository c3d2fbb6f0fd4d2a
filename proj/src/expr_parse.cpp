#include <cctype>
#include <string>

#include "myc/errors.hpp"
#include "myc/homotopy.hpp"

namespace myc {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg + " at position " + std::to_string(pos), pos);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    return text[pos];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits_from = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits_from) {
      pos = start;
      fail("expected an integer");
    }
    try {
      return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      pos = start;
      fail("integer out of range");
    }
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos;
    auto head = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto tail = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos >= text.size() || !head(text[pos])) fail("expected an identifier");
    ++pos;
    while (pos < text.size() && tail(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }

  std::vector<ExprPtr> parse_list() {
    expect('(');
    std::vector<ExprPtr> items;
    items.push_back(parse_expr());
    while (peek() == ',') {
      ++pos;
      items.push_back(parse_expr());
    }
    expect(')');
    return items;
  }

  ExprPtr parse_expr() {
    char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      fail("expected an expression");
    std::size_t ident_pos = pos;
    std::string word = parse_ident();

    if (word == "pt") return make_contractible();
    if (word == "empty") return make_sphere(-1);
    if (word == "S") {
      expect('(');
      long long d = parse_int();
      if (d < -1 || d > 1'000'000'000LL) {
        pos = ident_pos;
        fail("sphere dimension out of range");
      }
      expect(')');
      return make_sphere(static_cast<int>(d));
    }
    if (word == "wedge") return make_wedge(parse_list());
    if (word == "join") return make_join(parse_list());
    if (word == "susp") {
      expect('(');
      ExprPtr inner = parse_expr();
      long long count = 1;
      if (peek() == ',') {
        ++pos;
        count = parse_int();
        if (count < 0) fail("suspension count must be nonnegative");
      }
      expect(')');
      return make_susp(std::move(inner), count);
    }
    return make_atom(word);
  }
};

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  Parser p(text);
  ExprPtr e = p.parse_expr();
  if (!p.at_end()) p.fail("trailing input after expression");
  return e;
}

}  // namespace myc
