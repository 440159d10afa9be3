#include "specdyn/wreath.hpp"

#include <cctype>

namespace specdyn::selfsim {

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  void advance() {
    if (done()) return;
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_blanks() {
    while (!done() && (peek() == ' ' || peek() == '\t')) advance();
  }
  void skip_to_eol() {
    while (!done() && peek() != '\n') advance();
  }
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_name(Cursor& c) {
  c.skip_blanks();
  if (!is_name_char(c.peek()) ||
      std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected a generator name", c.line, c.col);
  std::string name;
  while (is_name_char(c.peek())) {
    name.push_back(c.peek());
    c.advance();
  }
  return name;
}

std::string inverse_of_section(const std::string& sec) {
  if (sec == "e") return "e";
  return WreathSpec::inverse_name(sec);
}

}  // namespace

void WreathSpec::finalize() {
  std::vector<std::string> base = declared_;
  for (const auto& name : base) {
    const Generator g = table_.at(name);
    Generator inv;
    inv.swap = g.swap;
    if (g.swap) {
      inv.sec0 = inverse_of_section(g.sec1);
      inv.sec1 = inverse_of_section(g.sec0);
    } else {
      inv.sec0 = inverse_of_section(g.sec0);
      inv.sec1 = inverse_of_section(g.sec1);
    }
    table_[inverse_name(name)] = inv;
  }
  for (const auto& [name, g] : table_) {
    for (const std::string* sec : {&g.sec0, &g.sec1}) {
      if (*sec == "e") continue;
      if (table_.count(*sec) == 0)
        throw ValidationError("generator '" + name +
                              "' has unresolved section '" + *sec + "'");
    }
  }
}

WreathSpec parse_wreath(std::string_view text) {
  WreathSpec spec;
  Cursor c{text};
  while (!c.done()) {
    c.skip_blanks();
    if (c.peek() == '\n') {
      c.advance();
      continue;
    }
    if (c.peek() == '#') {
      c.skip_to_eol();
      continue;
    }
    if (c.done()) break;

    int def_line = c.line, def_col = c.col;
    std::string name = read_name(c);
    if (name == "e" || name == "s")
      throw ParseError("'" + name + "' is reserved", def_line, def_col);
    if (spec.has(name))
      throw ParseError("duplicate definition of '" + name + "'", def_line,
                       def_col);

    c.skip_blanks();
    if (c.peek() != '=') throw ParseError("expected '='", c.line, c.col);
    c.advance();
    c.skip_blanks();

    Generator g;
    if (c.peek() == '(') {
      c.advance();
      std::vector<std::string> secs;
      while (true) {
        secs.push_back(read_name(c));
        c.skip_blanks();
        if (c.peek() == ',') {
          c.advance();
          continue;
        }
        if (c.peek() == ')') {
          c.advance();
          break;
        }
        throw ParseError("expected ',' or ')'", c.line, c.col);
      }
      if (secs.size() != 2)
        throw ValidationError("only the binary alphabet is supported (got " +
                              std::to_string(secs.size()) + " sections)");
      g.sec0 = secs[0];
      g.sec1 = secs[1];
      c.skip_blanks();
      if (is_name_char(c.peek())) {
        int l = c.line, col = c.col;
        std::string suffix = read_name(c);
        if (suffix != "s")
          throw ParseError("unexpected token '" + suffix + "'", l, col);
        g.swap = true;
      }
    } else if (is_name_char(c.peek())) {
      int l = c.line, col = c.col;
      std::string rhs = read_name(c);
      if (rhs == "s") {
        g.sec0 = g.sec1 = "e";
        g.swap = true;
      } else if (rhs == "e") {
        g.sec0 = g.sec1 = "e";
        g.swap = false;
      } else {
        throw ParseError("expected 'e', 's' or '(sec0, sec1)'", l, col);
      }
    } else {
      throw ParseError("expected 'e', 's' or '(sec0, sec1)'", c.line, c.col);
    }

    c.skip_blanks();
    if (c.peek() == '#') c.skip_to_eol();
    if (!c.done() && c.peek() != '\n')
      throw ParseError("trailing characters after definition", c.line, c.col);

    spec.add(name, g);
  }
  spec.finalize();
  return spec;
}

GroupWord parse_word(std::string_view text) {
  GroupWord word;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (text[i] == ' ' || text[i] == '\t' || text[i] == '*'))
      ++i;
  };
  skip();
  while (i < text.size()) {
    if (!is_name_char(text[i]))
      throw ValidationError("bad character in word: '" +
                            std::string(1, text[i]) + "'");
    std::string name;
    while (i < text.size() && is_name_char(text[i])) name.push_back(text[i++]);
    int exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::string e;
      while (i < text.size() && (text[i] == '-' || text[i] == '+' ||
                                 std::isdigit(static_cast<unsigned char>(text[i]))))
        e.push_back(text[i++]);
      if (e != "1" && e != "+1" && e != "-1")
        throw ValidationError("only exponents +-1 are supported, got '^" + e +
                              "'");
      exp = (e == "-1") ? -1 : 1;
    }
    if (name != "e") word.push_back({name, exp});
    skip();
  }
  return word;
}

WreathSpec dihedral_spec() { return parse_wreath(kDihedralRecursion); }
WreathSpec lamplighter_spec() { return parse_wreath(kLamplighterRecursion); }

}  // namespace specdyn::selfsim
