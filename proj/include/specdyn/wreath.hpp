#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace specdyn::selfsim {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ", col " +
                           std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One generator of a wreath recursion on the binary tree: two first-level
/// sections (generator names, "e" for the identity) and an optional root swap.
struct Generator {
  std::string sec0;
  std::string sec1;
  bool swap = false;
};

/// Parsed wreath recursion, closed under sections and inverses.  Inverse
/// entries are materialized at parse time under the name "g^-1" following
/// (g0,g1)s  ->  (g1^-1, g0^-1)s   and   (g0,g1) -> (g0^-1, g1^-1).
class WreathSpec {
 public:
  static std::string inverse_name(const std::string& name) {
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0)
      return name.substr(0, name.size() - 3);
    return name + "^-1";
  }

  bool has(const std::string& name) const { return table_.count(name) != 0; }

  const Generator& at(const std::string& name) const {
    auto it = table_.find(name);
    if (it == table_.end())
      throw ValidationError("unknown generator '" + name + "'");
    return it->second;
  }

  /// Generators in declaration order (without the derived inverses).
  const std::vector<std::string>& declared() const { return declared_; }

  void add(const std::string& name, Generator g) {
    table_[name] = std::move(g);
    declared_.push_back(name);
  }

  void finalize();  // materialize inverses, then validate closure

 private:
  std::map<std::string, Generator> table_;
  std::vector<std::string> declared_;
};

/// Grammar, one definition per line ('#' starts a comment):
///   name = (sec0, sec1)      sections, no root swap
///   name = (sec0, sec1) s    sections with root swap
///   name = s                 root swap with identity sections
///   name = e                 identity
/// Section names must resolve to declared generators or 'e'.  The tuple
/// syntax admits any arity but validation accepts only the binary tree.
WreathSpec parse_wreath(std::string_view text);

/// A word in the generators; exponents are +-1.  Empty = identity.
struct WordLetter {
  std::string gen;
  int exp = 1;
};
using GroupWord = std::vector<WordLetter>;

/// Parses words like "a*t", "a^-1 b", "a * a^-1".
GroupWord parse_word(std::string_view text);

inline constexpr std::string_view kDihedralRecursion =
    "a = s\n"
    "t = (a, t)\n";

inline constexpr std::string_view kLamplighterRecursion =
    "a = (a, b) s\n"
    "b = (a, b)\n";

WreathSpec dihedral_spec();
WreathSpec lamplighter_spec();

}  // namespace specdyn::selfsim
