#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace wb {

/** @brief Immutable element token: a symbol, a tuple of atoms, or a word (list) of atoms. */
class Atom {
 public:
  enum class Kind : unsigned char { Sym, Tup, Word };

  Atom();
  Atom(const char* s);
  Atom(std::string s);

  static Atom tup(std::vector<Atom> xs);
  static Atom pair(Atom a, Atom b) { return tup({std::move(a), std::move(b)}); }
  static Atom word(std::vector<Atom> xs);

  Kind kind() const;
  bool is_sym() const { return kind() == Kind::Sym; }
  bool is_tup() const { return kind() == Kind::Tup; }
  bool is_word() const { return kind() == Kind::Word; }

  const std::string& sym() const;
  const std::vector<Atom>& items() const;
  std::size_t size() const { return items().size(); }
  const Atom& operator[](std::size_t i) const { return items()[i]; }

  std::size_t hash() const;
  std::string str() const;

  friend bool operator==(const Atom& a, const Atom& b);
  friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);

 private:
  struct Node;
  explicit Atom(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct AtomHash {
  std::size_t operator()(const Atom& a) const { return a.hash(); }
};

std::ostream& operator<<(std::ostream& os, const Atom& a);

/// Inverse of str() for symbols without spaces, commas or brackets. Throws TypeError with the offset.
Atom parse_atom(std::string_view s);

}  // namespace wb
