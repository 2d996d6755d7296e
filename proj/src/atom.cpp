#include "wb/atom.hpp"

#include <functional>
#include <ostream>

#include "wb/error.hpp"

namespace wb {

struct Atom::Node {
  Kind kind;
  std::string s;
  std::vector<Atom> xs;
  std::size_t h;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

Atom::Atom() : Atom(std::string{}) {}

Atom::Atom(const char* s) : Atom(std::string(s)) {}

Atom::Atom(std::string s) {
  std::size_t h = mix(1, std::hash<std::string>{}(s));
  n_ = std::make_shared<const Node>(Node{Kind::Sym, std::move(s), {}, h});
}

Atom Atom::tup(std::vector<Atom> xs) {
  std::size_t h = 2;
  for (const auto& x : xs) h = mix(h, x.hash());
  return Atom(std::make_shared<const Node>(Node{Kind::Tup, {}, std::move(xs), h}));
}

Atom Atom::word(std::vector<Atom> xs) {
  std::size_t h = 3;
  for (const auto& x : xs) h = mix(h, x.hash());
  return Atom(std::make_shared<const Node>(Node{Kind::Word, {}, std::move(xs), h}));
}

Atom::Kind Atom::kind() const { return n_->kind; }
const std::string& Atom::sym() const { return n_->s; }
const std::vector<Atom>& Atom::items() const { return n_->xs; }
std::size_t Atom::hash() const { return n_->h; }

bool operator==(const Atom& a, const Atom& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->h != b.n_->h || a.n_->kind != b.n_->kind) return false;
  if (a.n_->kind == Atom::Kind::Sym) return a.n_->s == b.n_->s;
  return a.n_->xs == b.n_->xs;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
  if (a.n_ == b.n_) return std::strong_ordering::equal;
  if (a.n_->kind != b.n_->kind) return a.n_->kind <=> b.n_->kind;
  if (a.n_->kind == Atom::Kind::Sym) return a.n_->s <=> b.n_->s;
  const auto& x = a.n_->xs;
  const auto& y = b.n_->xs;
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = x[i] <=> y[i];
    if (c != 0) return c;
  }
  return x.size() <=> y.size();
}

std::string Atom::str() const {
  switch (kind()) {
    case Kind::Sym:
      return sym();
    case Kind::Tup:
    case Kind::Word: {
      std::string s = kind() == Kind::Tup ? "(" : "[";
      for (std::size_t i = 0; i < size(); ++i) {
        if (i) s += ",";
        s += items()[i].str();
      }
      s += kind() == Kind::Tup ? ")" : "]";
      return s;
    }
  }
  return {};
}

std::ostream& operator<<(std::ostream& os, const Atom& a) { return os << a.str(); }

namespace {

struct AtomParser {
  std::string_view s;
  std::size_t i = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw TypeError("cannot parse element \"" + std::string(s) + "\" at offset " + std::to_string(i) + ": " + what);
  }
  static bool special(char c) { return c == ',' || c == '(' || c == ')' || c == '[' || c == ']' || c == ' '; }

  Atom atom() {
    if (i >= s.size()) fail("unexpected end");
    char c = s[i];
    if (c == '(' || c == '[') {
      char close = c == '(' ? ')' : ']';
      ++i;
      std::vector<Atom> xs;
      if (i < s.size() && s[i] == close) {
        ++i;
      } else {
        for (;;) {
          xs.push_back(atom());
          if (i >= s.size()) fail("unclosed bracket");
          if (s[i] == close) {
            ++i;
            break;
          }
          if (s[i] != ',') fail("expected ',' or closing bracket");
          ++i;
        }
      }
      return c == '(' ? Atom::tup(std::move(xs)) : Atom::word(std::move(xs));
    }
    std::size_t start = i;
    while (i < s.size() && !special(s[i])) ++i;
    if (i == start) fail("empty symbol");
    return Atom(std::string(s.substr(start, i - start)));
  }
};

}  // namespace

Atom parse_atom(std::string_view s) {
  AtomParser p{s};
  Atom a = p.atom();
  if (p.i != s.size()) p.fail("trailing characters");
  return a;
}

}  // namespace wb
