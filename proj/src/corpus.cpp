#include "wb/corpus.hpp"

namespace wb::corpus {

namespace {

FinSet syms(std::initializer_list<const char*> xs) {
  std::vector<Atom> v;
  for (auto x : xs) v.emplace_back(x);
  return FinSet(v);
}

}  // namespace

InternalCategory two() {
  auto X0 = syms({"0", "1"});
  auto X1 = syms({"i0", "i1", "u"});
  auto d0 = FinMap::from_pairs(X1, X0, {{"i0", "0"}, {"i1", "1"}, {"u", "1"}});
  auto d1 = FinMap::from_pairs(X1, X0, {{"i0", "0"}, {"i1", "1"}, {"u", "0"}});
  auto s0 = FinMap::from_pairs(X0, X1, {{"0", "i0"}, {"1", "i1"}});
  return make_category("2", X0, X1, d0, d1, s0, [](const Atom& f, const Atom& g) {
    return f.sym() == "u" ? f : g;
  });
}

InternalCategory e4() {
  auto X0 = syms({"0", "1"});
  auto X1 = syms({"i0", "i1", "u", "v"});
  auto d0 = FinMap::from_pairs(X1, X0, {{"i0", "0"}, {"i1", "1"}, {"u", "1"}, {"v", "0"}});
  auto d1 = FinMap::from_pairs(X1, X0, {{"i0", "0"}, {"i1", "1"}, {"u", "0"}, {"v", "1"}});
  auto s0 = FinMap::from_pairs(X0, X1, {{"0", "i0"}, {"1", "i1"}});
  return make_category("E4", X0, X1, d0, d1, s0, [](const Atom& f, const Atom& g) -> Atom {
    if (f.sym()[0] == 'i') return g;
    if (g.sym()[0] == 'i') return f;
    return f.sym() == "u" ? "i0" : "i1";
  });
}

InternalCategory z2() {
  auto X0 = syms({"*"});
  auto X1 = syms({"e", "z"});
  auto bang = FinMap::constant(X1, X0, "*");
  auto s0 = FinMap::constant(X0, X1, "e");
  return make_category("Z/2", X0, X1, bang, bang, s0, [](const Atom& f, const Atom& g) -> Atom {
    return f == g ? "e" : "z";
  });
}

InternalCategory disc2() { return discrete_category(syms({"0", "1"}), "disc2"); }

}  // namespace wb::corpus
