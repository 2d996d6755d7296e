#include "wb/setcat.hpp"

#include <algorithm>
#include <unordered_map>

namespace wb {

struct FinSet::Rep {
  std::string name;
  std::vector<Atom> elems;
  std::vector<int> grades;
  std::unordered_map<Atom, std::uint32_t, AtomHash> index;
};

FinSet::FinSet() : FinSet(std::vector<Atom>{}) {}

FinSet::FinSet(std::vector<Atom> elems, std::string name) {
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (elems[i] == elems[i - 1]) throw TypeError("duplicate atom " + elems[i].str());
  auto r = std::make_shared<Rep>();
  r->name = std::move(name);
  r->elems = std::move(elems);
  r->index.reserve(r->elems.size());
  for (std::size_t i = 0; i < r->elems.size(); ++i) r->index.emplace(r->elems[i], static_cast<std::uint32_t>(i));
  r_ = std::move(r);
}

FinSet FinSet::graded(std::vector<std::pair<Atom, int>> elems, std::string name) {
  if (!std::is_sorted(elems.begin(), elems.end(), [](const auto& a, const auto& b) { return a.first < b.first; }))
    std::sort(elems.begin(), elems.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  auto r = std::make_shared<Rep>();
  r->name = std::move(name);
  r->elems.reserve(elems.size());
  r->grades.reserve(elems.size());
  r->index.reserve(elems.size());
  for (auto& [a, g] : elems) {
    if (!r->elems.empty() && r->elems.back() == a) throw TypeError("duplicate atom " + a.str());
    r->index.emplace(a, static_cast<std::uint32_t>(r->elems.size()));
    r->elems.push_back(std::move(a));
    r->grades.push_back(g);
  }
  FinSet s;
  s.r_ = std::move(r);
  return s;
}

FinSet FinSet::dedup(std::vector<Atom> elems, std::string name) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return FinSet(std::move(elems), std::move(name));
}

FinSet FinSet::range(int n, const std::string& prefix) {
  std::vector<Atom> xs;
  for (int i = 1; i <= n; ++i) xs.emplace_back(prefix + std::to_string(i));
  return FinSet(std::move(xs));
}

const std::string& FinSet::name() const { return r_->name; }

FinSet FinSet::named(std::string name) const {
  FinSet s = *this;
  auto r = std::make_shared<Rep>(*r_);
  r->name = std::move(name);
  s.r_ = std::move(r);
  return s;
}

std::size_t FinSet::size() const { return r_->elems.size(); }
const std::vector<Atom>& FinSet::elems() const { return r_->elems; }

std::ptrdiff_t FinSet::index(const Atom& a) const {
  auto it = r_->index.find(a);
  return it == r_->index.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
}

bool FinSet::graded() const { return !r_->grades.empty(); }
int FinSet::grade(std::size_t i) const { return r_->grades.empty() ? 0 : r_->grades[i]; }

std::string FinSet::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += at(i).str();
  }
  return s + "}";
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.r_ == b.r_ || a.r_->elems == b.r_->elems;
}

// ---- FinMap ----

FinMap::FinMap(FinSet dom, FinSet cod, std::vector<std::uint32_t> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), t_(std::move(table)) {
  if (t_.size() != dom_.size()) throw TypeError("table size does not match domain " + dom_.str());
  for (auto j : t_)
    if (j >= cod_.size()) throw TypeError("table entry outside codomain " + cod_.str());
}

FinMap FinMap::identity(const FinSet& x) {
  std::vector<std::uint32_t> t(x.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint32_t>(i);
  return FinMap(x, x, std::move(t));
}

FinMap FinMap::from_pairs(const FinSet& dom, const FinSet& cod, const std::vector<std::pair<Atom, Atom>>& pairs) {
  std::vector<std::int64_t> t(dom.size(), -1);
  for (const auto& [x, y] : pairs) {
    auto i = dom.index(x);
    if (i < 0) throw TypeError("table key " + x.str() + " not in domain " + dom.str());
    auto j = cod.index(y);
    if (j < 0) throw TypeError("image " + y.str() + " not in codomain " + cod.str());
    if (t[i] >= 0 && t[i] != j) throw TypeError("two images for " + x.str());
    t[i] = j;
  }
  std::vector<std::uint32_t> u(dom.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0) throw TypeError("no image for " + dom.at(i).str());
    u[i] = static_cast<std::uint32_t>(t[i]);
  }
  return FinMap(dom, cod, std::move(u));
}

FinMap FinMap::constant(const FinSet& dom, const FinSet& cod, const Atom& y) {
  return build(dom, cod, [&](const Atom&) { return y; });
}

const Atom& FinMap::operator()(const Atom& x) const {
  auto i = dom_.index(x);
  if (i < 0) throw TypeError(x.str() + " is not in the domain " + dom_.str());
  return cod_.at(t_[i]);
}

bool FinMap::injective() const {
  std::vector<char> seen(cod_.size(), 0);
  for (auto j : t_) {
    if (seen[j]) return false;
    seen[j] = 1;
  }
  return true;
}

bool FinMap::surjective() const {
  std::vector<char> seen(cod_.size(), 0);
  std::size_t n = 0;
  for (auto j : t_)
    if (!seen[j]) seen[j] = 1, ++n;
  return n == cod_.size();
}

FinMap FinMap::inverse() const {
  if (!bijective()) throw TypeError("inverse of a non-bijection");
  std::vector<std::uint32_t> u(t_.size());
  for (std::size_t i = 0; i < t_.size(); ++i) u[t_[i]] = static_cast<std::uint32_t>(i);
  return FinMap(cod_, dom_, std::move(u));
}

FinSet FinMap::image() const {
  std::vector<Atom> xs;
  std::vector<char> seen(cod_.size(), 0);
  for (auto j : t_)
    if (!seen[j]) seen[j] = 1, xs.push_back(cod_.at(j));
  return FinSet(std::move(xs));
}

std::vector<std::pair<Atom, Atom>> FinMap::pairs() const {
  std::vector<std::pair<Atom, Atom>> out;
  out.reserve(t_.size());
  for (std::size_t i = 0; i < t_.size(); ++i) out.emplace_back(dom_.at(i), cod_.at(t_[i]));
  return out;
}

std::string FinMap::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i) s += ", ";
    s += dom_.at(i).str() + "->" + cod_.at(t_[i]).str();
  }
  return s + "}";
}

bool operator==(const FinMap& a, const FinMap& b) {
  return a.t_ == b.t_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
}

FinMap compose(const FinMap& g, const FinMap& f) {
  if (!(f.cod() == g.dom()))
    throw TypeError("cannot compose: codomain " + f.cod().str() + " vs domain " + g.dom().str());
  std::vector<std::uint32_t> t(f.dom().size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.at(f.at(i));
  return FinMap(f.dom(), g.cod(), std::move(t));
}

std::optional<std::string> difference(const FinMap& a, const FinMap& b) {
  if (!(a.dom() == b.dom())) return "domains differ: " + a.dom().str() + " vs " + b.dom().str();
  if (!(a.cod() == b.cod())) return "codomains differ: " + a.cod().str() + " vs " + b.cod().str();
  for (std::size_t i = 0; i < a.dom().size(); ++i)
    if (a.at(i) != b.at(i))
      return "at " + a.dom().at(i).str() + ": " + a.cod().at(a.at(i)).str() + " vs " + b.cod().at(b.at(i)).str();
  return std::nullopt;
}

// ---- limits ----

Pullback pullback(const FinMap& f, const FinMap& g) {
  if (!(f.cod() == g.cod())) throw TypeError("pullback of maps with different codomains");
  std::vector<std::vector<std::uint32_t>> fiber(g.cod().size());
  for (std::size_t j = 0; j < g.dom().size(); ++j) fiber[g.at(j)].push_back(static_cast<std::uint32_t>(j));
  std::vector<Atom> xs;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    for (auto j : fiber[f.at(i)]) xs.push_back(Atom::pair(f.dom().at(i), g.dom().at(j)));
  FinSet P;
  if (f.dom().graded() || g.dom().graded()) {
    std::vector<std::pair<Atom, int>> gx;
    for (auto& x : xs) {
      int a = f.dom().grade(f.dom().index(x[0]));
      int b = g.dom().grade(g.dom().index(x[1]));
      gx.emplace_back(x, std::max(a, b));
    }
    P = FinSet::graded(std::move(gx));
  } else {
    P = FinSet(std::move(xs));
  }
  auto p1 = FinMap::build(P, f.dom(), [](const Atom& p) { return p[0]; });
  auto p2 = FinMap::build(P, g.dom(), [](const Atom& p) { return p[1]; });
  return {P, p1, p2};
}

FinMap pair_into(const Pullback& pb, const FinMap& a, const FinMap& b) {
  if (!(a.dom() == b.dom())) throw TypeError("pairing maps with different domains");
  return FinMap::build(a.dom(), pb.P, [&](const Atom& w) { return Atom::pair(a(w), b(w)); });
}

bool commutes(const FinMap& top, const FinMap& left, const FinMap& right, const FinMap& bottom) {
  return compose(right, top) == compose(bottom, left);
}

SquareCheck check_square(const FinMap& top, const FinMap& left, const FinMap& right, const FinMap& bottom) {
  if (!(top.dom() == left.dom()) || !(top.cod() == right.dom()) || !(left.cod() == bottom.dom()) ||
      !(right.cod() == bottom.cod()))
    throw TypeError("square boundary types do not match");
  auto rt = compose(right, top);
  auto bl = compose(bottom, left);
  if (auto d = difference(rt, bl)) return {SquareStatus::NotCommuting, *d};
  // comparison A → {(c,b) : bottom c = right b}
  std::unordered_map<Atom, Atom, AtomHash> seen;
  std::size_t count = 0;
  for (const auto& a : top.dom()) {
    Atom key = Atom::pair(left(a), top(a));
    auto [it, fresh] = seen.emplace(key, a);
    if (!fresh) return {SquareStatus::NotPullback, "comparison not injective: " + it->second.str() + " and " + a.str() + " both go to " + key.str()};
    ++count;
  }
  for (const auto& c : left.cod())
    for (const auto& b : right.dom())
      if (bottom(c) == right(b) && !seen.count(Atom::pair(c, b)))
        return {SquareStatus::NotPullback, "comparison not surjective: " + Atom::pair(c, b).str() + " has no preimage"};
  return {SquareStatus::Pullback, {}};
}

bool is_pullback_square(const FinMap& top, const FinMap& left, const FinMap& right, const FinMap& bottom) {
  return check_square(top, left, right, bottom).ok();
}

Equalizer equalizer(const FinMap& f, const FinMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw TypeError("equalizer of a non-parallel pair");
  std::vector<std::pair<Atom, int>> xs;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    if (f.at(i) == g.at(i)) xs.emplace_back(f.dom().at(i), f.dom().grade(i));
  FinSet E;
  if (f.dom().graded()) {
    E = FinSet::graded(std::move(xs));
  } else {
    std::vector<Atom> ys;
    for (auto& [x, _] : xs) ys.push_back(x);
    E = FinSet(std::move(ys));
  }
  return {E, FinMap::build(E, f.dom(), [](const Atom& x) { return x; })};
}

bool is_equalizer(const FinMap& e, const FinMap& f, const FinMap& g) {
  if (!(e.cod() == f.dom())) return false;
  if (!e.injective()) return false;
  if (!(compose(f, e) == compose(g, e))) return false;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    if (f.at(i) == g.at(i)) ++agree;
  return agree == e.dom().size();
}

KernelPair kernel_pair(const FinMap& f) {
  auto pb = pullback(f, f);
  auto s0 = FinMap::build(f.dom(), pb.P, [](const Atom& x) { return Atom::pair(x, x); });
  return {pb.P, pb.p1, pb.p2, s0};
}

bool is_kernel_pair(const FinMap& p0, const FinMap& p1, const FinMap& f) {
  return is_pullback_square(p1, p0, f, f);
}

void for_each_map(const FinSet& dom, const FinSet& cod, const std::function<bool(const FinMap&)>& fn) {
  std::size_t n = dom.size(), m = cod.size();
  if (m == 0) {
    if (n == 0) fn(FinMap(dom, cod, {}));
    return;
  }
  std::vector<std::uint32_t> t(n, 0);
  while (true) {
    if (!fn(FinMap(dom, cod, t))) return;
    std::size_t k = n;
    while (k > 0 && t[k - 1] == m - 1) t[--k] = 0;
    if (k == 0) return;
    ++t[k - 1];
  }
}

std::vector<FinMap> all_maps(const FinSet& dom, const FinSet& cod) {
  std::vector<FinMap> out;
  for_each_map(dom, cod, [&](const FinMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// ---- graded ----

FinSet GradedSet::piece(int n) const {
  std::vector<std::vector<Atom>> cur{{}};
  for (int k = 0; k < n; ++k) {
    std::vector<std::vector<Atom>> next;
    for (const auto& w : cur)
      for (const auto& x : base_) {
        auto v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    cur = std::move(next);
  }
  std::vector<std::pair<Atom, int>> xs;
  for (auto& w : cur) xs.emplace_back(Atom::word(std::move(w)), n);
  return FinSet::graded(std::move(xs));
}

FinSet GradedSet::upto(int bound) const {
  std::vector<std::pair<Atom, int>> xs;
  for (int n = 0; n <= bound; ++n) {
    auto p = piece(n);
    for (const auto& w : p) xs.emplace_back(w, n);
  }
  return FinSet::graded(std::move(xs));
}

bool GradedSet::contains(const Atom& w) const {
  if (!w.is_word()) return false;
  for (const auto& x : w.items())
    if (!base_.contains(x)) return false;
  return true;
}

const Atom& GradedMap::operator()(const Atom& x) const {
  auto i = dom.index(x);
  if (i < 0) throw TypeError(x.str() + " is not in the domain " + dom.str());
  return table[i];
}

Atom word_map(const FinMap& f, const Atom& w) {
  std::vector<Atom> out;
  out.reserve(w.size());
  for (const auto& x : w.items()) out.push_back(f(x));
  return Atom::word(std::move(out));
}

GradedPullback graded_pullback_fiber(const GradedMap& delta, const FinMap& f) {
  if (!(delta.cod.base() == f.cod()))
    throw TypeError("graded pullback: delta lands in words over " + delta.cod.base().str() + ", M(f) in words over " +
                    f.cod().str());
  if (delta.table.size() != delta.dom.size()) throw TypeError("graded map table is not total");
  std::vector<std::vector<Atom>> fib(f.cod().size());
  for (std::size_t i = 0; i < f.dom().size(); ++i) fib[f.at(i)].push_back(f.dom().at(i));
  std::vector<Atom> xs;
  std::vector<Atom> p2vals;
  for (std::size_t i = 0; i < delta.dom.size(); ++i) {
    const Atom& target = delta.table[i];
    if (!delta.cod.contains(target)) throw TypeError("graded map value " + target.str() + " is not a word");
    std::vector<std::vector<Atom>> words{{}};
    for (const auto& letter : target.items()) {
      const auto& choices = fib[f.cod().index(letter)];
      std::vector<std::vector<Atom>> next;
      for (const auto& w : words)
        for (const auto& c : choices) {
          auto v = w;
          v.push_back(c);
          next.push_back(std::move(v));
        }
      words = std::move(next);
    }
    for (auto& w : words) xs.push_back(Atom::pair(delta.dom.at(i), Atom::word(std::move(w))));
  }
  FinSet P(std::move(xs));
  auto p1 = FinMap::build(P, delta.dom, [](const Atom& p) { return p[0]; });
  GradedMap p2{P, GradedSet(f.dom()), {}};
  for (const auto& p : P) p2.table.push_back(p[1]);
  return {P, p1, p2};
}

}  // namespace wb
