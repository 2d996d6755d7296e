#include "wb/monad.hpp"

#include <algorithm>
#include <unordered_map>

namespace wb {

namespace {

std::vector<std::uintptr_t> key_of(const Obj& x) {
  std::vector<std::uintptr_t> k;
  for (const auto& s : x.lv) k.push_back(reinterpret_cast<std::uintptr_t>(s.id()));
  for (const auto& m : x.st) {
    k.push_back(~std::uintptr_t{0});
    for (auto v : m.table()) k.push_back(v);
  }
  return k;
}

FinSet first_letters(int n) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f"};
  std::vector<Atom> xs;
  for (int i = 0; i < n; ++i) xs.emplace_back(names[i]);
  return FinSet(xs);
}

}  // namespace

Obj Monad::obj(const Obj& x) const {
  auto k = key_of(x);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second.second;
  }
  Obj t = obj_impl(x);
  std::lock_guard<std::mutex> lock(mu_);
  constexpr std::size_t budget = 4'000'000;
  cached_elems_ += t.size() + x.size();
  if (cached_elems_ > budget) {
    cache_.clear();
    cached_elems_ = t.size() + x.size();
  }
  auto [it, fresh] = cache_.emplace(k, std::make_pair(x, t));
  return it->second.second;
}

// ---- SetMonad ----

Mor SetMonad::fmap(const Mor& f) const {
  auto TA = obj(f.dom), TB = obj(f.cod);
  const auto& A = TA.set();
  const auto& B = TB.set();
  std::vector<std::uint32_t> t(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    Atom y = apply(f.map(), A.at(i));
    auto j = B.index(y);
    if (j < 0) {
      if (bound() >= 0) throw GradeError(name() + ": " + y.str() + " exceeds the grade bound");
      throw TypeError(name() + ": " + y.str() + " is not in " + B.str());
    }
    t[i] = static_cast<std::uint32_t>(j);
  }
  return Mor{TA, TB, {FinMap(A, B, std::move(t))}};
}

Mor SetMonad::unit(const Obj& x) const {
  auto TX = obj(x);
  return Mor{x, TX, {FinMap::build(x.set(), TX.set(), [&](const Atom& a) { return eta(x.set(), a); })}};
}

Mor SetMonad::mult(const Obj& x) const {
  auto TX = obj(x);
  auto TTX = obj(TX);
  return Mor{TTX, TX, {FinMap::build(TTX.set(), TX.set(), [&](const Atom& w) { return join(x.set(), w); })}};
}

// ---- identity ----

namespace {

class IdentityMonad : public Monad {
 public:
  explicit IdentityMonad(Ambient a) : Monad(std::move(a)) {}
  std::string name() const override { return "identity"; }
  Mor fmap(const Mor& f) const override { return f; }
  Mor unit(const Obj& x) const override { return identity(x); }
  Mor mult(const Obj& x) const override { return identity(x); }

 protected:
  Obj obj_impl(const Obj& x) const override { return x; }
};

class MaybeMonad : public SetMonad {
 public:
  explicit MaybeMonad(bool broken) : broken_(broken) {}
  std::string name() const override { return broken_ ? "maybe(broken)" : "maybe"; }

 protected:
  FinSet carrier(const FinSet& x) const override {
    std::vector<Atom> xs{Atom::word({})};
    for (const auto& a : x) xs.push_back(Atom::word({a}));
    return FinSet(xs);
  }
  Atom apply(const FinMap& f, const Atom& t) const override { return word_map(f, t); }
  Atom eta(const FinSet&, const Atom& a) const override { return Atom::word({a}); }
  Atom join(const FinSet& x, const Atom& tt) const override {
    if (tt.size() == 0) return broken_ && x.size() > 0 ? Atom::word({x.at(0)}) : Atom::word({});
    return tt[0];
  }

 private:
  bool broken_;
};

class WriterMonad : public SetMonad {
 public:
  WriterMonad(MonoidTable M, std::optional<Atom> u) : M_(std::move(M)), u_(std::move(u)) {}
  std::string name() const override {
    return "writer(monoid=" + M_.name + (u_ ? ",unit=" + u_->str() : "") + ")";
  }

 protected:
  FinSet carrier(const FinSet& x) const override {
    std::vector<Atom> xs;
    for (const auto& m : M_.elems)
      for (const auto& a : x) xs.push_back(Atom::pair(m, a));
    return FinSet(xs);
  }
  Atom apply(const FinMap& f, const Atom& t) const override { return Atom::pair(t[0], f(t[1])); }
  Atom eta(const FinSet&, const Atom& a) const override { return Atom::pair(u_.value_or(M_.unit), a); }
  Atom join(const FinSet&, const Atom& tt) const override {
    return Atom::pair(M_.op(tt[0], tt[1][0]), tt[1][1]);
  }

 private:
  MonoidTable M_;
  std::optional<Atom> u_;
};

// Words are generated depth-first with letters in set order, which is exactly the sorted order of
// the resulting atoms, so trie node n is element n of the carrier.
struct WordTrie {
  std::size_t letters = 0;
  std::vector<std::uint32_t> parent, last;
  std::unordered_map<std::uint64_t, std::uint32_t> child;

  static constexpr std::uint32_t none = ~0u;
  std::uint32_t step(std::uint32_t node, std::uint32_t letter) const {
    auto it = child.find(static_cast<std::uint64_t>(node) * letters + letter);
    return it == child.end() ? none : it->second;
  }
};

class ListMonad : public SetMonad {
 public:
  explicit ListMonad(int bound) : bound_(bound) {}
  std::string name() const override { return "list(bound=" + std::to_string(bound_) + ")"; }
  int bound() const override { return bound_; }

  Mor fmap(const Mor& f) const override {
    auto TA = obj(f.dom), TB = obj(f.cod);
    auto a = trie(TA, f.dom.set());
    auto b = trie(TB, f.cod.set());
    std::vector<std::uint32_t> img(a->parent.size(), 0);
    for (std::size_t n = 1; n < img.size(); ++n) {
      img[n] = b->step(img[a->parent[n]], f.map().at(a->last[n]));
      if (img[n] == WordTrie::none)
        throw GradeError(name() + ": image of " + TA.set().at(n).str() + " exceeds the grade bound");
    }
    return Mor{TA, TB, {FinMap(TA.set(), TB.set(), std::move(img))}};
  }

  Mor unit(const Obj& x) const override {
    auto TX = obj(x);
    auto t = trie(TX, x.set());
    std::vector<std::uint32_t> img(x.size());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = t->step(0, static_cast<std::uint32_t>(i));
      if (img[i] == WordTrie::none) throw GradeError(name() + ": singleton " + x.set().at(i).str() + " exceeds the bound");
    }
    return Mor{x, TX, {FinMap(x.set(), TX.set(), std::move(img))}};
  }

  Mor mult(const Obj& x) const override {
    auto TX = obj(x);
    auto TTX = obj(TX);
    auto t1 = trie(TX, x.set());
    auto t2 = trie(TTX, TX.set());
    std::vector<std::uint32_t> img(t2->parent.size(), 0), seq;
    for (std::size_t n = 1; n < img.size(); ++n) {
      seq.clear();
      for (auto w = t2->last[n]; w != 0; w = t1->parent[w]) seq.push_back(t1->last[w]);
      auto cur = img[t2->parent[n]];
      for (auto it = seq.rbegin(); it != seq.rend() && cur != WordTrie::none; ++it) cur = t1->step(cur, *it);
      if (cur == WordTrie::none) throw GradeError(name() + ": concatenation exceeds the grade bound");
      img[n] = cur;
    }
    return Mor{TTX, TX, {FinMap(TTX.set(), TX.set(), std::move(img))}};
  }

 protected:
  Obj obj_impl(const Obj& x) const override {
    std::pair<std::vector<Atom>, std::vector<int>> key;
    key.first = x.set().elems();
    for (std::size_t i = 0; i < x.size(); ++i) key.second.push_back(x.set().grade(i));
    {
      std::lock_guard<std::mutex> lock(tmu_);
      auto it = by_content_.find(key);
      if (it != by_content_.end()) return set_obj(it->second);
    }
    std::vector<std::pair<Atom, int>> out;
    auto t = build(x.set(), &out);
    FinSet T = FinSet::graded(std::move(out));
    remember(T, std::move(t));
    std::lock_guard<std::mutex> lock(tmu_);
    if (tries_.count(T.id())) by_content_.emplace(std::move(key), T);
    return set_obj(T);
  }
  FinSet carrier(const FinSet& x) const override { return obj(set_obj(x)).set(); }
  Atom apply(const FinMap& f, const Atom& t) const override { return word_map(f, t); }
  Atom eta(const FinSet&, const Atom& a) const override { return Atom::word({a}); }
  Atom join(const FinSet&, const Atom& tt) const override {
    std::vector<Atom> xs;
    for (const auto& w : tt.items())
      for (const auto& a : w.items()) xs.push_back(a);
    return Atom::word(std::move(xs));
  }

 private:
  std::shared_ptr<const WordTrie> build(const FinSet& x, std::vector<std::pair<Atom, int>>* out) const {
    auto t = std::make_shared<WordTrie>();
    t->letters = x.size();
    std::vector<Atom> cur;
    std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t node, int used) {
      if (out) out->emplace_back(Atom::word(cur), used);
      for (std::uint32_t i = 0; i < x.size(); ++i) {
        int w = std::max(1, x.grade(i));
        if (used + w > bound_) continue;
        auto id = static_cast<std::uint32_t>(t->parent.size());
        t->parent.push_back(node);
        t->last.push_back(i);
        t->child.emplace(static_cast<std::uint64_t>(node) * t->letters + i, id);
        if (out) cur.push_back(x.at(i));
        rec(id, used + w);
        if (out) cur.pop_back();
      }
    };
    t->parent.push_back(0);
    t->last.push_back(0);
    rec(0, 0);
    return t;
  }

  void remember(const FinSet& carrier, std::shared_ptr<const WordTrie> t) const {
    std::lock_guard<std::mutex> lock(tmu_);
    trie_nodes_ += t->parent.size();
    if (trie_nodes_ > 4'000'000) {
      tries_.clear();
      by_content_.clear();
      trie_nodes_ = t->parent.size();
    }
    tries_[carrier.id()] = {carrier, std::move(t)};
  }

  std::shared_ptr<const WordTrie> trie(const Obj& TX, const FinSet& x) const {
    {
      std::lock_guard<std::mutex> lock(tmu_);
      auto it = tries_.find(TX.set().id());
      if (it != tries_.end()) return it->second.second;
    }
    auto t = build(x, nullptr);
    if (t->parent.size() != TX.size()) throw TypeError(name() + ": carrier does not match its letters");
    remember(TX.set(), t);
    return t;
  }

  int bound_;
  mutable std::mutex tmu_;
  mutable std::map<const void*, std::pair<FinSet, std::shared_ptr<const WordTrie>>> tries_;
  mutable std::size_t trie_nodes_ = 0;
  mutable std::map<std::pair<std::vector<Atom>, std::vector<int>>, FinSet> by_content_;
};

class TXMonad : public Monad {
 public:
  explicit TXMonad(InternalCategory C) : Monad(Ambient::slice(C.X0)), C_(std::move(C)) {}
  std::string name() const override { return "TX(category=" + C_.name + ")"; }

  Mor fmap(const Mor& k) const override {
    auto TA = obj(k.dom), TB = obj(k.cod);
    return Mor{TA, TB, {FinMap::build(TA.set(), TB.set(), [&](const Atom& p) {
                 return Atom::pair(k.map()(p[0]), p[1]);
               })}};
  }
  Mor unit(const Obj& h) const override {
    auto Th = obj(h);
    return Mor{h, Th, {FinMap::build(h.set(), Th.set(), [&](const Atom& z) {
                 return Atom::pair(z, C_.s0(h.st[0](z)));
               })}};
  }
  Mor mult(const Obj& h) const override {
    auto Th = obj(h);
    auto TTh = obj(Th);
    return Mor{TTh, Th, {FinMap::build(TTh.set(), Th.set(), [&](const Atom& q) {
                 return Atom::pair(q[0][0], C_.compose(q[0][1], q[1]));
               })}};
  }

 protected:
  Obj obj_impl(const Obj& h) const override {
    std::vector<Atom> xs;
    for (const auto& z : h.set())
      for (const auto& f : C_.X1)
        if (C_.d1(f) == h.st[0](z)) xs.push_back(Atom::pair(z, f));
    FinSet T(xs);
    return slice_obj(FinMap::build(T, C_.X0, [&](const Atom& p) { return C_.d0(p[1]); }));
  }

 private:
  InternalCategory C_;
};

class GMonad : public Monad {
 public:
  GMonad() : Monad(Ambient::pt()) {}
  std::string name() const override { return "G"; }

  Mor fmap(const Mor& f) const override {
    auto GA = obj(f.dom), GB = obj(f.cod);
    const auto& x = f.lv[0];
    auto top = FinMap::build(GA.lv[0], GB.lv[0], [&](const Atom& p) { return Atom::pair(x(p[0]), x(p[1])); });
    return Mor{GA, GB, {top, x}};
  }
  Mor unit(const Obj& a) const override {
    auto Ga = obj(a);
    const auto& g = a.st[0];
    const auto& t = a.st[1];
    auto t1 = FinMap::build(a.lv[0], Ga.lv[0], [&](const Atom& x) { return Atom::pair(t(g(x)), x); });
    return Mor{a, Ga, {t1, t}};
  }
  Mor mult(const Obj& a) const override {
    auto Ga = obj(a);
    auto GGa = obj(Ga);
    auto top = FinMap::build(GGa.lv[0], Ga.lv[0], [](const Atom& q) { return Atom::pair(q[0][1], q[1][1]); });
    auto bottom = FinMap::build(GGa.lv[1], Ga.lv[1], [](const Atom& p) { return p[1]; });
    return Mor{GGa, Ga, {top, bottom}};
  }

 protected:
  Obj obj_impl(const Obj& a) const override {
    auto R = kernel_pair(a.st[0]);
    return pt_obj(R.p0, R.s0);
  }
};

}  // namespace

MonadPtr identity_monad(Ambient amb) { return std::make_shared<IdentityMonad>(std::move(amb)); }
MonadPtr maybe_monad(bool broken) { return std::make_shared<MaybeMonad>(broken); }

MonoidTable monoid_z2() {
  return {"Z2", FinSet({"0", "1"}), [](const Atom& a, const Atom& b) -> Atom { return a == b ? "0" : "1"; }, "0"};
}

MonoidTable monoid_bool() {
  return {"B", FinSet({"0", "1"}),
          [](const Atom& a, const Atom& b) -> Atom { return a == Atom("1") && b == Atom("1") ? "1" : "0"; }, "1"};
}

MonadPtr writer_monad(MonoidTable M, std::optional<Atom> unit_override) {
  return std::make_shared<WriterMonad>(std::move(M), std::move(unit_override));
}

MonadPtr list_monad(int bound) { return std::make_shared<ListMonad>(bound); }

int word_weight(const FinSet& letters, const Atom& w) {
  int s = 0;
  for (const auto& a : w.items()) s += std::max(1, letters.grade(letters.index(a)));
  return s;
}

MonadPtr tx_monad(const InternalCategory& C) { return std::make_shared<TXMonad>(C); }
MonadPtr g_monad() { return std::make_shared<GMonad>(); }

namespace {

/// The partition generated by the pairs (a z, b z) coincides with the fibers of q, and q is onto.
bool is_coequalizer(const FinMap& a, const FinMap& b, const FinMap& q) {
  std::vector<std::uint32_t> up(q.dom().size());
  for (std::uint32_t i = 0; i < up.size(); ++i) up[i] = i;
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t i) {
    return up[i] == i ? i : up[i] = find(up[i]);
  };
  for (std::size_t z = 0; z < a.dom().size(); ++z) up[find(a.at(z))] = find(b.at(z));
  for (std::uint32_t i = 0; i < up.size(); ++i)
    for (std::uint32_t j = i + 1; j < up.size(); ++j)
      if ((find(i) == find(j)) != (q.at(i) == q.at(j))) return false;
  return q.surjective();
}

}  // namespace

Certificate check_g_richness(const Monad& G, const Probes& probes) {
  Certificate c;
  c.subject = "richness of " + G.name() + " on " + probes.description;
  for (const auto& f : probes.morphisms) {
    bool in = pt_is_cartesian(f), image = pt_is_cartesian(G.fmap(f));
    c.add("G preserves and reflects P[" + label(f) + "]", in == image, in ? "image not in P" : "image in P");
  }
  for (const auto& x : probes.objects) {
    std::string at = "[" + label(x) + "]";
    auto Gx = G.obj(x);
    auto pi = G.mult(x), piG = G.mult(Gx), Gpi = G.fmap(pi);
    auto s = G.fmap(G.unit(Gx));
    c.add("sigma in P" + at, pt_is_cartesian(G.unit(x)));
    c.add("pi in P" + at, pt_is_cartesian(pi));
    c.add("kernel pair of pi" + at, is_kernel_pair(piG, Gpi, pi));
    auto one = identity(G.obj(Gx));
    auto w0 = difference(compose(piG, s), one), w1 = difference(compose(Gpi, s), one);
    c.add("G(sigma_G) is a common section" + at, !w0 && !w1, w0 ? *w0 : w1.value_or(""));
    bool quotient = true;
    for (std::size_t l = 0; l < pi.lv.size(); ++l) quotient = quotient && is_coequalizer(piG.lv[l], Gpi.lv[l], pi.lv[l]);
    c.add("pi is the levelwise quotient (experimental)" + at, quotient);
  }
  return c;
}

// ---- probes ----

std::string label(const Obj& x) {
  if (x.size() <= 10) return x.str();
  std::string s = "|";
  for (std::size_t i = 0; i < x.lv.size(); ++i) s += (i ? "," : "") + std::to_string(x.lv[i].size());
  return s + "|";
}

std::string label(const Mor& f) {
  if (f.dom.size() <= 8) return f.str();
  return label(f.dom) + "->" + label(f.cod);
}

Probes set_probes(int n) {
  Probes p;
  p.description = "sets of size <= " + std::to_string(n) + " with all maps";
  for (int k = 0; k <= n; ++k) p.objects.push_back(set_obj(first_letters(k)));
  std::vector<Mor> small;
  for (const auto& A : p.objects)
    for (const auto& B : p.objects)
      for (const auto& f : all_maps(A.set(), B.set())) {
        Mor m{A, B, {f}};
        p.morphisms.push_back(m);
        if (A.size() <= 2 && B.size() <= 2) small.push_back(m);
      }
  for (const auto& f : small)
    for (const auto& g : small)
      if (f.cod == g.cod) p.cospans.emplace_back(f, g);
  return p;
}

namespace {

void fill_morphisms_and_cospans(Probes& p, const Ambient& amb, std::size_t small_size) {
  std::vector<Mor> small;
  for (const auto& A : p.objects)
    for (const auto& B : p.objects)
      for (auto& m : hom(amb, A, B)) {
        if (A.size() <= small_size && B.size() <= small_size) small.push_back(m);
        p.morphisms.push_back(std::move(m));
      }
  for (const auto& f : small)
    for (const auto& g : small)
      if (f.cod == g.cod) p.cospans.emplace_back(f, g);
}

}  // namespace

Probes slice_probes(const FinSet& base, int n) {
  Probes p;
  p.description = "objects over " + base.str() + " with at most " + std::to_string(n) + " elements";
  std::size_t b = base.size();
  for (int k = 0; k <= n; ++k) {
    std::vector<Atom> zs;
    for (int i = 1; i <= k; ++i) zs.emplace_back("z" + std::to_string(i));
    FinSet Z(zs);
    std::vector<std::uint32_t> t(k, 0);
    std::function<void(int, std::uint32_t)> rec = [&](int i, std::uint32_t lo) {
      if (i == k) {
        p.objects.push_back(slice_obj(FinMap(Z, base, t)));
        return;
      }
      for (std::uint32_t v = lo; v < b; ++v) {
        t[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 0);
  }
  fill_morphisms_and_cospans(p, Ambient::slice(base), 2);
  return p;
}

Probes pt_probes(int n) {
  Probes p;
  p.description = "split epimorphisms of total size <= " + std::to_string(n);
  for (int m = 0; 2 * m <= n; ++m) {
    std::vector<Atom> ys;
    for (int i = 1; i <= m; ++i) ys.emplace_back("y" + std::to_string(i));
    FinSet Y(ys);
    int max_extra = m == 0 ? 0 : n - 2 * m;
    for (int e = 0; e <= max_extra; ++e) {
      std::vector<Atom> xs;
      for (const auto& y : Y) xs.push_back(Atom::pair("t", y));
      for (int i = 1; i <= e; ++i) xs.emplace_back("e" + std::to_string(i));
      FinSet X(xs);
      auto t = FinMap::build(Y, X, [](const Atom& y) { return Atom::pair("t", y); });
      std::vector<int> ext(e, 0);
      std::function<void(int, int)> rec = [&](int i, int lo) {
        if (i == e) {
          auto g = FinMap::build(X, Y, [&](const Atom& x) -> Atom {
            if (x.is_tup()) return x[1];
            return Y.at(ext[std::stoi(x.sym().substr(1)) - 1]);
          });
          p.objects.push_back(pt_obj(g, t));
          return;
        }
        for (int v = lo; v < m; ++v) {
          ext[i] = v;
          rec(i + 1, v);
        }
      };
      rec(0, 0);
    }
  }
  fill_morphisms_and_cospans(p, Ambient::pt(), 4);
  return p;
}

Probes default_probes(const Monad& M, int n) {
  switch (M.ambient().kind) {
    case AmbientKind::Set: return set_probes(n);
    case AmbientKind::Slice: return slice_probes(M.ambient().base, n);
    case AmbientKind::Pt: return pt_probes(n + 1);
  }
  return {};
}

// ---- validation ----

namespace {

void eq(Certificate& c, const std::string& name, const Mor& a, const Mor& b) {
  auto w = difference(a, b);
  c.add(name, !w, w.value_or(""));
}

}  // namespace

Certificate validate_monad(const Monad& M, const Probes& probes) {
  Certificate c;
  c.subject = "monad " + M.name() + " over " + M.ambient().name() + " on " + probes.description;
  const auto& amb = M.ambient();
  for (const auto& X : probes.objects) {
    std::string at = "[" + label(X) + "]";
    Obj TX, TTX;
    Mor lam, mu, lamT, mu_T, Tlam, Tmu;
    try {
      TX = M.obj(X);
      TTX = M.obj(TX);
      lam = M.unit(X);
      mu = M.mult(X);
      lamT = M.unit(TX);
      Tlam = M.fmap(lam);
      mu_T = M.mult(TX);
      Tmu = M.fmap(mu);
    } catch (const Error& e) {
      c.add("components defined" + at, false, e.what());
      continue;
    }
    auto bad = check_obj(amb, TX);
    c.add("T(X) well-formed" + at, !bad, bad.value_or(""));
    bad = check_mor(amb, lam);
    c.add("lambda typed" + at, !bad, bad.value_or(""));
    bad = check_mor(amb, mu);
    c.add("mu typed" + at, !bad, bad.value_or(""));
    eq(c, "mu.lambda_T=1" + at, compose(mu, lamT), identity(TX));
    eq(c, "mu.T(lambda)=1" + at, compose(mu, Tlam), identity(TX));
    eq(c, "mu.mu_T=mu.T(mu)" + at, compose(mu, mu_T), compose(mu, Tmu));
    eq(c, "T(1)=1" + at, M.fmap(identity(X)), identity(TX));
  }
  for (const auto& f : probes.morphisms) {
    std::string at = "[" + label(f) + "]";
    try {
      auto Tf = M.fmap(f);
      auto bad = check_mor(amb, Tf);
      c.add("T(f) typed" + at, !bad, bad.value_or(""));
      eq(c, "lambda natural" + at, compose(M.unit(f.cod), f), compose(Tf, M.unit(f.dom)));
      eq(c, "mu natural" + at, compose(M.mult(f.cod), M.fmap(Tf)), compose(Tf, M.mult(f.dom)));
    } catch (const Error& e) {
      c.add("naturality defined" + at, false, e.what());
    }
  }
  std::size_t pairs = 0;
  for (const auto& f : probes.morphisms)
    for (const auto& g : probes.morphisms) {
      if (!(f.cod == g.dom)) continue;
      if (++pairs > 400) break;
      eq(c, "T(g.f)=T(g).T(f)[" + label(g) + "." + label(f) + "]", M.fmap(compose(g, f)),
         compose(M.fmap(g), M.fmap(f)));
    }
  return c;
}

CartesianCertificate certify_cartesian(const Monad& M, const Probes& probes, const SigmaPredicate& sigma) {
  CartesianCertificate cc;
  auto& c = cc.cert;
  c.subject = "cartesianness of " + M.name() + " on " + probes.description;
  const auto& amb = M.ambient();
  auto square = [&](const std::string& name, const Mor& top, const Mor& left, const Mor& right, const Mor& bottom) {
    auto s = check_square(top, left, right, bottom);
    c.add(name, s.ok(), s.witness);
    return s.ok();
  };
  for (const auto& [f, g] : probes.cospans) {
    if (sigma && !sigma(f) && !sigma(g)) continue;
    auto pb = pullback(amb, f, g);
    if (!square("probe is a pullback[" + label(f) + "," + label(g) + "]", pb.p2, pb.p1, g, f))
      throw PreconditionError("probe square is not a pullback");
    ++cc.cospans;
    cc.preserves_pullbacks &= square("T preserves pullbacks[" + label(f) + "," + label(g) + "]", M.fmap(pb.p2),
                                     M.fmap(pb.p1), M.fmap(g), M.fmap(f));
  }
  for (const auto& f : probes.morphisms) {
    if (sigma && !sigma(f)) continue;
    ++cc.morphisms;
    std::string at = "[" + label(f) + "]";
    auto Tf = M.fmap(f);
    cc.lambda_cartesian &= square("lambda cartesian" + at, f, M.unit(f.dom), M.unit(f.cod), Tf);
    cc.mu_cartesian &= square("mu cartesian" + at, M.fmap(Tf), M.mult(f.dom), M.mult(f.cod), Tf);
  }
  for (const auto& X : probes.objects) {
    ++cc.objects;
    std::string at = "[" + label(X) + "]";
    auto lam = M.unit(X);
    auto TX = M.obj(X);
    bool half = is_equalizer(lam, M.unit(TX), M.fmap(lam));
    c.add("half-cartesian: lambda equalizes lambda_T, T(lambda)" + at, half);
    cc.half_cartesian &= half;
    auto mu = M.mult(X);
    auto s = check_square(M.fmap(mu), M.mult(TX), mu, mu);
    c.add("hypercartesian: (mu_T, T(mu)) kernel pair of mu" + at, s.ok(), s.witness);
    cc.hypercartesian &= s.ok();
    if (sigma) {
      c.add("lambda in Sigma" + at, sigma(lam));
      c.add("mu in Sigma" + at, sigma(mu));
    }
  }
  cc.half_cartesian = cc.half_cartesian && cc.cartesian();
  cc.hypercartesian = cc.hypercartesian && cc.cartesian();
  return cc;
}

// ---- algebras ----

Algebra free_algebra(const MonadPtr& T, const Obj& X) {
  auto TX = T->obj(X);
  return {T, TX, T->mult(X)};
}

Certificate validate_algebra(const Algebra& A) {
  Certificate c;
  const auto& M = *A.monad;
  c.subject = "algebra of " + M.name() + " on " + label(A.carrier);
  auto TX = M.obj(A.carrier);
  if (!(A.xi.dom == TX) || !(A.xi.cod == A.carrier)) {
    c.add("typing", false, "structure map is not T(X) -> X");
    return c;
  }
  auto bad = check_mor(M.ambient(), A.xi);
  c.add("typing", !bad, bad.value_or(""));
  if (bad) return c;
  eq(c, "xi.lambda=1", compose(A.xi, M.unit(A.carrier)), identity(A.carrier));
  eq(c, "xi.mu=xi.T(xi)", compose(A.xi, M.mult(A.carrier)), compose(A.xi, M.fmap(A.xi)));
  return c;
}

bool is_algebra_morphism(const Algebra& A, const Algebra& B, const Mor& f) {
  return compose(f, A.xi) == compose(B.xi, A.monad->fmap(f));
}

}  // namespace wb
