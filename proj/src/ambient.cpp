#include "wb/ambient.hpp"

#include <functional>

namespace wb {

std::string Ambient::name() const {
  switch (kind) {
    case AmbientKind::Set: return "FinSet";
    case AmbientKind::Slice: return "FinSet/" + base.str();
    case AmbientKind::Pt: return "Pt(FinSet)";
  }
  return {};
}

std::size_t Obj::size() const {
  std::size_t n = 0;
  for (const auto& s : lv) n += s.size();
  return n;
}

std::string Obj::str() const {
  if (lv.size() == 1 && st.empty()) return lv[0].str();
  if (lv.size() == 1) return st[0].str();
  return "(g=" + st[0].str() + ", t=" + st[1].str() + ")";
}

bool operator==(const Obj& a, const Obj& b) { return a.lv == b.lv && a.st == b.st; }

std::string Mor::str() const {
  if (lv.size() == 1) return lv[0].str();
  return "(top=" + lv[0].str() + ", bottom=" + lv[1].str() + ")";
}

bool operator==(const Mor& a, const Mor& b) { return a.lv == b.lv && a.dom.st == b.dom.st && a.cod.st == b.cod.st; }

Obj set_obj(FinSet x) { return Obj{{std::move(x)}, {}}; }

Obj slice_obj(FinMap h) {
  Obj o{{h.dom()}, {}};
  o.st.push_back(std::move(h));
  return o;
}

Obj pt_obj(FinMap g, FinMap t) {
  Obj o{{g.dom(), g.cod()}, {}};
  o.st.push_back(std::move(g));
  o.st.push_back(std::move(t));
  return o;
}

Mor set_mor(FinMap f) {
  Obj d = set_obj(f.dom()), c = set_obj(f.cod());
  return Mor{std::move(d), std::move(c), {std::move(f)}};
}

Mor make_mor(Obj dom, Obj cod, std::vector<FinMap> lv) {
  if (lv.size() != dom.lv.size() || lv.size() != cod.lv.size()) throw TypeError("morphism level count mismatch");
  for (std::size_t i = 0; i < lv.size(); ++i)
    if (!(lv[i].dom() == dom.lv[i]) || !(lv[i].cod() == cod.lv[i]))
      throw TypeError("morphism component " + std::to_string(i) + " is not typed between the level sets");
  return Mor{std::move(dom), std::move(cod), std::move(lv)};
}

Mor identity(const Obj& x) {
  std::vector<FinMap> lv;
  for (const auto& s : x.lv) lv.push_back(FinMap::identity(s));
  return Mor{x, x, std::move(lv)};
}

Mor compose(const Mor& g, const Mor& f) {
  if (f.lv.size() != g.lv.size()) throw TypeError("composing morphisms of different shapes");
  std::vector<FinMap> lv;
  for (std::size_t i = 0; i < f.lv.size(); ++i) lv.push_back(compose(g.lv[i], f.lv[i]));
  return Mor{f.dom, g.cod, std::move(lv)};
}

std::optional<std::string> difference(const Mor& a, const Mor& b) {
  if (a.lv.size() != b.lv.size()) return std::string("different shapes");
  for (std::size_t i = 0; i < a.lv.size(); ++i)
    if (auto d = difference(a.lv[i], b.lv[i])) return a.lv.size() > 1 ? "level " + std::to_string(i) + " " + *d : *d;
  return std::nullopt;
}

std::optional<std::string> check_obj(const Ambient& amb, const Obj& x) {
  switch (amb.kind) {
    case AmbientKind::Set:
      if (x.lv.size() != 1 || !x.st.empty()) return std::string("not a plain set");
      return std::nullopt;
    case AmbientKind::Slice:
      if (x.lv.size() != 1 || x.st.size() != 1) return std::string("not a slice object");
      if (!(x.st[0].dom() == x.lv[0]) || !(x.st[0].cod() == amb.base))
        return "structure map is not into " + amb.base.str();
      return std::nullopt;
    case AmbientKind::Pt: {
      if (x.lv.size() != 2 || x.st.size() != 2) return std::string("not a point");
      const auto& g = x.st[0];
      const auto& t = x.st[1];
      if (!(g.dom() == x.lv[0]) || !(g.cod() == x.lv[1]) || !(t.dom() == x.lv[1]) || !(t.cod() == x.lv[0]))
        return std::string("g or t mistyped");
      if (auto d = difference(compose(g, t), FinMap::identity(x.lv[1]))) return "g.t != 1: " + *d;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_mor(const Ambient& amb, const Mor& f) {
  if (auto e = check_obj(amb, f.dom)) return "domain: " + *e;
  if (auto e = check_obj(amb, f.cod)) return "codomain: " + *e;
  for (std::size_t i = 0; i < f.lv.size(); ++i)
    if (!(f.lv[i].dom() == f.dom.lv[i]) || !(f.lv[i].cod() == f.cod.lv[i]))
      return "component " + std::to_string(i) + " mistyped";
  switch (amb.kind) {
    case AmbientKind::Set: return std::nullopt;
    case AmbientKind::Slice:
      if (auto d = difference(compose(f.cod.st[0], f.lv[0]), f.dom.st[0])) return "not over the base: " + *d;
      return std::nullopt;
    case AmbientKind::Pt:
      if (auto d = difference(compose(f.cod.st[0], f.lv[0]), compose(f.lv[1], f.dom.st[0])))
        return "does not commute with g: " + *d;
      if (auto d = difference(compose(f.lv[0], f.dom.st[1]), compose(f.cod.st[1], f.lv[1])))
        return "does not commute with t: " + *d;
      return std::nullopt;
  }
  return std::nullopt;
}

AmbPullback pullback(const Ambient& amb, const Mor& f, const Mor& g) {
  if (!(f.cod == g.cod)) throw TypeError("pullback of morphisms with different codomains");
  std::vector<Pullback> pbs;
  for (std::size_t i = 0; i < f.lv.size(); ++i) pbs.push_back(pullback(f.lv[i], g.lv[i]));
  Obj P;
  for (const auto& pb : pbs) P.lv.push_back(pb.P);
  switch (amb.kind) {
    case AmbientKind::Set: break;
    case AmbientKind::Slice:
      P.st.push_back(compose(f.dom.st[0], pbs[0].p1));
      break;
    case AmbientKind::Pt: {
      const auto& A = f.dom;
      const auto& B = g.dom;
      P.st.push_back(FinMap::build(P.lv[0], P.lv[1], [&](const Atom& p) {
        return Atom::pair(A.st[0](p[0]), B.st[0](p[1]));
      }));
      P.st.push_back(FinMap::build(P.lv[1], P.lv[0], [&](const Atom& p) {
        return Atom::pair(A.st[1](p[0]), B.st[1](p[1]));
      }));
      break;
    }
  }
  std::vector<FinMap> l1, l2;
  for (const auto& pb : pbs) l1.push_back(pb.p1), l2.push_back(pb.p2);
  return {P, Mor{P, f.dom, std::move(l1)}, Mor{P, g.dom, std::move(l2)}};
}

Mor pair_into(const AmbPullback& pb, const Mor& a, const Mor& b) {
  std::vector<FinMap> lv;
  for (std::size_t i = 0; i < a.lv.size(); ++i) {
    Pullback level{pb.P.lv[i], pb.p1.lv[i], pb.p2.lv[i]};
    lv.push_back(pair_into(level, a.lv[i], b.lv[i]));
  }
  return Mor{a.dom, pb.P, std::move(lv)};
}

SquareCheck check_square(const Mor& top, const Mor& left, const Mor& right, const Mor& bottom) {
  for (std::size_t i = 0; i < top.lv.size(); ++i) {
    auto c = check_square(top.lv[i], left.lv[i], right.lv[i], bottom.lv[i]);
    if (!c.ok()) {
      if (top.lv.size() > 1) c.witness = "level " + std::to_string(i) + ": " + c.witness;
      return c;
    }
  }
  return {SquareStatus::Pullback, {}};
}

bool is_equalizer(const Mor& e, const Mor& f, const Mor& g) {
  for (std::size_t i = 0; i < e.lv.size(); ++i)
    if (!is_equalizer(e.lv[i], f.lv[i], g.lv[i])) return false;
  return true;
}

bool is_kernel_pair(const Mor& p0, const Mor& p1, const Mor& f) {
  for (std::size_t i = 0; i < f.lv.size(); ++i)
    if (!is_kernel_pair(p0.lv[i], p1.lv[i], f.lv[i])) return false;
  return true;
}

bool is_iso(const Mor& f) {
  for (const auto& m : f.lv)
    if (!m.bijective()) return false;
  return true;
}

Mor inverse(const Mor& f) {
  std::vector<FinMap> lv;
  for (const auto& m : f.lv) lv.push_back(m.inverse());
  return Mor{f.cod, f.dom, std::move(lv)};
}

namespace {

// Enumerates tables on dom where element i may take any value in choices[i].
void for_each_choice(const std::vector<std::vector<std::uint32_t>>& choices,
                     const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> t(choices.size());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == choices.size()) {
      fn(t);
      return;
    }
    for (auto c : choices[i]) {
      t[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<Mor> hom(const Ambient& amb, const Obj& x, const Obj& y) {
  std::vector<Mor> out;
  switch (amb.kind) {
    case AmbientKind::Set:
      for_each_map(x.set(), y.set(), [&](const FinMap& f) {
        out.push_back(Mor{x, y, {f}});
        return true;
      });
      break;
    case AmbientKind::Slice: {
      std::vector<std::vector<std::uint32_t>> choices(x.set().size());
      for (std::size_t i = 0; i < x.set().size(); ++i)
        for (std::size_t j = 0; j < y.set().size(); ++j)
          if (y.st[0].at(j) == x.st[0].at(i)) choices[i].push_back(static_cast<std::uint32_t>(j));
      for_each_choice(choices, [&](const std::vector<std::uint32_t>& t) {
        out.push_back(Mor{x, y, {FinMap(x.set(), y.set(), t)}});
      });
      break;
    }
    case AmbientKind::Pt:
      for_each_map(x.lv[1], y.lv[1], [&](const FinMap& bottom) {
        std::vector<std::vector<std::uint32_t>> choices(x.lv[0].size());
        for (std::size_t i = 0; i < x.lv[0].size(); ++i) {
          auto want = bottom.at(x.st[0].at(i));
          for (std::size_t j = 0; j < y.lv[0].size(); ++j)
            if (y.st[0].at(j) == want) choices[i].push_back(static_cast<std::uint32_t>(j));
        }
        for_each_choice(choices, [&](const std::vector<std::uint32_t>& t) {
          Mor m{x, y, {FinMap(x.lv[0], y.lv[0], t), bottom}};
          if (compose(m.lv[0], x.st[1]) == compose(y.st[1], bottom)) out.push_back(std::move(m));
        });
        return true;
      });
      break;
  }
  return out;
}

}  // namespace wb
