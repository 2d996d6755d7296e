#include "wb/algebras.hpp"

#include <array>
#include <functional>

namespace wb {

InternalFunctor algebra_to_dfib(const InternalCategory& C, const Algebra& A) {
  if (A.monad->ambient() != Ambient::slice(C.X0)) throw PreconditionError("algebra is not over the objects of " + C.name);
  auto cert = validate_algebra(A);
  if (auto f = cert.first_failure()) throw PreconditionError("invalid algebra: " + f->name);
  const auto& h = A.carrier.st[0];
  const auto& Z = A.carrier.set();
  const auto& Y1 = A.xi.dom.set();
  const auto& xi = A.xi.map();
  auto d1 = FinMap::build(Y1, Z, [](const Atom& p) { return p[0]; });
  auto s0 = FinMap::build(Z, Y1, [&](const Atom& z) { return Atom::pair(z, C.s0(h(z))); });
  auto Y = make_category("lifts of " + C.name, Z, Y1, xi, d1, s0,
                         [&](const Atom& a, const Atom& b) { return Atom::pair(a[0], C.compose(a[1], b[1])); });
  auto f1 = FinMap::build(Y1, C.X1, [](const Atom& p) { return p[1]; });
  return {Y, C, h, f1};
}

Algebra dfib_to_algebra(const MonadPtr& tx, const InternalFunctor& F) {
  const auto& C = F.tgt;
  if (tx->ambient() != Ambient::slice(C.X0)) throw PreconditionError("monad is not over the objects of " + C.name);
  if (!validate_functor(F).ok() || !is_discrete_fibration(F)) throw PreconditionError("not a discrete fibration");
  auto carrier = slice_obj(F.f0);
  auto TZ = tx->obj(carrier);
  const auto& Y = F.src;
  auto xi = FinMap::build(TZ.set(), carrier.set(), [&](const Atom& p) -> Atom {
    for (const auto& y : Y.X1)
      if (Y.d1(y) == p[0] && F.f1(y) == p[1]) return Y.d0(y);
    throw PreconditionError("no lift of " + p.str());
  });
  return {tx, carrier, make_mor(TZ, carrier, {xi})};
}

Obj reflexive_graph_obj(const InternalCategory& C) { return pt_obj(C.d0, C.s0); }

GroupoidFromAlgebra g_algebra_to_groupoid(const Algebra& A, std::string name) {
  if (A.monad->ambient().kind != AmbientKind::Pt) throw PreconditionError("not an algebra over split epimorphisms");
  auto cert = validate_algebra(A);
  if (auto f = cert.first_failure()) throw PreconditionError("invalid algebra: " + f->name);
  GroupoidFromAlgebra out;
  out.contradiction = !pt_is_cartesian(A.xi);
  const auto& x = A.carrier;
  out.groupoid = groupoid_from_presentation(name.empty() ? "groupoid" : std::move(name), x.st[0], A.xi.lv[1], x.st[1],
                                            A.xi.lv[0]);
  return out;
}

Algebra groupoid_to_g_algebra(const MonadPtr& G, const InternalCategory& C) {
  if (!is_groupoid(C)) throw PreconditionError(C.name + " is not a groupoid");
  auto x = reflexive_graph_obj(C);
  auto Gx = G->obj(x);
  return {G, x, make_mor(Gx, x, {presentation_of(C), C.d1})};
}

std::vector<Algebra> g_algebra_structures(const MonadPtr& G, const Obj& x) {
  // ξ has bottom X → Y and top R[g] → X. Values on the diagonal and on the unit image are forced;
  // the rest is a backtracking search pruned by ξ(b,c) = ξ(ξ(a,b), ξ(a,c)), then checked in full.
  std::vector<Algebra> out;
  auto Gx = G->obj(x);
  const auto& R = Gx.lv[0];
  const auto& X = x.lv[0];
  const auto& g = x.st[0];
  const auto& t = x.st[1];
  constexpr std::uint32_t unset = ~0u;
  for_each_map(X, x.lv[1], [&](const FinMap& bottom) {
    if (!(compose(bottom, t) == FinMap::identity(x.lv[1]))) return true;
    std::vector<std::uint32_t> top(R.size(), unset);
    auto force = [&](const Atom& e, std::uint32_t v) {
      auto i = static_cast<std::size_t>(R.index(e));
      if (top[i] != unset && top[i] != v) return false;
      top[i] = v;
      return true;
    };
    for (std::size_t i = 0; i < X.size(); ++i) {
      const auto& a = X.at(i);
      if (!force(Atom::pair(a, a), static_cast<std::uint32_t>(X.index(t(bottom(a)))))) return true;
      if (!force(Atom::pair(t(g(a)), a), static_cast<std::uint32_t>(i))) return true;
    }
    std::vector<std::vector<std::uint32_t>> choices(R.size());
    for (std::size_t i = 0; i < R.size(); ++i) {
      if (top[i] != unset) {
        choices[i] = {top[i]};
        continue;
      }
      auto want = bottom(R.at(i)[0]);
      for (std::size_t j = 0; j < X.size(); ++j)
        if (g.at(j) == x.lv[1].index(want)) choices[i].push_back(static_cast<std::uint32_t>(j));
    }
    // (bc, ab, ac) index triples over R
    std::vector<std::array<std::size_t, 3>> assoc;
    for (const auto& ab : R)
      for (const auto& ac : R)
        if (ab[0] == ac[0])
          assoc.push_back({static_cast<std::size_t>(R.index(Atom::pair(ab[1], ac[1]))),
                           static_cast<std::size_t>(R.index(ab)), static_cast<std::size_t>(R.index(ac))});
    std::vector<std::uint32_t> cur(R.size(), unset);
    auto consistent = [&]() {
      for (const auto& [bc, ab, ac] : assoc) {
        if (cur[bc] == unset || cur[ab] == unset || cur[ac] == unset) continue;
        auto k = R.index(Atom::pair(X.at(cur[ab]), X.at(cur[ac])));
        if (k < 0) return false;
        if (cur[k] != unset && cur[k] != cur[bc]) return false;
      }
      return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == R.size()) {
        Algebra A{G, x, Mor{Gx, x, {FinMap(R, X, cur), bottom}}};
        if (validate_algebra(A).ok()) out.push_back(std::move(A));
        return;
      }
      for (auto v : choices[i]) {
        cur[i] = v;
        if (consistent()) rec(i + 1);
      }
      cur[i] = unset;
    };
    rec(0);
    return true;
  });
  return out;
}

InternalCategory tbar(const Algebra& A) {
  const auto& M = *A.monad;
  if (M.ambient().kind != AmbientKind::Set) throw PreconditionError("tbar is built over finite sets only");
  const auto& X = A.carrier;
  auto TX = M.obj(X);
  auto TTX = M.obj(TX);
  auto Txi = M.fmap(A.xi);
  auto TTxi = M.fmap(Txi);
  auto mu = M.mult(X);
  auto muT = M.mult(TX);
  auto sq = check_square(TTxi, muT, mu, Txi);
  if (!sq.ok()) throw PreconditionError("mu is not cartesian at the structure map: " + sq.witness);
  auto Tmu = M.fmap(mu);
  std::string name = "Tbar(" + M.name() + ", " + label(X) + ")";
  const auto& W = TTxi.dom.set();
  return make_category(name, TX.set(), TTX.set(), Txi.map(), mu.map(), M.fmap(M.unit(X)).map(),
                       [&](const Atom& f, const Atom& g) -> Atom {
                         for (const auto& w : W)
                           if (muT.map()(w) == f && TTxi.map()(w) == g) return Tmu.map()(w);
                         throw LawError("no composite for " + f.str() + ", " + g.str());
                       });
}

InternalFunctor tbar_functor(const Algebra& A, const Algebra& B, const Mor& f) {
  const auto& M = *A.monad;
  auto Tf = M.fmap(f);
  return {tbar(A), tbar(B), Tf.map(), M.fmap(Tf).map()};
}

}  // namespace wb
