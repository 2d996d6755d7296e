#include "wb/tcat.hpp"

#include "wb/catkit.hpp"

namespace wb {

namespace {

void eq(Certificate& c, const std::string& name, const Mor& a, const Mor& b) {
  auto w = difference(a, b);
  c.add(name, !w, w.value_or(""));
}

bool is_identity(const FinMap& f) { return f.dom() == f.cod() && f == FinMap::identity(f.dom()); }

void require_set(const MonadPtr& T, const char* what) {
  if (T->ambient().kind != AmbientKind::Set) throw PreconditionError(std::string(what) + " needs a monad on finite sets");
}

Mor setm(const FinMap& f) { return set_mor(f); }

}  // namespace

AmbPullback tc_X2(const TGraph& g) { return pullback(g.monad->ambient(), g.delta1, g.monad->fmap(g.d0)); }

TCatBuild build_tcategory(const TGraph& g, const Mor& d1_1) {
  TCatBuild out;
  auto& c = out.cert;
  c.subject = "T-category " + g.name + " over " + g.monad->name();
  const auto& T = *g.monad;
  const auto& amb = T.ambient();

  try {
    for (const auto* x : {&g.X0, &g.X1}) {
      auto bad = check_obj(amb, *x);
      if (bad) {
        c.add("typing: objects", false, *bad);
        return out;
      }
    }
    auto TX0 = T.obj(g.X0);
    bool typed = g.d0.dom == g.X1 && g.d0.cod == g.X0 && g.delta1.dom == g.X1 && g.delta1.cod == TX0 &&
                 g.s0.dom == g.X0 && g.s0.cod == g.X1;
    std::optional<std::string> bad;
    for (const auto* m : {&g.d0, &g.delta1, &g.s0})
      if (!bad) bad = check_mor(amb, *m);
    c.add("typing: d0, delta1, s0", typed && !bad, typed ? bad.value_or("") : "legs are not typed X1 -> X0, T(X0)");
    if (!c.ok()) return out;

    auto lam0 = T.unit(g.X0);
    eq(c, "Axioms 1: d0.s0=1", compose(g.d0, g.s0), identity(g.X0));
    eq(c, "Axioms 1: delta1.s0=lambda", compose(g.delta1, g.s0), lam0);
    if (!c.ok()) return out;

    TCategory C;
    C.g = g;
    C.pb2 = tc_X2(g);
    C.d0_1 = C.pb2.p1;
    C.delta2 = C.pb2.p2;
    auto lam1 = T.unit(g.X1);

    C.s0_1 = pair_into(C.pb2, identity(g.X1), compose(T.fmap(g.s0), g.delta1));
    eq(c, "Observation 2: d0_1.s0_1=1", compose(C.d0_1, C.s0_1), identity(g.X1));
    eq(c, "Observation 2: delta2.s0_1=T(s0).delta1", compose(C.delta2, C.s0_1), compose(T.fmap(g.s0), g.delta1));

    // both displays describing s1_1
    eq(c, "Observation 3: delta1.s0.d0=lambda.d0", compose(g.delta1, g.s0, g.d0), compose(lam0, g.d0));
    eq(c, "Observation 3: lambda.d0=T(d0).lambda_X1", compose(lam0, g.d0), compose(T.fmap(g.d0), lam1));
    C.s1_1 = pair_into(C.pb2, compose(g.s0, g.d0), lam1);
    eq(c, "Observation 3: d0_1.s1_1=s0.d0", compose(C.d0_1, C.s1_1), compose(g.s0, g.d0));
    eq(c, "Observation 3: delta2.s1_1=lambda_X1", compose(C.delta2, C.s1_1), lam1);

    if (!(d1_1.dom == C.X2()) || !(d1_1.cod == g.X1)) {
      c.add("typing: d1_1", false, "d1_1 is not typed X2 -> X1 on the canonical X2");
      return out;
    }
    bad = check_mor(amb, d1_1);
    c.add("typing: d1_1", !bad, bad.value_or(""));
    if (bad) return out;
    C.d1_1 = d1_1;

    eq(c, "Axioms 4: d0.d1_1=d0.d0_1", compose(g.d0, d1_1), compose(g.d0, C.d0_1));
    eq(c, "Axioms 4: delta1.d1_1=mu.T(delta1).delta2", compose(g.delta1, d1_1),
       compose(T.mult(g.X0), T.fmap(g.delta1), C.delta2));
    eq(c, "Axioms 7: d1_1.s0_1=1", compose(d1_1, C.s0_1), identity(g.X1));
    eq(c, "Axioms 7: d1_1.s1_1=1", compose(d1_1, C.s1_1), identity(g.X1));
    if (!c.ok()) return out;

    C.pb3 = pullback(amb, C.delta2, T.fmap(C.d0_1));
    C.d0_2 = C.pb3.p1;
    C.delta3 = C.pb3.p2;
    try {
      C.d1_2 = pair_into(C.pb2, compose(C.d0_1, C.d0_2), compose(T.fmap(d1_1), C.delta3));
      c.add("Observation 5: d1_2 lands in X2", true);
    } catch (const TypeError& e) {
      c.add("Observation 5: d1_2 lands in X2", false, e.what());
      return out;
    }
    try {
      C.d2_2 = pair_into(C.pb2, compose(d1_1, C.d0_2), compose(T.mult(g.X1), T.fmap(C.delta2), C.delta3));
      c.add("Observation 6: d2_2 lands in X2", true);
    } catch (const TypeError& e) {
      c.add("Observation 6: d2_2 lands in X2", false, e.what());
      return out;
    }
    eq(c, "Axiom 8: d1_1.d1_2=d1_1.d2_2", compose(d1_1, C.d1_2), compose(d1_1, C.d2_2));

    C.s0_2 = pair_into(C.pb3, identity(C.X2()), compose(T.fmap(C.s0_1), C.delta2));
    C.s1_2 = pair_into(C.pb3, compose(C.s0_1, C.d0_1), compose(T.fmap(C.s1_1), C.delta2));
    C.s2_2 = pair_into(C.pb3, compose(C.s1_1, C.d0_1), T.unit(C.X2()));
    c.add("Observation 6: degeneracies s0_2, s1_2, s2_2 land in X3", true);
    out.cat = std::move(C);
  } catch (const GradeError& e) {
    c.add("within grade bound", false, e.what());
  } catch (const TypeError& e) {
    c.add("structure maps defined", false, e.what());
  }
  return out;
}

TCategory make_tcategory(const TGraph& g, const Mor& d1_1) {
  auto b = build_tcategory(g, d1_1);
  if (auto f = b.cert.first_failure()) throw LawError(g.name + ": " + f->name + " fails: " + f->witness);
  return std::move(*b.cat);
}

TCategory make_tcategory(const TGraph& g, const std::function<Atom(const Atom&)>& d1_1) {
  auto pb = tc_X2(g);
  return make_tcategory(g, make_mor(pb.P, g.X1, {FinMap::build(pb.P.set(), g.X1.set(), d1_1)}));
}

bool same_tcat(const TCategory& a, const TCategory& b) {
  return a.monad() == b.monad() && a.X0() == b.X0() && a.X1() == b.X1() && a.g.d0 == b.g.d0 &&
         a.g.delta1 == b.g.delta1 && a.g.s0 == b.g.s0 && a.d1_1 == b.d1_1;
}

bool is_t_groupoid(const TCategory& C) { return is_kernel_pair(C.d0_1, C.d1_1, C.g.d0); }

TFunctor identity_tfunctor(const TCategory& C) { return {C, C, identity(C.X0()), identity(C.X1())}; }

Certificate validate_tfunctor(const TFunctor& F) {
  Certificate c;
  c.subject = "T-functor " + F.src.name() + " -> " + F.tgt.name();
  const auto& A = F.src;
  const auto& B = F.tgt;
  if (A.monad() != B.monad()) {
    c.add("same monad", false, A.monad()->name() + " vs " + B.monad()->name());
    return c;
  }
  const auto& T = *A.monad();
  bool typed = F.f0.dom == A.X0() && F.f0.cod == B.X0() && F.f1.dom == A.X1() && F.f1.cod == B.X1();
  c.add("typing", typed, typed ? "" : "f0, f1 are not typed between the levels");
  if (!typed) return c;
  eq(c, "d0.f1=f0.d0", compose(B.g.d0, F.f1), compose(F.f0, A.g.d0));
  eq(c, "delta1.f1=T(f0).delta1", compose(B.g.delta1, F.f1), compose(T.fmap(F.f0), A.g.delta1));
  eq(c, "f1.s0=s0.f0", compose(F.f1, A.g.s0), compose(B.g.s0, F.f0));
  if (!c.ok()) return c;
  Mor f2;
  try {
    f2 = pair_into(B.pb2, compose(F.f1, A.d0_1), compose(T.fmap(F.f1), A.delta2));
    c.add("f2 typed", true);
  } catch (const TypeError& e) {
    c.add("f2 typed", false, e.what());
    return c;
  }
  eq(c, "f1.d1_1=d1_1.f2", compose(F.f1, A.d1_1), compose(B.d1_1, f2));
  return c;
}

bool is_discrete_tfibration(const TFunctor& F) {
  const auto& T = *F.src.monad();
  return check_square(F.f1, F.src.g.delta1, F.tgt.g.delta1, T.fmap(F.f0)).ok();
}

// ---- Kleisli picture ----

KlCategory tcat_to_kl(const TCategory& C) {
  const auto& T = C.monad();
  KlCategory K;
  K.monad = T;
  K.name = "Kl(" + C.name() + ")";
  K.X = {C.X0(), C.X1(), C.X2(), C.X3()};
  auto kl = [&](const Mor& support, const Obj& tgt) { return kleisli(T, tgt, support); };
  K.t.d[1] = {embed(T, C.g.d0), kl(C.g.delta1, C.X0())};
  K.t.d[2] = {embed(T, C.d0_1), embed(T, C.d1_1), kl(C.delta2, C.X1())};
  K.t.d[3] = {embed(T, C.d0_2), embed(T, C.d1_2), embed(T, C.d2_2), kl(C.delta3, C.X2())};
  K.t.s[0] = {embed(T, C.g.s0)};
  K.t.s[1] = {embed(T, C.s0_1), embed(T, C.s1_1)};
  K.t.s[2] = {embed(T, C.s0_2), embed(T, C.s1_2), embed(T, C.s2_2)};
  for (int n = 0; n < 4; ++n) K.t.id[n] = kl_identity(T, K.X[n]);
  return K;
}

namespace {

struct KlOps {
  KleisliMor compose(const KleisliMor& g, const KleisliMor& f) const { return kl_compose(g, f); }
  std::optional<std::string> diff(const KleisliMor& a, const KleisliMor& b) const {
    return difference(a.support, b.support);
  }
};

}  // namespace

Certificate validate_kl_category(const KlCategory& K) {
  Certificate c;
  c.subject = "internal category " + K.name + " in Kl(" + K.monad->name() + ")";
  try {
    check_simplicial(K.t, KlOps{}, c);
  } catch (const Error& e) {
    c.add("faces compose", false, e.what());
    return c;
  }
  auto leg = [&](const std::string& name, const KleisliMor& a) { c.add(name, in_E_unchecked(a).member); };
  leg("d0 in E [n=1]", K.t.d[1][0]);
  leg("s0 in E [n=0]", K.t.s[0][0]);
  leg("d0 in E [n=2]", K.t.d[2][0]);
  leg("d1 in E [n=2]", K.t.d[2][1]);
  return c;
}

TCategory kl_to_tcat(const KlCategory& K, const CartesianCertificate& cert) {
  const auto& T = K.monad;
  auto base = [&](const KleisliMor& a, const char* leg) {
    auto m = in_E(a, cert);
    if (!m.member || !m.witness) throw PreconditionError(std::string("not a T-category presentation: ") + leg);
    return *m.witness;
  };
  if (K.t.d[1].size() != 2 || K.t.d[2].size() != 3 || K.t.s[0].size() != 1)
    throw PreconditionError("not a T-category presentation: missing faces");
  TGraph g{T, K.name, K.X[0], K.X[1], base(K.t.d[1][0], "d0"), K.t.d[1][1].support, base(K.t.s[0][0], "s0")};
  auto C = make_tcategory(g, base(K.t.d[2][1], "d1_1"));
  if (!(C.X2() == K.X[2]) || !(K.t.d[2][2].support == C.delta2) || !(base(K.t.d[2][0], "d0_1") == C.d0_1))
    throw PreconditionError("not a T-category presentation: X2 is not the canonical pullback");
  return C;
}

// ---- embeddings ----

TCategory tcat_of_category(const InternalCategory& C, const MonadPtr& T) {
  require_set(T, "Cat(F^T)");
  auto X0 = set_obj(C.X0), X1 = set_obj(C.X1);
  auto lam1 = T->unit(X1).map();
  TGraph g{T, C.name, X0, X1, setm(C.d0), compose(T->unit(X0), setm(C.d1)), setm(C.s0)};
  return make_tcategory(g, [&](const Atom& p) {
    for (const auto& f : C.X1)
      if (lam1(f) == p[1]) return C.compose(f, p[0]);
    throw TypeError("second leg of " + p.str() + " is not a unit");
  });
}

TCategory tc_embed_algebra(const Algebra& A) {
  const auto& T = A.monad;
  const auto& X = A.carrier;
  auto TX = T->obj(X);
  TGraph g{T, "TC(" + label(X) + ")", X, TX, A.xi, identity(TX), T->unit(X)};
  auto pb = tc_X2(g);
  return make_tcategory(g, compose(T->mult(X), pb.p2));
}

Coreflection r_coreflection(const TCategory& C) {
  const auto& T = C.monad();
  require_set(T, "the coreflection");
  auto lam0 = T->unit(C.X0()).map();
  const auto& delta1 = C.g.delta1.map();
  auto preimage = [&](const Atom& w) -> std::optional<Atom> {
    for (const auto& x : lam0.dom())
      if (lam0(x) == w) return x;
    return std::nullopt;
  };
  std::vector<Atom> arrows;
  for (const auto& x : C.X1().set())
    if (preimage(delta1(x))) arrows.push_back(x);
  FinSet Xb1(arrows);
  const auto& X0 = C.X0().set();
  auto d0 = FinMap::build(Xb1, X0, [&](const Atom& x) { return C.g.d0.map()(x); });
  auto d1 = FinMap::build(Xb1, X0, [&](const Atom& x) { return *preimage(delta1(x)); });
  auto s0 = FinMap::build(X0, Xb1, [&](const Atom& x) { return C.g.s0.map()(x); });
  auto lam1 = T->unit(C.X1()).map();
  auto R = make_category("R(" + C.name() + ")", X0, Xb1, d0, d1, s0,
                         [&](const Atom& f, const Atom& g) { return C.d1_1.map()(Atom::pair(g, lam1(f))); });
  auto E = tcat_of_category(R, T);
  auto incl = FinMap::build(Xb1, C.X1().set(), [](const Atom& x) { return x; });
  return {R, {E, C, identity(C.X0()), set_mor(incl)}};
}

bool factors_through(const TFunctor& F, const InternalCategory& D, const Coreflection& R) {
  const auto& f1 = F.f1.map();
  for (const auto& a : D.X1)
    if (!R.R.X1.contains(f1(a))) return false;
  InternalFunctor G{D, R.R, F.f0.map(), FinMap::build(D.X1, R.R.X1, [&](const Atom& a) { return f1(a); })};
  return validate_functor(G).ok();
}

TPullback tcat_pullback(const TFunctor& f, const TFunctor& g) {
  const auto& A = f.src;
  const auto& B = g.src;
  const auto& T = A.monad();
  const auto& amb = T->ambient();
  auto pb0 = pullback(amb, f.f0, g.f0);
  auto pb1 = pullback(amb, f.f1, g.f1);
  auto d0 = pair_into(pb0, compose(A.g.d0, pb1.p1), compose(B.g.d0, pb1.p2));
  auto s0 = pair_into(pb1, compose(A.g.s0, pb0.p1), compose(B.g.s0, pb0.p2));
  auto pbT = pullback(amb, T->fmap(f.f0), T->fmap(g.f0));
  auto cmp = pair_into(pbT, T->fmap(pb0.p1), T->fmap(pb0.p2));
  if (!is_iso(cmp)) throw PreconditionError("T does not preserve the pullback of the object legs");
  auto delta1 = compose(inverse(cmp), pair_into(pbT, compose(A.g.delta1, pb1.p1), compose(B.g.delta1, pb1.p2)));
  TGraph G{T, A.name() + " x " + B.name(), pb0.P, pb1.P, d0, delta1, s0};
  auto pb2 = tc_X2(G);
  auto leg = [&](const TCategory& S, const Mor& q) {
    return pair_into(S.pb2, compose(q, pb2.p1), compose(T->fmap(q), pb2.p2));
  };
  auto d1_1 = pair_into(pb1, compose(A.d1_1, leg(A, pb1.p1)), compose(B.d1_1, leg(B, pb1.p2)));
  auto P = make_tcategory(G, d1_1);
  return {P, {P, A, pb0.p1, pb1.p1}, {P, B, pb0.p2, pb1.p2}};
}

DecTcat dec_tcat(const TCategory& C) {
  const auto& T = C.monad();
  require_set(T, "dec");
  const auto& X3 = C.X3().set();
  const auto& d2 = C.d2_2.map();
  const auto& d0 = C.d0_2.map();
  const auto& d1 = C.d1_2.map();
  auto D = make_category("D(" + C.name() + ")", C.X1().set(), C.X2().set(), C.d0_1.map(), C.d1_1.map(),
                         C.s0_1.map(), [&](const Atom& p, const Atom& q) -> Atom {
                           std::optional<Atom> r;
                           for (const auto& xi : X3)
                             if (d2(xi) == p && d0(xi) == q) {
                               if (r && !(*r == d1(xi))) throw LawError("composite in Dec is not unique");
                               r = d1(xi);
                             }
                           if (!r) throw LawError("no 3-simplex over " + p.str() + ", " + q.str());
                           return *r;
                         });
  auto cert = validate_internal_category(D);
  if (auto f = cert.first_failure()) throw LawError("shifted category fails " + f->name);
  DecTcat out{D, tcat_of_category(D, T), false};
  out.dec.g.name = "Dec(" + C.name() + ")";
  out.counit_leg_in_E = in_E_unchecked(kleisli(T, C.X0(), C.g.delta1)).member;
  return out;
}

// ---- T_{X•} ----

InternalFunctor tx_tcat_to_functor(const InternalCategory& C, const TCategory& A) {
  const auto& Y0 = A.X0().set();
  const auto& Y1 = A.X1().set();
  const auto& delta1 = A.g.delta1.map();
  auto d1 = FinMap::build(Y1, Y0, [&](const Atom& y) { return delta1(y)[0]; });
  auto g1 = FinMap::build(Y1, C.X1, [&](const Atom& y) { return delta1(y)[1]; });
  const auto& m = A.d1_1.map();
  auto Y = make_category(A.name(), Y0, Y1, A.g.d0.map(), d1, A.g.s0.map(), [&](const Atom& y, const Atom& y2) {
    return m(Atom::pair(y2, Atom::pair(y, g1(y2))));
  });
  return {Y, C, A.X0().st[0], g1};
}

TCategory functor_to_tx_tcat(const MonadPtr& tx, const InternalFunctor& F) {
  const auto& Y = F.src;
  const auto& C = F.tgt;
  if (tx->ambient() != Ambient::slice(C.X0)) throw PreconditionError("monad is not over the objects of " + C.name);
  if (!validate_functor(F).ok()) throw PreconditionError("not a functor into " + C.name);
  auto X0 = slice_obj(F.f0);
  auto X1 = slice_obj(compose(F.f0, Y.d0));
  auto TX0 = tx->obj(X0);
  auto delta1 = FinMap::build(Y.X1, TX0.set(), [&](const Atom& y) { return Atom::pair(Y.d1(y), F.f1(y)); });
  TGraph g{tx, Y.name, X0, X1, make_mor(X1, X0, {Y.d0}), make_mor(X1, TX0, {delta1}), make_mor(X0, X1, {Y.s0})};
  return make_tcategory(g, [&](const Atom& p) { return Y.compose(p[1][0], p[0]); });
}

// ---- G-categories ----

InternalCategory gcat_to_category(const TCategory& A) {
  if (A.monad()->ambient().kind != AmbientKind::Pt) throw PreconditionError("not a G-category");
  if (!pt_is_cartesian(A.g.d0)) throw PreconditionError("0-leg d0 is not P-cartesian");
  if (!is_identity(A.g.delta1.lv[1])) throw PreconditionError("1-leg delta1 is not idomorphic");
  const auto& X0 = A.X0();
  const auto& X1 = A.X1();
  const auto& Y1 = X0.lv[0];
  const auto& Y0 = X0.lv[1];
  const auto& top = A.g.delta1.lv[0];
  return make_category("Y(" + A.name() + ")", Y0, Y1, A.g.d0.lv[1], X0.st[0], X0.st[1],
                       [&](const Atom& f, const Atom& g) -> Atom {
                         for (const auto& y : X1.lv[0])
                           if (X1.st[0](y) == f && A.g.d0.lv[0](y) == g) return top(y)[1];
                         throw LawError("no 2-cell over " + f.str() + ", " + g.str());
                       });
}

TCategory category_to_gcat(const MonadPtr& G, const InternalCategory& Y) {
  auto pb = composable(Y.d0, Y.d1);
  const auto& Y2 = pb.P;
  auto X0 = pt_obj(Y.d1, Y.s0);
  auto s1 = FinMap::build(Y.X1, Y2, [&](const Atom& f) { return Atom::pair(f, Y.s0(Y.d0(f))); });
  auto X1 = pt_obj(pb.p1, s1);
  auto GX0 = G->obj(X0);
  auto d0 = make_mor(X1, X0, {pb.p2, Y.d0});
  auto dtop = FinMap::build(Y2, GX0.lv[0], [&](const Atom& p) { return Atom::pair(p[0], Y.compose(p[0], p[1])); });
  auto delta1 = make_mor(X1, GX0, {dtop, FinMap::identity(Y.X1)});
  auto s0top = FinMap::build(Y.X1, Y2, [&](const Atom& f) { return Atom::pair(Y.s0(Y.d1(f)), f); });
  auto s0 = make_mor(X0, X1, {s0top, Y.s0});
  TGraph g{G, "G(" + Y.name + ")", X0, X1, d0, delta1, s0};
  auto pb2 = tc_X2(g);
  auto top = FinMap::build(pb2.P.lv[0], Y2, [&](const Atom& e) {
    const auto& y = e[0];
    const auto& W = e[1];
    return Atom::pair(Y.compose(W[0][0], y[0]), y[1]);
  });
  auto bottom = FinMap::build(pb2.P.lv[1], Y.X1, [&](const Atom& e) { return Y.compose(e[1][0], e[0]); });
  return make_tcategory(g, make_mor(pb2.P, X1, {top, bottom}));
}

// ---- multicategories ----

bool is_multicategory(const TCategory& C) {
  return C.monad()->ambient().kind == AmbientKind::Set && C.monad()->name().rfind("list", 0) == 0;
}

bool is_operad(const TCategory& C) { return is_multicategory(C) && C.X0().size() == 1; }

std::size_t arity(const TCategory& C, const Atom& x) { return C.g.delta1.map()(x).size(); }

namespace {

class TXTMonad : public Monad {
 public:
  explicit TXTMonad(TCategory C) : Monad(Ambient::slice(C.X0().set())), C_(std::move(C)) {}
  std::string name() const override { return "TXT(tcategory=" + C_.name() + ")"; }

  Mor fmap(const Mor& k) const override {
    auto TA = obj(k.dom), TB = obj(k.cod);
    auto Tk = base().fmap(set_mor(k.map())).map();
    return Mor{TA, TB, {FinMap::build(TA.set(), TB.set(), [&](const Atom& p) { return Atom::pair(p[0], Tk(p[1])); })}};
  }
  Mor unit(const Obj& h) const override {
    auto Th = obj(h);
    auto lam = base().unit(set_obj(h.set())).map();
    const auto& s0 = C_.g.s0.map();
    return Mor{h, Th, {FinMap::build(h.set(), Th.set(), [&](const Atom& z) {
                 return Atom::pair(s0(h.st[0](z)), lam(z));
               })}};
  }
  Mor mult(const Obj& h) const override {
    auto Th = obj(h);
    auto TTh = obj(Th);
    const auto& B = base();
    auto pr1 = FinMap::build(Th.set(), C_.X1().set(), [](const Atom& p) { return p[0]; });
    auto TZ = B.obj(set_obj(h.set()));
    auto pr2 = FinMap::build(Th.set(), TZ.set(), [](const Atom& p) { return p[1]; });
    auto Tpr1 = B.fmap(set_mor(pr1)).map();
    auto Tpr2 = B.fmap(set_mor(pr2)).map();
    auto mu = B.mult(set_obj(h.set())).map();
    const auto& d1_1 = C_.d1_1.map();
    return Mor{TTh, Th, {FinMap::build(TTh.set(), Th.set(), [&](const Atom& q) {
                 return Atom::pair(d1_1(Atom::pair(q[0], Tpr1(q[1]))), mu(Tpr2(q[1])));
               })}};
  }

 protected:
  Obj obj_impl(const Obj& h) const override {
    auto Th = base().fmap(set_mor(h.st[0])).map();
    auto pb = pullback(C_.g.delta1.map(), Th);
    return slice_obj(compose(C_.g.d0.map(), pb.p1));
  }

 private:
  const Monad& base() const { return *C_.monad(); }
  TCategory C_;
};

}  // namespace

MonadPtr txt_monad(const TCategory& C) {
  require_set(C.monad(), "TXT");
  return std::make_shared<TXTMonad>(C);
}

TFunctor txt_algebra_to_tfunctor(const TCategory& C, const Algebra& A) {
  auto cert = validate_algebra(A);
  if (auto f = cert.first_failure()) throw PreconditionError("invalid algebra: " + f->name);
  const auto& T = C.monad();
  const auto& h = A.carrier.st[0];
  auto Z = set_obj(A.carrier.set());
  auto Th = A.xi.dom;
  auto TZ = T->obj(Z);
  auto X1 = set_obj(Th.set());
  auto pr2 = FinMap::build(Th.set(), TZ.set(), [](const Atom& p) { return p[1]; });
  auto s0 = A.monad->unit(A.carrier).map();
  TGraph g{T, "lifts of " + C.name(), Z, X1, set_mor(A.xi.map()), set_mor(pr2), set_mor(s0)};
  auto mu = A.monad->mult(A.carrier).map();
  auto S = make_tcategory(g, [&](const Atom& e) { return mu(Atom::pair(e[0][0], e[1])); });
  auto pr1 = FinMap::build(Th.set(), C.X1().set(), [](const Atom& p) { return p[0]; });
  return {S, C, set_mor(h), set_mor(pr1)};
}

Algebra tfunctor_to_txt_algebra(const MonadPtr& txt, const TFunctor& F) {
  if (!validate_tfunctor(F).ok() || !is_discrete_tfibration(F)) throw PreconditionError("not a discrete fibration");
  auto carrier = slice_obj(F.f0.map());
  auto Th = txt->obj(carrier);
  const auto& A = F.src;
  auto xi = FinMap::build(Th.set(), carrier.set(), [&](const Atom& p) -> Atom {
    for (const auto& a : A.X1().set())
      if (F.f1.map()(a) == p[0] && A.g.delta1.map()(a) == p[1]) return A.g.d0.map()(a);
    throw PreconditionError("no lift of " + p.str());
  });
  return {txt, carrier, make_mor(Th, carrier, {xi})};
}

namespace corpus {

TCategory e7(bool broken, int bound) {
  auto M = list_monad(bound);
  FinSet X0({"*"}), X1({"e", "k"});
  auto O0 = set_obj(X0), O1 = set_obj(X1);
  auto TX0 = M->obj(O0);
  Atom star("*");
  auto delta1 = FinMap::build(X1, TX0.set(), [&](const Atom& x) {
    return x == Atom("e") ? Atom::word({star}) : Atom::word({});
  });
  TGraph g{M, broken ? "E7(broken)" : "E7", O0, O1, set_mor(FinMap::constant(X1, X0, star)), make_mor(O1, TX0, {delta1}),
           set_mor(FinMap::constant(X0, X1, "e"))};
  auto pb = tc_X2(g);
  auto d1_1 = FinMap::build(pb.P.set(), X1, [&](const Atom& p) -> Atom {
    if (p[0] == Atom("k")) return "k";
    const auto& w = p[1];
    if (broken && w[0] == Atom("k")) return "e";
    return w[0];
  });
  if (!broken) return make_tcategory(g, make_mor(pb.P, O1, {d1_1}));
  // the broken table is returned unchecked so callers can inspect the certificate themselves
  TCategory C;
  C.g = g;
  C.pb2 = pb;
  C.d0_1 = pb.p1;
  C.delta2 = pb.p2;
  C.d1_1 = make_mor(pb.P, O1, {d1_1});
  return C;
}

}  // namespace corpus

}  // namespace wb
