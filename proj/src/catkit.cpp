#include "wb/catkit.hpp"

namespace wb {

Pullback composable(const FinMap& d0, const FinMap& d1) { return pullback(d0, d1); }

FinSet InternalCategory::X2() const { return composable(d0, d1).P; }

InternalCategory make_category(std::string name, FinSet X0, FinSet X1, FinMap d0, FinMap d1, FinMap s0,
                               const std::function<Atom(const Atom&, const Atom&)>& comp) {
  auto X2 = composable(d0, d1).P;
  auto m = FinMap::build(X2, X1, [&](const Atom& p) { return comp(p[0], p[1]); });
  return {std::move(name), std::move(X0), std::move(X1), std::move(d0), std::move(d1), std::move(s0), std::move(m)};
}

InternalCategory discrete_category(const FinSet& X, std::string name) {
  auto id = FinMap::identity(X);
  return make_category(std::move(name), X, X, id, id, id, [](const Atom& f, const Atom&) { return f; });
}

InternalCategory kernel_pair_groupoid(const FinMap& f, std::string name) {
  auto kp = kernel_pair(f);
  return make_category(std::move(name), f.dom(), kp.R, kp.p1, kp.p0, kp.s0,
                       [](const Atom& x, const Atom& y) { return Atom::pair(x[0], y[1]); });
}

namespace {

struct Level2 {
  Pullback X2;
  FinMap s0, s1;
};

Level2 level2(const InternalCategory& C) {
  auto pb = composable(C.d0, C.d1);
  auto s0 = FinMap::build(C.X1, pb.P, [&](const Atom& f) { return Atom::pair(C.s0(C.d1(f)), f); });
  auto s1 = FinMap::build(C.X1, pb.P, [&](const Atom& f) { return Atom::pair(f, C.s0(C.d0(f))); });
  return {pb, s0, s1};
}

}  // namespace

Nerve nerve(const InternalCategory& C) {
  Nerve N;
  N.X = {C.X0, C.X1, {}, {}};
  auto& t = N.maps;
  t.id[0] = FinMap::identity(C.X0);
  t.id[1] = FinMap::identity(C.X1);
  t.d[1] = {C.d0, C.d1};
  t.s[0] = {C.s0};
  Level2 l2;
  try {
    l2 = level2(C);
  } catch (const TypeError& e) {
    throw LawError(std::string("degeneracies on X1 are ill-typed: ") + e.what());
  }
  N.X[2] = l2.X2.P;
  t.id[2] = FinMap::identity(N.X[2]);
  t.d[2] = {l2.X2.p2, C.m, l2.X2.p1};
  t.s[1] = {l2.s0, l2.s1};

  auto pb3 = pullback(l2.X2.p2, l2.X2.p1);
  const auto& X3 = pb3.P;
  N.X[3] = X3;
  try {
    auto d1 = FinMap::build(X3, N.X[2], [&](const Atom& x) {
      return Atom::pair(C.compose(x[0][0], x[0][1]), x[1][1]);
    });
    auto d2 = FinMap::build(X3, N.X[2], [&](const Atom& x) {
      return Atom::pair(x[0][0], C.compose(x[1][0], x[1][1]));
    });
    t.d[3] = {pb3.p2, d1, d2, pb3.p1};
    t.s[2] = {
        FinMap::build(N.X[2], X3, [&](const Atom& p) { return Atom::pair(Atom::pair(C.s0(C.d1(p[0])), p[0]), p); }),
        FinMap::build(N.X[2], X3, [&](const Atom& p) {
          Atom i = C.s0(C.d0(p[0]));
          return Atom::pair(Atom::pair(p[0], i), Atom::pair(i, p[1]));
        }),
        FinMap::build(N.X[2], X3, [&](const Atom& p) { return Atom::pair(p, Atom::pair(p[1], C.s0(C.d0(p[1])))); }),
    };
  } catch (const TypeError& e) {
    throw LawError(std::string("level 3 of the nerve is ill-typed: ") + e.what());
  }
  t.id[3] = FinMap::identity(X3);
  return N;
}

Certificate validate_internal_category(const InternalCategory& C) {
  Certificate cert;
  cert.subject = "internal category " + C.name;
  auto typed = [](const FinMap& f, const FinSet& a, const FinSet& b) { return f.dom() == a && f.cod() == b; };
  if (!typed(C.d0, C.X1, C.X0) || !typed(C.d1, C.X1, C.X0) || !typed(C.s0, C.X0, C.X1)) {
    cert.add("typing", false, "faces or degeneracy are not maps between X1 and X0");
    return cert;
  }
  if (!typed(C.m, C.X2(), C.X1)) {
    cert.add("typing", false, "composition is not defined on the canonical X2");
    return cert;
  }
  cert.add("typing", true);

  FinMapOps ops;
  Truncated3<FinMap> t;
  t.id[0] = FinMap::identity(C.X0);
  t.id[1] = FinMap::identity(C.X1);
  t.d[1] = {C.d0, C.d1};
  t.s[0] = {C.s0};
  check_simplicial(t, ops, cert);
  if (!cert.ok()) return cert;

  Certificate staged;
  staged.subject = cert.subject;
  staged.add("typing", true);
  auto l2 = level2(C);
  t.id[2] = FinMap::identity(l2.X2.P);
  t.d[2] = {l2.X2.p2, C.m, l2.X2.p1};
  t.s[1] = {l2.s0, l2.s1};
  check_simplicial(t, ops, staged);
  if (!staged.ok()) return staged;

  Nerve N;
  try {
    N = nerve(C);
  } catch (const LawError& e) {
    staged.add("level 3", false, e.what());
    return staged;
  }
  Certificate full;
  full.subject = cert.subject;
  full.add("typing", true);
  check_simplicial(N.maps, ops, full);
  return full;
}

bool same_tables(const InternalCategory& a, const InternalCategory& b) {
  return a.X0 == b.X0 && a.X1 == b.X1 && a.d0 == b.d0 && a.d1 == b.d1 && a.s0 == b.s0 && a.m == b.m;
}

InternalFunctor identity_functor(const InternalCategory& C) {
  return {C, C, FinMap::identity(C.X0), FinMap::identity(C.X1)};
}

Certificate validate_functor(const InternalFunctor& F) {
  Certificate cert;
  cert.subject = "internal functor " + F.src.name + " -> " + F.tgt.name;
  const auto& A = F.src;
  const auto& B = F.tgt;
  if (!(F.f0.dom() == A.X0) || !(F.f0.cod() == B.X0) || !(F.f1.dom() == A.X1) || !(F.f1.cod() == B.X1)) {
    cert.add("typing", false, "f0 or f1 mistyped");
    return cert;
  }
  auto eq = [&](const std::string& name, const FinMap& a, const FinMap& b) {
    auto w = difference(a, b);
    cert.add(name, !w, w.value_or(""));
  };
  eq("d0.f1=f0.d0", compose(B.d0, F.f1), compose(F.f0, A.d0));
  eq("d1.f1=f0.d1", compose(B.d1, F.f1), compose(F.f0, A.d1));
  eq("s0.f0=f1.s0", compose(B.s0, F.f0), compose(F.f1, A.s0));
  if (!cert.ok()) return cert;
  auto pbB = composable(B.d0, B.d1);
  auto X2 = A.X2();
  FinMap f2;
  try {
    f2 = FinMap::build(X2, pbB.P, [&](const Atom& p) { return Atom::pair(F.f1(p[0]), F.f1(p[1])); });
  } catch (const TypeError& e) {
    cert.add("f2 typed", false, e.what());
    return cert;
  }
  eq("m.f2=f1.m", compose(B.m, f2), compose(F.f1, A.m));
  return cert;
}

bool is_discrete_fibration(const InternalFunctor& F) {
  return is_pullback_square(F.f1, F.src.d1, F.tgt.d1, F.f0);
}

bool is_discrete_cofibration(const InternalFunctor& F) {
  return is_pullback_square(F.f1, F.src.d0, F.tgt.d0, F.f0);
}

bool is_groupoid(const InternalCategory& C) {
  auto pb = composable(C.d0, C.d1);
  return is_pullback_square(C.m, pb.p2, C.d0, C.d0);
}

bool is_groupoid_bruteforce(const InternalCategory& C) {
  auto X2 = C.X2();
  for (const auto& f : C.X1) {
    bool found = false;
    for (const auto& g : C.X1) {
      Atom fg = Atom::pair(f, g), gf = Atom::pair(g, f);
      if (!X2.contains(fg) || !X2.contains(gf)) continue;
      if (C.m(fg) == C.s0(C.d1(f)) && C.m(gf) == C.s0(C.d0(f))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

FinMap invert(const InternalCategory& C) {
  if (!is_groupoid(C)) throw PreconditionError("invert: " + C.name + " is not a groupoid");
  auto X2 = C.X2();
  return FinMap::build(C.X1, C.X1, [&](const Atom& f) {
    for (const auto& g : C.X1) {
      Atom fg = Atom::pair(f, g);
      if (X2.contains(fg) && C.m(fg) == C.s0(C.d1(f))) return g;
    }
    throw LawError("invert: no inverse for " + f.str());
  });
}

DecResult dec(const InternalCategory& C) {
  auto pb = composable(C.d0, C.d1);
  const auto& X2 = pb.P;
  auto s0 = FinMap::build(C.X1, X2, [&](const Atom& f) { return Atom::pair(C.s0(C.d1(f)), f); });
  auto D = make_category("Dec(" + C.name + ")", C.X1, X2, pb.p2, C.m, s0, [&](const Atom& a, const Atom& b) {
    return Atom::pair(C.compose(a[0], b[0]), b[1]);
  });
  InternalFunctor eps{D, C, C.d1, pb.p1};
  return {std::move(D), std::move(eps)};
}

bool is_discrete(const InternalCategory& C) {
  return C.d0.bijective() && C.d0 == C.d1;
}

bool pt_is_cartesian(const Mor& sq) {
  return is_pullback_square(sq.lv[0], sq.dom.st[0], sq.cod.st[0], sq.lv[1]);
}

Certificate check_presentation(const FinMap& d0, const FinMap& d1, const FinMap& s0, const FinMap& d2) {
  Certificate cert;
  cert.subject = "groupoid presentation";
  auto R = kernel_pair(d0);
  if (!(d2.dom() == R.R) || !(d2.cod() == d0.dom())) {
    cert.add("typing", false, "d2 is not a map R[d0] -> X1");
    return cert;
  }
  auto eq = [&](const std::string& name, const FinMap& a, const FinMap& b) {
    auto w = difference(a, b);
    cert.add(name, !w, w.value_or(""));
  };
  const auto& X1 = d0.dom();
  auto t1 = FinMap::build(X1, R.R, [&](const Atom& a) { return Atom::pair(s0(d0(a)), a); });
  eq("d0.d2=d1.p0", compose(d0, d2), compose(d1, R.p0));
  eq("d2.s0=s0.d1", compose(d2, R.s0), compose(s0, d1));
  eq("d2.t1=1", compose(d2, t1), FinMap::identity(X1));
  eq("d1.d2=d1.p1", compose(d1, d2), compose(d1, R.p1));
  if (!cert.ok()) return cert;
  auto RR = kernel_pair(R.p0);
  auto Rd2 = FinMap::build(RR.R, R.R, [&](const Atom& q) { return Atom::pair(d2(q[0]), d2(q[1])); });
  auto p2 = FinMap::build(RR.R, R.R, [&](const Atom& q) { return Atom::pair(q[0][1], q[1][1]); });
  eq("d2.R(d2)=d2.p2", compose(d2, Rd2), compose(d2, p2));
  return cert;
}

InternalCategory groupoid_from_presentation(std::string name, const FinMap& d0, const FinMap& d1, const FinMap& s0,
                                            const FinMap& d2) {
  auto cert = check_presentation(d0, d1, s0, d2);
  if (auto c = cert.first_failure()) throw LawError("presentation law " + c->name + " fails: " + c->witness);
  const auto& X1 = d0.dom();
  return make_category(std::move(name), s0.dom(), X1, d0, d1, s0, [&](const Atom& f, const Atom& g) {
    for (const auto& a : X1)
      if (d0(a) == d0(g) && d2(Atom::pair(g, a)) == f) return a;
    throw LawError("presentation does not determine a composite of " + f.str() + " and " + g.str());
  });
}

FinMap presentation_of(const InternalCategory& C) {
  auto inv = invert(C);
  auto R = kernel_pair(C.d0);
  return FinMap::build(R.R, C.X1, [&](const Atom& p) { return C.compose(p[1], inv(p[0])); });
}

}  // namespace wb
