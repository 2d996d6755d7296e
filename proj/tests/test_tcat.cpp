#include <gtest/gtest.h>

#include "wb/algebras.hpp"
#include "wb/corpus.hpp"
#include "wb/enumerate.hpp"
#include "wb/tcat.hpp"

using namespace wb;

namespace {

std::string first_fail(const Certificate& c) {
  auto f = c.first_failure();
  return f ? f->name + ": " + f->witness : "";
}

Obj sset(std::initializer_list<const char*> xs) { return set_obj(FinSet(std::vector<Atom>(xs.begin(), xs.end()))); }

}  // namespace

TEST(TCategory, IdentityMonadOnTwo) {
  auto C = tcat_of_category(corpus::two(), identity_monad());
  EXPECT_EQ(C.X2().size(), 4u);
  EXPECT_FALSE(is_t_groupoid(C));
  EXPECT_TRUE(is_t_groupoid(tcat_of_category(corpus::e4(), identity_monad())));
}

TEST(TCategory, E7Certificate) {
  auto C = corpus::e7();
  EXPECT_EQ(C.X2().size(), 3u);
  auto b = build_tcategory(C.g, C.d1_1);
  EXPECT_TRUE(b.ok()) << first_fail(b.cert);
  for (const char* name : {"Axioms 1", "Axioms 4", "Axioms 7", "Axiom 8", "Observation 2", "Observation 3",
                           "Observation 5", "Observation 6"}) {
    bool seen = false;
    for (const auto& c : b.cert.checks) seen |= c.name.rfind(name, 0) == 0;
    EXPECT_TRUE(seen) << name;
  }
  EXPECT_EQ(arity(C, "e"), 1u);
  EXPECT_EQ(arity(C, "k"), 0u);
  EXPECT_TRUE(is_multicategory(C));
  EXPECT_TRUE(is_operad(C));
}

TEST(TCategory, BrokenE7FailsAxioms4) {
  auto C = corpus::e7(true);
  auto b = build_tcategory(C.g, C.d1_1);
  EXPECT_FALSE(b.ok());
  EXPECT_TRUE(b.cert.has_failure_containing("Axioms 4: delta1.d1_1=mu.T(delta1).delta2"));
}

TEST(TCategory, IdentityMonadAcceptsExactlyCategories) {
  auto Id = identity_monad();
  int accepted = 0;
  for (const auto& g : reflexive_graphs(2, 3)) {
    TGraph tg{Id, g.name, set_obj(g.X0), set_obj(g.X1), set_mor(g.d0), set_mor(g.d1), set_mor(g.s0)};
    auto pb = tc_X2(tg);
    std::size_t structures = category_structures(g).size();
    std::size_t found = 0;
    for_each_map(pb.P.set(), g.X1, [&](const FinMap& m) {
      auto b = build_tcategory(tg, set_mor(m));
      if (b.ok()) {
        ++found;
        // (x, w) ↦ m is the composite w then x
        auto C = make_category(g.name, g.X0, g.X1, g.d0, g.d1, g.s0,
                               [&](const Atom& f, const Atom& h) { return m(Atom::pair(h, f)); });
        EXPECT_TRUE(validate_internal_category(C).ok());
      }
      return true;
    });
    EXPECT_EQ(found, structures) << g.name;
    accepted += static_cast<int>(found);
  }
  EXPECT_GT(accepted, 5);
}

TEST(TCategory, CatOfCategoryUnderCartesianMonads) {
  for (const auto& T : {maybe_monad(), writer_monad(monoid_z2()), list_monad(4)})
    for (const auto& g : reflexive_graphs(2, 4))
      for (const auto& C : category_structures(g)) {
        auto b = tcat_of_category(C, T);
        EXPECT_TRUE(build_tcategory(b.g, b.d1_1).ok()) << T->name() << " " << C.name;
      }
}

TEST(TFunctor, IdentityAndSwap) {
  auto C = corpus::e7();
  EXPECT_TRUE(validate_tfunctor(identity_tfunctor(C)).ok());
  auto swap = FinMap::from_pairs(C.X1().set(), C.X1().set(), {{"e", "k"}, {"k", "e"}});
  TFunctor F{C, C, identity(C.X0()), set_mor(swap)};
  auto c = validate_tfunctor(F);
  EXPECT_FALSE(c.ok());
  EXPECT_TRUE(c.has_failure_containing("delta1.f1=T(f0).delta1"));
}

TEST(Mmain, ForwardValidatesAndRoundTrips) {
  auto C = corpus::e7();
  auto K = tcat_to_kl(C);
  auto v = validate_kl_category(K);
  EXPECT_TRUE(v.ok()) << first_fail(v);
  auto cert = certify_cartesian(*C.monad(), set_probes(2));
  auto back = kl_to_tcat(K, cert);
  EXPECT_TRUE(same_tcat(back, C));
}

TEST(Mmain, IdentityMonadIsRepackaging) {
  auto Id = identity_monad();
  auto C = tcat_of_category(corpus::two(), Id);
  auto K = tcat_to_kl(C);
  EXPECT_TRUE(validate_kl_category(K).ok());
  for (const auto& f : K.t.d[1]) EXPECT_EQ(f.support.map(), f.support.map());
  EXPECT_EQ(K.t.d[1][1].support.map(), corpus::two().d1);
  EXPECT_TRUE(same_tcat(kl_to_tcat(K, certify_cartesian(*Id, set_probes(1))), C));
}

TEST(Mmain, BackwardRejectsNonBaseLeg) {
  auto C = corpus::e7();
  auto K = tcat_to_kl(C);
  auto cert = certify_cartesian(*C.monad(), set_probes(2));
  K.t.d[1][0] = K.t.d[1][1];
  try {
    kl_to_tcat(K, cert);
    FAIL() << "accepted";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("not a T-category presentation"), std::string::npos);
  }
}

TEST(Mmain, TXCategoriesRoundTrip) {
  for (const auto& X : {corpus::two(), corpus::e4()}) {
    auto T = tx_monad(X);
    auto cert = certify_cartesian(*T, slice_probes(X.X0, 2));
    ASSERT_TRUE(cert.half_cartesian);
    auto A = functor_to_tx_tcat(T, identity_functor(X));
    auto K = tcat_to_kl(A);
    auto v = validate_kl_category(K);
    EXPECT_TRUE(v.ok()) << first_fail(v);
    EXPECT_TRUE(same_tcat(kl_to_tcat(K, cert), A));
  }
}

TEST(TcEmbed, MaybeFreeAlgebra) {
  auto M = maybe_monad();
  auto C = tc_embed_algebra(free_algebra(M, sset({"a"})));
  EXPECT_EQ(C.X1().size(), 3u);
  auto R = r_coreflection(C);
  EXPECT_TRUE(is_discrete(R.R));
  EXPECT_EQ(R.R.X0, C.X0().set());
}

TEST(TcEmbed, IdentityAlgebraAndGroupoids) {
  auto Id = identity_monad();
  auto X = sset({"a", "b"});
  auto C = tc_embed_algebra({Id, X, identity(X)});
  EXPECT_TRUE(is_t_groupoid(C));
  auto E = corpus::e4();
  auto T = tx_monad(E);
  int n = 0;
  for (const auto& h : slice_probes(E.X0, 2).objects) {
    auto Th = T->obj(h);
    for (const auto& xi : hom(T->ambient(), Th, h)) {
      Algebra A{T, h, xi};
      if (!validate_algebra(A).ok()) continue;
      ++n;
      EXPECT_TRUE(is_t_groupoid(tc_embed_algebra(A)));
    }
  }
  EXPECT_EQ(n, 2);
}

TEST(Coreflection, EmbeddedCategoryAndE7) {
  auto M = maybe_monad();
  auto Cat = corpus::two();
  auto R = r_coreflection(tcat_of_category(Cat, M));
  EXPECT_TRUE(same_tables(R.R, Cat));
  EXPECT_TRUE(is_iso(R.counit.f1));
  EXPECT_TRUE(validate_tfunctor(R.counit).ok());
  auto E = r_coreflection(corpus::e7());
  EXPECT_EQ(E.R.X1, FinSet({"e"}));
  EXPECT_TRUE(validate_internal_category(E.R).ok());
  EXPECT_TRUE(validate_tfunctor(E.counit).ok());
}

TEST(Coreflection, Couniversal) {
  auto E7 = corpus::e7();
  auto R = r_coreflection(E7);
  auto one = discrete_category(FinSet({"*"}));
  auto T1 = tcat_of_category(one, E7.monad());
  TFunctor F{T1, E7, identity(E7.X0()), set_mor(FinMap::constant(one.X1, E7.X1().set(), "e"))};
  ASSERT_TRUE(validate_tfunctor(F).ok());
  EXPECT_TRUE(factors_through(F, one, R));
}

TEST(Pullback, AlongIdentityAndPairs) {
  auto C = corpus::e7();
  auto id = identity_tfunctor(C);
  auto P = tcat_pullback(id, id);
  EXPECT_EQ(P.P.X1().size(), C.X1().size());
  EXPECT_TRUE(validate_tfunctor(P.p1).ok());
  EXPECT_TRUE(is_iso(P.p1.f1));
  auto M = maybe_monad();
  auto two = tcat_of_category(corpus::two(), M);
  auto bang = tcat_of_category(discrete_category(FinSet({"*"})), M);
  TFunctor f{two, bang, set_mor(FinMap::constant(two.X0().set(), bang.X0().set(), "*")),
             set_mor(FinMap::constant(two.X1().set(), bang.X1().set(), "*"))};
  ASSERT_TRUE(validate_tfunctor(f).ok());
  auto Q = tcat_pullback(f, f);
  EXPECT_EQ(Q.P.X0().size(), 4u);
  EXPECT_EQ(Q.P.X1().size(), 9u);
  EXPECT_TRUE(validate_tfunctor(Q.p2).ok());
}

TEST(DecTcat, IdentityMonadMatchesDec) {
  for (const auto& C : {corpus::two(), corpus::e4()}) {
    auto r = dec_tcat(tcat_of_category(C, identity_monad()));
    auto d = dec(C).dec;
    EXPECT_EQ(r.D.X1.size(), d.X1.size());
    // D has arrows (g, f) where dec has (f, g)
    auto flip = [](const Atom& p) { return Atom::pair(p[1], p[0]); };
    for (const auto& p : r.D.X1) {
      EXPECT_EQ(r.D.d0(p), d.d0(flip(p)));
      EXPECT_EQ(r.D.d1(p), d.d1(flip(p)));
    }
    for (const auto& q : r.D.X2()) EXPECT_EQ(flip(r.D.m(q)), d.compose(flip(q[0]), flip(q[1])));
  }
}

TEST(DecTcat, E7) {
  auto r = dec_tcat(corpus::e7());
  EXPECT_EQ(r.dec.X0().size(), 2u);
  EXPECT_EQ(r.dec.X1().size(), 3u);
  EXPECT_EQ(r.D.X2().size(), 4u);
  EXPECT_FALSE(r.counit_leg_in_E);
}

TEST(TXTcat, FunctorsRoundTrip) {
  for (const auto& X : {corpus::two(), corpus::e4()}) {
    auto T = tx_monad(X);
    std::vector<InternalFunctor> fs{identity_functor(X), dec(X).eps};
    for (const auto& F : fs) {
      auto A = functor_to_tx_tcat(T, F);
      auto G = tx_tcat_to_functor(X, A);
      EXPECT_TRUE(same_tables(G.src, F.src)) << F.src.name;
      EXPECT_EQ(G.f0, F.f0);
      EXPECT_EQ(G.f1, F.f1);
      EXPECT_TRUE(same_tcat(functor_to_tx_tcat(T, G), A));
      EXPECT_EQ(is_t_groupoid(A), is_groupoid(F.src));
    }
  }
}

TEST(TXTcat, DiscreteBase) {
  auto D = discrete_category(FinSet({"p", "q"}));
  auto T = tx_monad(D);
  auto Y = corpus::two();
  InternalFunctor F{Y, D, FinMap::constant(Y.X0, D.X0, "p"), FinMap::constant(Y.X1, D.X1, "p")};
  auto A = functor_to_tx_tcat(T, F);
  EXPECT_EQ(A.X1().size(), Y.X1.size());
}

TEST(GCat, RoundTrips) {
  auto G = g_monad();
  for (const auto& Y : {discrete_category(FinSet({"p"}), "d"), corpus::two(), corpus::e4(), corpus::z2()}) {
    auto A = category_to_gcat(G, Y);
    auto back = gcat_to_category(A);
    EXPECT_TRUE(same_tables(back, Y)) << Y.name;
    EXPECT_TRUE(same_tcat(category_to_gcat(G, back), A));
  }
}

TEST(GCat, TwoCollapsesToDecCounit) {
  auto A = category_to_gcat(g_monad(), corpus::two());
  // 0-leg is the counit of Dec at both levels
  auto d = dec(corpus::two());
  EXPECT_EQ(A.X0().st[0], corpus::two().d1);
  EXPECT_EQ(A.X0().st[1], corpus::two().s0);
  EXPECT_EQ(A.X1().lv[0], d.dec.X1);
}

TEST(GCat, RejectsNonIdomorphicLeg) {
  auto G = g_monad();
  auto A = category_to_gcat(G, corpus::two());
  // P-cartesian 0-leg, 1-leg bottom shifted off the diagonal
  auto B = A;
  B.g.delta1.lv[1] = FinMap::build(A.g.delta1.lv[1].dom(), A.g.delta1.lv[1].cod(), [&](const Atom& x) {
    return A.X0().lv[0].at((A.X0().lv[0].index(x) + 1) % A.X0().lv[0].size());
  });
  try {
    gcat_to_category(B);
    FAIL() << "accepted";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("idomorphic"), std::string::npos);
  }
}

TEST(TXT, SizesAndIdentitySpecialisation) {
  auto E7 = corpus::e7();
  auto T = txt_monad(E7);
  auto h = slice_obj(FinMap::identity(E7.X0().set()));
  EXPECT_EQ(T->obj(h).size(), 2u);
  auto v = validate_monad(*T, slice_probes(E7.X0().set(), 2));
  EXPECT_TRUE(v.ok()) << first_fail(v);
  auto X = corpus::two();
  auto TT = txt_monad(tcat_of_category(X, identity_monad()));
  auto TX = tx_monad(X);
  for (const auto& o : slice_probes(X.X0, 2).objects) EXPECT_EQ(TT->obj(o).size(), TX->obj(o).size());
  EXPECT_TRUE(validate_monad(*TT, slice_probes(X.X0, 2)).ok());
}

TEST(TXT, AlgebrasAreDiscreteFibrations) {
  auto E7 = corpus::e7();
  auto T = txt_monad(E7);
  std::size_t n = 0;
  for (const auto& h : slice_probes(E7.X0().set(), 2).objects) {
    auto Th = T->obj(h);
    for (const auto& xi : hom(T->ambient(), Th, h)) {
      Algebra A{T, h, xi};
      if (!validate_algebra(A).ok()) continue;
      ++n;
      auto F = txt_algebra_to_tfunctor(E7, A);
      EXPECT_TRUE(validate_tfunctor(F).ok());
      EXPECT_TRUE(is_discrete_tfibration(F));
      EXPECT_EQ(tfunctor_to_txt_algebra(T, F).xi, A.xi);
    }
  }
  EXPECT_EQ(n, 3u);
}
