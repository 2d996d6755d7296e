#include <gtest/gtest.h>

#include "wb/catkit.hpp"
#include "wb/corpus.hpp"
#include "wb/enumerate.hpp"

using namespace wb;

TEST(InternalCategory, CorpusValidates) {
  for (const auto& C : {corpus::two(), corpus::e4(), corpus::z2(), corpus::disc2()}) {
    auto cert = validate_internal_category(C);
    EXPECT_TRUE(cert.ok()) << C.name << ": " << (cert.first_failure() ? cert.first_failure()->name : "");
  }
}

TEST(InternalCategory, CertificateListsEveryIdentityFamily) {
  auto cert = validate_internal_category(corpus::two());
  for (const char* fam : {"d_i.d_{j+1}=d_j.d_i", "d_i.s_j=s_{j-1}.d_i", "d_i.s_j=1", "d_i.s_j=s_j.d_{i-1}",
                          "s_{j+1}.s_i=s_i.s_j"}) {
    bool seen = false;
    for (const auto& c : cert.checks) seen |= c.name.rfind(fam, 0) == 0;
    EXPECT_TRUE(seen) << fam;
  }
}

TEST(InternalCategory, BrokenUnitNamesTheIdentity) {
  auto C = corpus::two();
  C.m = FinMap::build(C.m.dom(), C.X1, [&](const Atom& p) -> Atom {
    if (p[0] == Atom("i0") && p[1] == Atom("u")) return "i0";
    return C.compose(p[0], p[1]);
  });
  auto cert = validate_internal_category(C);
  EXPECT_FALSE(cert.ok());
  EXPECT_TRUE(cert.has_failure_containing("d_i.s_j=1"));
}

TEST(InternalCategory, BrokenAssociativityFailsAtLevelThree) {
  // one object, arrows {e,a,b}; a∘a = b, everything else projects
  FinSet X0({"*"}), X1({"e", "a", "b"});
  auto bang = FinMap::constant(X1, X0, "*");
  auto C = make_category("bad", X0, X1, bang, bang, FinMap::constant(X0, X1, "e"),
                         [](const Atom& f, const Atom& g) -> Atom {
                           if (f == Atom("e")) return g;
                           if (g == Atom("e")) return f;
                           if (f == Atom("a") && g == Atom("a")) return "b";
                           return "a";
                         });
  auto cert = validate_internal_category(C);
  EXPECT_FALSE(cert.ok());
  EXPECT_TRUE(cert.has_failure_containing("n=3"));
}

TEST(Groupoid, Examples) {
  EXPECT_FALSE(is_groupoid(corpus::two()));
  EXPECT_TRUE(is_groupoid(corpus::e4()));
  EXPECT_TRUE(is_groupoid(corpus::z2()));
  auto f = FinMap::from_pairs(FinSet({"a", "b", "c"}), FinSet({"0", "1"}), {{"a", "0"}, {"b", "0"}, {"c", "1"}});
  auto R = kernel_pair_groupoid(f, "R[f]");
  EXPECT_TRUE(validate_internal_category(R).ok());
  EXPECT_TRUE(is_groupoid(R));
  auto inv = invert(R);
  for (const auto& p : R.X1) EXPECT_EQ(inv(p), Atom::pair(p[1], p[0]));
}

TEST(Groupoid, InvertE4SwapsUV) {
  auto C = corpus::e4();
  auto inv = invert(C);
  EXPECT_EQ(inv("u"), Atom("v"));
  EXPECT_EQ(inv("v"), Atom("u"));
  EXPECT_EQ(inv("i0"), Atom("i0"));
  EXPECT_EQ(compose(inv, inv), FinMap::identity(C.X1));
  EXPECT_EQ(compose(C.d0, inv), C.d1);
  EXPECT_THROW(invert(corpus::two()), PreconditionError);
  auto D = corpus::disc2();
  EXPECT_EQ(invert(D), FinMap::identity(D.X1));
}

// Every category on small reflexive graphs: square test agrees with searching for inverses.
TEST(Groupoid, SquareAgreesWithBruteForce) {
  int seen = 0;
  for (const auto& g : reflexive_graphs(2, 4))
    for (const auto& C : category_structures(g)) {
      ASSERT_TRUE(validate_internal_category(C).ok()) << g.name;
      ASSERT_EQ(is_groupoid(C), is_groupoid_bruteforce(C)) << g.name;
      ++seen;
    }
  EXPECT_GT(seen, 20);
}

TEST(Fibrations, IdentityFunctorIsBoth) {
  auto F = identity_functor(corpus::two());
  EXPECT_TRUE(validate_functor(F).ok());
  EXPECT_TRUE(is_discrete_fibration(F));
  EXPECT_TRUE(is_discrete_cofibration(F));
}

TEST(Fibrations, CollapseToTerminal) {
  auto C = corpus::two();
  auto T = discrete_category(FinSet({"*"}), "1");
  InternalFunctor F{C, T, FinMap::constant(C.X0, T.X0, "*"), FinMap::constant(C.X1, T.X1, "*")};
  EXPECT_TRUE(validate_functor(F).ok());
  EXPECT_FALSE(is_discrete_fibration(F));
  EXPECT_FALSE(is_discrete_cofibration(F));
}

TEST(Dec, CounitIsDiscreteCofibration) {
  for (const auto& C : {corpus::two(), corpus::e4(), corpus::z2(), corpus::disc2()}) {
    auto [D, eps] = dec(C);
    EXPECT_TRUE(validate_internal_category(D).ok()) << C.name;
    EXPECT_TRUE(validate_functor(eps).ok()) << C.name;
    EXPECT_TRUE(is_discrete_cofibration(eps)) << C.name;
  }
}

TEST(Dec, OfTwoHasThreeObjects) {
  auto [D, eps] = dec(corpus::two());
  EXPECT_EQ(D.X0.size(), 3u);
  EXPECT_EQ(D.X1.size(), 4u);  // composable pairs (i0,i0), (i0,u), (u,i1), (i1,i1)
}

TEST(Dec, OfDiscreteIsDiscrete) {
  auto [D, eps] = dec(corpus::disc2());
  EXPECT_TRUE(is_discrete(D));
  EXPECT_EQ(D.X0.size(), 2u);
}

TEST(Dec, OfGroupoidIsKernelPairOfCodomain) {
  auto C = corpus::e4();
  auto [D, eps] = dec(C);
  auto R = kernel_pair_groupoid(C.d0);
  // Dec arrow (f,g) : gf → g corresponds to the pair (gf, g) of R[d0]
  auto iso1 = FinMap::build(D.X1, R.X1, [&](const Atom& p) { return Atom::pair(C.compose(p[0], p[1]), p[1]); });
  ASSERT_TRUE(iso1.bijective());
  InternalFunctor F{D, R, FinMap::identity(C.X1), iso1};
  EXPECT_TRUE(validate_functor(F).ok());
}

TEST(Dec, ReflectsGroupoidsExhaustively) {
  for (const auto& g : reflexive_graphs(2, 4))
    for (const auto& C : category_structures(g)) {
      auto [D, eps] = dec(C);
      ASSERT_TRUE(validate_internal_category(D).ok());
      ASSERT_TRUE(is_discrete_cofibration(eps));
      ASSERT_EQ(is_groupoid(D), is_groupoid(C)) << g.name;
    }
}

// A discrete fibration over a groupoid has groupoid domain.
TEST(Fibrations, OverE4DomainsAreGroupoids) {
  auto X = corpus::e4();
  int count = 0;
  for (const auto& g : reflexive_graphs(2, 4))
    for (const auto& C : category_structures(g))
      for (const auto& f0 : all_maps(C.X0, X.X0))
        for (const auto& f1 : all_maps(C.X1, X.X1)) {
          InternalFunctor F{C, X, f0, f1};
          if (!validate_functor(F).ok() || !is_discrete_fibration(F)) continue;
          ++count;
          ASSERT_TRUE(is_groupoid(C)) << g.name;
          ASSERT_TRUE(is_discrete_cofibration(F));
        }
  EXPECT_GT(count, 0);
}

TEST(Pt, CartesianSquares) {
  FinSet Y({"*"}), X({"p", "q"});
  auto g = FinMap::constant(X, Y, "*");
  auto t = FinMap::constant(Y, X, "p");
  auto A = pt_obj(g, t);
  EXPECT_TRUE(pt_is_cartesian(identity(A)));
  // collapsing the 2-element fiber onto the identity point
  auto B = pt_obj(FinMap::identity(Y), FinMap::identity(Y));
  Mor c{A, B, {FinMap::constant(X, Y, "*"), FinMap::identity(Y)}};
  ASSERT_FALSE(check_mor(Ambient::pt(), c));
  EXPECT_FALSE(pt_is_cartesian(c));
}

// P is closed under composition and left cancellable, exhaustively over small points.
TEST(Pt, ClassPClosureAndCancellation) {
  std::vector<Obj> objs;
  FinSet Y1({"y"}), Y2({"y", "w"});
  for (const auto& Y : {Y1, Y2})
    for (int extra = 0; extra <= 1; ++extra) {
      std::vector<Atom> xs;
      for (const auto& y : Y) xs.push_back(Atom::pair("t", y));
      if (extra) xs.push_back("e");
      FinSet X(xs);
      auto t = FinMap::build(Y, X, [](const Atom& y) { return Atom::pair("t", y); });
      for (const auto& g : all_maps(X, Y))
        if (compose(g, t) == FinMap::identity(Y)) objs.push_back(pt_obj(g, t));
    }
  auto amb = Ambient::pt();
  int triples = 0;
  for (const auto& A : objs)
    for (const auto& B : objs)
      for (const auto& f : hom(amb, A, B))
        for (const auto& C : objs)
          for (const auto& g : hom(amb, B, C)) {
            auto gf = compose(g, f);
            ASSERT_FALSE(check_mor(amb, gf));
            if (pt_is_cartesian(f) && pt_is_cartesian(g)) ASSERT_TRUE(pt_is_cartesian(gf));
            if (pt_is_cartesian(g) && pt_is_cartesian(gf)) ASSERT_TRUE(pt_is_cartesian(f));
            ++triples;
          }
  EXPECT_GT(triples, 100);
}

TEST(Presentation, DiscreteGraphWithProjection) {
  auto D = corpus::disc2();
  auto R = kernel_pair(D.d0);
  auto G = groupoid_from_presentation("disc", D.d0, D.d1, D.s0, R.p0);
  EXPECT_TRUE(is_discrete(G));
  EXPECT_TRUE(is_groupoid(G));
}

TEST(Presentation, RecoversE4) {
  auto C = corpus::e4();
  auto d2 = presentation_of(C);
  EXPECT_TRUE(check_presentation(C.d0, C.d1, C.s0, d2).ok());
  auto G = groupoid_from_presentation("E4", C.d0, C.d1, C.s0, d2);
  EXPECT_TRUE(same_tables(G, C));
}

TEST(Presentation, BrokenTableNamesTheLaw) {
  auto C = corpus::z2();
  auto R = kernel_pair(C.d0);
  // d2(α,β) = β satisfies the unit laws but not d2.R(d2)=d2.p2 on Z/2
  auto d2 = FinMap::build(R.R, C.X1, [&](const Atom& p) -> Atom { return p[0] == p[1] ? Atom("e") : p[1]; });
  auto cert = check_presentation(C.d0, C.d1, C.s0, d2);
  EXPECT_TRUE(cert.has_failure_containing("d2.R(d2)=d2.p2"));
  EXPECT_THROW(groupoid_from_presentation("x", C.d0, C.d1, C.s0, d2), LawError);
}

TEST(Presentation, CountsMatchGroupoidStructures) {
  for (const auto& g : reflexive_graphs(2, 4)) {
    int groupoids = 0;
    for (const auto& C : category_structures(g)) groupoids += is_groupoid(C);
    auto pres = presentation_structures(g);
    ASSERT_EQ(static_cast<int>(pres.size()), groupoids) << g.name;
    for (const auto& d2 : pres) {
      auto G = groupoid_from_presentation(g.name, g.d0, g.d1, g.s0, d2);
      ASSERT_TRUE(validate_internal_category(G).ok());
      ASSERT_EQ(presentation_of(G), d2);
    }
  }
}
