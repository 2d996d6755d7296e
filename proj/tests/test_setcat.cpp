#include <gtest/gtest.h>

#include "wb/setcat.hpp"

using namespace wb;

namespace {

FinSet S(std::initializer_list<const char*> xs) {
  std::vector<Atom> v;
  for (auto x : xs) v.emplace_back(x);
  return FinSet(v);
}

// Oracle: count pairs by nested loops over the raw tables.
std::size_t count_pairs(const FinMap& f, const FinMap& g) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    for (std::size_t j = 0; j < g.dom().size(); ++j)
      if (f.at(i) == g.at(j)) ++n;
  return n;
}

std::vector<FinSet> small_sets(int upto) {
  std::vector<FinSet> out;
  const char* names[] = {"a", "b", "c", "d"};
  for (int n = 0; n <= upto; ++n) {
    std::vector<Atom> v;
    for (int i = 0; i < n; ++i) v.emplace_back(names[i]);
    out.emplace_back(v);
  }
  return out;
}

}  // namespace

TEST(FinSet, CanonicalOrderAndDuplicates) {
  EXPECT_EQ(S({"b", "a"}), S({"a", "b"}));
  EXPECT_THROW(S({"a", "a"}), TypeError);
  EXPECT_EQ(S({"b", "a"}).at(0), Atom("a"));
}

TEST(FinMap, BuildRejectsImagesOutsideCodomain) {
  EXPECT_THROW(FinMap::build(S({"a"}), S({"b"}), [](const Atom&) { return Atom("z"); }), TypeError);
}

TEST(Pullback, IdentityCaseIsDiagonal) {
  auto X = S({"1", "2"});
  auto pb = pullback(FinMap::identity(X), FinMap::identity(X));
  EXPECT_EQ(pb.P, FinSet({Atom::pair("1", "1"), Atom::pair("2", "2")}));
}

TEST(Pullback, DisjointImagesGiveEmpty) {
  auto C = S({"0", "1"});
  auto f = FinMap::constant(S({"a", "b"}), C, "0");
  auto g = FinMap::constant(S({"c"}), C, "1");
  EXPECT_EQ(pullback(f, g).P.size(), 0u);
}

TEST(Pullback, OverAPointHasFourPairs) {
  auto O = S({"0"});
  auto f = FinMap::constant(S({"a", "b"}), O, "0");
  auto g = FinMap::constant(S({"c", "d"}), O, "0");
  EXPECT_EQ(pullback(f, g).P.size(), 4u);
}

TEST(Pullback, CodomainMismatchThrows) {
  auto f = FinMap::identity(S({"a"}));
  auto g = FinMap::identity(S({"b"}));
  EXPECT_THROW(pullback(f, g), TypeError);
}

TEST(Pullback, ExhaustiveCospansAreCertifiedAndSymmetric) {
  auto sets = small_sets(3);
  for (const auto& A : sets)
    for (const auto& B : sets)
      for (const auto& C : small_sets(2))
        for (const auto& f : all_maps(A, C))
          for (const auto& g : all_maps(B, C)) {
            auto pb = pullback(f, g);
            ASSERT_EQ(pb.P.size(), count_pairs(f, g));
            ASSERT_TRUE(is_pullback_square(pb.p2, pb.p1, g, f));
            auto sw = pullback(g, f);
            auto swap = FinMap::build(pb.P, sw.P, [](const Atom& p) { return Atom::pair(p[1], p[0]); });
            ASSERT_TRUE(swap.bijective());
          }
}

TEST(Square, IdentitiesArePullbacks) {
  auto X = S({"x", "y"});
  auto id = FinMap::identity(X);
  EXPECT_TRUE(is_pullback_square(id, id, id, id));
}

TEST(Square, CollapseIsNotAPullback) {
  auto X = S({"x", "y"});
  auto one = S({"x"});
  auto bang = FinMap::constant(X, one, "x");
  auto c = check_square(bang, bang, FinMap::identity(one), FinMap::identity(one));
  EXPECT_EQ(c.status, SquareStatus::NotPullback);
}

TEST(Square, NonCommutingReportedDistinctly) {
  auto X = S({"0", "1"});
  auto sw = FinMap::from_pairs(X, X, {{"0", "1"}, {"1", "0"}});
  auto id = FinMap::identity(X);
  EXPECT_EQ(check_square(id, id, id, sw).status, SquareStatus::NotCommuting);
}

TEST(Equalizer, EqualMapsGiveWholeDomain) {
  auto f = FinMap::constant(S({"a", "b"}), S({"0"}), "0");
  auto e = equalizer(f, f);
  EXPECT_EQ(e.E, f.dom());
  EXPECT_TRUE(e.e == FinMap::identity(f.dom()));
}

TEST(Equalizer, AgreementSet) {
  auto A = S({"a", "b"}), B = S({"0", "1"});
  auto f = FinMap::from_pairs(A, B, {{"a", "0"}, {"b", "0"}});
  auto g = FinMap::from_pairs(A, B, {{"a", "0"}, {"b", "1"}});
  EXPECT_EQ(equalizer(f, g).E, S({"a"}));
}

TEST(Equalizer, CosplitPairDisagreeingEverywhere) {
  // f, g : {a,b} → {a,b} × {0,1} sections of the common retraction pr1
  auto A = S({"a", "b"});
  FinSet B({Atom::pair("a", "0"), Atom::pair("a", "1"), Atom::pair("b", "0"), Atom::pair("b", "1")});
  auto f = FinMap::build(A, B, [](const Atom& x) { return Atom::pair(x, "0"); });
  auto g = FinMap::build(A, B, [](const Atom& x) { return Atom::pair(x, "1"); });
  auto r = FinMap::build(B, A, [](const Atom& p) { return p[0]; });
  ASSERT_EQ(compose(r, f), FinMap::identity(A));
  ASSERT_EQ(compose(r, g), FinMap::identity(A));
  EXPECT_EQ(equalizer(f, g).E.size(), 0u);
}

// Equalizer of a cosplit pair (f, g with common retraction r) via the pullback of f along g.
TEST(Equalizer, CosplitPairsAgreeWithPullbackConstruction) {
  for (const auto& A : small_sets(2))
    for (const auto& B : small_sets(3))
      for (const auto& f : all_maps(A, B))
        for (const auto& g : all_maps(A, B))
          for (const auto& r : all_maps(B, A)) {
            if (!(compose(r, f) == FinMap::identity(A)) || !(compose(r, g) == FinMap::identity(A))) continue;
            auto e = equalizer(f, g);
            auto pb = pullback(f, g);
            ASSERT_EQ(pb.P.size(), e.E.size());
            for (const auto& p : pb.P) ASSERT_EQ(p[0], p[1]);
            ASSERT_TRUE(is_equalizer(pb.p1, f, g));
            ASSERT_TRUE(is_equalizer(e.e, f, g));
          }
}

TEST(KernelPair, Sizes) {
  auto inj = FinMap::identity(S({"a", "b"}));
  auto kp = kernel_pair(inj);
  EXPECT_EQ(kp.R.size(), 2u);
  EXPECT_EQ(kp.p0, kp.p1);
  EXPECT_EQ(kernel_pair(FinMap::constant(S({"a", "b"}), S({"*"}), "*")).R.size(), 4u);
  auto f = FinMap::from_pairs(S({"a", "b", "c"}), S({"0", "1"}), {{"a", "0"}, {"b", "0"}, {"c", "1"}});
  auto k = kernel_pair(f);
  EXPECT_EQ(k.R.size(), 5u);
  EXPECT_TRUE(is_kernel_pair(k.p0, k.p1, f));
  EXPECT_EQ(compose(k.p0, k.s0), FinMap::identity(f.dom()));
}

TEST(Graded, PiecesAndFibers) {
  GradedSet M(S({"a", "b"}));
  EXPECT_EQ(M.piece(2).size(), 4u);
  EXPECT_EQ(GradedSet(FinSet()).upto(3).size(), 1u);

  // grade-0 delta: one (x, []) per x
  auto X0 = S({"*"});
  auto X1 = S({"u", "v"});
  auto d0 = FinMap::constant(X1, X0, "*");
  GradedMap flat{X1, GradedSet(X0), {Atom::word({}), Atom::word({})}};
  EXPECT_EQ(graded_pullback_fiber(flat, d0).P.size(), 2u);

  // grade 2 over a constant d0 on a 2-letter alphabet
  GradedMap two{S({"x"}), GradedSet(X0), {Atom::word({"*", "*"})}};
  EXPECT_EQ(graded_pullback_fiber(two, d0).P.size(), 4u);

  // the multicategory with e of arity 1 and k of arity 0
  auto E = S({"e", "k"});
  auto c = FinMap::constant(E, X0, "*");
  GradedMap delta{E, GradedSet(X0), {Atom::word({"*"}), Atom::word({})}};
  EXPECT_EQ(graded_pullback_fiber(delta, c).P.size(), 3u);
}
