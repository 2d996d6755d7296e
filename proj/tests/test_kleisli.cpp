#include <gtest/gtest.h>

#include "wb/corpus.hpp"
#include "wb/kleisli.hpp"

using namespace wb;

namespace {

Obj sset(std::initializer_list<const char*> xs) { return set_obj(FinSet(std::vector<Atom>(xs.begin(), xs.end()))); }
Atom bot() { return Atom::word({}); }
Atom just(const Atom& x) { return Atom::word({x}); }

KleisliMor partial(const MonadPtr& T, const Obj& X, const Obj& Y, const std::function<Atom(const Atom&)>& f) {
  auto TY = T->obj(Y);
  return kleisli(T, Y, make_mor(X, TY, {FinMap::build(X.set(), TY.set(), f)}));
}

}  // namespace

TEST(Kleisli, UnitLawAndAssociativityExhaustive) {
  for (const auto& T : {maybe_monad(), writer_monad(monoid_z2())}) {
    auto objs = set_probes(2).objects;
    for (const auto& X : objs)
      for (const auto& Y : objs) {
        for (const auto& a : kl_hom(T, X, Y)) {
          EXPECT_EQ(kl_compose(a, kl_identity(T, X)), a);
          EXPECT_EQ(kl_compose(kl_identity(T, Y), a), a);
        }
      }
    auto X = set_obj(FinSet({"a"}));
    auto Y = set_obj(FinSet({"a", "b"}));
    for (const auto& a : kl_hom(T, X, Y))
      for (const auto& b : kl_hom(T, Y, Y))
        for (const auto& c : kl_hom(T, Y, X)) {
          EXPECT_EQ(kl_compose(c, kl_compose(b, a)), kl_compose(kl_compose(c, b), a));
          EXPECT_EQ(forget(kl_compose(b, a)), compose(forget(b), forget(a)));
        }
  }
}

TEST(Kleisli, MaybeCompositionIsPartialComposition) {
  auto T = maybe_monad();
  auto X = sset({"a", "b"}), Y = sset({"p", "q"}), Z = sset({"u"});
  auto a = partial(T, X, Y, [](const Atom& x) { return x == Atom("a") ? just("p") : bot(); });
  auto b = partial(T, Y, Z, [](const Atom& y) { return y == Atom("p") ? just("u") : bot(); });
  auto ba = kl_compose(b, a);
  EXPECT_EQ(ba.support.map()("a"), just("u"));
  EXPECT_EQ(ba.support.map()("b"), bot());
  auto total = partial(T, Y, Z, [](const Atom&) { return just("u"); });
  EXPECT_EQ(kl_compose(total, a).support.map()("b"), bot());
}

TEST(Kleisli, EmbedIsFaithfulAndFunctorial) {
  auto T = maybe_monad();
  auto probes = set_probes(3);
  EXPECT_EQ(embed(T, identity(sset({"a"}))).support, T->unit(sset({"a"})));
  for (const auto& f : probes.morphisms) {
    EXPECT_EQ(forget(embed(T, f)), T->fmap(f));
    for (const auto& g : probes.morphisms) {
      if (f.dom == g.dom && f.cod == g.cod && !(f == g)) {
        EXPECT_FALSE(embed(T, f) == embed(T, g));
      }
      if (f.cod == g.dom) {
        EXPECT_EQ(embed(T, compose(g, f)), kl_compose(embed(T, g), embed(T, f)));
      }
    }
  }
}

TEST(Kleisli, Forget) {
  auto T = maybe_monad();
  auto X = sset({"a", "b"});
  EXPECT_EQ(forget(counit(T, X)), T->mult(X));
  auto a = partial(T, X, X, [](const Atom&) { return bot(); });
  auto fa = forget(a);
  for (const auto& t : fa.dom.set()) EXPECT_EQ(fa.map()(t), bot());
}

TEST(Kleisli, Membership) {
  auto T = maybe_monad();
  auto cert = certify_cartesian(*T, set_probes(2));
  ASSERT_TRUE(cert.half_cartesian);
  for (const auto& f : set_probes(2).morphisms) {
    auto m = in_E(embed(T, f), cert);
    ASSERT_TRUE(m.member);
    EXPECT_EQ(*m.witness, f);
  }
  auto X = sset({"a", "b"});
  auto a = partial(T, X, X, [](const Atom& x) { return x == Atom("a") ? bot() : just(x); });
  EXPECT_FALSE(in_E(a, cert).member);
  EXPECT_FALSE(in_E(counit(T, X), cert).member);
  CartesianCertificate none;
  none.half_cartesian = false;
  EXPECT_THROW(in_E(a, none), PreconditionError);
}

TEST(KleisliPullback, AlongEmbedRecoversBasePullback) {
  auto T = maybe_monad();
  auto probes = set_probes(2).objects;
  auto X = sset({"a", "b"}), Y = sset({"p", "q"}), U = sset({"u", "v"});
  auto f = make_mor(X, Y, {FinMap::from_pairs(X.set(), Y.set(), {{"a", "p"}, {"b", "p"}})});
  auto g = make_mor(U, Y, {FinMap::from_pairs(U.set(), Y.set(), {{"u", "p"}, {"v", "q"}})});
  auto pb = kl_pullback_along_E(T, f, embed(T, g));
  EXPECT_EQ(pb.V.size(), 2u);
  EXPECT_TRUE(in_E_unchecked(pb.phi).member);
  auto v = is_pullback_in_kl(pb.square, probes);
  EXPECT_TRUE(v.ok) << v.witness;
}

TEST(KleisliPullback, IdentityGivesIsomorphicSource) {
  auto T = maybe_monad();
  auto Y = sset({"p", "q"}), U = sset({"u", "v", "w"});
  auto psi = partial(T, U, Y, [](const Atom& u) { return u == Atom("w") ? bot() : just("p"); });
  auto pb = kl_pullback_along_E(T, identity(Y), psi);
  EXPECT_EQ(pb.V.size(), U.size());
  EXPECT_TRUE(is_iso(pb.h));
}

TEST(KleisliPullback, ConstantBottomAgainstInclusion) {
  auto T = maybe_monad();
  auto X = sset({"a"}), Y = sset({"a", "b"}), U = sset({"u", "v"});
  auto f = make_mor(X, Y, {FinMap::from_pairs(X.set(), Y.set(), {{"a", "a"}})});
  auto psi = partial(T, U, Y, [](const Atom&) { return bot(); });
  auto pb = kl_pullback_along_E(T, f, psi);
  std::size_t oracle = 0;
  auto Tf = T->fmap(f).map();
  auto TX = T->obj(X);
  for (const auto& u : U.set())
    for (const auto& w : TX.set()) oracle += Tf(w) == psi.support.map()(u);
  EXPECT_EQ(pb.V.size(), oracle);
  EXPECT_EQ(oracle, 2u);
  EXPECT_TRUE(is_pullback_in_kl(pb.square, set_probes(2).objects).ok);
}

TEST(KleisliPullback, ExhaustiveAndAgreesWithBruteForce) {
  for (const auto& T : {maybe_monad(), writer_monad(monoid_z2())}) {
    auto objs = set_probes(2).objects;
    std::vector<Obj> small(objs.begin(), objs.begin() + 2);
    for (const auto& f : set_probes(2).morphisms)
      for (const auto& U : objs)
        for (const auto& psi : kl_hom(T, U, f.cod)) {
          auto pb = kl_pullback_along_E(T, f, psi);
          auto fast = is_pullback_in_kl(pb.square, objs);
          EXPECT_TRUE(fast.ok) << fast.witness;
          if (pb.V.size() <= 2) EXPECT_TRUE(is_pullback_in_kl_bruteforce(pb.square, small).ok);
        }
  }
}

TEST(KleisliPullback, CollapseIsNotAPullback) {
  auto T = maybe_monad();
  auto X = sset({"a", "b"}), one = sset({"*"});
  auto bang = make_mor(X, one, {FinMap::constant(X.set(), one.set(), "*")});
  KlSquare sq{embed(T, bang), embed(T, bang), kl_identity(T, one), kl_identity(T, one)};
  auto probes = set_probes(1).objects;
  EXPECT_FALSE(is_pullback_in_kl(sq, probes).ok);
  EXPECT_FALSE(is_pullback_in_kl_bruteforce(sq, probes).ok);
}

TEST(KleisliEqualizer, UnitEqualizesItsTwoExtensions) {
  for (const auto& T : {maybe_monad(), list_monad(3)}) {
    auto X = sset({"a", "b"});
    auto TX = T->obj(X);
    auto e = embed(T, T->unit(X));
    auto a = embed(T, T->unit(TX));
    auto b = embed(T, T->fmap(T->unit(X)));
    auto v = is_equalizer_in_kl(e, a, b, set_probes(2).objects);
    EXPECT_TRUE(v.ok) << T->name() << " " << v.witness;
  }
}

TEST(LeftCancellable, MaybeExhaustive) {
  auto r = verify_left_cancellable(maybe_monad(), set_probes(3));
  EXPECT_GT(r.triples, 1000u);
  EXPECT_TRUE(r.ok()) << r.counterexamples.front();
  EXPECT_TRUE(verify_left_cancellable(identity_monad(), set_probes(2)).ok());
}

TEST(LeftCancellable, BrokenWriterRejectedAtPrecondition) {
  EXPECT_THROW(verify_left_cancellable(writer_monad(monoid_bool(), Atom("0")), set_probes(2)), PreconditionError);
}

TEST(LeftCancellable, ReflectsIsos) {
  auto r = verify_reflects_isos(maybe_monad(), set_probes(3));
  EXPECT_TRUE(r.ok());
}

TEST(KleisliOverSlices, TXPullbackBruteForce) {
  auto C = corpus::two();
  auto T = tx_monad(C);
  auto probes = slice_probes(C.X0, 1);
  int n = 0;
  for (const auto& f : probes.morphisms)
    for (const auto& U : probes.objects)
      for (const auto& psi : kl_hom(T, U, f.cod)) {
        auto pb = kl_pullback_along_E(T, f, psi);
        auto v = is_pullback_in_kl(pb.square, probes.objects);
        EXPECT_TRUE(v.ok) << v.witness;
        ++n;
      }
  EXPECT_GT(n, 3);
}
