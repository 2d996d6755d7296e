#pragma once

#include <array>
#include <optional>
#include <string>

#include "wb/kleisli.hpp"
#include "wb/simplicial.hpp"

namespace wb {

/**
 * @brief Pointed T-graph (d0, δ1, s0).
 *
 * d0 is the codomain leg in the base, δ1 : X1 → T(X0) the generalised domain.
 * Over the list monad δ1 is the input list and d0 the output.
 */
struct TGraph {
  MonadPtr monad;
  std::string name;
  Obj X0, X1;
  Mor d0, delta1, s0;
};

/// X2 = pb(δ1, T d0) with d0_1 = p1 and δ2 = p2.
AmbPullback tc_X2(const TGraph& g);

/// A certified T-category with its derived 3-truncated structure.
struct TCategory {
  TGraph g;
  Mor d1_1;

  AmbPullback pb2, pb3;
  Mor d0_1, delta2, s0_1, s1_1;
  Mor d0_2, d1_2, d2_2, delta3, s0_2, s1_2, s2_2;

  const MonadPtr& monad() const { return g.monad; }
  const std::string& name() const { return g.name; }
  const Obj& X0() const { return g.X0; }
  const Obj& X1() const { return g.X1; }
  const Obj& X2() const { return pb2.P; }
  const Obj& X3() const { return pb3.P; }
};

struct TCatBuild {
  std::optional<TCategory> cat;
  Certificate cert;
  bool ok() const { return cat.has_value() && cert.ok(); }
};

/// Builds X2, X3 and every derived map, certifying Axioms 1/4/7/8 and Observations 2/3/5/6 by name.
TCatBuild build_tcategory(const TGraph& g, const Mor& d1_1);
/// Throws LawError naming the first failed axiom.
TCategory make_tcategory(const TGraph& g, const Mor& d1_1);
/// d1_1 given elementwise on the canonical X2 (set ambient).
TCategory make_tcategory(const TGraph& g, const std::function<Atom(const Atom&)>& d1_1);
bool same_tcat(const TCategory& a, const TCategory& b);

/// (d0_1, d1_1) is the kernel pair of d0.
bool is_t_groupoid(const TCategory& C);

struct TFunctor {
  TCategory src, tgt;
  Mor f0, f1;
};
TFunctor identity_tfunctor(const TCategory& C);
Certificate validate_tfunctor(const TFunctor& F);
/// (f1, δ1, δ1, T f0) is a pullback: arrows are determined by their inputs.
bool is_discrete_tfibration(const TFunctor& F);

// ---- the Kleisli picture ----

struct KlCategory {
  MonadPtr monad;
  std::string name;
  std::array<Obj, 4> X;
  Truncated3<KleisliMor> t;
};

KlCategory tcat_to_kl(const TCategory& C);
/// Simplicial identities in Kl(T), plus d0-legs in the image of embed.
Certificate validate_kl_category(const KlCategory& K);
/// Throws PreconditionError("not a T-category presentation") when a leg that must come from the base fails in_E.
TCategory kl_to_tcat(const KlCategory& K, const CartesianCertificate& cert);

// ---- embeddings and adjoints ----

/// Cat(F̄^T): δ1 = λ d1, d1_1(x, λ f) = m(f, x). Set monads only.
TCategory tcat_of_category(const InternalCategory& C, const MonadPtr& T);
/// X1 = T(X), d0 = ξ, δ1 = 1, s0 = λ, d1_1 = μ on the second leg.
TCategory tc_embed_algebra(const Algebra& A);

struct Coreflection {
  InternalCategory R;
  TFunctor counit;
};
/// Arrows whose δ1 lies in the image of λ. Set monads only.
Coreflection r_coreflection(const TCategory& C);
/// F out of tcat_of_category(D) factors through the counit by a functor D → R.
bool factors_through(const TFunctor& F, const InternalCategory& D, const Coreflection& R);

struct TPullback {
  TCategory P;
  TFunctor p1, p2;
};
TPullback tcat_pullback(const TFunctor& f, const TFunctor& g);

struct DecTcat {
  InternalCategory D;
  TCategory dec;
  /// δ1 as the level-0 leg of the would-be counit; false in general.
  bool counit_leg_in_E = false;
};
DecTcat dec_tcat(const TCategory& C);

// ---- T_{X•}-categories and functors over X• ----

InternalFunctor tx_tcat_to_functor(const InternalCategory& C, const TCategory& A);
/// Throws PreconditionError when F is not a functor into C.
TCategory functor_to_tx_tcat(const MonadPtr& tx, const InternalFunctor& F);

// ---- G-categories and internal categories ----

/// Throws PreconditionError naming the leg that is not P-cartesian or not idomorphic.
InternalCategory gcat_to_category(const TCategory& A);
TCategory category_to_gcat(const MonadPtr& G, const InternalCategory& Y);

// ---- multicategories and operads ----

bool is_multicategory(const TCategory& C);
bool is_operad(const TCategory& C);
std::size_t arity(const TCategory& C, const Atom& x);

/// The slice monad on FinSet/X0 with T(h) = pb(δ1, T h). Set monads only.
MonadPtr txt_monad(const TCategory& C);
TFunctor txt_algebra_to_tfunctor(const TCategory& C, const Algebra& A);
Algebra tfunctor_to_txt_algebra(const MonadPtr& txt, const TFunctor& F);

namespace corpus {
/// One object, e of arity 1 and k of arity 0. The broken variant sets e∘[k] = e.
TCategory e7(bool broken = false, int bound = 4);
}  // namespace corpus

}  // namespace wb
