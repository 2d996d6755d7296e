#pragma once

#include "wb/catkit.hpp"
#include "wb/monad.hpp"

namespace wb {

/// Canonical functor over C read off an algebra of tx_monad(C): Y0 = Z, Y1 = T(h), d0 = ξ.
InternalFunctor algebra_to_dfib(const InternalCategory& C, const Algebra& A);
/// Inverse direction; throws PreconditionError unless F is a discrete fibration into C.
Algebra dfib_to_algebra(const MonadPtr& tx, const InternalFunctor& F);

/// ξ = (d2, d1) on G(d0, s0). The flag is raised when ξ is not P-cartesian.
struct GroupoidFromAlgebra {
  InternalCategory groupoid;
  bool contradiction = false;
};
GroupoidFromAlgebra g_algebra_to_groupoid(const Algebra& A, std::string name = {});
Algebra groupoid_to_g_algebra(const MonadPtr& G, const InternalCategory& C);
Obj reflexive_graph_obj(const InternalCategory& C);
/// All G-algebra structures on a split epimorphism, by search over Pt maps.
std::vector<Algebra> g_algebra_structures(const MonadPtr& G, const Obj& x);

/**
 * @brief Internal category on T(X) ⇇ T²(X) for an algebra of a set monad.
 *
 * d0 = T(ξ), d1 = μ_X, s0 = T(λ_X), composition T(μ_X) through T³(X) ≅ X2.
 * Throws PreconditionError when the μ square for ξ is not a pullback.
 */
InternalCategory tbar(const Algebra& A);
/// (T f, T² f) between the two categories.
InternalFunctor tbar_functor(const Algebra& A, const Algebra& B, const Mor& f);

}  // namespace wb
