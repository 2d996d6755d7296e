#pragma once

#include <string>
#include <vector>

#include "wb/catkit.hpp"
#include "wb/monad.hpp"

namespace wb {

struct ReflexiveGraph {
  std::string name;
  FinSet X0, X1;
  FinMap d0, d1, s0;
};

ReflexiveGraph graph_of(const InternalCategory& C);

/**
 * Reflexive graphs with at most max_objects objects and max_arrows arrows in total.
 * Identities are i0, i1; extra arrows a, b, c with endpoint pairs listed in nondecreasing order.
 */
std::vector<ReflexiveGraph> reflexive_graphs(int max_objects, int max_arrows);

/// Every composition making the graph a category, by backtracking over integer tables.
std::vector<InternalCategory> category_structures(const ReflexiveGraph& g);

/// Every d2 : R[d0] → X1 satisfying the groupoid presentation laws.
std::vector<FinMap> presentation_structures(const ReflexiveGraph& g);

/// Categories on the reflexive graphs with at most two objects.
std::vector<InternalCategory> small_categories(int max_arrows);

/// h : Z → B nondecreasing with |Z| ≤ n, one per isomorphism class over B.
std::vector<Obj> slice_objects(const FinSet& base, int n);
/// Every algebra structure on x, by search over hom(T x, x).
std::vector<Algebra> algebras_on(const MonadPtr& T, const Obj& x);

/// Arrows of the total category of a discrete fibration over h : Z → X0, as pairs (z,f) with d1 f = h z.
FinSet lifts(const InternalCategory& X, const FinMap& h);
/// Every discrete fibration into X with object map h, built directly from the lifting property.
std::vector<InternalFunctor> discrete_fibrations_over(const InternalCategory& X, const FinMap& h);

}  // namespace wb
