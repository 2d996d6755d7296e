#pragma once

#include <functional>
#include <optional>
#include <string>

#include "wb/ambient.hpp"
#include "wb/certificate.hpp"
#include "wb/setcat.hpp"
#include "wb/simplicial.hpp"

namespace wb {

/**
 * @brief Internal category in finite sets.
 *
 * d1 is the domain, d0 the codomain. m is given on the canonical
 * X2 = {(f,g) : d0 f = d1 g}, so m(f,g) = g∘f.
 */
struct InternalCategory {
  std::string name;
  FinSet X0, X1;
  FinMap d0, d1, s0, m;

  FinSet X2() const;
  Atom compose(const Atom& f, const Atom& g) const { return m(Atom::pair(f, g)); }
  Atom id(const Atom& x) const { return s0(x); }
};

/// X2 with its projections d2 = p1 and d0 = p2.
Pullback composable(const FinMap& d0, const FinMap& d1);

InternalCategory make_category(std::string name, FinSet X0, FinSet X1, FinMap d0, FinMap d1, FinMap s0,
                               const std::function<Atom(const Atom&, const Atom&)>& comp);
InternalCategory discrete_category(const FinSet& X, std::string name = {});
/// R[f]• with (a,b) : a → b.
InternalCategory kernel_pair_groupoid(const FinMap& f, std::string name = {});

struct Nerve {
  std::array<FinSet, 4> X;
  Truncated3<FinMap> maps;
};

/// Builds levels up to 3; throws LawError when a lower identity fails and the level cannot be formed.
Nerve nerve(const InternalCategory& C);

struct FinMapOps {
  FinMap compose(const FinMap& g, const FinMap& f) const { return wb::compose(g, f); }
  std::optional<std::string> diff(const FinMap& a, const FinMap& b) const { return difference(a, b); }
};

Certificate validate_internal_category(const InternalCategory& C);
bool same_tables(const InternalCategory& a, const InternalCategory& b);

struct InternalFunctor {
  InternalCategory src, tgt;
  FinMap f0, f1;
};

InternalFunctor identity_functor(const InternalCategory& C);
Certificate validate_functor(const InternalFunctor& F);
bool is_discrete_fibration(const InternalFunctor& F);
bool is_discrete_cofibration(const InternalFunctor& F);

/// Square (m, d0 on X2, d0, d0) is a pullback.
bool is_groupoid(const InternalCategory& C);
/// Every arrow has a two-sided inverse, by search.
bool is_groupoid_bruteforce(const InternalCategory& C);
FinMap invert(const InternalCategory& C);

struct DecResult {
  InternalCategory dec;
  InternalFunctor eps;
};
DecResult dec(const InternalCategory& C);

bool is_discrete(const InternalCategory& C);

/// Square (top, g, g', bottom) of a Pt morphism is a pullback.
bool pt_is_cartesian(const Mor& sq);

/// d2 on R[d0]; laws of the presentation are checked by name.
Certificate check_presentation(const FinMap& d0, const FinMap& d1, const FinMap& s0, const FinMap& d2);
InternalCategory groupoid_from_presentation(std::string name, const FinMap& d0, const FinMap& d1, const FinMap& s0,
                                            const FinMap& d2);
/// d2(α,β) = α⁻¹∘β on pairs with a common codomain.
FinMap presentation_of(const InternalCategory& groupoid);

}  // namespace wb
