#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wb/monad.hpp"

namespace wb {

/// Morphism X ⇢ Y of Kl(T), carried by its support α : X → T(Y).
struct KleisliMor {
  MonadPtr monad;
  Obj src, tgt;
  Mor support;

  std::string str() const { return src.str() + " ~> " + tgt.str() + " via " + support.str(); }
  friend bool operator==(const KleisliMor& a, const KleisliMor& b) { return a.support == b.support && a.tgt == b.tgt; }
};

/// Throws TypeError unless support : src → T(tgt).
KleisliMor kleisli(const MonadPtr& T, const Obj& tgt, const Mor& support);
KleisliMor kl_compose(const KleisliMor& b, const KleisliMor& a);
template <class... Ks>
KleisliMor kl_compose(const KleisliMor& c, const KleisliMor& b, const Ks&... ks) {
  return kl_compose(c, kl_compose(b, ks...));
}
/// Support λ_Y ∘ f.
KleisliMor embed(const MonadPtr& T, const Mor& f);
KleisliMor kl_identity(const MonadPtr& T, const Obj& x);
/// ε_X : T(X) ⇢ X with support 1_{T(X)}.
KleisliMor counit(const MonadPtr& T, const Obj& x);
/// μ_Y ∘ T(α).
Mor forget(const KleisliMor& a);

struct Membership {
  bool member = false;
  std::optional<Mor> witness;
};
/// λ_{T(Y)}∘α = T(λ_Y)∘α, with the preimage under λ_Y as witness. Needs a half-cartesian certificate.
Membership in_E(const KleisliMor& a, const CartesianCertificate& cert);
/// Same test without the certificate gate.
Membership in_E_unchecked(const KleisliMor& a);

/// All Kleisli morphisms x ⇢ y.
std::vector<KleisliMor> kl_hom(const MonadPtr& T, const Obj& x, const Obj& y);

/// right∘top = bottom∘left, the same layout as check_square.
struct KlSquare {
  KleisliMor top, left, right, bottom;
};

struct KlVerdict {
  bool ok = false;
  std::string witness;
};

/**
 * @brief Universal property of a commuting Kleisli square against every probe object.
 *
 * Over finite sets Kleisli composition out of Z acts pointwise, so a cone from Z splits into
 * independent choices per element and the mediator count is a product of per-element counts.
 * Other ambients enumerate Kleisli homs outright.
 */
KlVerdict is_pullback_in_kl(const KlSquare& sq, const std::vector<Obj>& probes);
/// Plain enumeration of cones and mediators, for any ambient.
KlVerdict is_pullback_in_kl_bruteforce(const KlSquare& sq, const std::vector<Obj>& probes);
KlVerdict is_equalizer_in_kl(const KleisliMor& e, const KleisliMor& a, const KleisliMor& b,
                             const std::vector<Obj>& probes);

/// Pullback of embed(f) along ψ: base pullback V of (support ψ, T f), h = p1, φ = p2.
struct KlPullback {
  Obj V;
  Mor h;
  KleisliMor phi;
  KlSquare square;
};
KlPullback kl_pullback_along_E(const MonadPtr& T, const Mor& f, const KleisliMor& psi);

struct CancellabilityReport {
  std::size_t triples = 0;
  std::vector<std::string> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};
/// Throws PreconditionError unless the monad laws hold on the probes and λ is cartesian.
CancellabilityReport verify_left_cancellable(const MonadPtr& T, const Probes& probes);
/// Maps f whose embedding has a Kleisli inverse but f itself is not invertible.
CancellabilityReport verify_reflects_isos(const MonadPtr& T, const Probes& probes);

}  // namespace wb
