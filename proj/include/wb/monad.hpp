#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "wb/ambient.hpp"
#include "wb/catkit.hpp"
#include "wb/certificate.hpp"

namespace wb {

/**
 * @brief Monad (T, λ, μ) on one of the finite ambients.
 *
 * T on objects is memoised per object identity, so T(T(X)) built twice shares its sets.
 * The memo is dropped wholesale once it holds too many elements; objects compare by content.
 */
class Monad {
 public:
  virtual ~Monad() = default;

  virtual std::string name() const = 0;
  const Ambient& ambient() const { return amb_; }

  Obj obj(const Obj& x) const;
  virtual Mor fmap(const Mor& f) const = 0;
  virtual Mor unit(const Obj& x) const = 0;
  virtual Mor mult(const Obj& x) const = 0;

  /// Largest word weight kept by a truncated monad, or -1.
  virtual int bound() const { return -1; }

  Obj obj2(const Obj& x) const { return obj(obj(x)); }

 protected:
  explicit Monad(Ambient amb) : amb_(std::move(amb)) {}
  virtual Obj obj_impl(const Obj& x) const = 0;

 private:
  Ambient amb_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<std::uintptr_t>, std::pair<Obj, Obj>> cache_;
  mutable std::size_t cached_elems_ = 0;
};

using MonadPtr = std::shared_ptr<const Monad>;

/// Monad on finite sets given elementwise.
class SetMonad : public Monad {
 public:
  Mor fmap(const Mor& f) const override;
  Mor unit(const Obj& x) const override;
  Mor mult(const Obj& x) const override;

  FinMap fmap(const FinMap& f) const { return fmap(set_mor(f)).map(); }
  FinSet T(const FinSet& x) const { return obj(set_obj(x)).set(); }

 protected:
  SetMonad() : Monad(Ambient::set()) {}
  Obj obj_impl(const Obj& x) const override { return set_obj(carrier(x.set())); }
  virtual FinSet carrier(const FinSet& x) const = 0;
  virtual Atom apply(const FinMap& f, const Atom& t) const = 0;
  virtual Atom eta(const FinSet& x, const Atom& a) const = 0;
  virtual Atom join(const FinSet& x, const Atom& tt) const = 0;
};

MonadPtr identity_monad(Ambient amb = Ambient::set());
/// T(X) = {[]} ∪ {[x]}; the broken variant sends the outer [] to [first x] under μ.
MonadPtr maybe_monad(bool broken = false);

struct MonoidTable {
  std::string name;
  FinSet elems;
  std::function<Atom(const Atom&, const Atom&)> op;
  Atom unit;
};
MonoidTable monoid_z2();
/// {0,1} under multiplication; 0 absorbs.
MonoidTable monoid_bool();
/// M × (−). unit_override replaces the monoid unit inside λ, which breaks the laws.
MonadPtr writer_monad(MonoidTable M, std::optional<Atom> unit_override = std::nullopt);
/// Free monoid truncated at word weight ≤ bound, weight = Σ max(1, grade of letter).
MonadPtr list_monad(int bound = 4);
int word_weight(const FinSet& letters, const Atom& w);

/// T_{X•} on FinSet/X0: T(h) = {(z,f) : d1 f = h z} over X0 by d0 f.
MonadPtr tx_monad(const InternalCategory& C);
/// The monad on split epimorphisms with G(g,t) = (p0 : R[g] → X, diagonal).
MonadPtr g_monad();

// ---- probes and certificates ----

struct Probes {
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;
  std::vector<std::pair<Mor, Mor>> cospans;
  std::string description;
};

/// Sets {a,...} of size ≤ n with every map between them; cospans over sets of size ≤ min(n,2).
Probes set_probes(int n);
/// Objects h : {z1..zk} → B (k ≤ n, h nondecreasing) with every slice map between them.
Probes slice_probes(const FinSet& base, int n);
/// Split epimorphisms of total size ≤ n, one per isomorphism class, with every Pt map.
Probes pt_probes(int n);
Probes default_probes(const Monad& M, int n);

std::string label(const Obj& x);
std::string label(const Mor& f);

Certificate validate_monad(const Monad& M, const Probes& probes);
/**
 * Richness of G on the probes: G preserves and reflects P-maps, σ and π are P-maps, and
 * (π_G, Gπ) with common section Gσ_G is the kernel pair of π whose levelwise coequalizer is π.
 * The coequalizer part is experimental.
 */
Certificate check_g_richness(const Monad& G, const Probes& probes);

using SigmaPredicate = std::function<bool(const Mor&)>;

struct CartesianCertificate {
  Certificate cert;
  std::size_t objects = 0, morphisms = 0, cospans = 0;
  bool preserves_pullbacks = true, lambda_cartesian = true, mu_cartesian = true;
  bool half_cartesian = true, hypercartesian = true;

  bool cartesian() const { return preserves_pullbacks && lambda_cartesian && mu_cartesian; }
};

/// sigma restricts the λ/μ naturality squares to maps of the class (Σ-cartesian variant).
CartesianCertificate certify_cartesian(const Monad& M, const Probes& probes, const SigmaPredicate& sigma = {});

// ---- algebras ----

struct Algebra {
  MonadPtr monad;
  Obj carrier;
  Mor xi;
};

Algebra free_algebra(const MonadPtr& T, const Obj& X);
Certificate validate_algebra(const Algebra& A);
bool is_algebra_morphism(const Algebra& A, const Algebra& B, const Mor& f);

}  // namespace wb
