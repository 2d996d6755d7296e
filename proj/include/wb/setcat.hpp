#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wb/atom.hpp"
#include "wb/error.hpp"

namespace wb {

/** @brief Finite set with canonically sorted atoms. Equality ignores the name. */
class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<Atom> elems, std::string name = {});
  /// Graded variant: each element carries a grade used by the list monad.
  static FinSet graded(std::vector<std::pair<Atom, int>> elems, std::string name = {});
  /// Sorts and drops duplicates instead of rejecting them.
  static FinSet dedup(std::vector<Atom> elems, std::string name = {});
  /// {p1, ..., pn}
  static FinSet range(int n, const std::string& prefix);

  const std::string& name() const;
  /// Identity of the shared representation; equal sets built separately differ here.
  const void* id() const { return r_.get(); }
  FinSet named(std::string name) const;

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const std::vector<Atom>& elems() const;
  const Atom& at(std::size_t i) const { return elems()[i]; }
  std::ptrdiff_t index(const Atom& a) const;
  bool contains(const Atom& a) const { return index(a) >= 0; }
  bool graded() const;
  int grade(std::size_t i) const;

  auto begin() const { return elems().begin(); }
  auto end() const { return elems().end(); }

  std::string str() const;

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  struct Rep;
  std::shared_ptr<const Rep> r_;
};

/** @brief Total function between finite sets stored as an index table. */
class FinMap {
 public:
  FinMap() = default;
  FinMap(FinSet dom, FinSet cod, std::vector<std::uint32_t> table);

  template <class F>
  static FinMap build(const FinSet& dom, const FinSet& cod, F&& f) {
    std::vector<std::uint32_t> t(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
      Atom y = f(dom.at(i));
      auto j = cod.index(y);
      if (j < 0) throw TypeError("image " + y.str() + " of " + dom.at(i).str() + " lies outside " + cod.str());
      t[i] = static_cast<std::uint32_t>(j);
    }
    return FinMap(dom, cod, std::move(t));
  }
  static FinMap identity(const FinSet& x);
  static FinMap from_pairs(const FinSet& dom, const FinSet& cod, const std::vector<std::pair<Atom, Atom>>& pairs);
  static FinMap constant(const FinSet& dom, const FinSet& cod, const Atom& y);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const std::vector<std::uint32_t>& table() const { return t_; }
  std::uint32_t at(std::size_t i) const { return t_[i]; }
  const Atom& operator()(const Atom& x) const;

  bool injective() const;
  bool surjective() const;
  bool bijective() const { return injective() && surjective(); }
  FinMap inverse() const;
  FinSet image() const;

  std::vector<std::pair<Atom, Atom>> pairs() const;
  std::string str() const;

  friend bool operator==(const FinMap& a, const FinMap& b);

 private:
  FinSet dom_, cod_;
  std::vector<std::uint32_t> t_;
};

/// g∘f
FinMap compose(const FinMap& g, const FinMap& f);
template <class... Fs>
FinMap compose(const FinMap& h, const FinMap& g, const Fs&... fs) {
  return compose(h, compose(g, fs...));
}

/// First element where two parallel maps differ, rendered for reports.
std::optional<std::string> difference(const FinMap& a, const FinMap& b);

struct Pullback {
  FinSet P;
  FinMap p1, p2;  // P→dom f, P→dom g
};

/// P = {(a,b) : f(a) = g(b)} with canonical pair atoms.
Pullback pullback(const FinMap& f, const FinMap& g);
/// ⟨a,b⟩: W → P; throws TypeError when (a w, b w) is not in P.
FinMap pair_into(const Pullback& pb, const FinMap& a, const FinMap& b);

enum class SquareStatus { Pullback, NotPullback, NotCommuting };

struct SquareCheck {
  SquareStatus status;
  std::string witness;
  bool ok() const { return status == SquareStatus::Pullback; }
};

/**
 * Square  A --top--> B
 *         |left      |right
 *         C --bot--> D
 */
SquareCheck check_square(const FinMap& top, const FinMap& left, const FinMap& right, const FinMap& bottom);
bool is_pullback_square(const FinMap& top, const FinMap& left, const FinMap& right, const FinMap& bottom);
bool commutes(const FinMap& top, const FinMap& left, const FinMap& right, const FinMap& bottom);

struct Equalizer {
  FinSet E;
  FinMap e;
};
Equalizer equalizer(const FinMap& f, const FinMap& g);
/// e is mono, equalizes (f,g), and its image is the whole agreement set.
bool is_equalizer(const FinMap& e, const FinMap& f, const FinMap& g);

struct KernelPair {
  FinSet R;
  FinMap p0, p1, s0;
};
KernelPair kernel_pair(const FinMap& f);
/// (p0,p1) is (isomorphic to) the kernel pair of f.
bool is_kernel_pair(const FinMap& p0, const FinMap& p1, const FinMap& f);

/// All maps dom→cod in lexicographic table order.
std::vector<FinMap> all_maps(const FinSet& dom, const FinSet& cod);
/// Calls fn on every map dom→cod; stops early when fn returns false.
void for_each_map(const FinSet& dom, const FinSet& cod, const std::function<bool(const FinMap&)>& fn);

// ---- graded sets (free monoid constructor) ----

/// Words over a base alphabet; piece(n) = words of length n.
class GradedSet {
 public:
  explicit GradedSet(FinSet base) : base_(std::move(base)) {}
  const FinSet& base() const { return base_; }
  std::string description() const { return "words over " + base_.str(); }
  FinSet piece(int n) const;
  /// Union of the pieces of grade ≤ bound, graded by length.
  FinSet upto(int bound) const;
  bool contains(const Atom& w) const;
  static int grade(const Atom& w) { return static_cast<int>(w.size()); }

 private:
  FinSet base_;
};

/// Map from a finite set into a graded set, stored as its word values.
struct GradedMap {
  FinSet dom;
  GradedSet cod;
  std::vector<Atom> table;
  const Atom& operator()(const Atom& x) const;
  int grade_of(const Atom& x) const { return GradedSet::grade((*this)(x)); }
};

/// M(f) on words.
Atom word_map(const FinMap& f, const Atom& w);

struct GradedPullback {
  FinSet P;
  FinMap p1;
  GradedMap p2;
};

/// P = {(x,w) : delta(x) = M(f)(w)}, enumerated fiberwise (each fiber is a product of finite fibers of f).
GradedPullback graded_pullback_fiber(const GradedMap& delta, const FinMap& f);

}  // namespace wb
