#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wb/setcat.hpp"

namespace wb {

/**
 * @brief Ground categories built from finite sets, with limits computed levelwise.
 *
 * Set: one level. Slice(B): one level plus a structure map into B.
 * Pt: two levels X (0) and Y (1) with g: X→Y and a section t: Y→X.
 */
enum class AmbientKind { Set, Slice, Pt };

struct Ambient {
  AmbientKind kind = AmbientKind::Set;
  FinSet base;

  static Ambient set() { return {}; }
  static Ambient slice(FinSet b) { return {AmbientKind::Slice, std::move(b)}; }
  static Ambient pt() { return {AmbientKind::Pt, {}}; }

  int levels() const { return kind == AmbientKind::Pt ? 2 : 1; }
  std::string name() const;
  friend bool operator==(const Ambient& a, const Ambient& b) { return a.kind == b.kind && a.base == b.base; }
};

struct Obj {
  std::vector<FinSet> lv;
  std::vector<FinMap> st;

  const FinSet& set() const { return lv.at(0); }
  std::size_t size() const;
  std::string str() const;
  friend bool operator==(const Obj& a, const Obj& b);
};

struct Mor {
  Obj dom, cod;
  std::vector<FinMap> lv;

  const FinMap& map() const { return lv.at(0); }
  std::string str() const;
  friend bool operator==(const Mor& a, const Mor& b);
};

Obj set_obj(FinSet x);
Obj slice_obj(FinMap h);
Obj pt_obj(FinMap g, FinMap t);
Mor set_mor(FinMap f);
/// Levelwise components must be typed between the level sets; structure is not checked here.
Mor make_mor(Obj dom, Obj cod, std::vector<FinMap> lv);

Mor identity(const Obj& x);
Mor compose(const Mor& g, const Mor& f);
template <class... Ms>
Mor compose(const Mor& h, const Mor& g, const Ms&... ms) {
  return compose(h, compose(g, ms...));
}
std::optional<std::string> difference(const Mor& a, const Mor& b);

/// nullopt when the object satisfies the ambient's structure equations.
std::optional<std::string> check_obj(const Ambient& amb, const Obj& x);
std::optional<std::string> check_mor(const Ambient& amb, const Mor& f);

struct AmbPullback {
  Obj P;
  Mor p1, p2;
};
AmbPullback pullback(const Ambient& amb, const Mor& f, const Mor& g);
Mor pair_into(const AmbPullback& pb, const Mor& a, const Mor& b);

/// Levelwise square check; the first failing level decides.
SquareCheck check_square(const Mor& top, const Mor& left, const Mor& right, const Mor& bottom);
bool is_equalizer(const Mor& e, const Mor& f, const Mor& g);
bool is_kernel_pair(const Mor& p0, const Mor& p1, const Mor& f);
bool is_iso(const Mor& f);
Mor inverse(const Mor& f);

/// Lifts a set map to a morphism of structured objects; checks compatibility.
std::vector<Mor> hom(const Ambient& amb, const Obj& x, const Obj& y);

}  // namespace wb
