#include "wb/kleisli.hpp"

#include <map>

namespace wb {

namespace {

std::vector<std::uint32_t> key(const Mor& m) {
  std::vector<std::uint32_t> k;
  for (const auto& l : m.lv) {
    k.insert(k.end(), l.table().begin(), l.table().end());
    k.push_back(~0u);
  }
  return k;
}

bool nonempty(const std::vector<Obj>& probes) {
  for (const auto& z : probes)
    if (z.size() > 0) return true;
  return false;
}

}  // namespace

KleisliMor kleisli(const MonadPtr& T, const Obj& tgt, const Mor& support) {
  if (!(support.cod == T->obj(tgt))) throw TypeError("support does not land in T(" + label(tgt) + ")");
  return {T, support.dom, tgt, support};
}

KleisliMor kl_compose(const KleisliMor& b, const KleisliMor& a) {
  if (a.monad != b.monad) throw TypeError("Kleisli morphisms over different monads");
  if (!(a.tgt == b.src)) throw TypeError("Kleisli morphisms do not chain: " + label(a.tgt) + " vs " + label(b.src));
  const auto& T = *a.monad;
  return {a.monad, a.src, b.tgt, compose(T.mult(b.tgt), T.fmap(b.support), a.support)};
}

KleisliMor embed(const MonadPtr& T, const Mor& f) { return {T, f.dom, f.cod, compose(T->unit(f.cod), f)}; }

KleisliMor kl_identity(const MonadPtr& T, const Obj& x) { return embed(T, identity(x)); }

KleisliMor counit(const MonadPtr& T, const Obj& x) {
  auto TX = T->obj(x);
  return {T, TX, x, identity(TX)};
}

Mor forget(const KleisliMor& a) {
  const auto& T = *a.monad;
  return compose(T.mult(a.tgt), T.fmap(a.support));
}

Membership in_E_unchecked(const KleisliMor& a) {
  const auto& T = *a.monad;
  auto lam = T.unit(a.tgt);
  auto TY = T.obj(a.tgt);
  Membership out;
  out.member = compose(T.unit(TY), a.support) == compose(T.fmap(lam), a.support);
  std::vector<FinMap> lv;
  for (std::size_t i = 0; i < a.support.lv.size(); ++i) {
    const auto& s = a.support.lv[i];
    const auto& l = lam.lv[i];
    std::vector<std::int64_t> pre(l.cod().size(), -1);
    for (std::size_t j = 0; j < l.dom().size(); ++j) pre[l.at(j)] = static_cast<std::int64_t>(j);
    std::vector<std::uint32_t> t(s.dom().size());
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (pre[s.at(j)] < 0) return out;
      t[j] = static_cast<std::uint32_t>(pre[s.at(j)]);
    }
    lv.emplace_back(s.dom(), l.dom(), std::move(t));
  }
  out.witness = make_mor(a.src, a.tgt, std::move(lv));
  return out;
}

Membership in_E(const KleisliMor& a, const CartesianCertificate& cert) {
  if (!cert.half_cartesian) throw PreconditionError(a.monad->name() + " has no half-cartesian certificate");
  return in_E_unchecked(a);
}

std::vector<KleisliMor> kl_hom(const MonadPtr& T, const Obj& x, const Obj& y) {
  std::vector<KleisliMor> out;
  for (auto& s : hom(T->ambient(), x, T->obj(y))) out.push_back({T, x, y, std::move(s)});
  return out;
}

KlVerdict is_pullback_in_kl_bruteforce(const KlSquare& sq, const std::vector<Obj>& probes) {
  if (!(kl_compose(sq.right, sq.top) == kl_compose(sq.bottom, sq.left))) return {false, "square does not commute"};
  const auto& T = sq.top.monad;
  for (const auto& Z : probes) {
    std::map<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>, int> mediators;
    for (const auto& m : kl_hom(T, Z, sq.top.src))
      ++mediators[{key(kl_compose(sq.left, m).support), key(kl_compose(sq.top, m).support)}];
    for (const auto& a : kl_hom(T, Z, sq.left.tgt)) {
      auto ba = kl_compose(sq.bottom, a).support;
      for (const auto& b : kl_hom(T, Z, sq.top.tgt)) {
        if (!(kl_compose(sq.right, b).support == ba)) continue;
        auto it = mediators.find({key(a.support), key(b.support)});
        int n = it == mediators.end() ? 0 : it->second;
        if (n != 1)
          return {false, "cone from " + label(Z) + " (" + a.support.str() + ", " + b.support.str() + ") has " +
                             std::to_string(n) + " mediators"};
      }
    }
  }
  return {true, ""};
}

KlVerdict is_pullback_in_kl(const KlSquare& sq, const std::vector<Obj>& probes) {
  if (sq.top.monad->ambient().kind != AmbientKind::Set) return is_pullback_in_kl_bruteforce(sq, probes);
  if (!(kl_compose(sq.right, sq.top) == kl_compose(sq.bottom, sq.left))) return {false, "square does not commute"};
  if (!nonempty(probes)) return {true, ""};
  auto s = check_square(forget(sq.top), forget(sq.left), forget(sq.right), forget(sq.bottom));
  return {s.ok(), s.ok() ? "" : "pointwise cone: " + s.witness};
}

KlVerdict is_equalizer_in_kl(const KleisliMor& e, const KleisliMor& a, const KleisliMor& b,
                             const std::vector<Obj>& probes) {
  if (!(kl_compose(a, e) == kl_compose(b, e))) return {false, "e does not equalize the pair"};
  const auto& T = e.monad;
  if (T->ambient().kind == AmbientKind::Set) {
    if (!nonempty(probes)) return {true, ""};
    bool ok = is_equalizer(forget(e), forget(a), forget(b));
    return {ok, ok ? "" : "pointwise equalizer fails"};
  }
  for (const auto& Z : probes) {
    std::map<std::vector<std::uint32_t>, int> mediators;
    for (const auto& m : kl_hom(T, Z, e.src)) ++mediators[key(kl_compose(e, m).support)];
    for (const auto& k : kl_hom(T, Z, a.src)) {
      if (!(kl_compose(a, k) == kl_compose(b, k))) continue;
      auto it = mediators.find(key(k.support));
      int n = it == mediators.end() ? 0 : it->second;
      if (n != 1) return {false, "fork " + k.support.str() + " has " + std::to_string(n) + " mediators"};
    }
  }
  return {true, ""};
}

KlPullback kl_pullback_along_E(const MonadPtr& T, const Mor& f, const KleisliMor& psi) {
  if (!(psi.tgt == f.cod)) throw TypeError("psi and f have different targets");
  auto pb = pullback(T->ambient(), psi.support, T->fmap(f));
  KlPullback out;
  out.V = pb.P;
  out.h = pb.p1;
  out.phi = {T, pb.P, f.dom, pb.p2};
  out.square = {out.phi, embed(T, pb.p1), embed(T, f), psi};
  return out;
}

CancellabilityReport verify_left_cancellable(const MonadPtr& T, const Probes& probes) {
  auto laws = validate_monad(*T, probes);
  if (auto f = laws.first_failure()) throw PreconditionError(T->name() + " fails " + f->name);
  auto cc = certify_cartesian(*T, probes);
  if (!cc.lambda_cartesian) throw PreconditionError("lambda is not cartesian for " + T->name());
  CancellabilityReport r;
  const auto& amb = T->ambient();
  for (const auto& X : probes.objects)
    for (const auto& Y : probes.objects) {
      auto phis = kl_hom(T, X, Y);
      for (const auto& Z : probes.objects)
        for (const auto& g : hom(amb, Y, Z))
          for (const auto& phi : phis) {
            ++r.triples;
            if (!in_E_unchecked(kl_compose(embed(T, g), phi)).member) continue;
            if (!in_E_unchecked(phi).member)
              r.counterexamples.push_back("g=" + g.str() + ", phi=" + phi.support.str());
          }
    }
  return r;
}

CancellabilityReport verify_reflects_isos(const MonadPtr& T, const Probes& probes) {
  CancellabilityReport r;
  for (const auto& f : probes.morphisms) {
    ++r.triples;
    auto ef = embed(T, f);
    for (const auto& k : kl_hom(T, f.cod, f.dom)) {
      if (!(kl_compose(k, ef) == kl_identity(T, f.dom)) || !(kl_compose(ef, k) == kl_identity(T, f.cod))) continue;
      if (!is_iso(f) || !in_E_unchecked(k).member) r.counterexamples.push_back(f.str());
    }
  }
  return r;
}

}  // namespace wb
