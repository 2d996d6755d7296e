#include "wb/suites.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "wb/algebras.hpp"
#include "wb/corpus.hpp"
#include "wb/enumerate.hpp"
#include "wb/kleisli.hpp"
#include "wb/tcat.hpp"

namespace wb {

namespace {

/// One check accumulated over many instances; keeps the first witness.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  void operator()(bool ok, const std::function<std::string()>& witness = {}) {
    ++n_;
    if (ok) return;
    if (bad_++ == 0 && witness) witness_ = witness();
  }
  void fail(const std::string& witness) { operator()(false, [&] { return witness; }); }
  std::size_t instances() const { return n_; }
  void into(SuiteReport& r) const {
    r.cert.add(name_, bad_ == 0 && n_ > 0, bad_ ? std::to_string(bad_) + " bad, first " + witness_
                                                 : n_ ? "" : "no instances");
    r.counts.emplace_back(name_, n_);
  }

 private:
  std::string name_;
  std::size_t n_ = 0, bad_ = 0;
  std::string witness_;
};

std::string first_fail(const Certificate& c) {
  auto f = c.first_failure();
  return f ? f->name + ": " + f->witness : std::string();
}

void verdict(SuiteReport& r, std::string name, bool ok, std::string witness = {}) {
  r.cert.add(std::move(name), ok, ok ? std::string() : std::move(witness));
}

void add_cert(SuiteReport& r, const std::string& prefix, const Certificate& c) {
  verdict(r, prefix, c.ok(), first_fail(c));
  r.counts.emplace_back(prefix, c.checks.size());
}

template <class F>
std::string guarded(F&& f) {
  try {
    f();
    return {};
  } catch (const std::exception& e) {
    return e.what();
  }
}

// ---- 1 ----

void monad_laws(SuiteReport& r, const SuiteOptions& o) {
  auto sets = set_probes(o.probe_size);
  for (const auto& T : {identity_monad(), maybe_monad(), writer_monad(monoid_z2()), list_monad(o.grade_bound)})
    add_cert(r, T->name(), validate_monad(*T, sets));
  for (const auto& X : {corpus::two(), corpus::e4()}) {
    auto T = tx_monad(X);
    add_cert(r, T->name(), validate_monad(*T, slice_probes(X.X0, o.probe_size)));
  }
  auto G = g_monad();
  add_cert(r, G->name(), validate_monad(*G, pt_probes(o.probe_size + 1)));
  Tally neg("negative controls rejected");
  neg(!validate_monad(*maybe_monad(true), set_probes(2)).ok());
  neg(!validate_monad(*writer_monad(monoid_bool(), Atom("0")), set_probes(2)).ok());
  neg.into(r);
}

// ---- 2 ----

void cartesian(SuiteReport& r, const SuiteOptions& o) {
  auto sets = set_probes(o.probe_size);
  for (const auto& T : {maybe_monad(), writer_monad(monoid_z2()), list_monad(o.grade_bound)}) {
    auto cc = certify_cartesian(*T, sets);
    verdict(r, T->name() + " cartesian", cc.cartesian(), first_fail(cc.cert));
    r.counts.emplace_back(T->name() + " cospans", cc.cospans);
  }
  Tally match("hypercartesian(TX) = is_groupoid(X)");
  for (const auto& X : {corpus::two(), corpus::e4(), corpus::z2(), corpus::disc2()}) {
    auto T = tx_monad(X);
    auto cc = certify_cartesian(*T, slice_probes(X.X0, 2));
    verdict(r, T->name() + " cartesian", cc.cartesian(), first_fail(cc.cert));
    match(cc.hypercartesian == is_groupoid(X), [&] { return X.name; });
  }
  for (const auto& X : small_categories(3)) {
    auto cc = certify_cartesian(*tx_monad(X), slice_probes(X.X0, 2));
    match(cc.cartesian() && cc.hypercartesian == is_groupoid(X), [&] { return X.name; });
  }
  match.into(r);
}

// ---- 3 ----

void kleisli_calculus(SuiteReport& r, const SuiteOptions& o) {
  auto T = maybe_monad();
  auto probes = set_probes(o.probe_size);
  auto cert = certify_cartesian(*T, probes);
  verdict(r, "maybe half-cartesian", cert.half_cartesian, first_fail(cert.cert));

  Tally member("in_E = image of embed");
  for (const auto& X : probes.objects)
    for (const auto& Y : probes.objects) {
      std::vector<KleisliMor> image;
      for (const auto& f : hom(T->ambient(), X, Y)) image.push_back(embed(T, f));
      for (const auto& a : kl_hom(T, X, Y)) {
        bool in_image = false;
        for (const auto& e : image) in_image |= e == a;
        auto m = in_E(a, cert);
        bool ok = m.member == in_image && (!m.member || embed(T, *m.witness) == a);
        member(ok, [&] { return a.str(); });
      }
    }
  member.into(r);

  Tally cancel("left cancellable");
  auto lc = verify_left_cancellable(T, probes);
  cancel(lc.ok(), [&] { return lc.counterexamples.front(); });
  cancel.into(r);
  r.counts.emplace_back("cancellability triples", lc.triples);

  Tally pb("kl_pullback_along_E is a pullback");
  for (const auto& f : probes.morphisms)
    for (const auto& U : probes.objects)
      for (const auto& psi : kl_hom(T, U, f.cod)) {
        auto p = kl_pullback_along_E(T, f, psi);
        auto v = is_pullback_in_kl(p.square, probes.objects);
        pb(v.ok, [&] { return f.str() + " / " + psi.str() + ": " + v.witness; });
      }
  pb.into(r);

  Tally iso("embed reflects isos");
  auto ri = verify_reflects_isos(T, probes);
  iso(ri.ok(), [&] { return ri.counterexamples.front(); });
  iso.into(r);
  r.counts.emplace_back("iso candidates", ri.triples);
}

// ---- 4 ----

void carac(SuiteReport& r, const SuiteOptions&) {
  auto G = g_monad();
  Tally counts("G-algebras = groupoids per graph");
  Tally forth("groupoid -> algebra -> groupoid");
  Tally back("algebra -> groupoid -> algebra");
  std::size_t groupoids_total = 0;
  for (const auto& g : reflexive_graphs(2, 4)) {
    std::size_t groupoids = 0;
    for (const auto& C : category_structures(g)) {
      if (!is_groupoid(C)) continue;
      ++groupoids;
      auto A = groupoid_to_g_algebra(G, C);
      auto gr = g_algebra_to_groupoid(A, C.name);
      forth(validate_algebra(A).ok() && !gr.contradiction && same_tables(gr.groupoid, C), [&] { return C.name; });
    }
    std::size_t algebras = 0;
    for (const auto& A : g_algebra_structures(G, pt_obj(g.d0, g.s0))) {
      if (!(A.xi.lv[1] == g.d1)) continue;
      ++algebras;
      auto gr = g_algebra_to_groupoid(A, g.name);
      back(!gr.contradiction && groupoid_to_g_algebra(G, gr.groupoid).xi == A.xi, [&] { return g.name; });
    }
    counts(algebras == groupoids,
           [&] { return g.name + ": " + std::to_string(algebras) + " vs " + std::to_string(groupoids); });
    groupoids_total += groupoids;
  }
  counts.into(r);
  forth.into(r);
  back.into(r);
  r.counts.emplace_back("groupoid structures", groupoids_total);

  auto E = corpus::e4();
  std::size_t on_e4 = 0;
  for (const auto& A : g_algebra_structures(G, reflexive_graph_obj(E))) on_e4 += A.xi.lv[1] == E.d1;
  verdict(r, "E4 graph carries 1 G-algebra", on_e4 == 1, std::to_string(on_e4));
}

// ---- 5 ----

struct CorpusTcat {
  TCategory C;
  CartesianCertificate cert;
};

std::vector<CorpusTcat> mmain_corpus() {
  std::vector<CorpusTcat> out;
  auto E7 = corpus::e7();
  out.push_back({E7, certify_cartesian(*E7.monad(), set_probes(2))});
  auto M = maybe_monad();
  auto W = writer_monad(monoid_z2());
  auto a = set_obj(FinSet({"a"}));
  auto star = set_obj(FinSet({"*"}));
  auto mc = certify_cartesian(*M, set_probes(2));
  out.push_back({tc_embed_algebra(free_algebra(M, a)), mc});
  out.push_back({tc_embed_algebra({M, star, make_mor(M->obj(star), star, {FinMap::constant(M->obj(star).set(), star.set(), "*")})}), mc});
  out.push_back({tc_embed_algebra(free_algebra(W, a)), certify_cartesian(*W, set_probes(2))});
  for (const auto& X : {corpus::two(), corpus::e4()}) {
    auto T = tx_monad(X);
    auto cert = certify_cartesian(*T, slice_probes(X.X0, 2));
    for (const auto& F : {identity_functor(X), dec(X).eps}) out.push_back({functor_to_tx_tcat(T, F), cert});
  }
  return out;
}

void mmain(SuiteReport& r, const SuiteOptions&) {
  Tally valid("Kl presentation validates");
  Tally round("forward/backward round trip");
  Tally reject("backward rejects non-E d0-leg");
  for (const auto& [C, cert] : mmain_corpus()) {
    auto K = tcat_to_kl(C);
    auto v = validate_kl_category(K);
    valid(v.ok(), [&] { return C.name() + " " + first_fail(v); });
    bool same = false;
    auto err = guarded([&] { same = same_tcat(kl_to_tcat(K, cert), C); });
    round(same, [&] { return C.name() + " " + err; });
    auto bad = K;
    bad.t.d[1][0] = bad.t.d[1][1];
    bool rejected = false;
    try {
      kl_to_tcat(bad, cert);
    } catch (const PreconditionError& e) {
      rejected = std::string(e.what()).find("not a T-category presentation") != std::string::npos;
    }
    reject(rejected, [&] { return C.name(); });
  }
  valid.into(r);
  round.into(r);
  reject.into(r);
}

// ---- 6 ----

void dfib(SuiteReport& r, const SuiteOptions&) {
  Tally counts("algebras = discrete fibrations per carrier");
  Tally bij("translate_algebra_dfib bijects");
  Tally grp("dfib over E4 has groupoid domain");
  std::size_t total = 0;
  for (const auto& X : {corpus::two(), corpus::e4()}) {
    auto T = tx_monad(X);
    for (const auto& h : slice_objects(X.X0, 5)) {
      auto P = lifts(X, h.st[0]);
      if (h.size() + P.size() > 6) continue;
      auto oracle = discrete_fibrations_over(X, h.st[0]);
      auto algebras = algebras_on(T, h);
      counts(algebras.size() == oracle.size(), [&] {
        return X.name + " " + h.str() + ": " + std::to_string(algebras.size()) + " vs " + std::to_string(oracle.size());
      });
      total += oracle.size();
      std::set<std::vector<std::uint32_t>> expected;
      for (const auto& F : oracle) expected.insert(F.src.d0.table());
      std::set<std::vector<std::uint32_t>> seen;
      for (const auto& A : algebras) {
        auto F = algebra_to_dfib(X, A);
        bool ok = validate_functor(F).ok() && is_discrete_fibration(F) && F.src.X1 == P &&
                  expected.count(F.src.d0.table()) && seen.insert(F.src.d0.table()).second &&
                  dfib_to_algebra(T, F).xi == A.xi;
        bij(ok, [&] { return X.name + " " + A.xi.str(); });
      }
      if (X.name == corpus::e4().name)
        for (const auto& F : oracle) grp(is_groupoid(F.src), [&] { return F.src.d0.str(); });
    }
  }
  counts.into(r);
  bij.into(r);
  grp.into(r);
  r.counts.emplace_back("discrete fibrations", total);
}

// ---- 7 ----

void mmmain(SuiteReport& r, const SuiteOptions&) {
  auto G = g_monad();
  Tally round("translate_gcat_cat round trip");
  auto cats = small_categories(4);
  for (const auto& C : {corpus::two(), corpus::e4(), corpus::z2(), corpus::disc2()}) cats.push_back(C);
  for (const auto& Y : cats) {
    bool ok = false;
    auto err = guarded([&] {
      auto A = category_to_gcat(G, Y);
      auto back = gcat_to_category(A);
      ok = same_tables(back, Y) && same_tcat(category_to_gcat(G, back), A);
    });
    round(ok, [&] { return Y.name + " " + err; });
  }
  round.into(r);

  Tally reject("rejects non-idomorphic 1-leg");
  for (const auto& Y : {corpus::two(), corpus::e4(), corpus::z2()}) {
    auto B = category_to_gcat(G, Y);
    const auto& X0 = B.X0().lv[0];
    B.g.delta1.lv[1] = FinMap::build(B.g.delta1.lv[1].dom(), B.g.delta1.lv[1].cod(),
                                     [&](const Atom& x) { return X0.at((X0.index(x) + 1) % X0.size()); });
    bool rejected = false;
    try {
      gcat_to_category(B);
    } catch (const PreconditionError& e) {
      rejected = std::string(e.what()).find("idomorphic") != std::string::npos;
    }
    reject(rejected, [&] { return Y.name; });
  }
  reject.into(r);
}

// ---- 8 ----

void tx_tcat(SuiteReport& r, const SuiteOptions&) {
  Tally round("translate_TX_tcat round trip");
  Tally ttxg("T-groupoid iff groupoid domain");
  auto check = [&](const InternalCategory& X, const InternalFunctor& F, bool count_round) {
    auto T = tx_monad(X);
    bool ok = false, match = false;
    auto err = guarded([&] {
      auto A = functor_to_tx_tcat(T, F);
      auto G = tx_tcat_to_functor(X, A);
      ok = same_tables(G.src, F.src) && G.f0 == F.f0 && G.f1 == F.f1 && same_tcat(functor_to_tx_tcat(T, G), A);
      match = is_t_groupoid(A) == is_groupoid(F.src);
    });
    if (count_round) round(ok, [&] { return F.src.name + " -> " + X.name + " " + err; });
    ttxg(match, [&] { return F.src.name + " -> " + X.name + " " + err; });
  };
  auto two = corpus::two(), e4 = corpus::e4();
  auto disc = discrete_category(two.X0, "disc");
  check(two, identity_functor(two), true);
  check(two, dec(two).eps, true);
  check(two, InternalFunctor{disc, two, FinMap::identity(two.X0), two.s0}, true);
  check(e4, identity_functor(e4), true);
  check(e4, dec(e4).eps, true);
  // every functor from a small category into 𝟚 or E4
  for (const auto& Y : small_categories(3))
    for (const auto& X : {two, e4})
      for_each_map(Y.X0, X.X0, [&](const FinMap& f0) {
        for_each_map(Y.X1, X.X1, [&](const FinMap& f1) {
          InternalFunctor F{Y, X, f0, f1};
          if (validate_functor(F).ok()) check(X, F, false);
          return true;
        });
        return true;
      });
  round.into(r);
  ttxg.into(r);
}

// ---- 9 ----

/// Discrete T-fibrations into C over h : Z → X0, with Y1 = {(w, x) : T(h) w = δ1 x} and d0 chosen freely.
std::size_t tfibration_oracle(const TCategory& C, const Obj& h) {
  const auto& T = C.monad();
  auto Z = set_obj(h.set());
  auto TZ = T->obj(Z);
  auto Th = T->fmap(set_mor(h.st[0])).map();
  std::vector<Atom> ys;
  for (const auto& w : TZ.set())
    for (const auto& x : C.X1().set())
      if (Th(w) == C.g.delta1.map()(x)) ys.push_back(Atom::pair(w, x));
  auto Y1 = set_obj(FinSet(ys));
  auto delta1 = make_mor(Y1, TZ, {FinMap::build(Y1.set(), TZ.set(), [](const Atom& y) { return y[0]; })});
  auto f1 = make_mor(Y1, C.X1(), {FinMap::build(Y1.set(), C.X1().set(), [](const Atom& y) { return y[1]; })});
  auto lam = T->unit(Z).map();
  auto s0 = make_mor(Z, Y1, {FinMap::build(Z.set(), Y1.set(), [&](const Atom& z) {
                       return Atom::pair(lam(z), C.g.s0.map()(h.st[0](z)));
                     })});
  auto f0 = make_mor(Z, C.X0(), {h.st[0]});
  std::size_t n = 0;
  for_each_map(Y1.set(), Z.set(), [&](const FinMap& d0) {
    for (const auto& y : Y1.set())
      if (h.st[0](d0(y)) != C.g.d0.map()(y[1])) return true;
    try {
      TGraph g{T, "Y", Z, Y1, make_mor(Y1, Z, {d0}), delta1, s0};
      auto pb = tc_X2(g);
      auto muZ = T->mult(Z).map();
      auto Tdelta = T->fmap(delta1).map();
      auto Tf1 = T->fmap(f1).map();
      auto d1_1 = FinMap::build(pb.P.set(), Y1.set(), [&](const Atom& p) {
        return Atom::pair(muZ(Tdelta(p[1])), C.d1_1.map()(Atom::pair(p[0][1], Tf1(p[1]))));
      });
      auto b = build_tcategory(g, make_mor(pb.P, Y1, {d1_1}));
      if (!b.ok()) return true;
      TFunctor F{*b.cat, C, f0, f1};
      n += validate_tfunctor(F).ok() && is_discrete_tfibration(F);
    } catch (const Error&) {
    }
    return true;
  });
  return n;
}

void multicategory(SuiteReport& r, const SuiteOptions&) {
  auto E7 = corpus::e7();
  auto b = build_tcategory(E7.g, E7.d1_1);
  verdict(r, "E7 validates", b.ok(), first_fail(b.cert));
  verdict(r, "E7 is a multicategory", is_multicategory(E7));
  verdict(r, "E7 is an operad", is_operad(E7));
  auto broken = corpus::e7(true);
  verdict(r, "broken E7 rejected", !build_tcategory(broken.g, broken.d1_1).ok());

  auto T = txt_monad(E7);
  Tally counts("TXT algebras = discrete T-fibrations per carrier");
  Tally trans("algebra -> T-functor -> algebra");
  std::size_t algebras_total = 0, oracle_total = 0;
  for (const auto& h : slice_objects(E7.X0().set(), 2)) {
    auto algebras = algebras_on(T, h);
    auto oracle = tfibration_oracle(E7, h);
    counts(algebras.size() == oracle, [&] {
      return h.str() + ": " + std::to_string(algebras.size()) + " vs " + std::to_string(oracle);
    });
    algebras_total += algebras.size();
    oracle_total += oracle;
    for (const auto& A : algebras) {
      bool ok = false;
      auto err = guarded([&] {
        auto F = txt_algebra_to_tfunctor(E7, A);
        ok = validate_tfunctor(F).ok() && is_discrete_tfibration(F) && tfunctor_to_txt_algebra(T, F).xi == A.xi;
      });
      trans(ok, [&] { return A.xi.str() + " " + err; });
    }
  }
  counts.into(r);
  trans.into(r);
  r.counts.emplace_back("TXT algebras", algebras_total);
  r.counts.emplace_back("discrete T-fibrations", oracle_total);
  verdict(r, "3 algebras at size <= 2", algebras_total == 3, std::to_string(algebras_total));
}

// ---- 10 ----

void structural(SuiteReport& r, const SuiteOptions& o) {
  Tally cofib("dec counit is a discrete cofibration");
  std::vector<InternalCategory> cats{corpus::two(), corpus::e4(), corpus::z2(), corpus::disc2()};
  for (auto& C : small_categories(3)) cats.push_back(std::move(C));
  for (const auto& C : cats) {
    auto d = dec(C);
    cofib(validate_internal_category(d.dec).ok() && validate_functor(d.eps).ok() && is_discrete_cofibration(d.eps),
          [&] { return C.name; });
  }
  cofib.into(r);

  Tally tb("tbar is an internal category (maybe)");
  auto M = maybe_monad();
  for (const auto& X : set_probes(o.probe_size).objects)
    for (const auto& A : algebras_on(M, X)) {
      std::string err;
      bool ok = false;
      err = guarded([&] {
        auto c = validate_internal_category(tbar(A));
        ok = c.ok();
        if (!ok) err = first_fail(c);
      });
      tb(ok, [&] { return A.xi.str() + " " + err; });
    }
  tb.into(r);

  Tally core("r_coreflection counit on embedded categories");
  for (const auto& C : cats) {
    if (C.X1.size() > 3) continue;
    bool ok = false;
    auto err = guarded([&] {
      auto R = r_coreflection(tcat_of_category(C, M));
      ok = same_tables(R.R, C) && is_iso(R.counit.f1) && validate_tfunctor(R.counit).ok();
    });
    core(ok, [&] { return C.name + " " + err; });
  }
  {
    auto E7 = corpus::e7();
    auto R = r_coreflection(E7);
    auto one = discrete_category(FinSet({"*"}));
    TFunctor F{tcat_of_category(one, E7.monad()), E7, identity(E7.X0()),
               set_mor(FinMap::constant(one.X1, E7.X1().set(), "e"))};
    core(validate_tfunctor(R.counit).ok() && factors_through(F, one, R), [] { return std::string("E7"); });
  }
  core.into(r);

  auto rich = check_g_richness(*g_monad(), pt_probes(4));
  verdict(r, "G is rich: P preserved and reflected, pi a kernel quotient", rich.ok(), first_fail(rich));
  r.counts.emplace_back("richness checks on Pt probes", rich.checks.size());

  Tally eq("lambda equalizes lambda_T and T(lambda) in Kl");
  auto probes = set_probes(2).objects;
  for (const auto& T : {M, list_monad(o.grade_bound - 1), writer_monad(monoid_z2())})
    for (const auto& X : probes) {
      auto TX = T->obj(X);
      auto v = is_equalizer_in_kl(embed(T, T->unit(X)), embed(T, T->unit(TX)), embed(T, T->fmap(T->unit(X))), probes);
      eq(v.ok, [&] { return T->name() + " " + X.str() + " " + v.witness; });
    }
  eq.into(r);
}

struct Entry {
  const char* name;
  const char* title;
  void (*run)(SuiteReport&, const SuiteOptions&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e{
      {"monad-laws", "monad laws", monad_laws},
      {"cartesian", "cartesianness", cartesian},
      {"kleisli", "Kleisli calculus", kleisli_calculus},
      {"carac", "G-algebras are groupoids", carac},
      {"mmain", "T-categories are Kleisli categories", mmain},
      {"dfib", "TX-algebras are discrete fibrations", dfib},
      {"mmmain", "G-categories are internal categories", mmmain},
      {"tx-tcat", "TX-categories are functors over X", tx_tcat},
      {"multicategory", "multicategories and TXT algebras", multicategory},
      {"structural", "structural checks", structural},
  };
  return e;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : entries()) n.emplace_back(e.name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& e : entries()) {
    if (name != e.name) continue;
    SuiteReport r;
    r.name = e.name;
    r.title = e.title;
    r.cert.subject = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.run(r, opt);
    } catch (const std::exception& ex) {
      r.cert.add("suite completed", false, ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw std::out_of_range("unknown suite " + name);
}

}  // namespace wb
