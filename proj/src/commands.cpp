#include "wb/commands.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wb/algebras.hpp"
#include "wb/corpus.hpp"
#include "wb/enumerate.hpp"
#include "wb/suites.hpp"

namespace wb {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

std::string first_failure(const Certificate& c, const std::string& prefix = {}) {
  for (const auto& k : c.checks)
    if (!k.pass && k.name.rfind(prefix, 0) == 0) return k.name + (k.witness.empty() ? "" : ": " + k.witness);
  return {};
}

void summarize(Certificate& into, const std::string& name, const Certificate& c) {
  into.add(name, c.ok(), first_failure(c));
}

std::string echo(const std::string& command, const CommandOptions& o) {
  std::string s = command;
  auto flag = [&](const char* f, const std::string& v) {
    if (!v.empty()) s += std::string(" --") + f + " " + v;
  };
  flag("name", o.name);
  flag("monad", o.monad);
  flag("theorem", o.theorem);
  flag("input", o.input);
  flag("as", o.as);
  if (command == "enumerate") {
    flag("what", o.what);
    s += " --bound " + std::to_string(o.bound);
  }
  if (o.list) s += " --list";
  s += " --grade-bound " + std::to_string(o.load.grade_bound) + " --probe-size " + std::to_string(o.load.probe_size);
  return s;
}

// ---- validate ----

Report validate(const CommandOptions& o) {
  auto ws = load_workspace(o.files, o.load);
  Report r;
  for (const auto& [key, c] : ws.certificates) {
    if (!o.name.empty() && key.substr(key.find(' ') + 1) != o.name) continue;
    r.sections.push_back({key, c, {}, {}, {}, {}});
  }
  if (!o.name.empty() && r.sections.empty()) bad("unknown structure " + o.name);
  return r;
}

// ---- certify ----

Report certify(const CommandOptions& o) {
  auto ws = load_workspace(o.files, o.load);
  std::vector<std::string> refs;
  if (!o.monad.empty()) {
    refs.push_back(o.monad);
  } else {
    std::set<std::string> seen;
    for (const auto& [n, m] : ws.monads) seen.insert(n);
    for (const auto& [n, a] : ws.algebras) seen.insert(a.monad);
    for (const auto& [n, t] : ws.tcategories) seen.insert(t.monad);
    refs.assign(seen.begin(), seen.end());
  }
  Report r;
  for (const auto& ref : refs) {
    auto T = resolve_monad(ws, ref);
    auto probes = default_probes(*T, o.load.probe_size);
    ReportSection laws{"monad laws of " + T->name(), validate_monad(*T, probes), {}, {}, {}, {}};
    laws.notes.emplace_back("probes", probes.description);
    r.sections.push_back(std::move(laws));

    ReportSection cart;
    cart.subject = "cartesianness of " + T->name();
    try {
      auto cc = certify_cartesian(*T, probes);
      cart.cert.add("T preserves pullbacks", cc.preserves_pullbacks, first_failure(cc.cert, "T preserves pullbacks"));
      cart.cert.add("lambda cartesian", cc.lambda_cartesian, first_failure(cc.cert, "lambda cartesian"));
      cart.cert.add("mu cartesian", cc.mu_cartesian, first_failure(cc.cert, "mu cartesian"));
      cart.counts = {{"objects", cc.objects}, {"morphisms", cc.morphisms}, {"cospans", cc.cospans}};
      auto note = [&](const char* name, bool v, const char* prefix) {
        auto w = first_failure(cc.cert, prefix);
        cart.notes.emplace_back(name, v ? "yes" : w.empty() ? "no" : "no, " + w);
      };
      note("half-cartesian", cc.half_cartesian, "half-cartesian");
      note("hypercartesian", cc.hypercartesian, "hypercartesian");
    } catch (const Error& e) {
      cart.cert.add("probe family", false, e.what());
    }
    r.sections.push_back(std::move(cart));
  }
  return r;
}

// ---- enumerate ----

InternalCategory category_named(const Workspace& ws, const std::string& name) {
  if (auto it = ws.categories.find(name); it != ws.categories.end()) return it->second.cat;
  if (name == "two") return corpus::two();
  if (name == "e4") return corpus::e4();
  if (name == "z2") return corpus::z2();
  if (name == "disc2") return corpus::disc2();
  bad("unknown category " + name + " (a workspace category, or two, e4, z2, disc2)");
}

void need_bound(const CommandOptions& o, int lo, int hi) {
  if (o.bound < lo || o.bound > hi)
    bad("bound " + std::to_string(o.bound) + " exceeded: --what " + o.what + " accepts " + std::to_string(lo) +
        ".." + std::to_string(hi));
}

Report enumerate(const CommandOptions& o) {
  auto ws = load_workspace(o.files, o.load);
  Report r;
  ReportSection s;
  const auto& w = o.what;
  if (w == "graphs" || w == "categories" || w == "groupoids") {
    need_bound(o, 0, 4);
    s.subject = w + " with at most 2 objects and " + std::to_string(o.bound) + " arrows";
    std::size_t graphs = 0, cats = 0, grps = 0, agree = 0;
    for (const auto& g : reflexive_graphs(2, o.bound)) {
      ++graphs;
      if (w == "graphs") {
        if (o.list) s.items.push_back(g.name);
        continue;
      }
      for (const auto& C : category_structures(g)) {
        ++cats;
        bool grp = is_groupoid(C);
        grps += grp;
        agree += grp == is_groupoid_bruteforce(C);
        if (!validate_internal_category(C).ok()) s.cert.add("category validates", false, g.name);
        if (o.list && (w == "categories" || grp)) s.items.push_back(g.name + " " + encode_category(C)["compose"].dump());
      }
    }
    s.counts.emplace_back("graphs", graphs);
    if (w != "graphs") {
      s.counts.emplace_back("categories", cats);
      s.counts.emplace_back("groupoids", grps);
      s.cert.add("pullback groupoid test agrees with inverse search", agree == cats,
                 std::to_string(cats - agree) + " disagreements");
    }
  } else if (w == "dfibs") {
    need_bound(o, 0, 8);
    auto X = category_named(ws, o.input.empty() ? "two" : o.input);
    auto T = tx_monad(X);
    s.subject = "discrete fibrations into " + X.name + " of total size <= " + std::to_string(o.bound);
    std::size_t total = 0, carriers = 0;
    for (const auto& h : slice_objects(X.X0, o.bound)) {
      auto P = lifts(X, h.st[0]);
      if (h.size() + P.size() > static_cast<std::size_t>(o.bound)) continue;
      ++carriers;
      auto fibs = discrete_fibrations_over(X, h.st[0]);
      auto algebras = algebras_on(T, h);
      if (fibs.size() != algebras.size())
        s.cert.add("TX-algebras match discrete fibrations", false,
                   h.str() + ": " + std::to_string(algebras.size()) + " vs " + std::to_string(fibs.size()));
      total += fibs.size();
      if (o.list)
        for (const auto& F : fibs) s.items.push_back(h.str() + " d0=" + F.src.d0.str());
    }
    s.cert.add("TX-algebras match discrete fibrations", s.cert.ok());
    s.counts = {{"carriers", carriers}, {"discrete fibrations", total}};
  } else if (w == "algebras") {
    need_bound(o, 0, 4);
    if (o.monad.empty()) bad("enumerate algebras needs --monad");
    auto T = resolve_monad(ws, o.monad);
    const auto& amb = T->ambient();
    std::vector<Obj> carriers;
    if (amb.kind == AmbientKind::Set) {
      for (int k = 0; k <= o.bound; ++k) carriers.push_back(set_obj(FinSet::range(k, "a")));
    } else if (amb.kind == AmbientKind::Slice) {
      carriers = slice_objects(amb.base, o.bound);
    } else {
      carriers = pt_probes(o.bound).objects;
    }
    s.subject = "algebras of " + T->name() + " on carriers of size <= " + std::to_string(o.bound);
    std::size_t total = 0;
    for (const auto& x : carriers) {
      auto Tx = T->obj(x);
      double cost = 0;
      for (std::size_t l = 0; l < x.lv.size(); ++l)
        cost += static_cast<double>(Tx.lv[l].size()) * std::log2(std::max<std::size_t>(1, x.lv[l].size()));
      if (cost > 24) bad("bound exceeded: hom(T" + label(x) + ", " + label(x) + ") is too large to search");
      for (const auto& A : algebras_on(T, x)) {
        ++total;
        if (o.list) s.items.push_back(label(x) + " " + encode_mor(amb, A.xi).dump());
      }
    }
    s.cert.add("search completed", true);
    s.counts = {{"carriers", carriers.size()}, {"algebras", total}};
  } else if (w == "g-algebras") {
    need_bound(o, 0, 5);
    auto G = g_monad();
    s.subject = "G-algebras on split epimorphisms of total size <= " + std::to_string(o.bound);
    std::size_t total = 0, carriers = 0;
    bool valid = true;
    for (const auto& x : pt_probes(o.bound).objects) {
      ++carriers;
      for (const auto& A : g_algebra_structures(G, x)) {
        ++total;
        valid = valid && validate_algebra(A).ok();
        if (o.list) s.items.push_back(label(x) + " " + encode_mor(G->ambient(), A.xi).dump());
      }
    }
    s.cert.add("every structure validates", valid);
    s.counts = {{"carriers", carriers}, {"G-algebras", total}};
  } else {
    bad("unknown --what " + w);
  }
  r.sections.push_back(std::move(s));
  return r;
}

// ---- translate ----

class Translator {
 public:
  Translator(Workspace& ws, const CommandOptions& o) : ws_(ws), o_(o) {
    if (o.as.empty()) bad("translate needs --as NAME");
    for (const auto& [k, c] : ws.certificates)
      if (k.substr(k.find(' ') + 1) == o.as) bad(o.as + " already names " + k);
  }

  CommandResult run() {
    const auto& t = o_.theorem;
    sec_.subject = t + ": " + o_.input + " -> " + o_.as;
    try {
      if (t == "mmain") mmain();
      else if (t == "carac") carac();
      else if (t == "dfib") dfib();
      else if (t == "mmmain") mmmain();
      else if (t == "tx-tcat") tx_tcat();
      else if (t == "txt") txt();
      else if (t == "coreflection") coreflection();
      else if (t == "dec") dec_();
      else if (t == "tbar") tbar_();
      else bad("unknown theorem " + t);
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      sec_.cert.add("translation applies", false, e.what());
    }
    CommandResult res;
    auto doc = serialize_workspace(ws_);
    for (const auto& [kind, entries] : added_.items())
      for (const auto& [name, spec] : entries.items()) doc[kind][name] = spec;
    auto ws2 = parse_workspace({doc}, ws_.opt);
    for (const auto& [kind, entries] : added_.items())
      for (const auto& [name, spec] : entries.items()) {
        auto key = kind + " " + name;
        auto it = ws2.certificates.find(key);
        if (it == ws2.certificates.end()) sec_.cert.add(key + " validates", false, "missing after reload");
        else summarize(sec_.cert, key + " validates", it->second);
      }
    res.report.sections.push_back(sec_);
    if (!added_.empty()) res.report.output = added_;
    res.workspace = serialize_workspace(ws2);
    return res;
  }

 private:
  enum class Kind { Category, Tcategory, Algebra, Functor };

  Kind input_kind() const {
    std::vector<Kind> found;
    if (ws_.categories.count(o_.input)) found.push_back(Kind::Category);
    if (ws_.tcategories.count(o_.input)) found.push_back(Kind::Tcategory);
    if (ws_.algebras.count(o_.input)) found.push_back(Kind::Algebra);
    if (ws_.functors.count(o_.input)) found.push_back(Kind::Functor);
    if (found.empty()) bad("unknown structure " + o_.input);
    if (found.size() > 1) bad(o_.input + " names structures of several kinds");
    return found[0];
  }

  void add(const char* kind, const std::string& name, Json spec) {
    if (added_.contains(kind) && added_[kind].contains(name)) bad("duplicate output " + name);
    added_[kind][name] = std::move(spec);
  }

  void roundtrip(const std::string& name, bool ok, std::string witness = {}) {
    sec_.cert.add(name, ok, ok ? std::string() : std::move(witness));
  }

  Json algebra_json(const std::string& monad, const Algebra& A) {
    const auto& amb = A.monad->ambient();
    return Json{{"monad", monad}, {"carrier", encode_obj(amb, A.carrier)}, {"structure", encode_mor(amb, A.xi)}};
  }

  Json functor_json(const std::string& src, const std::string& tgt, const InternalFunctor& F) {
    return Json{{"src", src}, {"tgt", tgt}, {"objects", encode_mor(Ambient::set(), set_mor(F.f0))},
                {"arrows", encode_mor(Ambient::set(), set_mor(F.f1))}};
  }

  Json tfunctor_json(const std::string& src, const std::string& tgt, const TFunctor& F) {
    const auto& amb = F.src.monad()->ambient();
    return Json{{"src", src}, {"tgt", tgt}, {"objects", encode_mor(amb, F.f0)}, {"arrows", encode_mor(amb, F.f1)}};
  }

  /// Category named by a TX or TXT monad reference.
  std::string monad_param(const std::string& ref, const char* builtin, const char* key) {
    auto spec = monad_spec(ws_, ref);
    if (spec.is_null() || spec.value("builtin", "") != builtin)
      bad(o_.theorem + " expects a structure over a " + builtin + " monad, got " + ref);
    return spec.at(key).get<std::string>();
  }

  const InternalFunctor& internal_functor() {
    const auto& f = ws_.functors.at(o_.input);
    if (auto F = std::get_if<InternalFunctor>(&f.f)) return *F;
    bad(o_.input + " is a T-functor, not a functor of internal categories");
  }

  void mmain() {
    if (input_kind() != Kind::Tcategory) bad("mmain translates a tcategory");
    const auto& t = ws_.tcategories.at(o_.input);
    auto T = t.cat.monad();
    auto cc = certify_cartesian(*T, default_probes(*T, ws_.opt.probe_size));
    if (t.kleisli) {
      add("tcategory", o_.as, encode_tcategory(t.monad, t.cat));
      auto back = encode_kleisli(t.monad, tcat_to_kl(t.cat));
      roundtrip("forward of backward is the identity", back == encode_kleisli(t.monad, *t.kleisli));
    } else {
      auto K = tcat_to_kl(t.cat);
      K.name = o_.as;
      add("tcategory", o_.as, encode_kleisli(t.monad, K));
      roundtrip("backward of forward is the identity", same_tcat(kl_to_tcat(K, cc), t.cat));
    }
  }

  void carac() {
    auto gname = ensure_monad(ws_, Json{{"builtin", "G"}});
    auto G = ws_.monads.at(gname).monad;
    auto k = input_kind();
    if (k == Kind::Algebra) {
      const auto& A = ws_.algebras.at(o_.input).algebra;
      if (A.monad->name() != "G") bad("carac translates an algebra of G");
      auto g = g_algebra_to_groupoid(A, o_.as);
      roundtrip("structure map is P-cartesian", !g.contradiction);
      add("category", o_.as, encode_category(g.groupoid));
      roundtrip("groupoid -> algebra gives the input back", groupoid_to_g_algebra(G, g.groupoid).xi == A.xi);
    } else if (k == Kind::Category) {
      const auto& C = ws_.categories.at(o_.input).cat;
      roundtrip("input is a groupoid", is_groupoid(C));
      if (!is_groupoid(C)) return;
      auto A = groupoid_to_g_algebra(G, C);
      add("algebra", o_.as, algebra_json(gname, A));
      roundtrip("algebra -> groupoid gives the input back", same_tables(g_algebra_to_groupoid(A).groupoid, C));
    } else {
      bad("carac translates a G-algebra or a groupoid");
    }
  }

  void dfib() {
    auto k = input_kind();
    if (k == Kind::Algebra) {
      const auto& a = ws_.algebras.at(o_.input);
      auto cname = monad_param(a.monad, "tx", "category");
      const auto& C = ws_.categories.at(cname).cat;
      auto F = algebra_to_dfib(C, a.algebra);
      F.src.name = o_.as + "_total";
      roundtrip("result is a discrete fibration", is_discrete_fibration(F));
      add("category", o_.as + "_total", encode_category(F.src));
      add("functor", o_.as, functor_json(o_.as + "_total", cname, F));
      roundtrip("dfib -> algebra gives the input back",
                dfib_to_algebra(a.algebra.monad, F).xi == a.algebra.xi);
    } else if (k == Kind::Functor) {
      const auto& F = internal_functor();
      const auto& cname = ws_.functors.at(o_.input).tgt;
      roundtrip("input is a discrete fibration", is_discrete_fibration(F));
      if (!is_discrete_fibration(F)) return;
      auto mname = ensure_monad(ws_, Json{{"builtin", "tx"}, {"category", cname}});
      auto T = ws_.monads.at(mname).monad;
      auto A = dfib_to_algebra(T, F);
      add("algebra", o_.as, algebra_json(mname, A));
      auto F2 = algebra_to_dfib(F.tgt, A);
      roundtrip("algebra -> dfib -> algebra is the identity", dfib_to_algebra(T, F2).xi == A.xi);
    } else {
      bad("dfib translates an algebra of a TX monad or a discrete fibration");
    }
  }

  void mmmain() {
    auto gname = ensure_monad(ws_, Json{{"builtin", "G"}});
    auto G = ws_.monads.at(gname).monad;
    auto k = input_kind();
    if (k == Kind::Category) {
      const auto& Y = ws_.categories.at(o_.input).cat;
      auto A = category_to_gcat(G, Y);
      A.g.name = o_.as;
      add("tcategory", o_.as, encode_tcategory(gname, A));
      roundtrip("G-category -> category gives the input back", same_tables(gcat_to_category(A), Y));
    } else if (k == Kind::Tcategory) {
      const auto& A = ws_.tcategories.at(o_.input).cat;
      if (A.monad()->name() != "G") bad("mmmain translates a G-category");
      auto C = gcat_to_category(A);
      C.name = o_.as;
      add("category", o_.as, encode_category(C));
      roundtrip("category -> G-category gives the input back", same_tcat(category_to_gcat(G, C), A));
    } else {
      bad("mmmain translates an internal category or a G-category");
    }
  }

  void tx_tcat() {
    auto k = input_kind();
    if (k == Kind::Functor) {
      const auto& F = internal_functor();
      const auto& cname = ws_.functors.at(o_.input).tgt;
      auto mname = ensure_monad(ws_, Json{{"builtin", "tx"}, {"category", cname}});
      auto A = functor_to_tx_tcat(ws_.monads.at(mname).monad, F);
      A.g.name = o_.as;
      add("tcategory", o_.as, encode_tcategory(mname, A));
      auto G = tx_tcat_to_functor(F.tgt, A);
      roundtrip("TX-category -> functor gives the input back", same_tables(G.src, F.src) && G.f0 == F.f0 && G.f1 == F.f1);
    } else if (k == Kind::Tcategory) {
      const auto& t = ws_.tcategories.at(o_.input);
      auto cname = monad_param(t.monad, "tx", "category");
      const auto& C = ws_.categories.at(cname).cat;
      auto F = tx_tcat_to_functor(C, t.cat);
      F.src.name = o_.as + "_src";
      add("category", o_.as + "_src", encode_category(F.src));
      add("functor", o_.as, functor_json(o_.as + "_src", cname, F));
      roundtrip("functor -> TX-category gives the input back", same_tcat(functor_to_tx_tcat(t.cat.monad(), F), t.cat));
    } else {
      bad("tx-tcat translates a functor or a tcategory over a TX monad");
    }
  }

  void txt() {
    auto k = input_kind();
    if (k == Kind::Algebra) {
      const auto& a = ws_.algebras.at(o_.input);
      auto cname = monad_param(a.monad, "txt", "tcategory");
      const auto& C = ws_.tcategories.at(cname);
      auto F = txt_algebra_to_tfunctor(C.cat, a.algebra);
      F.src.g.name = o_.as + "_src";
      roundtrip("result is a discrete T-fibration", is_discrete_tfibration(F));
      add("tcategory", o_.as + "_src", encode_tcategory(C.monad, F.src));
      add("functor", o_.as, tfunctor_json(o_.as + "_src", cname, F));
      roundtrip("T-functor -> algebra gives the input back",
                tfunctor_to_txt_algebra(a.algebra.monad, F).xi == a.algebra.xi);
    } else if (k == Kind::Functor) {
      const auto& f = ws_.functors.at(o_.input);
      auto F = std::get_if<TFunctor>(&f.f);
      if (!F) bad("txt translates a T-functor");
      roundtrip("input is a discrete T-fibration", is_discrete_tfibration(*F));
      if (!is_discrete_tfibration(*F)) return;
      auto mname = ensure_monad(ws_, Json{{"builtin", "txt"}, {"tcategory", f.tgt}});
      auto T = ws_.monads.at(mname).monad;
      auto A = tfunctor_to_txt_algebra(T, *F);
      add("algebra", o_.as, algebra_json(mname, A));
      roundtrip("algebra -> T-functor -> algebra is the identity",
                tfunctor_to_txt_algebra(T, txt_algebra_to_tfunctor(F->tgt, A)).xi == A.xi);
    } else {
      bad("txt translates an algebra of a TXT monad or a T-functor");
    }
  }

  void coreflection() {
    if (input_kind() != Kind::Tcategory) bad("coreflection translates a tcategory");
    const auto& t = ws_.tcategories.at(o_.input);
    auto R = r_coreflection(t.cat);
    R.R.name = o_.as;
    add("category", o_.as, encode_category(R.R));
    add("tcategory", o_.as + "_T", Json{{"builtin", "category"}, {"category", o_.as}, {"monad", t.monad}});
    add("functor", o_.as + "_counit", tfunctor_json(o_.as + "_T", o_.input, R.counit));
    roundtrip("counit is a T-functor", validate_tfunctor(R.counit).ok(), first_failure(validate_tfunctor(R.counit)));
  }

  void dec_() {
    auto k = input_kind();
    if (k == Kind::Category) {
      auto d = dec(ws_.categories.at(o_.input).cat);
      d.dec.name = o_.as;
      add("category", o_.as, encode_category(d.dec));
      add("functor", o_.as + "_counit", functor_json(o_.as, o_.input, d.eps));
      roundtrip("counit is a discrete cofibration", is_discrete_cofibration(d.eps));
    } else if (k == Kind::Tcategory) {
      const auto& t = ws_.tcategories.at(o_.input);
      auto d = dec_tcat(t.cat);
      d.dec.g.name = o_.as;
      add("tcategory", o_.as, encode_tcategory(t.monad, d.dec));
      sec_.notes.emplace_back("counit leg in E", d.counit_leg_in_E ? "yes" : "no");
    } else {
      bad("dec translates a category or a tcategory");
    }
  }

  void tbar_() {
    if (input_kind() != Kind::Algebra) bad("tbar translates an algebra");
    auto C = tbar(ws_.algebras.at(o_.input).algebra);
    C.name = o_.as;
    add("category", o_.as, encode_category(C));
  }

  Workspace& ws_;
  const CommandOptions& o_;
  ReportSection sec_;
  Json added_ = Json::object();
};

// ---- suite ----

Report suite(const CommandOptions& o) {
  std::vector<std::string> names;
  if (o.name.empty() || o.name == "all") {
    names = suite_names();
  } else {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), o.name) == all.end()) bad("unknown suite " + o.name);
    names = {o.name};
  }
  Report r;
  for (const auto& n : names) {
    auto sr = run_suite(n, {o.load.grade_bound, o.load.probe_size});
    ReportSection s{n + ": " + sr.title, sr.cert, sr.counts, {}, {}, sr.seconds};
    r.sections.push_back(std::move(s));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> v{"validate", "certify", "translate", "enumerate", "suite"};
  return v;
}

const std::vector<std::string>& theorem_names() {
  static const std::vector<std::string> v{"mmain", "carac", "dfib", "mmmain", "tx-tcat",
                                          "txt", "coreflection", "dec", "tbar"};
  return v;
}

const std::vector<std::string>& enumerable_names() {
  static const std::vector<std::string> v{"graphs", "categories", "groupoids", "dfibs", "algebras", "g-algebras"};
  return v;
}

CommandResult run_command(const std::string& command, const CommandOptions& opt) {
  if (opt.load.grade_bound < 0 || opt.load.grade_bound > 6) bad("--grade-bound must lie in 0..6");
  if (opt.load.probe_size < 0 || opt.load.probe_size > 4) bad("--probe-size must lie in 0..4");
  CommandResult res;
  if (command == "validate") {
    res.report = validate(opt);
  } else if (command == "certify") {
    res.report = certify(opt);
  } else if (command == "enumerate") {
    res.report = enumerate(opt);
  } else if (command == "suite") {
    res.report = suite(opt);
  } else if (command == "translate") {
    auto ws = load_workspace(opt.files, opt.load);
    res = Translator(ws, opt).run();
  } else {
    bad("unknown command " + command);
  }
  res.report.command = echo(command, opt);
  return res;
}

}  // namespace wb
