#include "wb/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "wb/corpus.hpp"

namespace wb {

namespace {

const std::vector<std::string> kKinds{"set", "map", "category", "monad", "algebra", "tcategory", "functor"};

struct Missing {
  std::string ref;
};

[[noreturn]] void bad(const std::string& what) { throw InputError(what); }

const Json& field(const Json& j, const char* k) {
  if (!j.is_object() || !j.contains(k)) bad(std::string("missing field \"") + k + "\"");
  return j.at(k);
}

std::string str_field(const Json& j, const char* k) {
  const auto& v = field(j, k);
  if (!v.is_string()) bad(std::string("field \"") + k + "\" must be a string");
  return v.get<std::string>();
}

Atom element(const Json& j) {
  if (!j.is_string()) bad("elements are written as strings, got " + j.dump());
  return parse_atom(j.get<std::string>());
}

FinSet decode_set(const Json& j) {
  if (!j.is_array()) bad("a set is an array of elements, got " + j.dump());
  std::vector<Atom> xs;
  for (const auto& e : j) xs.push_back(element(e));
  return FinSet(std::move(xs));
}

Json encode_set(const FinSet& s) {
  Json a = Json::array();
  for (const auto& x : s) a.push_back(x.str());
  return a;
}

Json encode_table(const FinMap& f) {
  Json o = Json::object();
  for (std::size_t i = 0; i < f.dom().size(); ++i) o[f.dom().at(i).str()] = f.cod().at(f.at(i)).str();
  return o;
}

FinMap decode_table(const FinSet& dom, const FinSet& cod, const Json& j) {
  if (!j.is_object()) bad("a map is an object from elements to elements, got " + j.dump());
  constexpr std::uint32_t unset = ~0u;
  std::vector<std::uint32_t> t(dom.size(), unset);
  for (const auto& [k, v] : j.items()) {
    auto i = dom.index(parse_atom(k));
    if (i < 0) bad(k + " is not in the domain " + dom.str());
    auto y = element(v);
    auto c = cod.index(y);
    if (c < 0) bad("value " + y.str() + " of " + k + " is not in the codomain " + cod.str());
    t[i] = static_cast<std::uint32_t>(c);
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] == unset) bad("no value for " + dom.at(i).str());
  return FinMap(dom, cod, std::move(t));
}

}  // namespace

// ---- objects and morphisms ----

Json encode_obj(const Ambient& amb, const Obj& x) {
  switch (amb.kind) {
    case AmbientKind::Set: return encode_set(x.set());
    case AmbientKind::Slice: return encode_table(x.st[0]);
    case AmbientKind::Pt: return Json{{"top", encode_table(x.st[0])}, {"section", encode_table(x.st[1])}};
  }
  return {};
}

Obj decode_obj(const Ambient& amb, const Json& j) {
  Obj x;
  switch (amb.kind) {
    case AmbientKind::Set:
      x = set_obj(decode_set(j));
      break;
    case AmbientKind::Slice: {
      if (!j.is_object()) bad("an object over " + amb.base.str() + " maps each element to a base element");
      std::vector<Atom> zs;
      for (const auto& [k, v] : j.items()) zs.push_back(parse_atom(k));
      FinSet Z(zs);
      x = slice_obj(decode_table(Z, amb.base, j));
      break;
    }
    case AmbientKind::Pt: {
      const auto& top = field(j, "top");
      const auto& sec = field(j, "section");
      if (!top.is_object() || !sec.is_object()) bad("\"top\" and \"section\" must be maps");
      std::vector<Atom> xs, ys;
      for (const auto& [k, v] : top.items()) xs.push_back(parse_atom(k));
      for (const auto& [k, v] : sec.items()) ys.push_back(parse_atom(k));
      FinSet X(xs), Y(ys);
      x = pt_obj(decode_table(X, Y, top), decode_table(Y, X, sec));
      break;
    }
  }
  if (auto e = check_obj(amb, x)) bad("not an object of " + amb.name() + ": " + *e);
  return x;
}

Json encode_mor(const Ambient& amb, const Mor& f) {
  if (amb.kind == AmbientKind::Pt) return Json{{"top", encode_table(f.lv[0])}, {"bottom", encode_table(f.lv[1])}};
  return encode_table(f.map());
}

Mor decode_mor(const Ambient& amb, const Obj& dom, const Obj& cod, const Json& j) {
  std::vector<FinMap> lv;
  if (amb.kind == AmbientKind::Pt) {
    lv.push_back(decode_table(dom.lv[0], cod.lv[0], field(j, "top")));
    lv.push_back(decode_table(dom.lv[1], cod.lv[1], field(j, "bottom")));
  } else {
    lv.push_back(decode_table(dom.set(), cod.set(), j));
  }
  auto f = make_mor(dom, cod, std::move(lv));
  if (auto e = check_mor(amb, f)) bad("not a morphism of " + amb.name() + ": " + *e);
  return f;
}

Json encode_category(const InternalCategory& C) {
  return Json{{"objects", encode_set(C.X0)}, {"arrows", encode_set(C.X1)}, {"dom", encode_table(C.d1)},
              {"cod", encode_table(C.d0)},     {"id", encode_table(C.s0)},     {"compose", encode_table(C.m)}};
}

Json encode_tcategory(const std::string& monad, const TCategory& C) {
  const auto& amb = C.monad()->ambient();
  return Json{{"monad", monad},
              {"objects", encode_obj(amb, C.X0())},
              {"arrows", encode_obj(amb, C.X1())},
              {"cod", encode_mor(amb, C.g.d0)},
              {"dom", encode_mor(amb, C.g.delta1)},
              {"id", encode_mor(amb, C.g.s0)},
              {"compose", encode_mor(amb, C.d1_1)}};
}

Json encode_kleisli(const std::string& monad, const KlCategory& K) {
  const auto& amb = K.monad->ambient();
  Json levels = Json::array(), faces = Json::array(), degs = Json::array();
  for (const auto& x : K.X) levels.push_back(encode_obj(amb, x));
  for (const auto& row : K.t.d) {
    Json r = Json::array();
    for (const auto& a : row) r.push_back(encode_mor(amb, a.support));
    faces.push_back(r);
  }
  for (const auto& row : K.t.s) {
    Json r = Json::array();
    for (const auto& a : row) r.push_back(encode_mor(amb, a.support));
    degs.push_back(r);
  }
  return Json{{"monad", monad}, {"kleisli", {{"levels", levels}, {"faces", faces}, {"degeneracies", degs}}}};
}

// ---- monads ----

namespace {

MonadPtr builtin_monad(const Json& spec, const Workspace& ws, const std::function<const InternalCategory&(const std::string&)>& cat,
                       const std::function<const TCategory&(const std::string&)>& tcat) {
  auto kind = str_field(spec, "builtin");
  if (kind == "identity") return identity_monad();
  if (kind == "maybe") return maybe_monad();
  if (kind == "G") return g_monad();
  if (kind == "list") {
    int bound = spec.contains("bound") ? spec.at("bound").get<int>() : ws.opt.grade_bound;
    if (bound < 0) bad("list bound must be nonnegative");
    return list_monad(bound);
  }
  if (kind == "writer") {
    auto m = str_field(spec, "monoid");
    if (m == "Z2") return writer_monad(monoid_z2());
    if (m == "B") return writer_monad(monoid_bool());
    bad("unknown monoid " + m + " (Z2 or B)");
  }
  if (kind == "tx") return tx_monad(cat(str_field(spec, "category")));
  if (kind == "txt") return txt_monad(tcat(str_field(spec, "tcategory")));
  bad("unknown builtin monad " + kind);
}

}  // namespace

Json monad_ref_spec(const std::string& ref, int grade_bound) {
  std::string head = ref, arg;
  std::map<std::string, std::string> kv;
  if (auto colon = ref.find(':'); colon != std::string::npos) {
    head = ref.substr(0, colon);
    arg = ref.substr(colon + 1);
  } else if (auto open = ref.find('('); open != std::string::npos && ref.back() == ')') {
    head = ref.substr(0, open);
    std::stringstream ss(ref.substr(open + 1, ref.size() - open - 2));
    for (std::string item; std::getline(ss, item, ',');) {
      auto eq = item.find('=');
      if (eq == std::string::npos) {
        arg = item;
      } else {
        kv[item.substr(0, eq)] = item.substr(eq + 1);
      }
    }
  }
  auto get = [&](const std::string& key) { return kv.count(key) ? kv[key] : arg; };
  if (head == "identity" || head == "maybe" || head == "G") return Json{{"builtin", head}};
  if (head == "list") {
    auto b = get("bound");
    try {
      return Json{{"builtin", "list"}, {"bound", b.empty() ? grade_bound : std::stoi(b)}};
    } catch (const std::exception&) {
      bad("list bound " + b + " is not a number");
    }
  }
  if (head == "writer") return Json{{"builtin", "writer"}, {"monoid", get("monoid").empty() ? "Z2" : get("monoid")}};
  if ((head == "tx" || head == "TX") && !get("category").empty()) return Json{{"builtin", "tx"}, {"category", get("category")}};
  if ((head == "txt" || head == "TXT") && !get("tcategory").empty())
    return Json{{"builtin", "txt"}, {"tcategory", get("tcategory")}};
  return {};
}

Json monad_spec(const Workspace& ws, const std::string& ref) {
  auto it = ws.monads.find(ref);
  if (it != ws.monads.end()) return it->second.spec;
  return monad_ref_spec(ref, ws.opt.grade_bound);
}

namespace {

class Loader {
 public:
  explicit Loader(Workspace& ws) : ws_(ws) {}

  void add(const std::string& kind, const std::string& name, const Json& spec) {
    for (const auto& p : pending_)
      if (p.kind == kind && p.name == name) bad("duplicate " + kind + " " + name);
    pending_.push_back({kind, name, spec, {}});
  }

  void run() {
    for (const auto& kind : {"set", "map"})
      for (auto& p : pending_)
        if (p.kind == kind) attempt(p);
    for (bool progress = true; progress;) {
      progress = false;
      for (auto& p : pending_)
        if (!p.done && attempt(p)) progress = true;
    }
    for (const auto& p : pending_) {
      if (p.done) continue;
      if (failed_.count(p.missing)) {
        Certificate c;
        c.subject = p.kind + " " + p.name;
        c.add("references", false, p.missing + " failed validation");
        ws_.certificates[p.kind + " " + p.name] = c;
        failed_.insert(p.name);
        continue;
      }
      bad(p.kind + " " + p.name + ": unresolved reference " + p.missing);
    }
  }

 private:
  struct Pending {
    std::string kind, name;
    Json spec;
    std::string missing;
    bool done = false;
  };

  bool attempt(Pending& p) {
    try {
      load(p.kind, p.name, p.spec);
      p.done = true;
      return true;
    } catch (const Missing& m) {
      p.missing = m.ref;
      return false;
    } catch (const InputError& e) {
      bad(p.kind + " " + p.name + ": " + e.what());
    } catch (const Error& e) {
      bad(p.kind + " " + p.name + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
      bad(p.kind + " " + p.name + ": " + e.what());
    }
  }

  void record(const std::string& kind, const std::string& name, Certificate c) {
    c.subject = kind + " " + name;
    if (!c.ok()) failed_.insert(name);
    ws_.certificates[kind + " " + name] = std::move(c);
  }

  static Certificate typed() {
    Certificate c;
    c.add("well-typed", true);
    return c;
  }
  const FinSet& set_ref(const std::string& n) {
    auto it = ws_.sets.find(n);
    if (it == ws_.sets.end()) throw Missing{n};
    return it->second;
  }
  const InternalCategory& category(const std::string& n) {
    auto it = ws_.categories.find(n);
    if (it == ws_.categories.end()) throw Missing{n};
    return it->second.cat;
  }
  const TCategory& tcategory(const std::string& n) {
    auto it = ws_.tcategories.find(n);
    if (it == ws_.tcategories.end()) throw Missing{n};
    return it->second.cat;
  }
  const WsAlgebra& algebra(const std::string& n) {
    auto it = ws_.algebras.find(n);
    if (it == ws_.algebras.end()) throw Missing{n};
    return it->second;
  }
  MonadPtr monad(const std::string& n) {
    auto it = ws_.monads.find(n);
    if (it != ws_.monads.end()) return it->second.monad;
    auto spec = monad_ref_spec(n, ws_.opt.grade_bound);
    if (spec.is_null()) throw Missing{n};
    for (const auto& [m, e] : ws_.monads)
      if (e.spec == spec) return e.monad;
    auto& T = shared_[spec.dump()];
    if (!T) T = builtin(spec);
    return T;
  }
  MonadPtr builtin(const Json& spec) {
    return builtin_monad(
        spec, ws_, [&](const std::string& n) -> const InternalCategory& { return category(n); },
        [&](const std::string& n) -> const TCategory& { return tcategory(n); });
  }
  Obj obj(const Ambient& amb, const Json& j) {
    if (amb.kind == AmbientKind::Set && j.is_string()) return set_obj(set_ref(j.get<std::string>()));
    return decode_obj(amb, j);
  }

  void load(const std::string& kind, const std::string& name, const Json& j) {
    if (kind == "set") {
      ws_.sets[name] = decode_set(j).named(name);
      record(kind, name, typed());
    } else if (kind == "map") {
      auto dom = str_field(j, "dom"), cod = str_field(j, "cod");
      ws_.maps[name] = {dom, cod, decode_table(set_ref(dom), set_ref(cod), field(j, "table"))};
      record(kind, name, typed());
    } else if (kind == "category") {
      load_category(name, j);
    } else if (kind == "monad") {
      auto spec = j.is_string() ? monad_ref_spec(j.get<std::string>(), ws_.opt.grade_bound) : j;
      if (spec.is_null()) bad("unknown monad " + j.dump());
      auto T = builtin(spec);
      auto c = validate_monad(*T, default_probes(*T, ws_.opt.probe_size));
      record(kind, name, c);
      if (c.ok()) ws_.monads[name] = {T, spec};
    } else if (kind == "algebra") {
      load_algebra(name, j);
    } else if (kind == "tcategory") {
      load_tcategory(name, j);
    } else if (kind == "functor") {
      load_functor(name, j);
    } else {
      bad("unknown kind " + kind);
    }
  }

  void load_category(const std::string& name, const Json& j) {
    InternalCategory C;
    Json builtin;
    if (j.contains("builtin")) {
      auto b = str_field(j, "builtin");
      if (b == "two") C = corpus::two();
      else if (b == "e4") C = corpus::e4();
      else if (b == "z2") C = corpus::z2();
      else if (b == "disc2") C = corpus::disc2();
      else if (b == "dec") C = dec(category(str_field(j, "of"))).dec;
      else bad("unknown builtin category " + b);
      builtin = j;
    } else {
      auto X0 = decode_set(field(j, "objects")), X1 = decode_set(field(j, "arrows"));
      auto d1 = decode_table(X1, X0, field(j, "dom"));
      auto d0 = decode_table(X1, X0, field(j, "cod"));
      auto s0 = decode_table(X0, X1, field(j, "id"));
      const auto& comp = field(j, "compose");
      if (!comp.is_object()) bad("\"compose\" maps composable pairs (f,g) to g∘f");
      auto X2 = composable(d0, d1).P;
      for (const auto& [k, v] : comp.items())
        if (!X2.contains(parse_atom(k))) bad("compose: " + k + " is not a composable pair");
      C = make_category(name, X0, X1, d0, d1, s0, [&](const Atom& f, const Atom& g) {
        auto k = Atom::pair(f, g).str();
        if (!comp.contains(k)) bad("compose: no value for " + k);
        return element(comp.at(k));
      });
    }
    C.name = name;
    auto c = validate_internal_category(C);
    record("category", name, c);
    if (c.ok()) ws_.categories[name] = {C, builtin};
  }

  void load_algebra(const std::string& name, const Json& j) {
    auto mref = str_field(j, "monad");
    auto T = monad(mref);
    const auto& amb = T->ambient();
    Algebra A;
    Json builtin;
    if (j.contains("builtin")) {
      if (str_field(j, "builtin") != "free") bad("unknown builtin algebra " + str_field(j, "builtin"));
      A = free_algebra(T, obj(amb, field(j, "on")));
      builtin = j;
    } else {
      auto X = obj(amb, field(j, "carrier"));
      A = {T, X, decode_mor(amb, T->obj(X), X, field(j, "structure"))};
    }
    auto c = validate_algebra(A);
    record("algebra", name, c);
    if (c.ok()) ws_.algebras[name] = {mref, A, builtin};
  }

  void load_tcategory(const std::string& name, const Json& j) {
    Certificate cert;
    std::optional<TCategory> cat;
    std::optional<KlCategory> kl;
    std::string mref;
    Json builtin;
    if (j.contains("builtin")) {
      builtin = j;
      auto b = str_field(j, "builtin");
      if (b == "e7") {
        int bound = j.contains("bound") ? j.at("bound").get<int>() : ws_.opt.grade_bound;
        bool broken = j.contains("broken") && j.at("broken").get<bool>();
        auto C = corpus::e7(broken, bound);
        mref = "list:" + std::to_string(bound);
        auto b2 = build_tcategory(C.g, C.d1_1);
        cert = b2.cert;
        cat = b2.cat;
      } else if (b == "category") {
        mref = str_field(j, "monad");
        auto T = monad(mref);
        cat = tcat_of_category(category(str_field(j, "category")), T);
        cert = build_tcategory(cat->g, cat->d1_1).cert;
      } else if (b == "algebra") {
        const auto& A = algebra(str_field(j, "algebra"));
        mref = A.monad;
        cat = tc_embed_algebra(A.algebra);
        cert = build_tcategory(cat->g, cat->d1_1).cert;
      } else {
        bad("unknown builtin tcategory " + b);
      }
    } else if (j.contains("kleisli")) {
      mref = str_field(j, "monad");
      auto T = monad(mref);
      kl = decode_kleisli(name, T, field(j, "kleisli"));
      cert = validate_kl_category(*kl);
      if (cert.ok()) {
        try {
          cat = kl_to_tcat(*kl, certify_cartesian(*T, default_probes(*T, ws_.opt.probe_size)));
        } catch (const Error& e) {
          cert.add("backward translation", false, e.what());
        }
      }
    } else {
      mref = str_field(j, "monad");
      auto T = monad(mref);
      const auto& amb = T->ambient();
      auto X0 = obj(amb, field(j, "objects")), X1 = obj(amb, field(j, "arrows"));
      TGraph g{T,
               name,
               X0,
               X1,
               decode_mor(amb, X1, X0, field(j, "cod")),
               decode_mor(amb, X1, T->obj(X0), field(j, "dom")),
               decode_mor(amb, X0, X1, field(j, "id"))};
      auto X2 = tc_X2(g).P;
      auto b2 = build_tcategory(g, decode_mor(amb, X2, X1, field(j, "compose")));
      cert = b2.cert;
      cat = b2.cat;
    }
    if (cat) cat->g.name = name;
    record("tcategory", name, cert);
    if (cert.ok() && cat) ws_.tcategories[name] = {mref, *cat, kl, builtin};
  }

  KlCategory decode_kleisli(const std::string& name, const MonadPtr& T, const Json& j) {
    const auto& amb = T->ambient();
    const auto& levels = field(j, "levels");
    const auto& faces = field(j, "faces");
    const auto& degs = field(j, "degeneracies");
    if (!levels.is_array() || levels.size() != 4) bad("kleisli: \"levels\" lists X0..X3");
    if (!faces.is_array() || faces.size() != 4) bad("kleisli: \"faces\" has one row per level");
    if (!degs.is_array() || degs.size() != 3) bad("kleisli: \"degeneracies\" has rows for levels 0..2");
    KlCategory K;
    K.monad = T;
    K.name = name;
    for (int n = 0; n < 4; ++n) K.X[n] = obj(amb, levels[n]);
    for (int n = 1; n < 4; ++n) {
      if (!faces[n].is_array() || faces[n].size() != static_cast<std::size_t>(n + 1))
        bad("kleisli: level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " faces");
      for (const auto& f : faces[n])
        K.t.d[n].push_back(kleisli(T, K.X[n - 1], decode_mor(amb, K.X[n], T->obj(K.X[n - 1]), f)));
    }
    for (int n = 0; n < 3; ++n) {
      if (!degs[n].is_array() || degs[n].size() != static_cast<std::size_t>(n + 1))
        bad("kleisli: level " + std::to_string(n) + " needs " + std::to_string(n + 1) + " degeneracies");
      for (const auto& s : degs[n])
        K.t.s[n].push_back(kleisli(T, K.X[n + 1], decode_mor(amb, K.X[n], T->obj(K.X[n + 1]), s)));
    }
    for (int n = 0; n < 4; ++n) K.t.id[n] = kl_identity(T, K.X[n]);
    return K;
  }

  void load_functor(const std::string& name, const Json& j) {
    if (j.contains("builtin")) {
      auto b = str_field(j, "builtin");
      auto of = str_field(j, "of");
      if (b == "identity") {
        if (ws_.categories.count(of)) {
          auto F = identity_functor(category(of));
          record("functor", name, validate_functor(F));
          ws_.functors[name] = {of, of, F, j};
        } else {
          auto F = identity_tfunctor(tcategory(of));
          record("functor", name, validate_tfunctor(F));
          ws_.functors[name] = {of, of, F, j};
        }
        return;
      } else if (b == "dec_counit") {
        auto d = dec(category(of));
        auto c = validate_functor(d.eps);
        record("functor", name, c);
        if (c.ok()) ws_.functors[name] = {"", of, d.eps, j};
        return;
      } else {
        bad("unknown builtin functor " + b);
      }
    }
    auto src = str_field(j, "src"), tgt = str_field(j, "tgt");
    bool cat_src = ws_.categories.count(src), cat_tgt = ws_.categories.count(tgt);
    bool t_src = ws_.tcategories.count(src), t_tgt = ws_.tcategories.count(tgt);
    if (cat_src && cat_tgt) {
      const auto& A = category(src);
      const auto& B = category(tgt);
      InternalFunctor F{A, B, decode_table(A.X0, B.X0, field(j, "objects")), decode_table(A.X1, B.X1, field(j, "arrows"))};
      auto c = validate_functor(F);
      record("functor", name, c);
      if (c.ok()) ws_.functors[name] = {src, tgt, F, {}};
      return;
    }
    if (t_src && t_tgt) {
      const auto& A = tcategory(src);
      const auto& B = tcategory(tgt);
      const auto& amb = A.monad()->ambient();
      TFunctor F{A, B, decode_mor(amb, A.X0(), B.X0(), field(j, "objects")),
                 decode_mor(amb, A.X1(), B.X1(), field(j, "arrows"))};
      auto c = validate_tfunctor(F);
      record("functor", name, c);
      if (c.ok()) ws_.functors[name] = {src, tgt, F, {}};
      return;
    }
    if (!cat_src && !t_src) throw Missing{src};
    if (!cat_tgt && !t_tgt) throw Missing{tgt};
    bad("functor between a category and a T-category");
  }

  Workspace& ws_;
  std::vector<Pending> pending_;
  std::set<std::string> failed_;
  /// One instance per builtin reference, so structures over the same monad compare equal.
  std::map<std::string, MonadPtr> shared_;
};

}  // namespace

bool Workspace::valid() const {
  for (const auto& [k, c] : certificates)
    if (!c.ok()) return false;
  return true;
}

Workspace parse_workspace(const std::vector<Json>& docs, const LoadOptions& opt) {
  Workspace ws;
  ws.opt = opt;
  Loader L(ws);
  for (const auto& d : docs) {
    if (d.is_null()) continue;
    if (!d.is_object()) bad("a workspace document is an object keyed by kind");
    for (const auto& [kind, entries] : d.items()) {
      if (std::find(kKinds.begin(), kKinds.end(), kind) == kKinds.end())
        bad("unknown kind \"" + kind + "\" (expected set, map, category, monad, algebra, tcategory or functor)");
      if (!entries.is_object()) bad("\"" + kind + "\" must map names to definitions");
      for (const auto& [name, spec] : entries.items()) L.add(kind, name, spec);
    }
  }
  L.run();
  return ws;
}

Workspace load_workspace(const std::vector<std::string>& paths, const LoadOptions& opt) {
  std::vector<Json> docs;
  for (const auto& p : paths) {
    std::ifstream in(p);
    if (!in) bad(p + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    auto text = ss.str();
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      docs.push_back(Json::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
      bad(p + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
  }
  return parse_workspace(docs, opt);
}

Json serialize_workspace(const Workspace& ws) {
  Json doc = Json::object();
  auto put = [&](const char* kind, const std::string& name, Json v) { doc[kind][name] = std::move(v); };
  for (const auto& [n, s] : ws.sets) put("set", n, encode_set(s));
  for (const auto& [n, m] : ws.maps) put("map", n, Json{{"dom", m.dom}, {"cod", m.cod}, {"table", encode_table(m.map)}});
  for (const auto& [n, c] : ws.categories) put("category", n, c.builtin.is_null() ? encode_category(c.cat) : c.builtin);
  for (const auto& [n, m] : ws.monads) put("monad", n, m.spec);
  for (const auto& [n, a] : ws.algebras) {
    const auto& amb = a.algebra.monad->ambient();
    put("algebra", n,
        a.builtin.is_null() ? Json{{"monad", a.monad},
                                   {"carrier", encode_obj(amb, a.algebra.carrier)},
                                   {"structure", encode_mor(amb, a.algebra.xi)}}
                            : a.builtin);
  }
  for (const auto& [n, t] : ws.tcategories) {
    if (!t.builtin.is_null()) put("tcategory", n, t.builtin);
    else if (t.kleisli) put("tcategory", n, encode_kleisli(t.monad, *t.kleisli));
    else put("tcategory", n, encode_tcategory(t.monad, t.cat));
  }
  for (const auto& [n, f] : ws.functors) {
    if (!f.builtin.is_null()) {
      put("functor", n, f.builtin);
    } else if (auto F = std::get_if<InternalFunctor>(&f.f)) {
      put("functor", n,
          Json{{"src", f.src}, {"tgt", f.tgt}, {"objects", encode_table(F->f0)}, {"arrows", encode_table(F->f1)}});
    } else {
      const auto& G = std::get<TFunctor>(f.f);
      const auto& amb = G.src.monad()->ambient();
      put("functor", n,
          Json{{"src", f.src}, {"tgt", f.tgt}, {"objects", encode_mor(amb, G.f0)}, {"arrows", encode_mor(amb, G.f1)}});
    }
  }
  return doc;
}

MonadPtr resolve_monad(const Workspace& ws, const std::string& ref) {
  auto it = ws.monads.find(ref);
  if (it != ws.monads.end()) return it->second.monad;
  auto spec = monad_ref_spec(ref, ws.opt.grade_bound);
  if (spec.is_null()) bad("unknown monad " + ref);
  return monad_from_spec(ws, spec);
}

MonadPtr monad_from_spec(const Workspace& ws, const Json& spec) {
  return builtin_monad(
      spec, ws,
      [&](const std::string& n) -> const InternalCategory& {
        auto c = ws.categories.find(n);
        if (c == ws.categories.end()) bad("unknown category " + n);
        return c->second.cat;
      },
      [&](const std::string& n) -> const TCategory& {
        auto c = ws.tcategories.find(n);
        if (c == ws.tcategories.end()) bad("unknown tcategory " + n);
        return c->second.cat;
      });
}

std::string ensure_monad(Workspace& ws, const Json& spec) {
  for (const auto& [n, m] : ws.monads)
    if (m.spec == spec) return n;
  std::string base = spec.value("builtin", std::string("monad"));
  for (const char* k : {"category", "tcategory", "monoid"})
    if (spec.contains(k)) base += "_" + spec.at(k).get<std::string>();
  if (spec.contains("bound")) base += "_" + std::to_string(spec.at("bound").get<int>());
  auto name = base;
  for (int i = 2; ws.monads.count(name); ++i) name = base + "_" + std::to_string(i);
  ws.monads[name] = {monad_from_spec(ws, spec), spec};
  return name;
}

}  // namespace wb
