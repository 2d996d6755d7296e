#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "wb/algebras.hpp"
#include "wb/tcat.hpp"

namespace wb {

using Json = nlohmann::ordered_json;

struct LoadOptions {
  int grade_bound = 4;
  int probe_size = 3;
};

struct WsMap {
  std::string dom, cod;
  FinMap map;
};
/// builtin is null unless the entry was given by a builtin spec, which is then written back as is.
struct WsCategory {
  InternalCategory cat;
  Json builtin;
};
struct WsMonad {
  MonadPtr monad;
  Json spec;
};
struct WsAlgebra {
  std::string monad;
  Algebra algebra;
  Json builtin;
};
struct WsTcat {
  std::string monad;
  TCategory cat;
  /// Set when the entry is written in Kleisli form.
  std::optional<KlCategory> kleisli;
  Json builtin;
};
struct WsFunctor {
  std::string src, tgt;
  std::variant<InternalFunctor, TFunctor> f;
  Json builtin;
};

/**
 * @brief Named structures read from one or more documents.
 *
 * Every entry is validated on load. Entries whose certificate fails stay out of the maps and
 * keep their certificate, so a later reference to them is reported as unresolved.
 */
struct Workspace {
  LoadOptions opt;
  std::map<std::string, FinSet> sets;
  std::map<std::string, WsMap> maps;
  std::map<std::string, WsCategory> categories;
  std::map<std::string, WsMonad> monads;
  std::map<std::string, WsAlgebra> algebras;
  std::map<std::string, WsTcat> tcategories;
  std::map<std::string, WsFunctor> functors;
  /// Keyed "kind name", in load order of the kinds.
  std::map<std::string, Certificate> certificates;

  bool valid() const;
};

/// Throws InputError on parse errors (with position), schema errors and unresolved references.
Workspace load_workspace(const std::vector<std::string>& paths, const LoadOptions& opt = {});
Workspace parse_workspace(const std::vector<Json>& docs, const LoadOptions& opt = {});
Json serialize_workspace(const Workspace& ws);

/**
 * A workspace monad name, or a builtin reference: identity, maybe, G, list(bound=n), writer(monoid=Z2|B),
 * TX(category=C), TXT(tcategory=C). The short forms list:n, writer:B, tx:C and txt:C are accepted too.
 */
MonadPtr resolve_monad(const Workspace& ws, const std::string& ref);
/// Builtin spec object for a reference, or null when the reference is not a builtin.
Json monad_ref_spec(const std::string& ref, int grade_bound);
/// Spec of a workspace monad or builtin reference; null when unknown.
Json monad_spec(const Workspace& ws, const std::string& ref);
MonadPtr monad_from_spec(const Workspace& ws, const Json& spec);

Json encode_obj(const Ambient& amb, const Obj& x);
Obj decode_obj(const Ambient& amb, const Json& j);
Json encode_mor(const Ambient& amb, const Mor& f);
Mor decode_mor(const Ambient& amb, const Obj& dom, const Obj& cod, const Json& j);
Json encode_category(const InternalCategory& C);
Json encode_tcategory(const std::string& monad, const TCategory& C);
Json encode_kleisli(const std::string& monad, const KlCategory& K);

/// Name of the workspace monad with this spec, adding an entry when none matches.
std::string ensure_monad(Workspace& ws, const Json& spec);

}  // namespace wb
