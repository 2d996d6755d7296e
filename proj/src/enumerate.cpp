#include "wb/enumerate.hpp"

#include <functional>

namespace wb {

ReflexiveGraph graph_of(const InternalCategory& C) { return {C.name, C.X0, C.X1, C.d0, C.d1, C.s0}; }

std::vector<ReflexiveGraph> reflexive_graphs(int max_objects, int max_arrows) {
  std::vector<ReflexiveGraph> out;
  const char* extra[] = {"a", "b", "c", "d", "e"};
  for (int n = 0; n <= max_objects; ++n) {
    std::vector<Atom> objs, ids;
    for (int i = 0; i < n; ++i) objs.emplace_back(std::to_string(i)), ids.emplace_back("i" + std::to_string(i));
    FinSet X0(objs);
    int max_k = n == 0 ? 0 : max_arrows - n;
    for (int k = 0; k <= max_k; ++k) {
      std::vector<int> ends(k, 0);
      std::function<void(int, int)> rec = [&](int pos, int lo) {
        if (pos == k) {
          std::vector<std::pair<Atom, Atom>> d0p, d1p, s0p;
          std::vector<Atom> arrows = ids;
          for (int i = 0; i < n; ++i) {
            d0p.emplace_back(ids[i], objs[i]);
            d1p.emplace_back(ids[i], objs[i]);
            s0p.emplace_back(objs[i], ids[i]);
          }
          std::string name = std::to_string(n) + "obj";
          for (int j = 0; j < k; ++j) {
            Atom a(extra[j]);
            arrows.push_back(a);
            int src = ends[j] / n, tgt = ends[j] % n;
            d1p.emplace_back(a, objs[src]);
            d0p.emplace_back(a, objs[tgt]);
            name += std::string(" ") + extra[j] + ":" + std::to_string(src) + ">" + std::to_string(tgt);
          }
          FinSet X1(arrows);
          out.push_back({name, X0, X1, FinMap::from_pairs(X1, X0, d0p), FinMap::from_pairs(X1, X0, d1p),
                         FinMap::from_pairs(X0, X1, s0p)});
          return;
        }
        for (int e = lo; e < n * n; ++e) {
          ends[pos] = e;
          rec(pos + 1, e);
        }
      };
      rec(0, 0);
    }
  }
  return out;
}

namespace {

struct IntGraph {
  int n = 0;
  std::vector<int> dom, cod, idof, idx;  // idof[object] = identity arrow
  std::vector<char> is_id;
};

IntGraph int_graph(const ReflexiveGraph& g) {
  IntGraph G;
  G.n = static_cast<int>(g.X1.size());
  for (int f = 0; f < G.n; ++f) {
    G.dom.push_back(static_cast<int>(g.d1.at(f)));
    G.cod.push_back(static_cast<int>(g.d0.at(f)));
  }
  G.is_id.assign(G.n, 0);
  for (std::size_t x = 0; x < g.X0.size(); ++x) {
    G.idof.push_back(static_cast<int>(g.s0.at(x)));
    G.is_id[g.s0.at(x)] = 1;
  }
  return G;
}

}  // namespace

std::vector<InternalCategory> category_structures(const ReflexiveGraph& g) {
  auto G = int_graph(g);
  int n = G.n;
  for (int x = 0; x < static_cast<int>(g.X0.size()); ++x)
    if (G.dom[G.idof[x]] != x || G.cod[G.idof[x]] != x) return {};
  std::vector<int> table(n * n, -1);
  std::vector<std::pair<int, int>> free;
  for (int f = 0; f < n; ++f)
    for (int h = 0; h < n; ++h) {
      if (G.cod[f] != G.dom[h]) continue;
      if (G.is_id[f] && G.idof[G.dom[f]] == f) table[f * n + h] = h;
      else if (G.is_id[h] && G.idof[G.dom[h]] == h) table[f * n + h] = f;
      else free.emplace_back(f, h);
    }
  std::vector<InternalCategory> out;
  auto assoc = [&]() {
    for (int f = 0; f < n; ++f)
      for (int h = 0; h < n; ++h) {
        if (G.cod[f] != G.dom[h]) continue;
        int fh = table[f * n + h];
        for (int k = 0; k < n; ++k) {
          if (G.cod[h] != G.dom[k]) continue;
          if (table[fh * n + k] != table[f * n + table[h * n + k]]) return false;
        }
      }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      if (!assoc()) return;
      auto m = [&](const Atom& a, const Atom& b) {
        return g.X1.at(table[g.X1.index(a) * n + g.X1.index(b)]);
      };
      out.push_back(make_category(g.name, g.X0, g.X1, g.d0, g.d1, g.s0, m));
      return;
    }
    auto [f, h] = free[i];
    for (int c = 0; c < n; ++c) {
      if (G.dom[c] != G.dom[f] || G.cod[c] != G.cod[h]) continue;
      table[f * n + h] = c;
      rec(i + 1);
    }
    table[f * n + h] = -1;
  };
  rec(0);
  return out;
}

std::vector<FinMap> presentation_structures(const ReflexiveGraph& g) {
  auto G = int_graph(g);
  int n = G.n;
  for (int x = 0; x < static_cast<int>(g.X0.size()); ++x)
    if (G.dom[G.idof[x]] != x || G.cod[G.idof[x]] != x) return {};
  // xi[a*n+b] defined when cod a = cod b; xi(a,b) : dom b → dom a
  std::vector<int> xi(n * n, -1);
  std::vector<std::pair<int, int>> free;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (G.cod[a] != G.cod[b]) continue;
      if (a == b) xi[a * n + b] = G.idof[G.dom[a]];
      else if (a == G.idof[G.cod[b]]) xi[a * n + b] = b;
      else free.emplace_back(a, b);
    }
  auto law = [&]() {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (G.cod[a] != G.cod[b]) continue;
        for (int c = 0; c < n; ++c) {
          if (G.cod[a] != G.cod[c]) continue;
          int x = xi[a * n + b], y = xi[a * n + c];
          if (G.cod[x] != G.cod[y]) return false;
          if (xi[x * n + y] != xi[b * n + c]) return false;
        }
      }
    return true;
  };
  auto R = kernel_pair(g.d0);
  std::vector<FinMap> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == free.size()) {
      if (!law()) return;
      out.push_back(FinMap::build(R.R, g.X1, [&](const Atom& p) {
        return g.X1.at(xi[g.X1.index(p[0]) * n + g.X1.index(p[1])]);
      }));
      return;
    }
    auto [a, b] = free[i];
    for (int c = 0; c < n; ++c) {
      if (G.cod[c] != G.dom[a] || G.dom[c] != G.dom[b]) continue;
      xi[a * n + b] = c;
      rec(i + 1);
    }
    xi[a * n + b] = -1;
  };
  rec(0);
  return out;
}

std::vector<Obj> slice_objects(const FinSet& base, int n) {
  std::vector<Obj> out;
  for (int k = 0; k <= n; ++k) {
    std::vector<Atom> zs;
    for (int i = 1; i <= k; ++i) zs.emplace_back("z" + std::to_string(i));
    FinSet Z(zs);
    std::vector<std::uint32_t> t(k, 0);
    std::function<void(int, std::uint32_t)> rec = [&](int i, std::uint32_t lo) {
      if (i == k) {
        out.push_back(slice_obj(FinMap(Z, base, t)));
        return;
      }
      for (std::uint32_t v = lo; v < base.size(); ++v) {
        t[i] = v;
        rec(i + 1, v);
      }
    };
    rec(0, 0);
  }
  return out;
}

std::vector<Algebra> algebras_on(const MonadPtr& T, const Obj& x) {
  std::vector<Algebra> out;
  auto Tx = T->obj(x);
  for (const auto& xi : hom(T->ambient(), Tx, x)) {
    Algebra A{T, x, xi};
    if (validate_algebra(A).ok()) out.push_back(std::move(A));
  }
  return out;
}

std::vector<InternalCategory> small_categories(int max_arrows) {
  std::vector<InternalCategory> out;
  for (const auto& g : reflexive_graphs(2, max_arrows))
    for (auto& C : category_structures(g)) out.push_back(std::move(C));
  return out;
}

FinSet lifts(const InternalCategory& X, const FinMap& h) {
  std::vector<Atom> ps;
  for (const auto& z : h.dom())
    for (const auto& f : X.X1)
      if (X.d1(f) == h(z)) ps.push_back(Atom::pair(z, f));
  return FinSet(ps);
}

std::vector<InternalFunctor> discrete_fibrations_over(const InternalCategory& X, const FinMap& h) {
  const auto& Z = h.dom();
  auto P = lifts(X, h);
  auto d1 = FinMap::build(P, Z, [](const Atom& p) { return p[0]; });
  auto f1 = FinMap::build(P, X.X1, [](const Atom& p) { return p[1]; });
  auto s0 = FinMap::build(Z, P, [&](const Atom& z) { return Atom::pair(z, X.s0(h(z))); });
  std::vector<InternalFunctor> out;
  for_each_map(P, Z, [&](const FinMap& d0) {
    for (const auto& p : P)
      if (h(d0(p)) != X.d0(p[1])) return true;
    try {
      auto Y = make_category("Y", Z, P, d0, d1, s0, [&](const Atom& a, const Atom& b) {
        return Atom::pair(a[0], X.compose(a[1], b[1]));
      });
      InternalFunctor F{Y, X, h, f1};
      if (validate_internal_category(Y).ok() && validate_functor(F).ok() && is_discrete_fibration(F))
        out.push_back(std::move(F));
    } catch (const Error&) {
    }
    return true;
  });
  return out;
}

}  // namespace wb
