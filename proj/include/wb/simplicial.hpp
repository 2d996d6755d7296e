#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wb/certificate.hpp"

namespace wb {

/**
 * @brief Faces and degeneracies of a 3-truncated simplicial object in some category.
 *
 * d[n][i] : X_n → X_{n-1} and s[n][j] : X_n → X_{n+1}. Missing levels are simply left empty,
 * and identities touching them are skipped.
 */
template <class M>
struct Truncated3 {
  std::array<std::vector<M>, 4> d;
  std::array<std::vector<M>, 3> s;
  std::array<std::optional<M>, 4> id;
};

namespace detail {
inline std::string inst(int i, int j, int n) {
  return "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + ",n=" + std::to_string(n) + "]";
}
}  // namespace detail

/// ops.compose(g, f) = g∘f and ops.diff(a, b) → optional witness.
template <class M, class Ops>
void check_simplicial(const Truncated3<M>& t, const Ops& ops, Certificate& cert) {
  auto has_d = [&](int n, int i) { return n >= 1 && n <= 3 && i >= 0 && i < static_cast<int>(t.d[n].size()); };
  auto has_s = [&](int n, int j) { return n >= 0 && n <= 2 && j >= 0 && j < static_cast<int>(t.s[n].size()); };
  auto verdict = [&](const std::string& name, const M& a, const M& b) {
    auto w = ops.diff(a, b);
    cert.add(name, !w, w.value_or(""));
  };

  for (int n = 2; n <= 3; ++n)
    for (int j = 0; j + 1 <= n; ++j)
      for (int i = 0; i <= j; ++i) {
        if (!has_d(n - 1, i) || !has_d(n, j + 1) || !has_d(n - 1, j) || !has_d(n, i)) continue;
        verdict("d_i.d_{j+1}=d_j.d_i" + detail::inst(i, j, n), ops.compose(t.d[n - 1][i], t.d[n][j + 1]),
                ops.compose(t.d[n - 1][j], t.d[n][i]));
      }

  for (int n = 0; n <= 2; ++n)
    for (int j = 0; j <= n; ++j) {
      if (!has_s(n, j)) continue;
      for (int i = 0; i <= n + 1; ++i) {
        if (!has_d(n + 1, i)) continue;
        M lhs = ops.compose(t.d[n + 1][i], t.s[n][j]);
        if (i < j) {
          if (!has_s(n - 1, j - 1) || !has_d(n, i)) continue;
          verdict("d_i.s_j=s_{j-1}.d_i" + detail::inst(i, j, n), lhs, ops.compose(t.s[n - 1][j - 1], t.d[n][i]));
        } else if (i == j || i == j + 1) {
          if (!t.id[n]) continue;
          verdict("d_i.s_j=1" + detail::inst(i, j, n), lhs, *t.id[n]);
        } else {
          if (!has_s(n - 1, j) || !has_d(n, i - 1)) continue;
          verdict("d_i.s_j=s_j.d_{i-1}" + detail::inst(i, j, n), lhs, ops.compose(t.s[n - 1][j], t.d[n][i - 1]));
        }
      }
    }

  for (int n = 0; n <= 1; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i) {
        if (!has_s(n + 1, j + 1) || !has_s(n, i) || !has_s(n + 1, i) || !has_s(n, j)) continue;
        verdict("s_{j+1}.s_i=s_i.s_j" + detail::inst(i, j, n), ops.compose(t.s[n + 1][j + 1], t.s[n][i]),
                ops.compose(t.s[n + 1][i], t.s[n][j]));
      }
}

}  // namespace wb
