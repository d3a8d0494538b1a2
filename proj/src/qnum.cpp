#include "osp/qnum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace osp {

PQContext PQContext::of(const Registry& reg, std::string_view p_name, std::string_view q_name) {
  return {LaurentPoly::variable(reg, p_name), LaurentPoly::variable(reg, q_name)};
}

PQContext PQContext::q_only(const Registry& reg, std::string_view q_name) {
  return q_only(LaurentPoly::variable(reg, q_name));
}

PQContext PQContext::q_only(const LaurentPoly& q) { return {LaurentPoly::constant(q.registry(), 1), q}; }

LaurentPoly pq_int(int n, const PQContext& ctx) {
  if (n < 0) throw std::invalid_argument("pq_int: negative n");
  const Registry& reg = ctx.q.registry() ? ctx.q.registry() : ctx.p.registry();
  LaurentPoly sum(reg);
  LaurentPoly p_pow = ctx.p.pow(0);
  // sum_{i=0}^{n-1} p^{n-1-i} q^i, accumulated from the q^{n-1} end.
  LaurentPoly q_pow = ctx.q.pow(0);
  std::vector<LaurentPoly> q_powers;
  for (int i = 0; i < n; ++i) {
    q_powers.push_back(q_pow);
    q_pow *= ctx.q;
  }
  for (int i = n - 1; i >= 0; --i) {
    sum += p_pow * q_powers[static_cast<std::size_t>(i)];
    p_pow *= ctx.p;
  }
  return sum;
}

LaurentPoly pq_factorial(int n, const PQContext& ctx) {
  if (n < 0) throw std::invalid_argument("pq_factorial: negative n");
  LaurentPoly r = ctx.q.pow(0);
  for (int i = 2; i <= n; ++i) r *= pq_int(i, ctx);
  return r;
}

LaurentPoly pq_binomial(int n, int k, const PQContext& ctx) {
  if (n < 0) throw std::invalid_argument("pq_binomial: negative n");
  if (k < 0 || k > n) return LaurentPoly(ctx.q.registry());
  return divexact(pq_factorial(n, ctx), pq_factorial(k, ctx) * pq_factorial(n - k, ctx));
}

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<Integer> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

QTable q_stirling_table(int n_max, const LaurentPoly& q) {
  const Registry& reg = q.registry();
  const PQContext ctx = PQContext::q_only(q);
  QTable t(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    t[n].assign(static_cast<std::size_t>(n) + 1, LaurentPoly(reg));
    t[n][0] = LaurentPoly::constant(reg, n == 0 ? 1 : 0);
    for (int k = 1; k <= n; ++k) {
      LaurentPoly v = q.pow(k - 1) * t[n - 1][k - 1];
      if (k <= n - 1) v += pq_int(k, ctx) * t[n - 1][k];
      t[n][k] = std::move(v);
    }
  }
  return t;
}

LaurentPoly q_stirling(int n, int k, const LaurentPoly& q) {
  if (n < 0 || k < 0) throw std::invalid_argument("q_stirling: negative index");
  if (k > n) return LaurentPoly(q.registry());
  return q_stirling_table(n, q)[n][k];
}

LaurentPoly q_stirling(int n, int k) { return q_stirling(n, k, LaurentPoly::variable(VarRegistry::standard(), "q")); }

LaurentPoly euler_mahonian_target(int n, int k, const LaurentPoly& q) {
  return pq_factorial(k, PQContext::q_only(q)) * q_stirling(n, k, q);
}

QTable q_eulerian_table(int n_max, const LaurentPoly& q) {
  const Registry& reg = q.registry();
  const PQContext ctx = PQContext::q_only(q);
  QTable t(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    t[n].assign(static_cast<std::size_t>(n) + 1, LaurentPoly(reg));
    if (n == 0) {
      t[0][0] = LaurentPoly::constant(reg, 1);
      continue;
    }
    for (int k = 0; k <= n; ++k) {
      LaurentPoly v(reg);
      if (k >= 1) v += q.pow(k) * pq_int(n - k, ctx) * t[n - 1][k - 1];
      if (k <= n - 1) v += pq_int(k + 1, ctx) * t[n - 1][k];
      t[n][k] = std::move(v);
    }
  }
  return t;
}

LaurentPoly q_eulerian(int n, int k, const LaurentPoly& q) {
  if (n < 0) throw std::invalid_argument("q_eulerian: negative n");
  if (k < 0 || k > n) return LaurentPoly(q.registry());
  return q_eulerian_table(n, q)[n][k];
}

LaurentPoly q_eulerian(int n, int k) { return q_eulerian(n, k, LaurentPoly::variable(VarRegistry::standard(), "q")); }

LaurentPoly q_eulerian_bruteforce(int n, int k, const LaurentPoly& q, int max_n) {
  if (n < 0) throw std::invalid_argument("q_eulerian_bruteforce: negative n");
  if (n > max_n) throw std::out_of_range("q_eulerian_bruteforce: n exceeds desk bound " + std::to_string(max_n));
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<Integer> by_maj;
  do {
    int descents = 0;
    int maj = 0;
    for (int i = 1; i < n; ++i) {
      if (sigma[i - 1] > sigma[i]) {
        ++descents;
        maj += i;
      }
    }
    if (descents != k) continue;
    if (by_maj.size() <= static_cast<std::size_t>(maj)) by_maj.resize(static_cast<std::size_t>(maj) + 1, 0);
    by_maj[static_cast<std::size_t>(maj)] += 1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  LaurentPoly r(q.registry());
  for (std::size_t e = 0; e < by_maj.size(); ++e) {
    if (by_maj[e] != 0) r += q.pow(static_cast<int>(e)).scaled(by_maj[e]);
  }
  return r;
}

IdentityCheck check_zz_identity(int n, int k, const LaurentPoly& q) {
  if (k < 1 || k > n) throw std::invalid_argument("check_zz_identity: need 1 <= k <= n");
  const PQContext ctx = PQContext::q_only(q);
  const QTable eulerian = q_eulerian_table(n, q);
  LaurentPoly lhs = euler_mahonian_target(n, k, q);
  LaurentPoly rhs(q.registry());
  for (int m = 1; m <= k; ++m) {
    rhs += q.pow(k * (k - m)) * pq_binomial(n - m, n - k, ctx) * eulerian[n][m - 1];
  }
  const bool holds = lhs == rhs;
  return {holds, std::move(lhs), std::move(rhs)};
}

}  // namespace osp
