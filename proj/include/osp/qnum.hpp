#ifndef OSP_QNUM_HPP
#define OSP_QNUM_HPP

#include <vector>

#include "osp/ring.hpp"

namespace osp {

// The pair (p, q) of a p,q-analogue. With p = 1 the single-variable
// q-analogues are recovered.
struct PQContext {
  LaurentPoly p;
  LaurentPoly q;

  static PQContext of(const Registry& reg, std::string_view p_name, std::string_view q_name);
  // p = 1, q = variable `q_name`.
  static PQContext q_only(const Registry& reg, std::string_view q_name = "q");
  static PQContext q_only(const LaurentPoly& q);
};

// [n]_{p,q} = p^{n-1} + p^{n-2} q + ... + q^{n-1}; [0] = 0.
LaurentPoly pq_int(int n, const PQContext& ctx);
LaurentPoly pq_factorial(int n, const PQContext& ctx);
// Exact quotient [n]! / ([k]! [n-k]!); zero outside 0 <= k <= n.
LaurentPoly pq_binomial(int n, int k, const PQContext& ctx);

// Integer Stirling numbers of the second kind.
Integer stirling2(int n, int k);
Integer factorial(int n);

// Lower-triangular table t[n][k], 0 <= k <= n <= n_max.
using QTable = std::vector<std::vector<LaurentPoly>>;

// S_q(n,k) = q^{k-1} S_q(n-1,k-1) + [k]_q S_q(n-1,k), S_q(n,k) = delta_{nk}
// when n = 0 or k = 0.
QTable q_stirling_table(int n_max, const LaurentPoly& q);
LaurentPoly q_stirling(int n, int k, const LaurentPoly& q);
LaurentPoly q_stirling(int n, int k);  // in the standard registry's q

// [k]_q! S_q(n,k), the Euler-Mahonian target.
LaurentPoly euler_mahonian_target(int n, int k, const LaurentPoly& q);

// A_q(n,k) = q^k [n-k]_q A_q(n-1,k-1) + [k+1]_q A_q(n-1,k), A_q(0,0) = 1;
// k counts descents.
QTable q_eulerian_table(int n_max, const LaurentPoly& q);
LaurentPoly q_eulerian(int n, int k, const LaurentPoly& q);
LaurentPoly q_eulerian(int n, int k);

// Sum of q^{maj sigma} over permutations of [n] with exactly k descents.
// Throws std::out_of_range when n exceeds max_n.
LaurentPoly q_eulerian_bruteforce(int n, int k, const LaurentPoly& q, int max_n = 9);

struct IdentityCheck {
  bool holds;
  LaurentPoly lhs;
  LaurentPoly rhs;
};

// [k]_q! S_q(n,k) == sum_{m=1}^k q^{k(k-m)} {n-m choose n-k}_q A_q(n,m-1).
IdentityCheck check_zz_identity(int n, int k, const LaurentPoly& q);

}  // namespace osp

#endif  // OSP_QNUM_HPP
