#ifndef OSP_XFER_HPP
#define OSP_XFER_HPP

#include <array>
#include <string>
#include <vector>

#include "osp/matrix.hpp"
#include "osp/ring.hpp"
#include "osp/walks.hpp"

namespace osp {

// Values of the seven step-weight variables t1..t7.
struct WeightSpec {
  std::array<LaurentPoly, 7> t;

  // t_i = t1..t7 themselves.
  static WeightSpec full(const Registry& reg = VarRegistry::standard());
  // (x, x, x, y, t, u, y)
  static WeightSpec spec_f(const Registry& reg = VarRegistry::standard());
  // (1, z, 1, z, t, u, 1)
  static WeightSpec spec_g(const Registry& reg = VarRegistry::standard());

  const Registry& registry() const { return t[0].registry(); }
};

// North/East from (i,j): t1^i t7^j [i+j+1]_{t5,t6}.
// Null/SouthEast from (i,j): t2^i [j]_{t3,t4}.
LaurentPoly step_weight(Vertex from, StepKind kind, const WeightSpec& w);
LaurentPoly path_weight(const Path& path, const WeightSpec& w);

// N_k x N_k weighted adjacency matrix of D_k in vertex_order(k).
SymbolicMatrix adjacency(int k, const WeightSpec& w);
// I - a*A_k
SymbolicMatrix transfer_matrix(int k, const WeightSpec& w);

// Q_k(a; w) to order `order` from
// (-1)^{1+N_k} det(I - aA_k; N_k, 1) / det(I - aA_k).
SeriesInA q_gf_transfer(int k, const WeightSpec& w, int order);
// Same quantity by summing path weights over Omega_n^k.
SeriesInA q_gf_paths(int k, const WeightSpec& w, int order);

// a^k x^{C(k,2)} [k]_{t,u}! / prod_{i=1}^k (1 - a[i]_{x,y})
SeriesInA closed_f(int k, int order, const Registry& reg = VarRegistry::standard());
// a^k [k]_{t,u}! / prod_{i=1}^k (1 - a z^{k-i} [i]_z)
SeriesInA closed_g(int k, int order, const Registry& reg = VarRegistry::standard());
// f_k(a; x, y, xyt, uy^2)
SeriesInA closed_phi(int k, int order, const Registry& reg = VarRegistry::standard());
// g_k(a z^{k-1}; 1/z, t, u/z). Throws std::domain_error if a coefficient
// keeps a negative power of z.
SeriesInA closed_varphi(int k, int order, const Registry& reg = VarRegistry::standard());

// Polynomial in a of a Laurent polynomial; throws on negative powers of a.
PolyInA as_poly_in_a(const LaurentPoly& p);

// --- structured matrices ----------------------------------------------------

// Size of M_n: (n+1)(n+2)/2.
int matrix_size(int n);

// M_n = I - aA'_n built from its block recursion.
SymbolicMatrix build_M(int n, const Registry& reg = VarRegistry::standard());

// Entries of N_n(x, a): diagonal variable x, q-analogue base q, and the
// upper-block sequence F_1..F_n.
struct NParams {
  LaurentPoly x;
  LaurentPoly q;
  std::vector<LaurentPoly> F;  // F[0] = F_1

  // x, q, and indeterminates F1..F<n> of VarRegistry::with_sequence(n).
  static NParams generic(int n);
  // x = 1, q = z, F_m = [m]_{t,u}; N_n(1, a) = I - aA''_n.
  static NParams transfer(int n, const Registry& reg = VarRegistry::standard());
};

SymbolicMatrix build_N(int n, const NParams& params);
// P_n = M_n without its last row and first column.
SymbolicMatrix build_P(int n, const Registry& reg = VarRegistry::standard());
// Rows 1..K_n of P_{n+1} restricted to its last n+2 columns.
SymbolicMatrix build_P_bar(int n, const Registry& reg = VarRegistry::standard());
// P_n with its last column replaced by column k (1-based) of P_bar_n.
SymbolicMatrix build_P_k(int n, int k, const Registry& reg = VarRegistry::standard());
// N_n(x, a) without its last row and first column.
SymbolicMatrix build_Ndot(int n, const NParams& params);

// Entries of the left eigenvector X_n^{m,k} of N_n(x, a), multiplied by
// [n+1-m-k]_q! / a so that they lie in the Laurent ring.
std::vector<LaurentPoly> eigen_vector(int n, int m, int k, const NParams& params);

// --- verifiers --------------------------------------------------------------

struct Equality {
  std::string label;
  LaurentPoly lhs;
  LaurentPoly rhs;

  bool holds() const { return lhs == rhs; }
};

using CheckList = std::vector<Equality>;
bool all_hold(const CheckList& checks);
// First failing equality, or nullptr.
const Equality* first_failure(const CheckList& checks);

CheckList verify_detM(int n);
CheckList verify_detN(int n);
CheckList verify_minor1(int n);
CheckList verify_minor2(int n);
CheckList verify_main1(int n);
CheckList verify_lemma_key(int n, int m);
CheckList verify_eigen(int n, int m, int k);
CheckList verify_conj(int n);

}  // namespace osp

#endif  // OSP_XFER_HPP
