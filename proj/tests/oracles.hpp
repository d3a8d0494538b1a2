// Independent reference implementations used only by the tests. Nothing here
// calls the stats, walks, or xfer modules; the ring is used as plain
// arithmetic.
#ifndef OSP_TESTS_ORACLES_HPP
#define OSP_TESTS_ORACLES_HPP

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "osp/matrix.hpp"
#include "osp/ring.hpp"

namespace oracle {

using osp::LaurentPoly;
using Blocks = std::vector<std::vector<int>>;
using Coeffs = std::vector<long long>;  // univariate, index = exponent

// OP_n^k as surjections [n] -> [k]: element i goes to block f(i).
inline std::vector<Blocks> ordered_partitions(int n, int k) {
  std::vector<Blocks> out;
  if (k < 0 || k > n || (k == 0 && n > 0)) return out;
  std::vector<int> f(static_cast<std::size_t>(n), 0);
  while (true) {
    Blocks b(static_cast<std::size_t>(k));
    for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(f[i])].push_back(i + 1);
    if (std::none_of(b.begin(), b.end(), [](const auto& x) { return x.empty(); })) out.push_back(b);
    int pos = 0;
    while (pos < n && ++f[static_cast<std::size_t>(pos)] == k) f[static_cast<std::size_t>(pos++)] = 0;
    if (pos == n) break;
  }
  return out;
}

// Blocks sorted by minimum: the unordered partitions P_n^k.
inline bool is_unordered(const Blocks& b) {
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i - 1].front() > b[i].front()) return false;
  }
  return true;
}

inline std::string format(const Blocks& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += '/';
    for (std::size_t j = 0; j < b[i].size(); ++j) s += (j ? "," : "") + std::to_string(b[i][j]);
  }
  return s;
}

// Statistics straight from their set-counting definitions.
struct Naive {
  int n = 0;
  int k = 0;
  // coord[c][i] in the order ros, rob, rcs, rcb, los, lob, lcs, lcb, lsb, rsb
  std::array<std::vector<int>, 10> coord;
  std::array<long, 10> total{};
  long bInv = 0, bExc = 0, bMaj = 0, inv = 0, cinv = 0;
  std::vector<int> perm;
  std::vector<char> cls;  // 'O', 'T', 'S', 'C' per element

  long get(const std::string& name) const {
    static const char* names[] = {"ros", "rob", "rcs", "rcb", "los", "lob", "lcs", "lcb", "lsb", "rsb"};
    for (int c = 0; c < 10; ++c) {
      if (name == names[c]) return total[static_cast<std::size_t>(c)];
    }
    const long nk1 = static_cast<long>(n) * (k - 1);
    const long ck2 = static_cast<long>(k) * (k - 1) / 2;
    const long lsb = total[8];
    if (name == "inv") return inv;
    if (name == "cinv") return cinv;
    if (name == "bInv") return bInv;
    if (name == "bExc") return bExc;
    if (name == "bMaj") return bMaj;
    if (name == "mak") return total[0] + total[6];
    if (name == "lmak") return nk1 - (total[4] + total[2]);
    if (name == "mak'") return total[5] + total[3];
    if (name == "lmak'") return nk1 - (total[7] + total[1]);
    if (name == "cinvLSB") return lsb + (ck2 - bInv) + ck2;
    if (name == "cmajLSB") return lsb + (ck2 - bMaj) + ck2;
    throw std::invalid_argument("oracle: unknown statistic " + name);
  }

  // Sum of coordinate c over elements whose class is in `classes`.
  long over(int c, const std::string& classes) const {
    long s = 0;
    for (int i = 1; i <= n; ++i) {
      if (classes.find(cls[static_cast<std::size_t>(i)]) != std::string::npos) {
        s += coord[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)];
      }
    }
    return s;
  }
};

inline Naive naive(const Blocks& b) {
  Naive r;
  r.k = static_cast<int>(b.size());
  for (const auto& blk : b) r.n += static_cast<int>(blk.size());
  const int n = r.n;
  std::vector<int> where(static_cast<std::size_t>(n) + 1);
  std::vector<int> lo(b.size()), hi(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    lo[j] = *std::min_element(b[j].begin(), b[j].end());
    hi[j] = *std::max_element(b[j].begin(), b[j].end());
    for (int e : b[j]) where[static_cast<std::size_t>(e)] = static_cast<int>(j);
  }
  auto is_open = [&](int e) { return lo[static_cast<std::size_t>(where[static_cast<std::size_t>(e)])] == e; };
  auto is_clos = [&](int e) { return hi[static_cast<std::size_t>(where[static_cast<std::size_t>(e)])] == e; };
  for (auto& row : r.coord) row.assign(static_cast<std::size_t>(n) + 1, 0);
  r.cls.assign(static_cast<std::size_t>(n) + 1, ' ');
  for (int i = 1; i <= n; ++i) {
    const int bi = where[static_cast<std::size_t>(i)];
    const bool o = is_open(i), c = is_clos(i);
    r.cls[static_cast<std::size_t>(i)] = o && c ? 'S' : o ? 'O' : c ? 'C' : 'T';
    for (int j = 1; j <= n; ++j) {
      const int bj = where[static_cast<std::size_t>(j)];
      if (bj == bi) continue;
      const bool right = bj > bi;
      const bool smaller = j < i;
      if (is_open(j)) ++r.coord[right ? (smaller ? 0 : 1) : (smaller ? 4 : 5)][static_cast<std::size_t>(i)];
      if (is_clos(j)) ++r.coord[right ? (smaller ? 2 : 3) : (smaller ? 6 : 7)][static_cast<std::size_t>(i)];
    }
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (static_cast<int>(j) == bi || !(lo[j] < i && i < hi[j])) continue;
      ++r.coord[static_cast<int>(j) > bi ? 9 : 8][static_cast<std::size_t>(i)];
    }
  }
  for (int c = 0; c < 10; ++c) {
    for (int v : r.coord[static_cast<std::size_t>(c)]) r.total[static_cast<std::size_t>(c)] += v;
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (lo[i] > hi[j]) ++r.bInv;
      if (hi[i] < lo[j]) ++r.bExc;
    }
    if (i + 1 < b.size() && lo[i] > hi[i + 1]) r.bMaj += static_cast<long>(i) + 1;
  }
  // perm: rank of each block's minimum among all minima.
  for (std::size_t i = 0; i < b.size(); ++i) {
    r.perm.push_back(1 + static_cast<int>(std::count_if(lo.begin(), lo.end(), [&](int m) { return m < lo[i]; })));
  }
  for (std::size_t i = 0; i < r.perm.size(); ++i) {
    for (std::size_t j = i + 1; j < r.perm.size(); ++j) r.inv += r.perm[i] > r.perm[j] ? 1 : 0;
  }
  r.cinv = static_cast<long>(r.k) * (r.k - 1) / 2 - r.inv;
  return r;
}

// --- univariate q-arithmetic on coefficient vectors -----------------------------------

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline Coeffs shift(const Coeffs& a, int s) {
  if (a.empty()) return a;
  Coeffs out(static_cast<std::size_t>(s), 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

inline Coeffs qint(int m) { return m <= 0 ? Coeffs{} : Coeffs(static_cast<std::size_t>(m), 1); }

inline Coeffs qfact(int m) {
  Coeffs r{1};
  for (int i = 1; i <= m; ++i) r = mul(r, qint(i));
  return r;
}

// S_q(n,k) = q^{k-1} S_q(n-1,k-1) + [k]_q S_q(n-1,k).
inline Coeffs q_stirling(int n, int k) {
  std::vector<std::vector<Coeffs>> s(static_cast<std::size_t>(n) + 1,
                                     std::vector<Coeffs>(static_cast<std::size_t>(n) + 1));
  s[0][0] = {1};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= i; ++j) {
      s[i][j] = add(shift(s[i - 1][j - 1], j - 1), mul(qint(j), s[i - 1][j]));
    }
  }
  return k >= 0 && k <= n ? s[n][k] : Coeffs{};
}

inline Coeffs euler_mahonian(int n, int k) { return mul(qfact(k), q_stirling(n, k)); }

inline LaurentPoly to_poly(const Coeffs& c, const LaurentPoly& var) {
  LaurentPoly p(var.registry());
  LaurentPoly power = LaurentPoly::constant(var.registry(), 1);
  for (long long v : c) {
    if (v) p += power.scaled(osp::Integer(static_cast<long>(v)));
    power *= var;
  }
  return p;
}

// Distribution of a naive statistic as coefficients; exponents must be >= 0.
template <typename Fn>
Coeffs distribution(int n, int k, Fn stat, bool unordered = false) {
  Coeffs c;
  for (const auto& b : ordered_partitions(n, k)) {
    if (unordered && !is_unordered(b)) continue;
    const long e = stat(naive(b));
    if (e < 0) throw std::domain_error("oracle: negative exponent");
    if (c.size() <= static_cast<std::size_t>(e)) c.resize(static_cast<std::size_t>(e) + 1, 0);
    ++c[static_cast<std::size_t>(e)];
  }
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

// --- weights and series ------------------------------------------------------------

inline LaurentPoly var(const std::string& name) { return LaurentPoly::variable(osp::VarRegistry::standard(), name); }
inline LaurentPoly one() { return LaurentPoly::constant(osp::VarRegistry::standard(), 1); }

// Monomial t1^..t7^.. of the seven-variable walk generating function.
inline LaurentPoly q_monomial(const Blocks& b) {
  const Naive s = naive(b);
  const long e[7] = {s.over(6, "OS") + s.over(2, "OS"), s.over(6, "TC") + s.over(2, "TC"), s.over(9, "TC"),
                     s.over(8, "TC"),                   s.over(0, "OS"),                   s.over(4, "OS"),
                     s.over(8, "OS") + s.over(9, "OS")};
  LaurentPoly m = one();
  for (int i = 0; i < 7; ++i) m *= var("t" + std::to_string(i + 1)).pow(static_cast<int>(e[i]));
  return m;
}

// [m]_{p,q} = sum_j p^{m-1-j} q^j
inline LaurentPoly pq(int m, const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly s(p.registry());
  for (int j = 0; j < m; ++j) s += p.pow(m - 1 - j) * q.pow(j);
  return s;
}

inline LaurentPoly pq_fact(int m, const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly r = one();
  for (int i = 1; i <= m; ++i) r *= pq(i, p, q);
  return r;
}

using Series = std::vector<LaurentPoly>;  // index = power of a

inline Series series_mul(const Series& x, const Series& y, int order) {
  Series out(static_cast<std::size_t>(order) + 1, LaurentPoly(osp::VarRegistry::standard()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size() && i + j <= static_cast<std::size_t>(order); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

// 1 / (1 - a c) = sum_m c^m a^m
inline Series geometric(const LaurentPoly& c, int order) {
  Series s;
  LaurentPoly p = one();
  for (int m = 0; m <= order; ++m, p *= c) s.push_back(p);
  return s;
}

// a^k lead / prod_{i=1}^k (1 - a d_i)
template <typename Denom>
Series rational(int k, const LaurentPoly& lead, Denom d, int order) {
  Series s(static_cast<std::size_t>(order) + 1, LaurentPoly(osp::VarRegistry::standard()));
  if (k <= order) s[static_cast<std::size_t>(k)] = lead;
  for (int i = 1; i <= k; ++i) s = series_mul(s, geometric(d(i), order), order);
  return s;
}

// sum over OP^k of x^{mak+bInv} y^{cinvLSB} t^{inv} u^{cinv} a^n, in closed form.
inline Series phi_direct(int k, int order) {
  const LaurentPoly x = var("x"), y = var("y"), t = var("t"), u = var("u");
  const LaurentPoly lead = (x * y).pow(k * (k - 1) / 2) * pq_fact(k, t * x, u * y);
  return rational(k, lead, [&](int i) { return pq(i, x, y); }, order);
}

// sum over OP^k of z^{lmak+bInv} t^{inv} u^{cinv} a^n, in closed form.
inline Series varphi_direct(int k, int order) {
  const LaurentPoly z = var("z"), t = var("t"), u = var("u");
  const LaurentPoly lead = z.pow(k * (k - 1) / 2) * pq_fact(k, t * z, u);
  return rational(k, lead, [&](int i) { return pq(i, one(), z); }, order);
}

// --- determinants -------------------------------------------------------------------

// Leibniz expansion, skipping zero entries.
inline LaurentPoly leibniz_det(const osp::SymbolicMatrix& m) {
  const int n = m.rows();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  LaurentPoly total(m.registry());
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int row, const LaurentPoly& acc, int inversions) -> void {
    if (row == n) {
      total += inversions % 2 ? -acc : acc;
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || m(row, c).is_zero()) continue;
      int extra = 0;
      for (int prev : chosen) extra += prev > c ? 1 : 0;
      used[static_cast<std::size_t>(c)] = true;
      chosen.push_back(c);
      self(self, row + 1, acc * m(row, c), inversions + extra);
      chosen.pop_back();
      used[static_cast<std::size_t>(c)] = false;
    }
  };
  rec(rec, 0, LaurentPoly::constant(m.registry(), 1), 0);
  return total;
}

inline osp::SymbolicMatrix from_text(const osp::Registry& reg, const std::vector<std::vector<std::string>>& rows) {
  osp::SymbolicMatrix m(reg, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<int>(i), static_cast<int>(j)) = LaurentPoly::parse(reg, rows[i][j]);
    }
  }
  return m;
}

// Reference matrices, entered literally.
inline osp::SymbolicMatrix printed_M1() {
  return from_text(osp::VarRegistry::standard(), {{"1", "-a", "-a"}, {"0", "1-a", "-a"}, {"0", "0", "1"}});
}

inline osp::SymbolicMatrix printed_M2() {
  return from_text(osp::VarRegistry::standard(),
                   {{"1", "-a", "-a", "0", "0", "0"},
                    {"0", "1-a", "-a", "-a*y*t-a*y*u", "-a*y*t-a*y*u", "0"},
                    {"0", "0", "1", "0", "-a*x*t-a*x*u", "-a*x*t-a*x*u"},
                    {"0", "0", "0", "1-a*x-a*y", "-a*x-a*y", "0"},
                    {"0", "0", "0", "0", "1-a*x", "-a*x"},
                    {"0", "0", "0", "0", "0", "1"}});
}

inline osp::SymbolicMatrix printed_P2() {
  return from_text(osp::VarRegistry::standard(),
                   {{"-a", "-a", "0", "0", "0"},
                    {"1-a", "-a", "-a*y*t-a*y*u", "-a*y*t-a*y*u", "0"},
                    {"0", "1", "0", "-a*x*t-a*x*u", "-a*x*t-a*x*u"},
                    {"0", "0", "1-a*x-a*y", "-a*x-a*y", "0"},
                    {"0", "0", "0", "1-a*x", "-a*x"}});
}

// P_2^2 with the misprinted "t^2+tu+t^2" read as [3]_{t,u} = t^2+tu+u^2.
inline osp::SymbolicMatrix corrected_P22() {
  return from_text(osp::VarRegistry::standard(),
                   {{"-a", "-a", "0", "0", "0"},
                    {"1-a", "-a", "-a*y*t-a*y*u", "-a*y*t-a*y*u", "0"},
                    {"0", "1", "0", "-a*x*t-a*x*u", "0"},
                    {"0", "0", "1-a*x-a*y", "-a*x-a*y", "-a*y^2*t^2-a*y^2*t*u-a*y^2*u^2"},
                    {"0", "0", "0", "1-a*x", "-a*x*y*t^2-a*x*y*t*u-a*x*y*u^2"}});
}

inline osp::SymbolicMatrix printed_N2() {
  return from_text(osp::VarRegistry::with_sequence(2),
                   {{"x", "-a*F1", "-a*F1", "0", "0", "0"},
                    {"0", "x-a", "-a", "-a*F2", "-a*F2", "0"},
                    {"0", "0", "x", "0", "-a*F2", "-a*F2"},
                    {"0", "0", "0", "x-a-a*q", "-a-a*q", "0"},
                    {"0", "0", "0", "0", "x-a*q", "-a*q"},
                    {"0", "0", "0", "0", "0", "x"}});
}

// --- evaluation ---------------------------------------------------------------------

inline mpq_class evaluate(const LaurentPoly& p, const std::map<std::string, mpq_class>& at) {
  mpq_class total = 0;
  for (const auto& term : p.terms()) {
    mpq_class v = term.coeff;
    for (std::size_t i = 0; i < p.registry()->size(); ++i) {
      const int e = term.monomial.exponent(i);
      if (e == 0) continue;
      const mpq_class base = at.at(p.registry()->name(i));
      for (int r = 0; r < std::abs(e); ++r) v = e > 0 ? mpq_class(v * base) : mpq_class(v / base);
    }
    total += v;
  }
  return total;
}

}  // namespace oracle

#endif  // OSP_TESTS_ORACLES_HPP
