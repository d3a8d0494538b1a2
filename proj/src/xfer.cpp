#include "osp/xfer.hpp"

#include <stdexcept>

#include "osp/qnum.hpp"

namespace osp {

namespace {

LaurentPoly var(const Registry& reg, std::string_view name, int power = 1) {
  return LaurentPoly::variable(reg, name, power);
}

LaurentPoly one(const Registry& reg) { return LaurentPoly::constant(reg, 1); }

int choose2(int k) { return k * (k - 1) / 2; }

LaurentPoly sign(const Registry& reg, int exponent) {
  return LaurentPoly::constant(reg, exponent % 2 == 0 ? 1 : -1);
}

// [n]_{p,q} for named variables.
LaurentPoly bracket(int n, const Registry& reg, std::string_view p, std::string_view q) {
  return pq_int(n, PQContext::of(reg, p, q));
}

LaurentPoly bracket_factorial(int n, const Registry& reg, std::string_view p, std::string_view q) {
  return pq_factorial(n, PQContext::of(reg, p, q));
}

// [n]_z with p = 1.
LaurentPoly bracket1(int n, const LaurentPoly& q) { return pq_int(n, PQContext::q_only(q)); }

}  // namespace

// --- weights and adjacency ----------------------------------------------------

WeightSpec WeightSpec::full(const Registry& reg) {
  WeightSpec w;
  for (int i = 0; i < 7; ++i) w.t[static_cast<std::size_t>(i)] = var(reg, "t" + std::to_string(i + 1));
  return w;
}

WeightSpec WeightSpec::spec_f(const Registry& reg) {
  const auto x = var(reg, "x");
  const auto y = var(reg, "y");
  return {{x, x, x, y, var(reg, "t"), var(reg, "u"), y}};
}

WeightSpec WeightSpec::spec_g(const Registry& reg) {
  const auto z = var(reg, "z");
  const auto c = one(reg);
  return {{c, z, c, z, var(reg, "t"), var(reg, "u"), c}};
}

LaurentPoly step_weight(Vertex from, StepKind kind, const WeightSpec& w) {
  const int i = from.closed;
  const int j = from.open;
  if (kind == StepKind::North || kind == StepKind::East) {
    return w.t[0].pow(i) * w.t[6].pow(j) * pq_int(i + j + 1, PQContext{w.t[4], w.t[5]});
  }
  return w.t[1].pow(i) * pq_int(j, PQContext{w.t[2], w.t[3]});
}

LaurentPoly path_weight(const Path& path, const WeightSpec& w) {
  LaurentPoly r = one(w.registry());
  Vertex v{0, 0};
  for (StepKind s : path) {
    r *= step_weight(v, s, w);
    v = step_target(v, s);
  }
  return r;
}

SymbolicMatrix adjacency(int k, const WeightSpec& w) {
  const auto vertices = vertex_order(k);
  const int size = static_cast<int>(vertices.size());
  SymbolicMatrix a(w.registry(), size, size);
  for (const Vertex& v : vertices) {
    for (StepKind s : {StepKind::North, StepKind::East, StepKind::SouthEast, StepKind::Null}) {
      if (!is_edge(v, s, k)) continue;
      a(vertex_index(v), vertex_index(step_target(v, s))) = step_weight(v, s, w);
    }
  }
  return a;
}

SymbolicMatrix transfer_matrix(int k, const WeightSpec& w) {
  const Registry& reg = w.registry();
  const auto a = adjacency(k, w);
  return SymbolicMatrix::identity(reg, a.rows()) - a.scaled(var(reg, "a"));
}

PolyInA as_poly_in_a(const LaurentPoly& p) {
  PolyInA out = p.coefficients_in("a");
  if (out.empty()) out.push_back(LaurentPoly(p.registry()));
  return out;
}

SeriesInA q_gf_transfer(int k, const WeightSpec& w, int order) {
  const SymbolicMatrix b = transfer_matrix(k, w);
  const int size = b.rows();
  const LaurentPoly numer = sign(w.registry(), 1 + size) * det(b.minor(size - 1, 0));
  const LaurentPoly denom = det(b);
  return SeriesInA::from_rational(as_poly_in_a(numer), as_poly_in_a(denom), order);
}

SeriesInA q_gf_paths(int k, const WeightSpec& w, int order) {
  SeriesInA s(w.registry(), order);
  EnumOptions opts;
  opts.max_n = order;
  for (int n = 0; n <= order; ++n) {
    for_each_path(n, k, [&](const Path& p) { s[n] += path_weight(p, w); }, opts);
  }
  return s;
}

// --- closed forms -------------------------------------------------------------

namespace {

// prod_i (1 - a * c_i)
PolyInA one_minus_a_product(const Registry& reg, const std::vector<LaurentPoly>& factors) {
  PolyInA acc{one(reg)};
  for (const auto& c : factors) acc = multiply_in_a(acc, PolyInA{one(reg), -c});
  return acc;
}

PolyInA monomial_in_a(const Registry& reg, int power, const LaurentPoly& coeff) {
  PolyInA out(static_cast<std::size_t>(power) + 1, LaurentPoly(reg));
  out[static_cast<std::size_t>(power)] = coeff;
  return out;
}

}  // namespace

SeriesInA closed_f(int k, int order, const Registry& reg) {
  const LaurentPoly numer = var(reg, "x", choose2(k)) * bracket_factorial(k, reg, "t", "u");
  std::vector<LaurentPoly> factors;
  for (int i = 1; i <= k; ++i) factors.push_back(bracket(i, reg, "x", "y"));
  return SeriesInA::from_rational(monomial_in_a(reg, k, numer), one_minus_a_product(reg, factors), order);
}

SeriesInA closed_g(int k, int order, const Registry& reg) {
  const LaurentPoly z = var(reg, "z");
  std::vector<LaurentPoly> factors;
  for (int i = 1; i <= k; ++i) factors.push_back(z.pow(k - i) * bracket1(i, z));
  return SeriesInA::from_rational(monomial_in_a(reg, k, bracket_factorial(k, reg, "t", "u")),
                                  one_minus_a_product(reg, factors), order);
}

SeriesInA closed_phi(int k, int order, const Registry& reg) {
  const LaurentPoly x = var(reg, "x");
  const LaurentPoly y = var(reg, "y");
  const std::map<std::string, LaurentPoly> images{{"t", x * y * var(reg, "t")}, {"u", var(reg, "u") * y * y}};
  return closed_f(k, order, reg).map([&](int, const LaurentPoly& c) { return c.substitute(images); });
}

SeriesInA closed_varphi(int k, int order, const Registry& reg) {
  const LaurentPoly z = var(reg, "z");
  const std::map<std::string, LaurentPoly> images{{"z", z.pow(-1)}, {"u", var(reg, "u") * z.pow(-1)}};
  return closed_g(k, order, reg).map([&](int n, const LaurentPoly& c) {
    LaurentPoly out = c.substitute(images) * z.pow(n * (k - 1));
    const auto range = out.exponent_range("z");
    if (range && range->first < 0) {
      throw std::domain_error("closed_varphi: coefficient of a^" + std::to_string(n) + " has negative z-exponents");
    }
    return out;
  });
}

// --- structured matrices --------------------------------------------------------

int matrix_size(int n) { return (n + 1) * (n + 2) / 2; }

namespace {

void check_n(int n, int max_n, const char* what) {
  if (n < 0) throw std::out_of_range(std::string(what) + ": negative size");
  if (n > max_n) throw std::out_of_range(std::string(what) + ": n exceeds " + std::to_string(max_n));
}

// Shared block recursion: diagonal of level n at position i is
// diag(i) - a*low(i)*(delta_ij + delta_{i+1,j}) and the upper block entry
// from level n-1 position i is -a*up(i)*(delta_ij + delta_{i+1,j}).
template <typename Diag, typename Low, typename Up>
SymbolicMatrix block_recursion(int n, const Registry& reg, const LaurentPoly& base, Diag diag, Low low, Up up) {
  const LaurentPoly a = var(reg, "a");
  SymbolicMatrix m(reg, 1, 1);
  m(0, 0) = base;
  for (int level = 1; level <= n; ++level) {
    SymbolicMatrix next(reg, matrix_size(level), matrix_size(level));
    next.place(0, 0, m);
    const int prev_start = matrix_size(level - 2);
    const int start = matrix_size(level - 1);
    for (int i = 1; i <= level + 1; ++i) {
      const LaurentPoly w = a * low(level, i);
      next(start + i - 1, start + i - 1) = diag() - w;
      if (i <= level) next(start + i - 1, start + i) = -w;
    }
    for (int i = 1; i <= level; ++i) {
      const LaurentPoly w = a * up(level, i);
      next(prev_start + i - 1, start + i - 1) = -w;
      next(prev_start + i - 1, start + i) = -w;
    }
    m = std::move(next);
  }
  return m;
}

}  // namespace

SymbolicMatrix build_M(int n, const Registry& reg) {
  check_n(n, 6, "build_M");
  const LaurentPoly x = var(reg, "x");
  return block_recursion(
      n, reg, one(reg), [&] { return one(reg); },
      [&](int level, int i) { return x.pow(i - 1) * bracket(level + 1 - i, reg, "x", "y"); },
      [&](int level, int i) {
        return x.pow(i - 1) * var(reg, "y", level - i) * bracket(level, reg, "t", "u");
      });
}

NParams NParams::generic(int n) {
  const Registry reg = VarRegistry::with_sequence(n);
  NParams p{var(reg, "x"), var(reg, "q"), {}};
  for (int i = 1; i <= n; ++i) p.F.push_back(var(reg, "F" + std::to_string(i)));
  return p;
}

NParams NParams::transfer(int n, const Registry& reg) {
  NParams p{one(reg), var(reg, "z"), {}};
  for (int i = 1; i <= n; ++i) p.F.push_back(bracket(i, reg, "t", "u"));
  return p;
}

SymbolicMatrix build_N(int n, const NParams& params) {
  check_n(n, 6, "build_N");
  if (static_cast<int>(params.F.size()) < n) throw std::invalid_argument("build_N: missing F values");
  const Registry& reg = params.q.registry();
  return block_recursion(
      n, reg, params.x, [&] { return params.x; },
      [&](int level, int i) { return params.q.pow(i - 1) * bracket1(level + 1 - i, params.q); },
      [&](int level, int) { return params.F[static_cast<std::size_t>(level) - 1]; });
}

SymbolicMatrix build_P(int n, const Registry& reg) {
  const SymbolicMatrix m = build_M(n, reg);
  return m.minor(m.rows() - 1, 0);
}

SymbolicMatrix build_P_bar(int n, const Registry& reg) {
  const SymbolicMatrix next = build_M(n + 1, reg);
  const int rows = matrix_size(n) - 1;
  return next.submatrix(0, rows, matrix_size(n), n + 2);
}

SymbolicMatrix build_P_k(int n, int k, const Registry& reg) {
  if (k < 1 || k > n + 2) throw std::out_of_range("build_P_k: need 1 <= k <= n+2");
  const SymbolicMatrix p = build_P(n, reg);
  const SymbolicMatrix bar = build_P_bar(n, reg);
  return p.with_column(p.cols() - 1, bar.column(k - 1));
}

SymbolicMatrix build_Ndot(int n, const NParams& params) {
  const SymbolicMatrix m = build_N(n, params);
  return m.minor(m.rows() - 1, 0);
}

std::vector<LaurentPoly> eigen_vector(int n, int m, int k, const NParams& params) {
  if (m < 1 || k < 1 || m + k > n + 1) throw std::out_of_range("eigen_vector: need m, k >= 1 and m + k <= n + 1");
  if (static_cast<int>(params.F.size()) < n) throw std::invalid_argument("eigen_vector: missing F values");
  const LaurentPoly& q = params.q;
  const Registry& reg = q.registry();
  const PQContext ctx = PQContext::q_only(q);
  std::vector<LaurentPoly> x(static_cast<std::size_t>(matrix_size(n)), LaurentPoly(reg));
  const int top = n + 1 - m - k;
  for (int i = m + k; i <= n + 1; ++i) {
    const int s = i - m - k;
    LaurentPoly common = sign(reg, i + m + k);
    for (int l = m + k; l <= i - 1; ++l) common *= params.F[static_cast<std::size_t>(l) - 1];
    for (int l = s + 1; l <= top; ++l) common *= bracket1(l, q);
    for (int j = 1; j <= i; ++j) {
      const int d = j - k;
      if (d < 0 || d > m) continue;
      const int q_exp = -(m + k - 1) * s + d * (d - 1) / 2;
      x[static_cast<std::size_t>(i * (i - 1) / 2 + j - 1)] = common * q.pow(q_exp) * pq_binomial(m, d, ctx);
    }
  }
  return x;
}

// --- verifiers --------------------------------------------------------------------

bool all_hold(const CheckList& checks) { return first_failure(checks) == nullptr; }

const Equality* first_failure(const CheckList& checks) {
  for (const auto& c : checks) {
    if (!c.holds()) return &c;
  }
  return nullptr;
}

CheckList verify_detM(int n) {
  const Registry reg = VarRegistry::standard();
  const LaurentPoly a = var(reg, "a");
  const LaurentPoly x = var(reg, "x");
  LaurentPoly rhs = one(reg);
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i <= m; ++i) rhs *= one(reg) - a * x.pow(i) * bracket(m - i, reg, "x", "y");
  }
  return {{"det M_" + std::to_string(n), det(build_M(n, reg)), rhs}};
}

CheckList verify_detN(int n) {
  const Registry reg = VarRegistry::standard();
  const LaurentPoly a = var(reg, "a");
  const LaurentPoly z = var(reg, "z");
  LaurentPoly rhs = one(reg);
  for (int m = 1; m <= n; ++m) {
    for (int k = 0; k <= n - m; ++k) rhs *= one(reg) - a * z.pow(k) * bracket1(m, z);
  }
  return {{"det N_" + std::to_string(n), det(build_N(n, NParams::transfer(n, reg))), rhs}};
}

CheckList verify_minor1(int n) {
  const Registry reg = VarRegistry::standard();
  const LaurentPoly a = var(reg, "a");
  const LaurentPoly x = var(reg, "x");
  LaurentPoly rhs = sign(reg, choose2(n)) * a.pow(n) * x.pow(choose2(n)) * bracket_factorial(n, reg, "t", "u");
  for (int m = 1; m <= n - 1; ++m) {
    for (int i = 1; i <= m; ++i) rhs *= one(reg) - a * x.pow(i) * bracket(m - i + 1, reg, "x", "y");
  }
  return {{"det(M_" + std::to_string(n) + "; last, 1)", det(build_P(n, reg)), rhs}};
}

CheckList verify_minor2(int n) {
  const Registry reg = VarRegistry::standard();
  const LaurentPoly a = var(reg, "a");
  const LaurentPoly z = var(reg, "z");
  LaurentPoly rhs = sign(reg, choose2(n)) * a.pow(n) * bracket_factorial(n, reg, "t", "u");
  for (int m = 1; m <= n - 1; ++m) {
    for (int k = 1; k <= n - m; ++k) rhs *= one(reg) - a * z.pow(k - 1) * bracket1(m, z);
  }
  return {{"det(N_" + std::to_string(n) + "; last, 1)", det(build_Ndot(n, NParams::transfer(n, reg))), rhs}};
}

CheckList verify_main1(int n) {
  if (n < 1) throw std::out_of_range("verify_main1: need n >= 1");
  const Registry reg = VarRegistry::standard();
  const LaurentPoly a = var(reg, "a");
  const LaurentPoly x = var(reg, "x");
  const LaurentPoly y = var(reg, "y");
  const std::string tag = std::to_string(n);
  CheckList out;

  const LaurentPoly det_p = det(build_P(n, reg));
  const LaurentPoly det_prev = det(build_P(n - 1, reg));
  LaurentPoly ratio = sign(reg, n - 1) * a * x.pow(n - 1) * bracket(n, reg, "t", "u");
  for (int i = 1; i <= n - 1; ++i) ratio *= one(reg) - a * x.pow(i) * bracket(n - i, reg, "x", "y");
  out.push_back({"det P_" + tag, det_p, ratio * det_prev});

  const LaurentPoly next_bracket = bracket(n + 1, reg, "t", "u");
  const PQContext xy = PQContext::of(reg, "x", "y");
  for (int k = 1; k <= n; ++k) {
    const LaurentPoly lhs = det(build_P_k(n, k, reg)) * x.pow(choose2(n));
    const LaurentPoly rhs = det_p * a * x.pow((k - 1) * (k - 2) / 2) *
                            y.pow((n + 1 - k) * (n + 2 - k) / 2) * next_bracket * pq_binomial(n + 1, k - 1, xy);
    out.push_back({"det P_" + tag + "^" + std::to_string(k) + " * x^" + std::to_string(choose2(n)), lhs, rhs});
  }
  out.push_back({"det P_" + tag + "^" + std::to_string(n + 1), det(build_P_k(n, n + 1, reg)),
                 det_p * a * y * next_bracket * bracket(n, reg, "x", "y")});
  out.push_back({"det P_" + tag + "^" + std::to_string(n + 2), det(build_P_k(n, n + 2, reg)), LaurentPoly(reg)});
  return out;
}

CheckList verify_lemma_key(int n, int m) {
  if (m < 0 || m > n) throw std::out_of_range("verify_lemma_key: need 0 <= m <= n");
  const Registry reg = VarRegistry::standard();
  const LaurentPoly a = var(reg, "a");
  const LaurentPoly x = var(reg, "x");
  const LaurentPoly y = var(reg, "y");
  const PQContext xy = PQContext::of(reg, "x", "y");
  auto factor = [&](int i) { return a * x.pow(i) * bracket(n - i, reg, "x", "y"); };
  LaurentPoly lhs(reg);
  for (int k = 0; k <= m; ++k) {
    LaurentPoly term = sign(reg, m - k) * x.pow(choose2(k)) * y.pow(choose2(n - k)) * pq_binomial(n, k, xy);
    for (int i = 0; i <= k - 1; ++i) term *= one(reg) - factor(i);
    for (int i = k; i <= m - 1; ++i) term *= -factor(i);
    lhs += term;
  }
  LaurentPoly rhs = x.pow(choose2(m)) * y.pow(choose2(n - m)) * pq_binomial(n, m, xy);
  for (int i = 1; i <= m; ++i) rhs *= one(reg) - factor(i);
  return {{"key(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")", lhs, rhs}};
}

CheckList verify_eigen(int n, int m, int k) {
  if (m < 1 || m > n - 1 || k < 1 || k > n - m) throw std::out_of_range("verify_eigen: need 1 <= m <= n-1, 1 <= k <= n-m");
  const NParams params = NParams::generic(n);
  const Registry& reg = params.q.registry();
  const LaurentPoly a = var(reg, "a");
  const auto vec = eigen_vector(n, m, k, params);
  const auto product = row_times(vec, build_N(n, params));
  const LaurentPoly eigenvalue = params.x - a * params.q.pow(k - 1) * bracket1(m, params.q);
  CheckList out;
  const std::string tag = "X_" + std::to_string(n) + "^{" + std::to_string(m) + "," + std::to_string(k) + "} N entry ";
  for (std::size_t i = 0; i < vec.size(); ++i) {
    out.push_back({tag + std::to_string(i + 1), product[i], eigenvalue * vec[i]});
  }
  return out;
}

CheckList verify_conj(int n) {
  const NParams params = NParams::generic(n);
  const Registry& reg = params.q.registry();
  const LaurentPoly a = var(reg, "a");
  const LaurentPoly& x = params.x;
  const LaurentPoly& q = params.q;
  LaurentPoly rhs = sign(reg, choose2(n)) * a.pow(n) * x.pow(n);
  for (int i = 0; i < n; ++i) rhs *= params.F[static_cast<std::size_t>(i)];
  for (int m = 1; m <= n - 1; ++m) {
    for (int k = 1; k <= n - m; ++k) rhs *= x - a * q.pow(k - 1) * bracket1(m, q);
  }
  return {{"det Ndot_" + std::to_string(n), det(build_Ndot(n, params)), rhs}};
}

}  // namespace osp
