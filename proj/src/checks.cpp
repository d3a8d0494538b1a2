#include "osp/checks.hpp"

#include <algorithm>
#include <stdexcept>

#include "osp/qnum.hpp"
#include "osp/stats.hpp"
#include "osp/walks.hpp"
#include "osp/xfer.hpp"

namespace osp {

bool CheckReport::passed() const { return first_failure() == nullptr; }

const CheckRow* CheckReport::first_failure() const {
  for (const auto& r : rows) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

namespace {

Registry standard() { return VarRegistry::standard(); }
LaurentPoly var(std::string_view name) { return LaurentPoly::variable(standard(), name); }

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

std::string mismatch(const std::string& what, const LaurentPoly& got, const LaurentPoly& want) {
  return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

void note(const CheckOptions& opts, const std::string& msg) {
  if (opts.progress) opts.progress(msg);
}

DistributionOptions dist_options(const CheckOptions& opts, bool unordered = false) {
  DistributionOptions d;
  d.enumeration = opts.enumeration;
  d.unordered_only = unordered;
  d.threads = opts.threads;
  return d;
}

// Runs `fn(row)` on each pi of OP_n^k until it reports a failure.
template <typename Fn>
CheckRow pointwise(int n, int k, const CheckOptions& opts, Fn fn) {
  CheckRow row{nk(n, k), true, {}};
  for_each_ordered_partition(
      n, k,
      [&](const OrderedPartition& pi) {
        if (!row.pass) return;
        std::string why = fn(pi);
        if (!why.empty()) {
          row.pass = false;
          row.detail = "pi=" + pi.format() + ": " + why;
        }
      },
      opts.enumeration);
  return row;
}

// Sums a per-element coordinate over the elements of the given classes.
long class_sum(const StatVector& sv, Coord c, bool opening) {
  long s = 0;
  for (int i = 1; i <= sv.n(); ++i) {
    const auto cls = sv.classes()[static_cast<std::size_t>(i)];
    const bool opens = cls == ElementClass::Opener || cls == ElementClass::Singleton;
    if (opens == opening) s += sv.coord(i, c);
  }
  return s;
}

std::string expect_eq(const char* what, long got, long want) {
  if (got == want) return {};
  return std::string(what) + ": " + std::to_string(got) + " != " + std::to_string(want);
}

// --- statistic checks ---------------------------------------------------------

CheckReport distribution_suite(const std::string& name, const std::string& title, int n_max,
                               const std::vector<std::string>& stat_texts, const CheckOptions& opts,
                               bool empirical) {
  CheckReport report{name, title, empirical, {}};
  const LaurentPoly q = var("q");
  const QTable stirling = q_stirling_table(n_max, q);
  std::vector<StatExpr> exprs;
  for (const auto& s : stat_texts) exprs.push_back(StatExpr::parse(s));
  for (int n = 1; n <= n_max; ++n) {
    note(opts, name + ": n=" + std::to_string(n));
    for (int k = 1; k <= n; ++k) {
      const LaurentPoly target = pq_factorial(k, PQContext::q_only(q)) * stirling[n][k];
      const auto dists = distributions(n, k, exprs, q, dist_options(opts));
      CheckRow row{nk(n, k), true, {}};
      std::vector<std::string> failed;
      for (std::size_t i = 0; i < exprs.size(); ++i) {
        if (dists[i] == target) continue;
        if (row.pass) row.detail = mismatch(stat_texts[i], dists[i], target);
        row.pass = false;
        failed.push_back(stat_texts[i]);
      }
      if (empirical) {
        std::string status;
        for (std::size_t i = 0; i < exprs.size(); ++i) {
          const bool ok = std::find(failed.begin(), failed.end(), stat_texts[i]) == failed.end();
          if (i) status += ", ";
          status += stat_texts[i] + (ok ? " match" : " MISMATCH");
        }
        row.detail = row.pass ? status : status + "; " + row.detail;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

CheckReport check_thm25(int n_max, const CheckOptions& opts) {
  return distribution_suite("thm25", "six inversion-like statistics are Euler-Mahonian", n_max,
                            {"mak+bInv", "mak+bInv-inv+cinv", "lmak+bInv", "lmak+bInv-inv+cinv", "cinvLSB",
                             "cinvLSB+inv-cinv"},
                            opts, false);
}

CheckReport check_prop22(int n_max, const CheckOptions& opts) {
  CheckReport report{"prop22", "mak = lmak' and mak' = lmak pointwise", false, {}};
  for (int n = 1; n <= n_max; ++n) {
    note(opts, "prop22: n=" + std::to_string(n));
    for (int k = 1; k <= n; ++k) {
      report.rows.push_back(pointwise(n, k, opts, [](const OrderedPartition& pi) {
        const StatVector sv(pi);
        std::string why = expect_eq("mak vs lmak'", sv.value(Stat::mak), sv.value(Stat::lmakP));
        if (why.empty()) why = expect_eq("mak' vs lmak", sv.value(Stat::makP), sv.value(Stat::lmak));
        return why;
      }));
    }
  }
  return report;
}

CheckReport check_sec22(int n_max, const CheckOptions& opts) {
  CheckReport report{"sec22", "type identities and per-element sums", false, {}};
  for (int n = 1; n <= n_max; ++n) {
    note(opts, "sec22: n=" + std::to_string(n));
    for (int k = 1; k <= n; ++k) {
      report.rows.push_back(pointwise(n, k, opts, [k](const OrderedPartition& pi) {
        const StatVector sv(pi);
        for (int i = 1; i <= sv.n(); ++i) {
          const int opens = sv.coord(i, Coord::los) + sv.coord(i, Coord::lob) + sv.coord(i, Coord::ros) +
                            sv.coord(i, Coord::rob);
          const int closes = sv.coord(i, Coord::lcs) + sv.coord(i, Coord::lcb) + sv.coord(i, Coord::rcs) +
                             sv.coord(i, Coord::rcb);
          if (opens != k - 1 || closes != k - 1) return "per-element sums at i=" + std::to_string(i);
        }
        std::string why = expect_eq("bInv vs rcs(O+S)", sv.value(Stat::bInv), class_sum(sv, Coord::rcs, true));
        if (why.empty()) why = expect_eq("inv vs ros(O+S)", sv.value(Stat::inv), class_sum(sv, Coord::ros, true));
        if (why.empty()) why = expect_eq("bExc vs lcs(O+S)", sv.value(Stat::bExc), class_sum(sv, Coord::lcs, true));
        if (why.empty()) why = expect_eq("cinv vs los(O+S)", sv.value(Stat::cinv), class_sum(sv, Coord::los, true));
        return why;
      }));
    }
  }
  return report;
}

CheckReport check_lemma310(int n_max, const CheckOptions& opts) {
  CheckReport report{"lemma310", "rewriting identities for mak+bInv, lmak+bInv, cinvLSB", false, {}};
  for (int n = 1; n <= n_max; ++n) {
    note(opts, "lemma310: n=" + std::to_string(n));
    for (int k = 1; k <= n; ++k) {
      report.rows.push_back(pointwise(n, k, opts, [n, k](const OrderedPartition& pi) {
        const StatVector sv(pi);
        const long closers = sv.total(Coord::lcs) + sv.total(Coord::rcs);
        const long closers_tc = class_sum(sv, Coord::lcs, false) + class_sum(sv, Coord::rcs, false);
        const long rsb_tc = class_sum(sv, Coord::rsb, false);
        const long lsb_tc = class_sum(sv, Coord::lsb, false);
        const long spanning_os = class_sum(sv, Coord::lsb, true) + class_sum(sv, Coord::rsb, true);
        std::string why = expect_eq("mak+bInv", sv.value(Stat::makBInv), closers + rsb_tc + sv.inv());
        if (why.empty()) {
          why = expect_eq("lmak+bInv", sv.value(Stat::lmakBInv),
                          static_cast<long>(n) * (k - 1) - closers_tc - lsb_tc - sv.cinv());
        }
        if (why.empty()) {
          why = expect_eq("cinvLSB", sv.value(Stat::cinvLSB), spanning_os + lsb_tc + sv.inv() + 2L * sv.cinv());
        }
        return why;
      }));
    }
  }
  return report;
}

CheckReport check_equidist(int n_max, const CheckOptions& opts) {
  CheckReport report{"equidist", "{rob,lob,rcs,lcs} and {ros,los,rcb,lcb} are equidistributed", false, {}};
  const LaurentPoly q = var("q");
  const std::vector<std::vector<std::string>> classes{{"rob", "lob", "rcs", "lcs"}, {"ros", "los", "rcb", "lcb"}};
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      CheckRow row{nk(n, k), true, {}};
      for (const auto& cls : classes) {
        std::vector<StatExpr> exprs;
        for (const auto& s : cls) exprs.push_back(StatExpr::parse(s));
        const auto dists = distributions(n, k, exprs, q, dist_options(opts));
        for (std::size_t i = 1; i < dists.size() && row.pass; ++i) {
          if (dists[i] != dists[0]) {
            row.pass = false;
            row.detail = cls[i] + " vs " + cls[0] + ": " + dists[i].to_string() + " != " + dists[0].to_string();
          }
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

CheckReport check_sec23(int n_max, const CheckOptions& opts) {
  CheckReport report{"sec23", "q-Stirling interpretations on unordered partitions", false, {}};
  const LaurentPoly q = var("q");
  const QTable stirling = q_stirling_table(n_max, q);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      const std::vector<std::string> texts{"mak", "lmak", "lsb+" + std::to_string(k * (k - 1) / 2)};
      std::vector<StatExpr> exprs;
      for (const auto& s : texts) exprs.push_back(StatExpr::parse(s));
      const auto dists = distributions(n, k, exprs, q, dist_options(opts, true));
      CheckRow row{nk(n, k), true, {}};
      for (std::size_t i = 0; i < dists.size() && row.pass; ++i) {
        if (dists[i] != stirling[n][k]) {
          row.pass = false;
          row.detail = mismatch(texts[i], dists[i], stirling[n][k]);
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

// --- q-number checks -----------------------------------------------------------

CheckReport check_zz(int n_max, const CheckOptions&) {
  CheckReport report{"zz", "[k]! S_q(n,k) as a sum of q-Eulerian numbers", false, {}};
  const LaurentPoly q = var("q");
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto r = check_zz_identity(n, k, q);
      report.rows.push_back({nk(n, k), r.holds, r.holds ? "" : mismatch("sum", r.rhs, r.lhs)});
    }
  }
  return report;
}

CheckReport check_eulerian(int n_max, const CheckOptions&) {
  CheckReport report{"eulerian", "q-Eulerian recurrence equals the maj enumeration", false, {}};
  const LaurentPoly q = var("q");
  const QTable table = q_eulerian_table(n_max, q);
  for (int n = 1; n <= n_max; ++n) {
    for (int k = 0; k < n; ++k) {
      const LaurentPoly brute = q_eulerian_bruteforce(n, k, q, std::max(9, n_max));
      const bool ok = brute == table[n][k];
      report.rows.push_back({nk(n, k), ok, ok ? "" : mismatch("maj sum", brute, table[n][k])});
    }
  }
  return report;
}

CheckReport check_erratum(const CheckOptions&) {
  CheckReport report{"erratum", "q-Stirling recurrence against a reference table with three wrong cells", false, {}};
  const Registry reg = standard();
  const LaurentPoly q = var("q");
  const QTable table = q_stirling_table(4, q);
  struct Cell {
    int n, k;
    const char* printed;
    bool erratum;
  };
  const Cell cells[] = {{1, 1, "1", false},
                        {2, 1, "1", false},
                        {2, 2, "1*q", false},
                        {3, 1, "1", false},
                        {3, 2, "1 + 1*q + 1*q^2", true},
                        {3, 3, "1*q^3", false},
                        {4, 1, "1", false},
                        {4, 2, "1 + 3*q + 2*q^2 + 1*q^3", true},
                        {4, 3, "1*q^2 + 2*q^3 + 2*q^4 + 1*q^5", true},
                        {4, 4, "1*q^6", false}};
  for (const auto& c : cells) {
    const LaurentPoly printed = LaurentPoly::parse(reg, c.printed);
    const LaurentPoly& computed = table[c.n][c.k];
    const bool agrees = computed == printed;
    CheckRow row{nk(c.n, c.k), agrees != c.erratum, {}};
    row.detail = std::string(c.erratum ? "erratum: " : "") + "recurrence " + computed.to_string() + ", printed " +
                 printed.to_string();
    report.rows.push_back(std::move(row));
  }
  return report;
}

// --- bijection ----------------------------------------------------------------

CheckReport check_bij(int n_max, const CheckOptions& opts) {
  CheckReport report{"bij", "psi is a bijection tracking the coordinate statistics", false, {}};
  for (int n = 1; n <= n_max; ++n) {
    note(opts, "bij: n=" + std::to_string(n));
    for (int k = 1; k <= n; ++k) {
      CheckRow row = pointwise(n, k, opts, [k](const OrderedPartition& pi) -> std::string {
        const PathDiagram d = psi_inverse(pi);
        if (!is_valid_diagram(d, k)) return "psi_inverse gives an invalid diagram";
        if (psi(d) != pi) return "psi(psi_inverse(pi)) != pi";
        const auto path = path_of_form(form(pi));
        if (!path || *path != d.steps) return "form does not match the diagram path";
        const StatVector sv(pi);
        for (int i = 1; i <= pi.n(); ++i) {
          if (!prediction_holds(step_properties(d, i), sv, i)) return "step prediction fails at i=" + std::to_string(i);
        }
        return {};
      });
      if (row.pass) {
        Integer diagrams = 0;
        for_each_diagram(
            n, k,
            [&](const PathDiagram& d) {
              ++diagrams;
              if (row.pass && psi_inverse(psi(d)) != d) {
                row.pass = false;
                row.detail = "psi_inverse(psi(d)) != d for steps " + format_steps(d.steps) + " xi " + format_choices(d.xi);
              }
            },
            opts.enumeration);
        Integer weighted = 0;
        for_each_path(n, k, [&](const Path& p) { weighted += choice_product(p); }, opts.enumeration);
        const Integer expected = factorial(k) * stirling2(n, k);
        if (row.pass && (diagrams != expected || weighted != expected)) {
          row.pass = false;
          row.detail = "|Delta| = " + diagrams.get_str() + ", choice sum = " + weighted.get_str() + ", expected " +
                       expected.get_str();
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

// --- generating functions -----------------------------------------------------------

constexpr int kMaxSeriesDepth = 3;

CheckReport check_transfer(int n_max, const CheckOptions& opts) {
  CheckReport report{"transfer", "transfer-matrix series equals the enumeration of Q_{n,k}", false, {}};
  const WeightSpec w = WeightSpec::full();
  for (int k = 1; k <= kMaxSeriesDepth; ++k) {
    note(opts, "transfer: k=" + std::to_string(k));
    const SeriesInA series = q_gf_transfer(k, w, n_max);
    for (int n = 0; n <= n_max; ++n) {
      LaurentPoly brute(standard());
      if (n >= k) {
        for_each_ordered_partition(n, k, [&](const OrderedPartition& pi) { brute += q_monomial(pi); }, opts.enumeration);
      }
      const bool ok = series[n] == brute;
      report.rows.push_back({nk(n, k), ok, ok ? "" : mismatch("a^" + std::to_string(n), series[n], brute)});
    }
  }
  return report;
}

CheckReport check_cor39(int order, const CheckOptions& opts) {
  CheckReport report{"cor39", "specialized transfer series equal the closed forms f_k, g_k", false, {}};
  for (int k = 1; k <= kMaxSeriesDepth; ++k) {
    note(opts, "cor39: k=" + std::to_string(k));
    const std::pair<const char*, std::pair<SeriesInA, SeriesInA>> cases[] = {
        {"f", {q_gf_transfer(k, WeightSpec::spec_f(), order), closed_f(k, order)}},
        {"g", {q_gf_transfer(k, WeightSpec::spec_g(), order), closed_g(k, order)}}};
    for (const auto& [label, pair] : cases) {
      CheckRow row{std::string(label) + " k=" + std::to_string(k), true, {}};
      for (int n = 0; n <= order && row.pass; ++n) {
        if (pair.first[n] != pair.second[n]) {
          row.pass = false;
          row.detail = mismatch("a^" + std::to_string(n), pair.first[n], pair.second[n]);
        }
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

CheckReport check_thm24(int n_max, const CheckOptions& opts) {
  CheckReport report{"thm24", "closed forms of phi_k and varphi_k equal the enumeration", false, {}};
  const std::vector<StatExpr> phi_stats{StatExpr::parse("mak+bInv"), StatExpr::parse("cinvLSB"), Stat::inv,
                                        Stat::cinv};
  const std::vector<LaurentPoly> phi_vars{var("x"), var("y"), var("t"), var("u")};
  const std::vector<StatExpr> varphi_stats{StatExpr::parse("lmak+bInv"), Stat::inv, Stat::cinv};
  const std::vector<LaurentPoly> varphi_vars{var("z"), var("t"), var("u")};
  for (int k = 1; k <= kMaxSeriesDepth; ++k) {
    note(opts, "thm24: k=" + std::to_string(k));
    const SeriesInA phi = closed_phi(k, n_max);
    const SeriesInA varphi = closed_varphi(k, n_max);
    for (int n = k; n <= n_max; ++n) {
      const LaurentPoly phi_enum = joint_distribution(n, k, phi_stats, phi_vars, dist_options(opts));
      const LaurentPoly varphi_enum = joint_distribution(n, k, varphi_stats, varphi_vars, dist_options(opts));
      CheckRow row{nk(n, k), true, {}};
      if (phi[n] != phi_enum) {
        row.pass = false;
        row.detail = mismatch("phi", phi_enum, phi[n]);
      } else if (varphi[n] != varphi_enum) {
        row.pass = false;
        row.detail = mismatch("varphi", varphi_enum, varphi[n]);
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

// --- determinant identities ---------------------------------------------------------

CheckRow from_checks(std::string instance, const CheckList& checks) {
  CheckRow row{std::move(instance), true, {}};
  if (const Equality* bad = first_failure(checks)) {
    row.pass = false;
    row.detail = mismatch(bad->label, bad->lhs, bad->rhs);
  }
  return row;
}

template <typename Verify>
CheckReport per_n(const std::string& name, const std::string& title, int n_min, int n_max, const CheckOptions& opts,
                  Verify verify) {
  CheckReport report{name, title, false, {}};
  for (int n = n_min; n <= n_max; ++n) {
    note(opts, name + ": n=" + std::to_string(n));
    report.rows.push_back(from_checks("n=" + std::to_string(n), verify(n)));
  }
  return report;
}

CheckReport check_key(int n_max, const CheckOptions& opts) {
  CheckReport report{"key", "alternating q-binomial sum identity", false, {}};
  for (int n = 0; n <= n_max; ++n) {
    note(opts, "key: n=" + std::to_string(n));
    for (int m = 0; m <= n; ++m) {
      report.rows.push_back(
          from_checks("n=" + std::to_string(n) + " m=" + std::to_string(m), verify_lemma_key(n, m)));
    }
  }
  return report;
}

CheckReport check_eigen(int n_max, const CheckOptions& opts) {
  CheckReport report{"eigen", "left eigenvectors of N_n(x,a)", false, {}};
  for (int n = 2; n <= n_max; ++n) {
    note(opts, "eigen: n=" + std::to_string(n));
    for (int m = 1; m <= n - 1; ++m) {
      for (int k = 1; k <= n - m; ++k) {
        report.rows.push_back(from_checks(
            "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k), verify_eigen(n, m, k)));
      }
    }
  }
  return report;
}

using Runner = CheckReport (*)(int, const CheckOptions&);

struct Entry {
  CheckInfo info;
  Runner run;
};

const std::vector<Entry>& registry_of_checks() {
  static const std::vector<Entry> entries{
      {{"minor1", "det(M_n; last, 1) closed product", 4},
       [](int n, const CheckOptions& o) {
         return per_n("minor1", "det(M_n; last, 1) closed product", 1, n, o, verify_minor1);
       }},
      {{"minor2", "det(N_n; last, 1) closed product", 4},
       [](int n, const CheckOptions& o) {
         return per_n("minor2", "det(N_n; last, 1) closed product", 1, n, o, verify_minor2);
       }},
      {{"main1", "ratios det P_n / det P_{n-1} and det P_n^k / det P_n", 4},
       [](int n, const CheckOptions& o) {
         return per_n("main1", "ratios det P_n / det P_{n-1} and det P_n^k / det P_n", 1, n, o, verify_main1);
       }},
      {{"key", "alternating q-binomial sum identity", 5}, check_key},
      {{"eigen", "left eigenvectors of N_n(x,a)", 4}, check_eigen},
      {{"conj", "det of N_n(x,a) without last row and first column", 4},
       [](int n, const CheckOptions& o) {
         return per_n("conj", "det of N_n(x,a) without last row and first column", 1, n, o, verify_conj);
       }},
      {{"thm24", "closed forms of phi_k and varphi_k equal the enumeration", 7}, check_thm24},
      {{"thm25", "six inversion-like statistics are Euler-Mahonian", 8}, check_thm25},
      {{"cor39", "specialized transfer series equal the closed forms f_k, g_k", 8}, check_cor39},
      {{"zz", "[k]! S_q(n,k) as a sum of q-Eulerian numbers", 8}, check_zz},
      {{"prop22", "mak = lmak' and mak' = lmak pointwise", 8}, check_prop22},
      {{"lemma310", "rewriting identities for mak+bInv, lmak+bInv, cinvLSB", 8}, check_lemma310},
      {{"conjecture-bmaj", "bMaj statistics against [k]! S_q(n,k)", 8},
       [](int n, const CheckOptions& o) { return report_conjectures(n, o); }},
      {{"detM", "det M_n triangular product", 3},
       [](int n, const CheckOptions& o) { return per_n("detM", "det M_n triangular product", 1, n, o, verify_detM); }},
      {{"detN", "det N_n triangular product", 3},
       [](int n, const CheckOptions& o) { return per_n("detN", "det N_n triangular product", 1, n, o, verify_detN); }},
      {{"bij", "psi is a bijection tracking the coordinate statistics", 7}, check_bij},
      {{"transfer", "transfer-matrix series equals the enumeration of Q_{n,k}", 7}, check_transfer},
      {{"sec22", "type identities and per-element sums", 8}, check_sec22},
      {{"sec23", "q-Stirling interpretations on unordered partitions", 8}, check_sec23},
      {{"equidist", "{rob,lob,rcs,lcs} and {ros,los,rcb,lcb} are equidistributed", 7}, check_equidist},
      {{"eulerian", "q-Eulerian recurrence equals the maj enumeration", 8}, check_eulerian},
      {{"erratum", "q-Stirling recurrence against a reference table with three wrong cells", 4},
       [](int, const CheckOptions& o) { return check_erratum(o); }},
  };
  return entries;
}

}  // namespace

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : registry_of_checks()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

CheckReport run_check(std::string_view name, const CheckOptions& opts) {
  for (const auto& e : registry_of_checks()) {
    if (e.info.name == name) return e.run(opts.n_max < 0 ? e.info.default_n_max : opts.n_max, opts);
  }
  throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

CheckReport report_conjectures(int n_max, const CheckOptions& opts) {
  return distribution_suite("conjecture-bmaj", "bMaj statistics against [k]! S_q(n,k)", n_max,
                            {"mak+bMaj", "lmak+bMaj", "cmajLSB"}, opts, true);
}

}  // namespace osp
