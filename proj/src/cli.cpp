#include "osp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "osp/checks.hpp"
#include "osp/partition.hpp"
#include "osp/qnum.hpp"
#include "osp/stats.hpp"
#include "osp/walks.hpp"
#include "osp/xfer.hpp"

namespace osp::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Table, Records };

struct Common {
  Format format = Format::Table;
  bool force_large = false;
  int threads = 1;
};

struct Context {
  const Common& common;
  std::ostream& out;
  std::ostream& err;

  EnumOptions enumeration() const {
    EnumOptions o;
    o.force_large = common.force_large;
    return o;
  }
  bool records() const { return common.format == Format::Records; }
};

// Symbolic work beyond these sizes is only run with --force-large.
constexpr int kMaxSeriesDepthFull = 4;
constexpr int kMaxSeriesDepthSpecial = 5;
constexpr int kMaxSeriesOrder = 12;
constexpr int kMaxMatrixN = 5;
constexpr int kMaxTableN = 12;

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void require_bound(const Context& ctx, bool within, const std::string& what) {
  if (!within && !ctx.common.force_large) throw BoundExceeded(what + " exceeds the desk bound; pass --force-large");
}

void validate_nk(int n, int k) {
  require(n >= 0, "--n must be >= 0");
  require(k >= 0 && k <= n, "--k must satisfy 0 <= k <= n");
}

std::vector<int> k_range(int n, std::optional<int> k) {
  if (k) return {*k};
  std::vector<int> ks;
  for (int j = n == 0 ? 0 : 1; j <= n; ++j) ks.push_back(j);
  return ks;
}

Registry standard() { return VarRegistry::standard(); }

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

// --- qnum -------------------------------------------------------------------

struct QnumArgs {
  std::string table = "stirling";
  int n_max = 4;
};

int cmd_qnum(const QnumArgs& a, const Context& ctx) {
  require(a.n_max >= 0, "--n-max must be >= 0");
  require_bound(ctx, a.n_max <= kMaxTableN, "--n-max " + std::to_string(a.n_max));
  const LaurentPoly q = LaurentPoly::variable(standard(), "q");
  const PQContext pq = PQContext::q_only(q);
  QTable table;
  if (a.table == "stirling") {
    table = q_stirling_table(a.n_max, q);
  } else if (a.table == "eulerian") {
    table = q_eulerian_table(a.n_max, q);
  } else if (a.table == "euler-mahonian") {
    table = q_stirling_table(a.n_max, q);
    for (int n = 0; n <= a.n_max; ++n) {
      for (int k = 0; k <= n; ++k) table[n][k] *= pq_factorial(k, pq);
    }
  } else if (a.table == "binomial") {
    table.assign(static_cast<std::size_t>(a.n_max) + 1, {});
    for (int n = 0; n <= a.n_max; ++n) {
      for (int k = 0; k <= n; ++k) table[n].push_back(pq_binomial(n, k, pq));
    }
  } else {
    throw UsageError("unknown table '" + a.table + "'");
  }
  for (int n = 0; n <= a.n_max; ++n) {
    // Eulerian columns run 0..n-1; Stirling columns start at k = 1 for n > 0.
    const int lo = a.table == "eulerian" || a.table == "binomial" || n == 0 ? 0 : 1;
    const int hi = a.table == "eulerian" ? std::max(n - 1, 0) : n;
    for (int k = lo; k <= hi; ++k) {
      const std::string poly = table[n][k].to_string();
      if (ctx.records()) {
        ctx.out << json{{"table", a.table}, {"n", n}, {"k", k}, {"value", poly}}.dump() << '\n';
      } else {
        ctx.out << n << '\t' << k << '\t' << poly << '\n';
      }
    }
  }
  return kOk;
}

// --- enum -------------------------------------------------------------------

struct EnumArgs {
  int n = -1;
  std::optional<int> k;
  bool unordered = false;
  bool count_only = false;
};

int cmd_enum(const EnumArgs& a, const Context& ctx) {
  validate_nk(a.n, a.k.value_or(0));
  check_bound(a.n, ctx.enumeration());
  const auto each = a.unordered ? for_each_set_partition : for_each_ordered_partition;
  unsigned long long total = 0;
  for (int k : k_range(a.n, a.k)) {
    unsigned long long count = 0;
    each(
        a.n, k,
        [&](const OrderedPartition& pi) {
          ++count;
          if (a.count_only) return;
          if (ctx.records()) {
            ctx.out << json{{"n", a.n}, {"k", k}, {"partition", pi.format()}}.dump() << '\n';
          } else {
            ctx.out << pi.format() << '\n';
          }
        },
        ctx.enumeration());
    total += count;
    if (a.count_only) {
      if (ctx.records()) {
        ctx.out << json{{"n", a.n}, {"k", k}, {"count", count}}.dump() << '\n';
      } else {
        ctx.out << a.n << '\t' << k << '\t' << count << '\n';
      }
    }
  }
  if (a.count_only && !a.k) {
    if (ctx.records()) {
      ctx.out << json{{"n", a.n}, {"k", "all"}, {"count", total}}.dump() << '\n';
    } else {
      ctx.out << a.n << "\tall\t" << total << '\n';
    }
  }
  return kOk;
}

// --- stats ------------------------------------------------------------------

constexpr Coord kTableOrder[] = {Coord::los, Coord::ros, Coord::lob, Coord::rob, Coord::lcs,
                                 Coord::rcs, Coord::lcb, Coord::rcb, Coord::lsb, Coord::rsb};

constexpr Stat kSummaryStats[] = {Stat::bInv,  Stat::bExc, Stat::bMaj,    Stat::inv,     Stat::cinv,
                                  Stat::mak,   Stat::lmak, Stat::makP,    Stat::lmakP,   Stat::cinvLSB,
                                  Stat::cmajLSB, Stat::cbInv, Stat::cbMaj};

int cmd_stats(const std::string& text, const Context& ctx) {
  const OrderedPartition pi = OrderedPartition::parse(text);
  const StatVector sv(pi);
  const std::string perm = join_ints(perm_of(pi), "");
  if (ctx.records()) {
    for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
      for (int e : pi.blocks()[b]) {
        json row{{"element", e}, {"block", b + 1}};
        for (Coord c : kTableOrder) row[std::string(coord_name(c))] = sv.coord(e, c);
        ctx.out << row.dump() << '\n';
      }
    }
    json summary{{"partition", pi.format()}, {"perm", perm}};
    for (Coord c : kTableOrder) summary[std::string(coord_name(c))] = sv.total(c);
    for (Stat s : kSummaryStats) summary[std::string(stat_name(s))] = sv.value(s);
    ctx.out << summary.dump() << '\n';
    return kOk;
  }
  // One column per element, blocks separated by " - ".
  auto row = [&](const std::string& label, auto cell) {
    std::ostringstream line;
    line << std::left << std::setw(8) << label;
    for (std::size_t b = 0; b < pi.blocks().size(); ++b) {
      if (b) line << " - ";
      for (std::size_t j = 0; j < pi.blocks()[b].size(); ++j) {
        line << (j ? " " : "") << std::right << std::setw(2) << cell(pi.blocks()[b][j]);
      }
    }
    ctx.out << line.str() << '\n';
  };
  row("pi", [](int e) { return std::to_string(e); });
  for (Coord c : kTableOrder) {
    row(std::string(coord_name(c)) + "_i", [&](int e) { return std::to_string(sv.coord(e, c)); });
  }
  ctx.out << '\n';
  ctx.out << "totals ";
  for (Coord c : kTableOrder) ctx.out << ' ' << coord_name(c) << '=' << sv.total(c);
  ctx.out << '\n';
  ctx.out << "perm=" << perm;
  for (Stat s : kSummaryStats) ctx.out << ' ' << stat_name(s) << '=' << sv.value(s);
  ctx.out << '\n';
  return kOk;
}

// --- dist -------------------------------------------------------------------

struct DistArgs {
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> n_max;
  std::vector<std::string> stats;
  bool unordered = false;
  bool compare = false;
};

int cmd_dist(const DistArgs& a, const Context& ctx) {
  require(!a.stats.empty(), "dist needs at least one statistic");
  require(a.n.has_value() != a.n_max.has_value(), "dist needs exactly one of --n and --n-max");
  std::vector<StatExpr> exprs;
  for (const auto& s : a.stats) exprs.push_back(StatExpr::parse(s));
  const int n_hi = a.n ? *a.n : *a.n_max;
  const int n_lo = a.n ? *a.n : 1;
  validate_nk(n_hi, a.k.value_or(0));
  check_bound(n_hi, ctx.enumeration());
  const LaurentPoly q = LaurentPoly::variable(standard(), "q");
  const QTable stirling = q_stirling_table(n_hi, q);
  DistributionOptions opts;
  opts.enumeration = ctx.enumeration();
  opts.unordered_only = a.unordered;
  opts.threads = ctx.common.threads;
  int status = kOk;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int k : k_range(n, a.k)) {
      if (k > n) continue;
      const auto dists = distributions(n, k, exprs, q, opts);
      const LaurentPoly target =
          a.unordered ? stirling[n][k] : pq_factorial(k, PQContext::q_only(q)) * stirling[n][k];
      for (std::size_t i = 0; i < exprs.size(); ++i) {
        const std::string poly = dists[i].to_string();
        const bool match = dists[i] == target;
        if (a.compare && !match) status = kMismatch;
        if (ctx.records()) {
          json row{{"n", n}, {"k", k}, {"stat", exprs[i].to_string()}, {"distribution", poly}};
          if (a.compare) row["matches_target"] = match;
          ctx.out << row.dump() << '\n';
        } else {
          ctx.out << n << '\t' << k << '\t' << exprs[i].to_string() << '\t' << poly;
          if (a.compare) ctx.out << '\t' << (match ? "MATCH" : "MISMATCH");
          ctx.out << '\n';
        }
      }
    }
  }
  return status;
}

// --- bij --------------------------------------------------------------------

struct BijArgs {
  std::vector<std::string> forward;
  std::string xi;
  std::string inverse;
};

// Opened blocks of a trace carry a trailing '+'.
std::string format_trace(const Trace& t) {
  std::string s;
  for (std::size_t b = 0; b < t.size(); ++b) {
    if (b) s += '/';
    s += join_ints(t[b].elements, ",");
    if (t[b].opened) s += '+';
  }
  return s;
}

void print_construction(const PathDiagram& d, const OrderedPartition& pi, const Context& ctx) {
  const auto vertices = path_vertices(d.steps);
  for (int i = 1; i <= d.length(); ++i) {
    const auto step = d.steps[static_cast<std::size_t>(i - 1)];
    const Vertex from = vertices[static_cast<std::size_t>(i - 1)];
    const std::string trace_text = format_trace(trace(pi, i));
    if (ctx.records()) {
      ctx.out << json{{"i", i},
                      {"step", std::string(1, step_letter(step))},
                      {"from", {from.closed, from.open}},
                      {"xi", d.xi[static_cast<std::size_t>(i - 1)]},
                      {"trace", trace_text}}
                     .dump()
              << '\n';
    } else {
      ctx.out << i << '\t' << step_letter(step) << "\t(" << from.closed << ',' << from.open << ")\t"
              << d.xi[static_cast<std::size_t>(i - 1)] << '\t' << trace_text << '\n';
    }
  }
}

int cmd_bij(const BijArgs& a, const Context& ctx) {
  require(a.forward.empty() != a.inverse.empty(), "bij needs exactly one of --forward and --inverse");
  PathDiagram d;
  OrderedPartition pi;
  if (!a.inverse.empty()) {
    pi = OrderedPartition::parse(a.inverse);
    d = psi_inverse(pi);
  } else {
    d.steps = parse_steps(a.forward[0]);
    require(a.forward.size() == 2 || !a.xi.empty(), "--forward needs a choice list (second value or --xi)");
    require(a.forward.size() == 1 || a.xi.empty(), "give the choice list once");
    d.xi = parse_choices(a.forward.size() == 2 ? a.forward[1] : a.xi);
    const int k = d.steps.empty() ? 0 : path_vertices(d.steps).back().closed;
    require(is_valid_diagram(d, k), "not a valid path diagram");
    pi = psi(d);
  }
  if (ctx.records()) {
    ctx.out << json{{"steps", format_steps(d.steps)}, {"xi", format_choices(d.xi)}, {"partition", pi.format()}}.dump()
            << '\n';
  } else {
    ctx.out << "steps\t" << format_steps(d.steps) << '\n';
    ctx.out << "xi\t" << format_choices(d.xi) << '\n';
    ctx.out << "partition\t" << pi.format() << '\n';
    ctx.out << '\n';
  }
  print_construction(d, pi, ctx);
  return kOk;
}

// --- gf ---------------------------------------------------------------------

struct GfArgs {
  int k = 1;
  int order = 6;
  std::string weights = "f";
  std::string method;
};

int cmd_gf(const GfArgs& a, const Context& ctx) {
  require(a.k >= 1, "--k must be >= 1");
  require(a.order >= 0, "--order must be >= 0");
  require_bound(ctx, a.order <= kMaxSeriesOrder, "--order " + std::to_string(a.order));
  const bool closed_family = a.weights == "phi" || a.weights == "varphi";
  const std::string method = a.method.empty() ? (closed_family ? "closed" : "transfer") : a.method;
  require_bound(ctx, a.k <= (a.weights == "full" ? kMaxSeriesDepthFull : kMaxSeriesDepthSpecial),
                "--k " + std::to_string(a.k));
  SeriesInA series;
  if (closed_family) {
    if (method == "closed") {
      series = a.weights == "phi" ? closed_phi(a.k, a.order) : closed_varphi(a.k, a.order);
    } else if (method == "enum") {
      check_bound(a.order, ctx.enumeration());
      auto var = [](const char* name) { return LaurentPoly::variable(standard(), name); };
      const bool phi = a.weights == "phi";
      std::vector<StatExpr> exprs = phi ? std::vector<StatExpr>{StatExpr::parse("mak+bInv"),
                                                                StatExpr::parse("cinvLSB"), Stat::inv, Stat::cinv}
                                        : std::vector<StatExpr>{StatExpr::parse("lmak+bInv"), Stat::inv, Stat::cinv};
      std::vector<LaurentPoly> vars = phi ? std::vector<LaurentPoly>{var("x"), var("y"), var("t"), var("u")}
                                          : std::vector<LaurentPoly>{var("z"), var("t"), var("u")};
      DistributionOptions opts;
      opts.enumeration = ctx.enumeration();
      opts.threads = ctx.common.threads;
      series = SeriesInA(standard(), a.order);
      for (int n = a.k; n <= a.order; ++n) series[n] = joint_distribution(n, a.k, exprs, vars, opts);
    } else {
      throw UsageError("method '" + method + "' does not apply to " + a.weights);
    }
  } else {
    WeightSpec w;
    if (a.weights == "full") {
      w = WeightSpec::full();
    } else if (a.weights == "f") {
      w = WeightSpec::spec_f();
    } else if (a.weights == "g") {
      w = WeightSpec::spec_g();
    } else {
      throw UsageError("unknown weights '" + a.weights + "'");
    }
    if (method == "transfer") {
      series = q_gf_transfer(a.k, w, a.order);
    } else if (method == "paths") {
      check_bound(a.order, ctx.enumeration());
      series = q_gf_paths(a.k, w, a.order);
    } else if (method == "closed" && a.weights != "full") {
      series = a.weights == "f" ? closed_f(a.k, a.order) : closed_g(a.k, a.order);
    } else {
      throw UsageError("method '" + method + "' does not apply to " + a.weights);
    }
  }
  for (int n = 0; n <= series.order(); ++n) {
    if (ctx.records()) {
      ctx.out << json{{"n", n}, {"coefficient", series[n].to_string()}}.dump() << '\n';
    } else {
      ctx.out << "a^" << n << '\t' << series[n].to_string() << '\n';
    }
  }
  return kOk;
}

// --- det --------------------------------------------------------------------

struct DetArgs {
  std::string matrix = "M";
  int n = 1;
  int k = 1;
  std::string weights = "full";
  bool show = false;
};

int cmd_det(const DetArgs& a, const Context& ctx) {
  SymbolicMatrix m;
  if (a.matrix == "transfer") {
    require(a.k >= 1, "--k must be >= 1");
    require_bound(ctx, a.k <= (a.weights == "full" ? kMaxSeriesDepthFull : kMaxSeriesDepthSpecial),
                  "--k " + std::to_string(a.k));
    WeightSpec w = a.weights == "f"   ? WeightSpec::spec_f()
                   : a.weights == "g" ? WeightSpec::spec_g()
                                      : WeightSpec::full();
    require(a.weights == "full" || a.weights == "f" || a.weights == "g", "unknown weights '" + a.weights + "'");
    m = transfer_matrix(a.k, w);
  } else {
    require(a.n >= 1, "--n must be >= 1");
    require_bound(ctx, a.n <= kMaxMatrixN, "--n " + std::to_string(a.n));
    if (a.matrix == "M") {
      m = build_M(a.n);
    } else if (a.matrix == "N") {
      m = build_N(a.n, NParams::generic(a.n));
    } else if (a.matrix == "N1") {
      m = build_N(a.n, NParams::transfer(a.n));
    } else if (a.matrix == "P") {
      m = build_P(a.n);
    } else if (a.matrix == "Pk") {
      require(a.k >= 1 && a.k <= a.n + 2, "--k must satisfy 1 <= k <= n+2");
      m = build_P_k(a.n, a.k);
    } else if (a.matrix == "Ndot") {
      m = build_Ndot(a.n, NParams::generic(a.n));
    } else {
      throw UsageError("unknown matrix '" + a.matrix + "'");
    }
  }
  const LaurentPoly d = det(m);
  if (ctx.records()) {
    json row{{"matrix", a.matrix}, {"size", m.rows()}, {"det", d.to_string()}};
    if (a.show) row["entries"] = m.to_string();
    ctx.out << row.dump() << '\n';
  } else {
    if (a.show) ctx.out << m.to_string() << '\n';
    ctx.out << d.to_string() << '\n';
  }
  return kOk;
}

// --- verify / conjecture ------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> names;
  bool all = false;
  bool list = false;
  std::optional<int> n_max;
};

void print_report(const CheckReport& r, const Context& ctx) {
  for (const auto& row : r.rows) {
    if (ctx.records()) {
      json j{{"check", r.name}, {"instance", row.instance}, {"status", row.pass ? "PASS" : "FAIL"}};
      if (r.empirical) j["empirical"] = true;
      if (!row.detail.empty()) j["detail"] = row.detail;
      ctx.out << j.dump() << '\n';
    } else {
      ctx.out << (row.pass ? "PASS" : "FAIL") << '\t' << r.name << '\t' << row.instance;
      if (!row.detail.empty() && (!row.pass || r.empirical)) ctx.out << '\t' << row.detail;
      ctx.out << '\n';
    }
  }
}

CheckOptions check_options(std::optional<int> n_max, const Context& ctx) {
  CheckOptions o;
  o.n_max = n_max.value_or(-1);
  o.enumeration = ctx.enumeration();
  o.threads = ctx.common.threads;
  std::ostream* err = &ctx.err;
  o.progress = [err](std::string_view msg) { *err << "[progress] " << msg << '\n'; };
  return o;
}

void validate_check_bound(const CheckInfo& info, std::optional<int> n_max, const Context& ctx) {
  if (!n_max) return;
  require(*n_max >= 0, "--n-max must be >= 0");
  require_bound(ctx, *n_max <= info.default_n_max + 1, info.name + " --n-max " + std::to_string(*n_max));
}

const CheckInfo& find_check(const std::string& name) {
  for (const auto& info : check_catalog()) {
    if (info.name == name) return info;
  }
  throw UsageError("unknown check '" + name + "'");
}

int cmd_verify(const VerifyArgs& a, const Context& ctx) {
  if (a.list) {
    for (const auto& info : check_catalog()) {
      ctx.out << info.name << '\t' << info.default_n_max << '\t' << info.title << '\n';
    }
    return kOk;
  }
  std::vector<std::string> names = a.names;
  if (a.all) {
    require(names.empty(), "--all takes no check names");
    for (const auto& info : check_catalog()) names.push_back(info.name);
  }
  require(!names.empty(), "verify needs a check name (see --list)");
  // Validate every name and bound before running anything.
  for (const auto& name : names) validate_check_bound(find_check(name), a.n_max, ctx);

  std::vector<std::pair<std::string, CheckRow>> failures;
  for (const auto& name : names) {
    const CheckReport r = run_check(name, check_options(a.n_max, ctx));
    print_report(r, ctx);
    if (const CheckRow* bad = r.first_failure()) failures.emplace_back(name, *bad);
    if (!ctx.records()) {
      ctx.out << "# " << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.rows.size() << " instances)"
              << (r.empirical ? " EMPIRICAL" : "") << '\n';
    }
  }
  if (failures.empty()) return kOk;
  const auto& [name, row] = failures.front();
  if (ctx.records()) {
    ctx.out << json{{"first_failure", name}, {"instance", row.instance}, {"detail", row.detail}}.dump() << '\n';
  } else {
    ctx.out << "first failure: " << name << ' ' << row.instance << ": " << row.detail << '\n';
  }
  return kMismatch;
}

int cmd_conjecture(std::optional<int> n_max, const Context& ctx) {
  const CheckInfo& info = find_check("conjecture-bmaj");
  validate_check_bound(info, n_max, ctx);
  const CheckReport r = report_conjectures(n_max.value_or(info.default_n_max), check_options(n_max, ctx));
  if (!ctx.records()) ctx.out << "# EMPIRICAL: " << r.title << '\n';
  print_report(r, ctx);
  const CheckRow* bad = r.first_failure();
  if (ctx.records()) {
    ctx.out << json{{"empirical", true}, {"all_match", bad == nullptr}}.dump() << '\n';
  } else if (bad) {
    ctx.out << "# MISMATCH FOUND at " << bad->instance << ": " << bad->detail << '\n';
  } else {
    ctx.out << "# all " << r.rows.size() << " instances match (evidence, not a proof)\n";
  }
  // A report, not a theorem check: mismatches are findings, not failures.
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Statistics on ordered set partitions: enumeration, bijections, generating functions, verification"};
  app.name("ospstats");
  app.require_subcommand(1, 1);
  app.fallthrough();  // global flags may follow the subcommand

  Common common;
  std::string format = "table";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "records"}));
  app.add_flag("--force-large", common.force_large, "Allow work beyond the desk bounds");
  app.add_option("--threads", common.threads, "Worker threads for enumeration")->check(CLI::Range(1, 256));

  QnumArgs qnum;
  auto* qnum_cmd = app.add_subcommand("qnum", "q-analogue tables, one (n,k) cell per line");
  qnum_cmd->add_option("--table", qnum.table, "stirling | eulerian | euler-mahonian | binomial");
  qnum_cmd->add_option("--n-max", qnum.n_max, "Largest n");

  EnumArgs en;
  auto* enum_cmd = app.add_subcommand("enum", "List ordered partitions of [n]");
  enum_cmd->add_option("--n", en.n, "Size of the ground set")->required();
  enum_cmd->add_option("--k", en.k, "Number of blocks (default: all)");
  enum_cmd->add_flag("--unordered", en.unordered, "Set partitions only, blocks by increasing minima");
  enum_cmd->add_flag("--count-only", en.count_only, "Print cardinalities instead of partitions");

  std::string stats_text;
  auto* stats_cmd = app.add_subcommand("stats", "Coordinate statistics of one partition");
  stats_cmd->add_option("partition", stats_text, "Partition such as 6,8/5/1,4,7/3,9/2")->required();

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Distribution polynomials of statistics");
  dist_cmd->add_option("stats", dist.stats, "Statistic expressions such as mak+bInv")->required();
  dist_cmd->add_option("--n", dist.n, "Size of the ground set");
  dist_cmd->add_option("--n-max", dist.n_max, "All n from 1 up to this bound");
  dist_cmd->add_option("--k", dist.k, "Number of blocks (default: all)");
  dist_cmd->add_flag("--unordered", dist.unordered, "Restrict to set partitions");
  dist_cmd->add_flag("--compare", dist.compare, "Compare with [k]_q! S_q(n,k) (S_q(n,k) with --unordered)");

  BijArgs bij;
  auto* bij_cmd = app.add_subcommand("bij", "Path diagrams <-> ordered partitions");
  bij_cmd->add_option("--forward", bij.forward, "Steps over N,E,S,O and optionally the choice list")->expected(1, 2);
  bij_cmd->add_option("--xi", bij.xi, "Comma-separated choices for --forward");
  bij_cmd->add_option("--inverse", bij.inverse, "Partition to encode");

  GfArgs gf;
  auto* gf_cmd = app.add_subcommand("gf", "Generating-function coefficients as a^n<TAB>polynomial");
  gf_cmd->add_option("--k", gf.k, "Number of blocks")->required();
  gf_cmd->add_option("--order", gf.order, "Truncation order in a");
  gf_cmd->add_option("--weights", gf.weights, "full | f | g | phi | varphi");
  gf_cmd->add_option("--method", gf.method, "transfer | paths | closed | enum");

  DetArgs det_args;
  auto* det_cmd = app.add_subcommand("det", "Determinant of a structured matrix");
  det_cmd->add_option("--matrix", det_args.matrix, "M | N | N1 | P | Pk | Ndot | transfer");
  det_cmd->add_option("--n", det_args.n, "Matrix index n");
  det_cmd->add_option("--k", det_args.k, "Column index for Pk, depth for transfer");
  det_cmd->add_option("--weights", det_args.weights, "full | f | g (transfer only)");
  det_cmd->add_flag("--show", det_args.show, "Print the matrix as well");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run named checks; exit 1 on any mismatch");
  verify_cmd->add_option("checks", verify.names, "Check names");
  verify_cmd->add_flag("--all", verify.all, "Run every check");
  verify_cmd->add_flag("--list", verify.list, "List the available checks");
  verify_cmd->add_option("--n-max", verify.n_max, "Override each check's bound");

  std::optional<int> conj_n_max;
  auto* conj_cmd = app.add_subcommand("conjecture", "Empirical report on the bMaj statistics");
  conj_cmd->add_option("--n-max", conj_n_max, "Largest n");

  std::ostringstream buffer;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  common.format = format == "records" ? Format::Records : Format::Table;
  const Context ctx{common, buffer, err};

  int status = kOk;
  try {
    if (qnum_cmd->parsed()) {
      status = cmd_qnum(qnum, ctx);
    } else if (enum_cmd->parsed()) {
      status = cmd_enum(en, ctx);
    } else if (stats_cmd->parsed()) {
      status = cmd_stats(stats_text, ctx);
    } else if (dist_cmd->parsed()) {
      status = cmd_dist(dist, ctx);
    } else if (bij_cmd->parsed()) {
      status = cmd_bij(bij, ctx);
    } else if (gf_cmd->parsed()) {
      status = cmd_gf(gf, ctx);
    } else if (det_cmd->parsed()) {
      status = cmd_det(det_args, ctx);
    } else if (verify_cmd->parsed()) {
      status = cmd_verify(verify, ctx);
    } else if (conj_cmd->parsed()) {
      status = cmd_conjecture(conj_n_max, ctx);
    }
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  out << buffer.str();
  return status;
}

}  // namespace osp::cli
