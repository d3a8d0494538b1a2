#include "osp/stats.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <thread>

namespace osp {

namespace {

struct StatInfo {
  Stat stat;
  std::string_view name;
};

constexpr std::array<StatInfo, 27> kStatTable{{
    {Stat::ros, "ros"},         {Stat::rob, "rob"},           {Stat::rcs, "rcs"},
    {Stat::rcb, "rcb"},         {Stat::los, "los"},           {Stat::lob, "lob"},
    {Stat::lcs, "lcs"},         {Stat::lcb, "lcb"},           {Stat::lsb, "lsb"},
    {Stat::rsb, "rsb"},         {Stat::inv, "inv"},           {Stat::cinv, "cinv"},
    {Stat::bInv, "bInv"},       {Stat::bExc, "bExc"},         {Stat::bMaj, "bMaj"},
    {Stat::cbInv, "cbInv"},     {Stat::cbMaj, "cbMaj"},       {Stat::mak, "mak"},
    {Stat::lmak, "lmak"},       {Stat::makP, "makP"},         {Stat::lmakP, "lmakP"},
    {Stat::cinvLSB, "cinvLSB"}, {Stat::cmajLSB, "cmajLSB"},   {Stat::makBInv, "makBInv"},
    {Stat::lmakBInv, "lmakBInv"}, {Stat::makBMaj, "makBMaj"}, {Stat::lmakBMaj, "lmakBMaj"},
}};

long choose2(long k) { return k * (k - 1) / 2; }

}  // namespace

std::string_view stat_name(Stat s) { return kStatTable[static_cast<std::size_t>(s)].name; }

std::optional<Stat> parse_stat(std::string_view name) {
  for (const auto& info : kStatTable) {
    if (info.name == name) return info.stat;
  }
  // Alternate spellings.
  if (name == "bmaj") return Stat::bMaj;
  if (name == "cbmaj") return Stat::cbMaj;
  if (name == "mak'") return Stat::makP;
  if (name == "lmak'") return Stat::lmakP;
  return std::nullopt;
}

const std::vector<Stat>& all_stats() {
  static const std::vector<Stat> stats = [] {
    std::vector<Stat> v;
    for (const auto& info : kStatTable) v.push_back(info.stat);
    return v;
  }();
  return stats;
}

bool is_coordinate(Stat s) { return static_cast<std::size_t>(s) < kCoordCount; }

Coord to_coord(Stat s) {
  if (!is_coordinate(s)) throw std::invalid_argument("not a coordinate statistic");
  return static_cast<Coord>(s);
}

std::string_view coord_name(Coord c) { return stat_name(static_cast<Stat>(c)); }

// --- StatVector -----------------------------------------------------------------

StatVector::StatVector(const OrderedPartition& pi) : n_(pi.n()), k_(pi.k()), classes_(element_classes(pi)) {
  for (auto& row : rows_) row.assign(static_cast<std::size_t>(n_) + 1, 0);
  const auto& blocks = pi.blocks();
  for (int p = 0; p < k_; ++p) {
    for (int i : blocks[static_cast<std::size_t>(p)]) {
      const auto e = static_cast<std::size_t>(i);
      for (int j = 0; j < k_; ++j) {
        if (j == p) continue;
        const bool right = j > p;
        const int opener = blocks[static_cast<std::size_t>(j)].front();
        const int closer = blocks[static_cast<std::size_t>(j)].back();
        Coord oc = opener < i ? (right ? Coord::ros : Coord::los) : (right ? Coord::rob : Coord::lob);
        Coord cc = closer < i ? (right ? Coord::rcs : Coord::lcs) : (right ? Coord::rcb : Coord::lcb);
        ++rows_[static_cast<std::size_t>(oc)][e];
        ++rows_[static_cast<std::size_t>(cc)][e];
        if (opener < i && i < closer) ++rows_[static_cast<std::size_t>(right ? Coord::rsb : Coord::lsb)][e];
      }
    }
  }
  for (std::size_t c = 0; c < kCoordCount; ++c) {
    long sum = 0;
    for (int v : rows_[c]) sum += v;
    totals_[c] = sum;
  }
  block_ = block_stats(pi);
  inv_ = osp::inv(pi);
  cinv_ = static_cast<int>(choose2(k_)) - inv_;
}

long StatVector::restricted(Coord c, const std::vector<int>& elements) const {
  long sum = 0;
  for (int e : elements) sum += coord(e, c);
  return sum;
}

long StatVector::value(Stat s) const {
  if (is_coordinate(s)) return total(to_coord(s));
  const long nk1 = static_cast<long>(n_) * (k_ - 1);
  const long c2 = choose2(k_);
  auto t = [&](Coord c) { return total(c); };
  switch (s) {
    case Stat::inv: return inv_;
    case Stat::cinv: return cinv_;
    case Stat::bInv: return block_.bInv;
    case Stat::bExc: return block_.bExc;
    case Stat::bMaj: return block_.bMaj;
    case Stat::cbInv: return c2 - block_.bInv;
    case Stat::cbMaj: return c2 - block_.bMaj;
    case Stat::mak: return t(Coord::ros) + t(Coord::lcs);
    case Stat::lmak: return nk1 - (t(Coord::los) + t(Coord::rcs));
    case Stat::makP: return t(Coord::lob) + t(Coord::rcb);
    case Stat::lmakP: return nk1 - (t(Coord::lcb) + t(Coord::rob));
    case Stat::cinvLSB: return t(Coord::lsb) + (c2 - block_.bInv) + c2;
    case Stat::cmajLSB: return t(Coord::lsb) + (c2 - block_.bMaj) + c2;
    case Stat::makBInv: return value(Stat::mak) + block_.bInv;
    case Stat::lmakBInv: return value(Stat::lmak) + block_.bInv;
    case Stat::makBMaj: return value(Stat::mak) + block_.bMaj;
    case Stat::lmakBMaj: return value(Stat::lmak) + block_.bMaj;
    default: break;
  }
  throw std::logic_error("unhandled statistic");
}

int coord(const OrderedPartition& pi, int element, Coord c) {
  if (element < 1 || element > pi.n()) throw std::out_of_range("element out of range");
  return StatVector(pi).coord(element, c);
}

long aggregate(const OrderedPartition& pi, Stat s) { return StatVector(pi).value(s); }

long restricted(const OrderedPartition& pi, Coord c, const std::vector<int>& elements) {
  return StatVector(pi).restricted(c, elements);
}

BlockStats block_stats(const OrderedPartition& pi) {
  BlockStats bs;
  const auto& blocks = pi.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks[i].front() > blocks[j].back()) ++bs.bInv;
      if (blocks[i].back() < blocks[j].front()) ++bs.bExc;
    }
    if (i + 1 < blocks.size() && blocks[i].front() > blocks[i + 1].back()) bs.bMaj += static_cast<int>(i) + 1;
  }
  return bs;
}

long composite(const OrderedPartition& pi, Stat s) {
  if (is_coordinate(s)) throw std::invalid_argument("composite: '" + std::string(stat_name(s)) + "' is a coordinate");
  return StatVector(pi).value(s);
}

// --- StatExpr -------------------------------------------------------------------

StatExpr& StatExpr::add(Stat s, long coeff) {
  for (auto& [stat, c] : terms_) {
    if (stat == s) {
      c += coeff;
      return *this;
    }
  }
  terms_.emplace_back(s, coeff);
  return *this;
}

StatExpr& StatExpr::add_constant(long c) {
  constant_ += c;
  return *this;
}

StatExpr StatExpr::parse(std::string_view text) {
  StatExpr expr;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty statistic expression");
  std::size_t pos = 0;
  bool first = true;
  auto fail = [&](const std::string& why) {
    return ParseError("cannot parse statistic '" + std::string(text) + "': " + why);
  };
  while (pos < s.size()) {
    long sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;
    long coeff = 1;
    bool have_number = false;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      coeff = std::stol(s.substr(start, pos - start));
      have_number = true;
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
      } else {
        expr.add_constant(sign * coeff);
        continue;
      }
    }
    start = pos;
    while (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '\'')) ++pos;
    if (pos == start) throw fail(have_number ? "expected a statistic after '*'" : "expected a statistic");
    const std::string name = s.substr(start, pos - start);
    auto stat = parse_stat(name);
    if (!stat) throw fail("unknown statistic '" + name + "'");
    expr.add(*stat, sign * coeff);
  }
  return expr;
}

long StatExpr::evaluate(const StatVector& sv) const {
  long v = constant_;
  for (const auto& [stat, c] : terms_) v += c * sv.value(stat);
  return v;
}

std::string StatExpr::to_string() const {
  std::string out;
  for (const auto& [stat, c] : terms_) {
    if (c == 0) continue;
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    const long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a) + "*";
    out += stat_name(stat);
  }
  if (constant_ != 0 || out.empty()) {
    if (!out.empty() || constant_ < 0) out += constant_ < 0 ? "-" : "+";
    out += std::to_string(constant_ < 0 ? -constant_ : constant_);
  }
  return out;
}

// --- transfer-matrix monomial -------------------------------------------------

std::array<int, 7> q_exponents(const StatVector& sv) {
  std::array<int, 7> e{};
  for (int i = 1; i <= sv.n(); ++i) {
    const auto cls = sv.classes()[static_cast<std::size_t>(i)];
    const bool opens = cls == ElementClass::Opener || cls == ElementClass::Singleton;
    const int closers = sv.coord(i, Coord::lcs) + sv.coord(i, Coord::rcs);
    if (opens) {
      e[0] += closers;
      e[4] += sv.coord(i, Coord::ros);
      e[5] += sv.coord(i, Coord::los);
      e[6] += sv.coord(i, Coord::lsb) + sv.coord(i, Coord::rsb);
    } else {
      e[1] += closers;
      e[2] += sv.coord(i, Coord::rsb);
      e[3] += sv.coord(i, Coord::lsb);
    }
  }
  return e;
}

LaurentPoly q_monomial(const OrderedPartition& pi, const Registry& reg) {
  const auto e = q_exponents(StatVector(pi));
  Monomial m;
  for (int j = 0; j < 7; ++j) m.set_exponent(reg->index("t" + std::to_string(j + 1)), e[static_cast<std::size_t>(j)]);
  return LaurentPoly::monomial(reg, m, 1);
}

// --- distributions ----------------------------------------------------------------

namespace {

using Tally = std::map<std::vector<long>, Integer>;
using Counts = std::vector<std::map<long, unsigned long>>;

// Folds visit(acc, StatVector) over OP_n^k (or P_n^k), one accumulator per
// worker, merged in shard order.
template <typename Acc, typename Visit, typename Merge>
Acc reduce_partitions(int n, int k, const DistributionOptions& opts, const Acc& init, Visit visit, Merge merge) {
  auto run_shard = [&](int index, int count) {
    Acc local = init;
    EnumOptions eo = opts.enumeration;
    eo.shard_index = index;
    eo.shard_count = count;
    auto each = [&](const OrderedPartition& pi) { visit(local, StatVector(pi)); };
    if (opts.unordered_only) {
      for_each_set_partition(n, k, each, eo);
    } else {
      for_each_ordered_partition(n, k, each, eo);
    }
    return local;
  };

  const int threads = std::max(1, opts.threads);
  if (threads == 1) return run_shard(0, 1);
  std::vector<Acc> parts(static_cast<std::size_t>(threads), init);
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      try {
        parts[static_cast<std::size_t>(t)] = run_shard(t, threads);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
  Acc merged = init;
  for (auto& part : parts) merge(merged, part);
  return merged;
}

Tally tally(int n, int k, const std::vector<StatExpr>& exprs, const DistributionOptions& opts) {
  return reduce_partitions(
      n, k, opts, Tally{},
      [&](Tally& acc, const StatVector& sv) {
        thread_local std::vector<long> key;
        key.resize(exprs.size());
        for (std::size_t i = 0; i < exprs.size(); ++i) key[i] = exprs[i].evaluate(sv);
        acc[key] += 1;
      },
      [](Tally& into, const Tally& part) {
        for (const auto& [key, count] : part) into[key] += count;
      });
}

Counts count_each(int n, int k, const std::vector<StatExpr>& exprs, const DistributionOptions& opts) {
  return reduce_partitions(
      n, k, opts, Counts(exprs.size()),
      [&](Counts& acc, const StatVector& sv) {
        for (std::size_t i = 0; i < exprs.size(); ++i) ++acc[i][exprs[i].evaluate(sv)];
      },
      [](Counts& into, const Counts& part) {
        for (std::size_t i = 0; i < part.size(); ++i) {
          for (const auto& [e, count] : part[i]) into[i][e] += count;
        }
      });
}

}  // namespace

LaurentPoly joint_distribution(int n, int k, const std::vector<StatExpr>& exprs,
                               const std::vector<LaurentPoly>& vars, const DistributionOptions& opts) {
  if (exprs.size() != vars.size()) throw std::invalid_argument("joint_distribution: arity mismatch");
  if (vars.empty()) throw std::invalid_argument("joint_distribution: no variables");
  const Registry& reg = vars.front().registry();
  PolyBuilder out(reg);
  for (const auto& [key, count] : tally(n, k, exprs, opts)) {
    LaurentPoly term = LaurentPoly::constant(reg, count);
    for (std::size_t i = 0; i < key.size(); ++i) term *= vars[i].pow(static_cast<int>(key[i]));
    out.add(term);
  }
  return out.build();
}

std::vector<LaurentPoly> distributions(int n, int k, const std::vector<StatExpr>& exprs, const LaurentPoly& var,
                                       const DistributionOptions& opts) {
  const Registry& reg = var.registry();
  std::vector<LaurentPoly> out;
  for (const auto& by_exponent : count_each(n, k, exprs, opts)) {
    PolyBuilder b(reg);
    for (const auto& [e, count] : by_exponent) b.add(var.pow(static_cast<int>(e)).scaled(Integer(count)));
    out.push_back(b.build());
  }
  return out;
}

LaurentPoly distribution(int n, int k, const StatExpr& expr, const LaurentPoly& var, const DistributionOptions& opts) {
  return joint_distribution(n, k, {expr}, {var}, opts);
}

LaurentPoly distribution(int n, int k, const StatExpr& expr, const DistributionOptions& opts) {
  return distribution(n, k, expr, LaurentPoly::variable(VarRegistry::standard(), "q"), opts);
}

}  // namespace osp
