#ifndef OSP_STATS_HPP
#define OSP_STATS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osp/partition.hpp"
#include "osp/ring.hpp"

namespace osp {

// The ten coordinate statistics. r/l: the other element's block lies to the
// right/left; o/c: it is an opener/closer; s/b: it is smaller/bigger than i.
// lsb/rsb count blocks to the left/right whose opener < i < closer.
enum class Coord : std::uint8_t { ros, rob, rcs, rcb, los, lob, lcs, lcb, lsb, rsb };
inline constexpr std::size_t kCoordCount = 10;

enum class Stat : std::uint8_t {
  // coordinate totals
  ros, rob, rcs, rcb, los, lob, lcs, lcb, lsb, rsb,
  // composites
  inv, cinv, bInv, bExc, bMaj, cbInv, cbMaj,
  mak, lmak, makP, lmakP, cinvLSB, cmajLSB,
  makBInv, lmakBInv, makBMaj, lmakBMaj,
};

std::string_view stat_name(Stat s);
std::optional<Stat> parse_stat(std::string_view name);
const std::vector<Stat>& all_stats();
bool is_coordinate(Stat s);
Coord to_coord(Stat s);  // requires is_coordinate(s)
std::string_view coord_name(Coord c);

struct BlockStats {
  int bInv = 0;
  int bExc = 0;
  int bMaj = 0;
};

// All statistics of one partition. Per-element rows are indexed by element
// (slot 0 unused).
class StatVector {
 public:
  explicit StatVector(const OrderedPartition& pi);

  int n() const { return n_; }
  int k() const { return k_; }
  int coord(int element, Coord c) const { return rows_[static_cast<std::size_t>(c)][static_cast<std::size_t>(element)]; }
  long total(Coord c) const { return totals_[static_cast<std::size_t>(c)]; }
  long restricted(Coord c, const std::vector<int>& elements) const;
  const BlockStats& blocks() const { return block_; }
  int inv() const { return inv_; }
  int cinv() const { return cinv_; }
  const std::vector<ElementClass>& classes() const { return classes_; }
  long value(Stat s) const;

 private:
  int n_;
  int k_;
  std::array<std::vector<int>, kCoordCount> rows_;
  std::array<long, kCoordCount> totals_{};
  BlockStats block_;
  int inv_ = 0;
  int cinv_ = 0;
  std::vector<ElementClass> classes_;
};

int coord(const OrderedPartition& pi, int element, Coord c);
long aggregate(const OrderedPartition& pi, Stat s);
long restricted(const OrderedPartition& pi, Coord c, const std::vector<int>& elements);
BlockStats block_stats(const OrderedPartition& pi);
long composite(const OrderedPartition& pi, Stat s);

// Integer linear combination of statistics plus a constant, e.g.
// "mak+bInv-inv+cinv" or "lsb+2*cinv+3".
class StatExpr {
 public:
  StatExpr() = default;
  StatExpr(Stat s) { terms_.emplace_back(s, 1); }  // NOLINT(google-explicit-constructor)

  static StatExpr parse(std::string_view text);
  StatExpr& add(Stat s, long coeff);
  StatExpr& add_constant(long c);

  long evaluate(const StatVector& sv) const;
  std::string to_string() const;
  const std::vector<std::pair<Stat, long>>& terms() const { return terms_; }
  long constant() const { return constant_; }

 private:
  std::vector<std::pair<Stat, long>> terms_;
  long constant_ = 0;
};

// Exponents of t1..t7 in the transfer-matrix weight of pi.
std::array<int, 7> q_exponents(const StatVector& sv);
LaurentPoly q_monomial(const OrderedPartition& pi, const Registry& reg = VarRegistry::standard());

struct DistributionOptions {
  EnumOptions enumeration;
  bool unordered_only = false;  // restrict to P_n^k (inv = 0)
  int threads = 1;
};

// sum over OP_n^k (or P_n^k) of var^{expr(pi)}.
LaurentPoly distribution(int n, int k, const StatExpr& expr, const LaurentPoly& var,
                         const DistributionOptions& opts = {});
LaurentPoly distribution(int n, int k, const StatExpr& expr, const DistributionOptions& opts = {});

// One enumeration pass, one univariate distribution per expression.
std::vector<LaurentPoly> distributions(int n, int k, const std::vector<StatExpr>& exprs, const LaurentPoly& var,
                                       const DistributionOptions& opts = {});

// Multivariate version: prod_i vars[i]^{exprs[i](pi)}.
LaurentPoly joint_distribution(int n, int k, const std::vector<StatExpr>& exprs,
                               const std::vector<LaurentPoly>& vars, const DistributionOptions& opts = {});

}  // namespace osp

#endif  // OSP_STATS_HPP
