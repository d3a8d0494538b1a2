#ifndef OSP_PARTITION_HPP
#define OSP_PARTITION_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace osp {

class PartitionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BoundExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Sequence of disjoint nonempty blocks covering {1..n}; each block is kept
// in ascending order.
class OrderedPartition {
 public:
  using Block = std::vector<int>;

  OrderedPartition() = default;

  // Validates and sorts each block; throws PartitionError on empty blocks,
  // non-positive or repeated elements, or gaps in {1..n}.
  static OrderedPartition from_blocks(std::vector<Block> blocks);
  // Machine format: blocks separated by '/', elements by ','; "6,8/5/1,4,7".
  // The empty string is the empty partition of [0].
  static OrderedPartition parse(std::string_view text);
  std::string format() const;

  int n() const { return n_; }
  int k() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int index) const { return blocks_.at(static_cast<std::size_t>(index)); }
  // 0-based position of the block containing `element`, indexed by element
  // (slot 0 unused).
  std::vector<int> block_positions() const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  friend class PartitionBuilder;
  OrderedPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<Block> blocks_;
};

// Mutable scratch space used by the enumerators; hands out an
// OrderedPartition view that is only valid inside the visitor call.
class PartitionBuilder {
 public:
  explicit PartitionBuilder(int n) { current_.n_ = n; }
  std::vector<OrderedPartition::Block>& blocks() { return current_.blocks_; }
  const OrderedPartition& view() const { return current_; }

 private:
  OrderedPartition current_;
};

enum class ElementClass : std::uint8_t { Opener, Transient, Singleton, Closer };

// lambda(pi) = (O, T, S, C): strict openers, transients, singletons, strict
// closers.
struct TypePartition {
  std::vector<int> openers;
  std::vector<int> transients;
  std::vector<int> singletons;
  std::vector<int> closers;

  friend bool operator==(const TypePartition&, const TypePartition&) = default;
};

TypePartition classify(const OrderedPartition& pi);
// Class of each element, indexed by element (slot 0 unused).
std::vector<ElementClass> element_classes(const OrderedPartition& pi);

struct TraceBlock {
  std::vector<int> elements;
  bool opened;  // false: the whole block lies in [i]

  friend bool operator==(const TraceBlock&, const TraceBlock&) = default;
};

// Restriction of the blocks to [i], empty restrictions dropped.
using Trace = std::vector<TraceBlock>;

struct FormPoint {
  int closed = 0;
  int open = 0;

  friend bool operator==(const FormPoint&, const FormPoint&) = default;
};

// F_0..F_n of (closed, opened) block counts of the traces.
using Form = std::vector<FormPoint>;

Trace trace(const OrderedPartition& pi, int i);
FormPoint form_at(const OrderedPartition& pi, int i);
Form form(const OrderedPartition& pi);

// sigma over [k]: position -> rank of the block among blocks sorted by
// minimum (1-based values).
std::vector<int> perm_of(const OrderedPartition& pi);
int inversions(const std::vector<int>& sigma);
int inv(const OrderedPartition& pi);
int cinv(const OrderedPartition& pi);

// Enumeration -----------------------------------------------------------------

struct EnumOptions {
  int max_n = 10;
  bool force_large = false;
  // Work split: branches at `split_depth` (choice points for elements
  // 1..split_depth) are dealt round-robin; this enumerator keeps shard
  // `shard_index` of `shard_count`.
  int shard_index = 0;
  int shard_count = 1;
  int split_depth = 3;
};

using PartitionVisitor = std::function<void(const OrderedPartition&)>;

// Every element of OP_n^k exactly once. Order: element i is inserted into
// each partition of [i-1] first as a new singleton in gaps 0..b, then
// appended to blocks 0..b-1.
void for_each_ordered_partition(int n, int k, const PartitionVisitor& visit, const EnumOptions& opts = {});
std::vector<OrderedPartition> enumerate_ordered(int n, int k, const EnumOptions& opts = {});

// Unordered partitions P_n^k in canonical form (blocks by increasing minima).
void for_each_set_partition(int n, int k, const PartitionVisitor& visit, const EnumOptions& opts = {});
std::vector<OrderedPartition> enumerate_unordered(int n, int k, const EnumOptions& opts = {});

void check_bound(int n, const EnumOptions& opts);

}  // namespace osp

#endif  // OSP_PARTITION_HPP
