#include "osp/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace osp {

OrderedPartition OrderedPartition::from_blocks(std::vector<Block> blocks) {
  int total = 0;
  int largest = 0;
  for (auto& b : blocks) {
    if (b.empty()) throw PartitionError("empty block");
    std::sort(b.begin(), b.end());
    for (int e : b) {
      if (e <= 0) throw PartitionError("non-positive element " + std::to_string(e));
      largest = std::max(largest, e);
    }
    total += static_cast<int>(b.size());
  }
  std::vector<bool> seen(static_cast<std::size_t>(largest) + 1, false);
  for (const auto& b : blocks) {
    for (int e : b) {
      if (seen[static_cast<std::size_t>(e)]) throw PartitionError("overlap: element " + std::to_string(e) + " repeated");
      seen[static_cast<std::size_t>(e)] = true;
    }
  }
  if (total != largest) {
    for (int e = 1; e <= largest; ++e) {
      if (!seen[static_cast<std::size_t>(e)]) throw PartitionError("gap: element " + std::to_string(e) + " missing");
    }
  }
  return OrderedPartition(largest, std::move(blocks));
}

OrderedPartition OrderedPartition::parse(std::string_view text) {
  std::vector<Block> blocks;
  if (text.empty()) return from_blocks({});
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    const std::string_view chunk = text.substr(start, slash == std::string_view::npos ? text.npos : slash - start);
    Block block;
    std::size_t pos = 0;
    while (pos <= chunk.size()) {
      const std::size_t comma = chunk.find(',', pos);
      const std::string_view tok = chunk.substr(pos, comma == std::string_view::npos ? chunk.npos : comma - pos);
      if (tok.empty()) {
        if (chunk.empty()) break;
        throw PartitionError("empty element in '" + std::string(text) + "'");
      }
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw PartitionError("malformed element '" + std::string(tok) + "'");
      }
      block.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    blocks.push_back(std::move(block));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return from_blocks(std::move(blocks));
}

std::string OrderedPartition::format() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b) out += '/';
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i) out += ',';
      out += std::to_string(blocks_[b][i]);
    }
  }
  return out;
}

std::vector<int> OrderedPartition::block_positions() const {
  std::vector<int> pos(static_cast<std::size_t>(n_) + 1, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int e : blocks_[b]) pos[static_cast<std::size_t>(e)] = static_cast<int>(b);
  }
  return pos;
}

std::vector<ElementClass> element_classes(const OrderedPartition& pi) {
  std::vector<ElementClass> cls(static_cast<std::size_t>(pi.n()) + 1, ElementClass::Singleton);
  for (const auto& b : pi.blocks()) {
    if (b.size() == 1) continue;
    cls[static_cast<std::size_t>(b.front())] = ElementClass::Opener;
    cls[static_cast<std::size_t>(b.back())] = ElementClass::Closer;
    for (std::size_t i = 1; i + 1 < b.size(); ++i) cls[static_cast<std::size_t>(b[i])] = ElementClass::Transient;
  }
  return cls;
}

TypePartition classify(const OrderedPartition& pi) {
  TypePartition t;
  const auto cls = element_classes(pi);
  for (int e = 1; e <= pi.n(); ++e) {
    switch (cls[static_cast<std::size_t>(e)]) {
      case ElementClass::Opener: t.openers.push_back(e); break;
      case ElementClass::Transient: t.transients.push_back(e); break;
      case ElementClass::Singleton: t.singletons.push_back(e); break;
      case ElementClass::Closer: t.closers.push_back(e); break;
    }
  }
  return t;
}

Trace trace(const OrderedPartition& pi, int i) {
  if (i < 0 || i > pi.n()) throw std::out_of_range("trace index out of range");
  Trace out;
  for (const auto& b : pi.blocks()) {
    TraceBlock tb{{}, b.back() > i};
    for (int e : b) {
      if (e <= i) tb.elements.push_back(e);
    }
    if (!tb.elements.empty()) out.push_back(std::move(tb));
  }
  return out;
}

FormPoint form_at(const OrderedPartition& pi, int i) {
  if (i < 0 || i > pi.n()) throw std::out_of_range("form index out of range");
  FormPoint f;
  for (const auto& b : pi.blocks()) {
    if (b.back() <= i) {
      ++f.closed;
    } else if (b.front() <= i) {
      ++f.open;
    }
  }
  return f;
}

Form form(const OrderedPartition& pi) {
  Form f;
  f.reserve(static_cast<std::size_t>(pi.n()) + 1);
  for (int i = 0; i <= pi.n(); ++i) f.push_back(form_at(pi, i));
  return f;
}

std::vector<int> perm_of(const OrderedPartition& pi) {
  const int k = pi.k();
  std::vector<int> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pi.block(a).front() < pi.block(b).front(); });
  std::vector<int> sigma(static_cast<std::size_t>(k));
  for (int rank = 0; rank < k; ++rank) sigma[static_cast<std::size_t>(order[rank])] = rank + 1;
  return sigma;
}

int inversions(const std::vector<int>& sigma) {
  int count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (sigma[i] > sigma[j]) ++count;
    }
  }
  return count;
}

int inv(const OrderedPartition& pi) { return inversions(perm_of(pi)); }

int cinv(const OrderedPartition& pi) { return pi.k() * (pi.k() - 1) / 2 - inv(pi); }

// --- enumeration ---------------------------------------------------------------

void check_bound(int n, const EnumOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > opts.max_n && !opts.force_large) {
    throw BoundExceeded("n = " + std::to_string(n) + " exceeds desk bound " + std::to_string(opts.max_n) +
                        " (use the force-large override)");
  }
}

namespace {

class Enumerator {
 public:
  Enumerator(int n, int k, bool ordered, const PartitionVisitor& visit, const EnumOptions& opts)
      : n_(n), k_(k), ordered_(ordered), visit_(visit), opts_(opts), builder_(n),
        split_(std::min(opts.split_depth, n)) {}

  void run() {
    if (opts_.shard_count < 1 || opts_.shard_index < 0 || opts_.shard_index >= opts_.shard_count) {
      throw std::invalid_argument("invalid shard specification");
    }
    if (k_ < 0 || k_ > n_ || (k_ == 0 && n_ > 0)) return;
    place(1);
  }

 private:
  bool keep_branch() {
    const bool keep = branch_counter_ % opts_.shard_count == static_cast<unsigned long>(opts_.shard_index);
    ++branch_counter_;
    return keep;
  }

  void place(int i) {
    if (i - 1 == split_ && opts_.shard_count > 1 && !keep_branch()) return;
    auto& blocks = builder_.blocks();
    if (i > n_) {
      if (static_cast<int>(blocks.size()) == k_) visit_(builder_.view());
      return;
    }
    const int b = static_cast<int>(blocks.size());
    const int remaining_after = n_ - i;
    if (b < k_) {
      if (ordered_) {
        for (int gap = 0; gap <= b; ++gap) {
          blocks.insert(blocks.begin() + gap, OrderedPartition::Block{i});
          place(i + 1);
          blocks.erase(blocks.begin() + gap);
        }
      } else {
        blocks.push_back(OrderedPartition::Block{i});
        place(i + 1);
        blocks.pop_back();
      }
    }
    if (b + remaining_after >= k_) {
      for (int j = 0; j < b; ++j) {
        blocks[static_cast<std::size_t>(j)].push_back(i);
        place(i + 1);
        blocks[static_cast<std::size_t>(j)].pop_back();
      }
    }
  }

  int n_;
  int k_;
  bool ordered_;
  const PartitionVisitor& visit_;
  const EnumOptions& opts_;
  PartitionBuilder builder_;
  int split_;
  unsigned long branch_counter_ = 0;
};

}  // namespace

void for_each_ordered_partition(int n, int k, const PartitionVisitor& visit, const EnumOptions& opts) {
  check_bound(n, opts);
  Enumerator(n, k, true, visit, opts).run();
}

std::vector<OrderedPartition> enumerate_ordered(int n, int k, const EnumOptions& opts) {
  std::vector<OrderedPartition> out;
  for_each_ordered_partition(n, k, [&](const OrderedPartition& p) { out.push_back(p); }, opts);
  return out;
}

void for_each_set_partition(int n, int k, const PartitionVisitor& visit, const EnumOptions& opts) {
  check_bound(n, opts);
  Enumerator(n, k, false, visit, opts).run();
}

std::vector<OrderedPartition> enumerate_unordered(int n, int k, const EnumOptions& opts) {
  std::vector<OrderedPartition> out;
  for_each_set_partition(n, k, [&](const OrderedPartition& p) { out.push_back(p); }, opts);
  return out;
}

}  // namespace osp
