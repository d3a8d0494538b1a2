#include "osp/walks.hpp"

#include <charconv>
#include <stdexcept>

namespace osp {

char step_letter(StepKind kind) {
  switch (kind) {
    case StepKind::North: return 'N';
    case StepKind::East: return 'E';
    case StepKind::SouthEast: return 'S';
    case StepKind::Null: return 'O';
  }
  return '?';
}

std::optional<StepKind> parse_step_letter(char c) {
  switch (c) {
    case 'N': return StepKind::North;
    case 'E': return StepKind::East;
    case 'S': return StepKind::SouthEast;
    case 'O': return StepKind::Null;
    default: return std::nullopt;
  }
}

std::string_view step_name(StepKind kind) {
  switch (kind) {
    case StepKind::North: return "North";
    case StepKind::East: return "East";
    case StepKind::SouthEast: return "South-East";
    case StepKind::Null: return "Null";
  }
  return "?";
}

Vertex step_target(Vertex from, StepKind kind) {
  switch (kind) {
    case StepKind::North: return {from.closed, from.open + 1};
    case StepKind::East: return {from.closed + 1, from.open};
    case StepKind::SouthEast: return {from.closed + 1, from.open - 1};
    case StepKind::Null: return from;
  }
  return from;
}

bool is_edge(Vertex from, StepKind kind, int k) {
  if (from.closed < 0 || from.open < 0 || from.closed + from.open > k) return false;
  if ((kind == StepKind::SouthEast || kind == StepKind::Null) && from.open == 0) return false;
  const Vertex to = step_target(from, kind);
  return to.closed + to.open <= k;
}

std::vector<Vertex> vertex_order(int k) {
  if (k < 0) throw std::invalid_argument("vertex_order: negative k");
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(vertex_count(k)));
  for (int level = 0; level <= k; ++level) {
    for (int closed = 0; closed <= level; ++closed) out.push_back({closed, level - closed});
  }
  return out;
}

int vertex_count(int k) { return (k + 1) * (k + 2) / 2; }

int vertex_index(Vertex v) {
  const int level = v.closed + v.open;
  return level * (level + 1) / 2 + v.closed;
}

std::vector<Vertex> path_vertices(const Path& path) {
  std::vector<Vertex> out{{0, 0}};
  out.reserve(path.size() + 1);
  for (StepKind s : path) out.push_back(step_target(out.back(), s));
  return out;
}

bool is_valid_path(const Path& path, int k) {
  Vertex v{0, 0};
  for (StepKind s : path) {
    if (!is_edge(v, s, k)) return false;
    v = step_target(v, s);
  }
  return v == Vertex{k, 0};
}

std::optional<Path> path_of_form(const Form& form) {
  if (form.empty() || form.front() != FormPoint{0, 0}) return std::nullopt;
  Path path;
  for (std::size_t i = 1; i < form.size(); ++i) {
    const int dc = form[i].closed - form[i - 1].closed;
    const int dopen = form[i].open - form[i - 1].open;
    if (dc == 0 && dopen == 1) {
      path.push_back(StepKind::North);
    } else if (dc == 1 && dopen == 0) {
      path.push_back(StepKind::East);
    } else if (dc == 1 && dopen == -1) {
      path.push_back(StepKind::SouthEast);
    } else if (dc == 0 && dopen == 0 && form[i].open > 0) {
      path.push_back(StepKind::Null);
    } else {
      return std::nullopt;
    }
  }
  return path;
}

int choice_count(StepKind kind, Vertex from) {
  if (kind == StepKind::North || kind == StepKind::East) return from.closed + from.open + 1;
  return from.open;
}

Integer choice_product(const Path& path) {
  Integer r = 1;
  Vertex v{0, 0};
  for (StepKind s : path) {
    r *= choice_count(s, v);
    v = step_target(v, s);
  }
  return r;
}

std::string format_steps(const Path& path) {
  std::string out;
  for (StepKind s : path) out.push_back(step_letter(s));
  return out;
}

Path parse_steps(std::string_view text) {
  Path path;
  for (char c : text) {
    auto s = parse_step_letter(c);
    if (!s) throw ParseError(std::string("unknown step letter '") + c + "' (expected N, E, S or O)");
    path.push_back(*s);
  }
  return path;
}

std::string format_choices(const std::vector<int>& xi) {
  std::string out;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xi[i]);
  }
  return out;
}

std::vector<int> parse_choices(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError("malformed choice '" + std::string(tok) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

bool is_valid_diagram(const PathDiagram& d, int k) {
  if (d.xi.size() != d.steps.size() || !is_valid_path(d.steps, k)) return false;
  Vertex v{0, 0};
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    if (d.xi[i] < 1 || d.xi[i] > choice_count(d.steps[i], v)) return false;
    v = step_target(v, d.steps[i]);
  }
  return true;
}

int diagram_depth(const PathDiagram& d) { return path_vertices(d.steps).back().closed; }

namespace {

constexpr StepKind kStepOrder[] = {StepKind::North, StepKind::East, StepKind::SouthEast, StepKind::Null};

class PathWalker {
 public:
  PathWalker(int n, int k, const PathVisitor& visit) : n_(n), k_(k), visit_(visit) {}

  void run() {
    if (k_ < 0 || n_ < 0) return;
    path_.reserve(static_cast<std::size_t>(n_));
    extend({0, 0});
  }

 private:
  void extend(Vertex v) {
    const int remaining = n_ - static_cast<int>(path_.size());
    if (remaining == 0) {
      if (v == Vertex{k_, 0}) visit_(path_);
      return;
    }
    for (StepKind s : kStepOrder) {
      if (!is_edge(v, s, k_)) continue;
      const Vertex to = step_target(v, s);
      // Each remaining step raises `closed` by at most one.
      if (k_ - to.closed > remaining - 1) continue;
      path_.push_back(s);
      extend(to);
      path_.pop_back();
    }
  }

  int n_;
  int k_;
  const PathVisitor& visit_;
  Path path_;
};

}  // namespace

void for_each_path(int n, int k, const PathVisitor& visit, const EnumOptions& opts) {
  check_bound(n, opts);
  PathWalker(n, k, visit).run();
}

std::vector<Path> enumerate_paths(int n, int k, const EnumOptions& opts) {
  std::vector<Path> out;
  for_each_path(n, k, [&](const Path& p) { out.push_back(p); }, opts);
  return out;
}

void for_each_diagram(int n, int k, const DiagramVisitor& visit, const EnumOptions& opts) {
  for_each_path(
      n, k,
      [&](const Path& path) {
        const auto vertices = path_vertices(path);
        std::vector<int> bounds(path.size());
        for (std::size_t i = 0; i < path.size(); ++i) bounds[i] = choice_count(path[i], vertices[i]);
        PathDiagram d{path, std::vector<int>(path.size(), 1)};
        // Odometer over xi with the last position varying fastest.
        while (true) {
          visit(d);
          std::size_t pos = d.xi.size();
          while (pos > 0) {
            --pos;
            if (d.xi[pos] < bounds[pos]) {
              ++d.xi[pos];
              break;
            }
            d.xi[pos] = 1;
            if (pos == 0) return;
          }
          if (d.xi.empty()) return;
        }
      },
      opts);
}

OrderedPartition psi(const PathDiagram& d) {
  if (d.xi.size() != d.steps.size()) throw std::invalid_argument("psi: choice sequence length mismatch");
  struct Slot {
    OrderedPartition::Block block;
    bool opened;
  };
  std::vector<Slot> trace;
  Vertex v{0, 0};
  for (std::size_t idx = 0; idx < d.steps.size(); ++idx) {
    const int i = static_cast<int>(idx) + 1;
    const StepKind s = d.steps[idx];
    const int xi = d.xi[idx];
    if (xi < 1 || xi > choice_count(s, v) || (v.open == 0 && (s == StepKind::Null || s == StepKind::SouthEast))) {
      throw std::invalid_argument("psi: choice " + std::to_string(xi) + " out of range at step " + std::to_string(i));
    }
    if (s == StepKind::North || s == StepKind::East) {
      trace.insert(trace.begin() + (xi - 1), Slot{{i}, s == StepKind::North});
    } else {
      int seen = 0;
      for (auto& slot : trace) {
        if (!slot.opened) continue;
        if (++seen == xi) {
          slot.block.push_back(i);
          if (s == StepKind::SouthEast) slot.opened = false;
          break;
        }
      }
    }
    v = step_target(v, s);
  }
  for (const auto& slot : trace) {
    if (slot.opened) throw std::invalid_argument("psi: path does not end on the x-axis");
  }
  std::vector<OrderedPartition::Block> blocks;
  blocks.reserve(trace.size());
  for (auto& slot : trace) blocks.push_back(std::move(slot.block));
  return OrderedPartition::from_blocks(std::move(blocks));
}

PathDiagram psi_inverse(const OrderedPartition& pi) {
  const StatVector sv(pi);
  PathDiagram d;
  d.steps.reserve(static_cast<std::size_t>(pi.n()));
  d.xi.reserve(static_cast<std::size_t>(pi.n()));
  for (int i = 1; i <= pi.n(); ++i) {
    switch (sv.classes()[static_cast<std::size_t>(i)]) {
      case ElementClass::Opener:
        d.steps.push_back(StepKind::North);
        d.xi.push_back(sv.coord(i, Coord::los) + 1);
        break;
      case ElementClass::Singleton:
        d.steps.push_back(StepKind::East);
        d.xi.push_back(sv.coord(i, Coord::los) + 1);
        break;
      case ElementClass::Transient:
        d.steps.push_back(StepKind::Null);
        d.xi.push_back(sv.coord(i, Coord::lsb) + 1);
        break;
      case ElementClass::Closer:
        d.steps.push_back(StepKind::SouthEast);
        d.xi.push_back(sv.coord(i, Coord::lsb) + 1);
        break;
    }
  }
  return d;
}

StepPrediction step_properties(const PathDiagram& d, int i) {
  if (i < 1 || i > d.length()) throw std::out_of_range("step_properties: index out of range");
  const auto vertices = path_vertices(d.steps);
  const Vertex from = vertices[static_cast<std::size_t>(i) - 1];
  StepPrediction p;
  p.kind = d.steps[static_cast<std::size_t>(i) - 1];
  p.abscissa = from.closed;
  p.height = from.open;
  p.xi = d.xi.at(static_cast<std::size_t>(i) - 1);
  p.closers = from.closed;
  if (p.kind == StepKind::North || p.kind == StepKind::East) {
    p.spanning = from.open;
    p.los = p.xi - 1;
    p.ros = from.closed + from.open + 1 - p.xi;
  } else {
    p.spanning = from.open - 1;
    p.lsb = p.xi - 1;
    p.rsb = from.open - p.xi;
  }
  return p;
}

bool prediction_holds(const StepPrediction& p, const StatVector& sv, int i) {
  auto c = [&](Coord co) { return sv.coord(i, co); };
  const auto cls = sv.classes()[static_cast<std::size_t>(i)];
  const bool opens = cls == ElementClass::Opener || cls == ElementClass::Singleton;
  const bool opening_step = p.kind == StepKind::North || p.kind == StepKind::East;
  if (opens != opening_step) return false;
  if (c(Coord::lcs) + c(Coord::rcs) != p.closers) return false;
  if (c(Coord::lsb) + c(Coord::rsb) != p.spanning) return false;
  if (p.los && c(Coord::los) != *p.los) return false;
  if (p.ros && c(Coord::ros) != *p.ros) return false;
  if (p.lsb && c(Coord::lsb) != *p.lsb) return false;
  if (p.rsb && c(Coord::rsb) != *p.rsb) return false;
  return true;
}

}  // namespace osp
