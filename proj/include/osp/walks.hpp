#ifndef OSP_WALKS_HPP
#define OSP_WALKS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osp/partition.hpp"
#include "osp/ring.hpp"
#include "osp/stats.hpp"

namespace osp {

// Vertex (closed, open) of D_k; requires closed + open <= k.
struct Vertex {
  int closed = 0;
  int open = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// North: open+1. East: closed+1. SouthEast: closed+1, open-1. Null: loop.
enum class StepKind : std::uint8_t { North, East, SouthEast, Null };

// Letters N, E, S (south-east), O (null).
char step_letter(StepKind kind);
std::optional<StepKind> parse_step_letter(char c);
std::string_view step_name(StepKind kind);

// Target of a step; no bounds check.
Vertex step_target(Vertex from, StepKind kind);
// True when the step is an edge of D_k leaving `from`.
bool is_edge(Vertex from, StepKind kind, int k);

// v_1 = (0,0), ..., v_{N_k} = (k,0): by level closed+open, and within a
// level by decreasing open.
std::vector<Vertex> vertex_order(int k);
int vertex_count(int k);  // (k+1)(k+2)/2
int vertex_index(Vertex v);  // 0-based position in vertex_order

using Path = std::vector<StepKind>;

// s_0 = (0,0), s_1, ..., s_n.
std::vector<Vertex> path_vertices(const Path& path);
// Every step is an edge of D_k and the walk ends at (k,0).
bool is_valid_path(const Path& path, int k);
// Steps between consecutive form points; nullopt when two points are not
// joined by an edge.
std::optional<Path> path_of_form(const Form& form);

// Number of admissible choices xi for a step: open+closed+1 for North/East,
// open for Null/SouthEast.
int choice_count(StepKind kind, Vertex from);
// Product of the choice counts along the path.
Integer choice_product(const Path& path);

std::string format_steps(const Path& path);
Path parse_steps(std::string_view text);  // throws ParseError
std::string format_choices(const std::vector<int>& xi);
std::vector<int> parse_choices(std::string_view text);  // "1,2,1"; throws ParseError

// A path of depth k together with 1-based choices xi_i.
struct PathDiagram {
  Path steps;
  std::vector<int> xi;

  int length() const { return static_cast<int>(steps.size()); }
  friend bool operator==(const PathDiagram&, const PathDiagram&) = default;
};

// Valid path of depth k with 1 <= xi_i <= choice_count at every step.
bool is_valid_diagram(const PathDiagram& d, int k);
// Depth of a valid diagram (closed count of the final vertex).
int diagram_depth(const PathDiagram& d);

using PathVisitor = std::function<void(const Path&)>;
using DiagramVisitor = std::function<void(const PathDiagram&)>;

// Omega_n^k in lexicographic step order N < E < S < O.
void for_each_path(int n, int k, const PathVisitor& visit, const EnumOptions& opts = {});
std::vector<Path> enumerate_paths(int n, int k, const EnumOptions& opts = {});
// Delta_n^k: each path of Omega_n^k with all admissible choice sequences.
void for_each_diagram(int n, int k, const DiagramVisitor& visit, const EnumOptions& opts = {});

// Builds the traces T_1..T_n; throws std::invalid_argument on an invalid
// diagram.
OrderedPartition psi(const PathDiagram& d);
PathDiagram psi_inverse(const OrderedPartition& pi);

// Coordinate values that the i-th step of d forces on psi(d). Opening steps
// (North/East) predict los and ros; closing steps (Null/SouthEast) predict
// lsb and rsb.
struct StepPrediction {
  StepKind kind = StepKind::North;
  int abscissa = 0;
  int height = 0;
  int xi = 0;
  int closers = 0;    // (lcs+rcs)_i
  int spanning = 0;   // (lsb+rsb)_i
  std::optional<int> los;
  std::optional<int> ros;
  std::optional<int> lsb;
  std::optional<int> rsb;
};

StepPrediction step_properties(const PathDiagram& d, int i);  // 1 <= i <= n
// True when every predicted value equals the statistic of sv at element i.
bool prediction_holds(const StepPrediction& p, const StatVector& sv, int i);

}  // namespace osp

#endif  // OSP_WALKS_HPP
