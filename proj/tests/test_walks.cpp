#include <doctest.h>

#include <set>

#include "osp/qnum.hpp"
#include "osp/stats.hpp"
#include "osp/walks.hpp"

using namespace osp;

namespace {

PathDiagram example() { return {parse_steps("NNNOOESSES"), {1, 2, 1, 2, 1, 1, 1, 2, 4, 1}}; }

}  // namespace

TEST_SUITE("walks") {
  TEST_CASE("vertex order") {
    const auto v = vertex_order(2);
    REQUIRE(v.size() == 6);
    const std::vector<std::pair<int, int>> want{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}};
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(v[i].closed == want[i].first);
      CHECK(v[i].open == want[i].second);
      CHECK(vertex_index(v[i]) == static_cast<int>(i));
    }
    CHECK(vertex_count(2) == 6);
    CHECK(vertex_count(4) == 15);
  }

  TEST_CASE("edges of D_k") {
    CHECK(is_edge({0, 0}, StepKind::North, 1));
    CHECK_FALSE(is_edge({0, 1}, StepKind::North, 1));
    CHECK_FALSE(is_edge({0, 0}, StepKind::Null, 3));
    CHECK_FALSE(is_edge({0, 0}, StepKind::SouthEast, 3));
    CHECK(is_edge({0, 2}, StepKind::SouthEast, 2));
    CHECK(is_edge({1, 1}, StepKind::Null, 2));
  }

  TEST_CASE("paths") {
    auto letters = [](int n, int k) {
      std::set<std::string> s;
      for (const auto& p : enumerate_paths(n, k)) s.insert(format_steps(p));
      return s;
    };
    CHECK(letters(2, 2) == std::set<std::string>{"EE"});
    CHECK(letters(2, 1) == std::set<std::string>{"NS"});
    CHECK(letters(3, 1) == std::set<std::string>{"NOS"});
    CHECK(letters(3, 2) == std::set<std::string>{"NSE", "ENS", "NES"});
    const Path ex = parse_steps("NNNOOESSES");
    CHECK(is_valid_path(ex, 5));
    CHECK_FALSE(is_valid_path(ex, 4));
    CHECK(path_vertices(ex).back().closed == 5);
    CHECK_THROWS_AS(parse_steps("NX"), ParseError);
    CHECK_THROWS_AS(parse_choices("1,,2"), ParseError);
    CHECK(parse_choices("1,2,10") == std::vector<int>{1, 2, 10});
  }

  TEST_CASE("path count equals the number of distinct forms") {
    for (int n = 1; n <= 7; ++n) {
      for (int k = 1; k <= n; ++k) {
        std::set<std::string> forms;
        for_each_ordered_partition(n, k, [&](const OrderedPartition& pi) { forms.insert(format_steps(*path_of_form(form(pi)))); });
        std::set<std::string> paths;
        for_each_path(n, k, [&](const Path& p) { paths.insert(format_steps(p)); });
        CHECK(forms == paths);
      }
    }
  }

  TEST_CASE("weighted path count is k! S(n,k)") {
    for (int n = 1; n <= 8; ++n) {
      for (int k = 1; k <= n; ++k) {
        Integer total = 0;
        for_each_path(n, k, [&](const Path& p) { total += choice_product(p); });
        CHECK(total == factorial(k) * stirling2(n, k));
      }
    }
  }

  TEST_CASE("worked example of psi") {
    const PathDiagram d = example();
    CHECK(is_valid_diagram(d, 5));
    CHECK(diagram_depth(d) == 5);
    CHECK(psi(d).format() == "6/3,5,7/1,4,10/9/2,8");
    CHECK(psi_inverse(OrderedPartition::parse("6/3,5,7/1,4,10/9/2,8")) == d);
    PathDiagram bad = d;
    bad.xi[8] = 6;
    CHECK_FALSE(is_valid_diagram(bad, 5));
    CHECK_THROWS_AS(psi(bad), std::invalid_argument);
  }

  TEST_CASE("all-East diagrams") {
    for (int n = 1; n <= 6; ++n) {
      PathDiagram right{Path(static_cast<std::size_t>(n), StepKind::East), {}}, left = right;
      std::string inc, dec;
      for (int i = 1; i <= n; ++i) {
        right.xi.push_back(i);
        left.xi.push_back(1);
        inc += (i > 1 ? "/" : "") + std::to_string(i);
        dec += (i > 1 ? "/" : "") + std::to_string(n + 1 - i);
      }
      CHECK(psi(right).format() == inc);
      CHECK(psi(left).format() == dec);
      CHECK(psi_inverse(OrderedPartition::parse(inc)) == right);
    }
  }

  TEST_CASE("step predictions on the worked example") {
    const PathDiagram d = example();
    const StepPrediction p9 = step_properties(d, 9);
    CHECK(p9.kind == StepKind::East);
    CHECK(p9.abscissa == 3);
    CHECK(p9.height == 1);
    CHECK(p9.closers == 3);
    CHECK(p9.spanning == 1);
    CHECK(p9.los == 3);
    CHECK(p9.ros == 1);
    const StepPrediction p1 = step_properties(d, 1);
    CHECK((p1.closers == 0 && p1.spanning == 0 && p1.los == 0 && p1.ros == 0 && p1.xi == 1));
    const StatVector sv(psi(d));
    for (int i = 1; i <= d.length(); ++i) CHECK(prediction_holds(step_properties(d, i), sv, i));
  }

  TEST_CASE("Null step at height 1 forces lsb = rsb = 0") {
    const PathDiagram d{parse_steps("NOS"), {1, 1, 1}};
    const StepPrediction p = step_properties(d, 2);
    CHECK(p.lsb == 0);
    CHECK(p.rsb == 0);
  }

  TEST_CASE("psi is a bijection that tracks the statistics, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      for (int k = 1; k <= n; ++k) {
        std::set<std::string> images;
        Integer diagrams = 0;
        for_each_diagram(n, k, [&](const PathDiagram& d) {
          ++diagrams;
          const OrderedPartition pi = psi(d);
          CHECK(pi.k() == k);
          images.insert(pi.format());
          CHECK(psi_inverse(pi) == d);
          CHECK(path_of_form(form(pi)) == d.steps);
          const StatVector sv(pi);
          for (int i = 1; i <= n; ++i) CHECK(prediction_holds(step_properties(d, i), sv, i));
        });
        CHECK(Integer(images.size()) == diagrams);
        CHECK(diagrams == factorial(k) * stirling2(n, k));
      }
    }
  }
}
