#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "osp/checks.hpp"
#include "osp/cli.hpp"
#include "osp/partition.hpp"
#include "osp/qnum.hpp"
#include "osp/stats.hpp"
#include "osp/walks.hpp"

namespace py = pybind11;
using namespace osp;

namespace {

LaurentPoly q_var() { return LaurentPoly::variable(VarRegistry::standard(), "q"); }

// Every named statistic of one ordered partition.
py::dict statistics(const std::string& text) {
  const StatVector sv(OrderedPartition::parse(text));
  py::dict out;
  for (Stat s : all_stats()) out[py::str(std::string(stat_name(s)))] = sv.value(s);
  return out;
}

std::vector<std::string> distributions_text(int n, int k, const std::vector<std::string>& exprs, bool unordered,
                                            int threads) {
  std::vector<StatExpr> parsed;
  for (const auto& e : exprs) parsed.push_back(StatExpr::parse(e));
  DistributionOptions opts;
  opts.unordered_only = unordered;
  opts.threads = threads;
  std::vector<std::string> out;
  for (const auto& p : distributions(n, k, parsed, q_var(), opts)) out.push_back(p.to_string());
  return out;
}

py::dict check(const std::string& name, int n_max) {
  CheckOptions opts;
  opts.n_max = n_max;
  const CheckReport r = run_check(name, opts);
  py::list rows;
  for (const auto& row : r.rows) rows.append(py::make_tuple(row.instance, row.pass, row.detail));
  py::dict out;
  out["name"] = r.name;
  out["title"] = r.title;
  out["passed"] = r.passed();
  out["rows"] = rows;
  return out;
}

py::tuple cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Statistics on ordered set partitions";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<PartitionError>(m, "PartitionError", PyExc_ValueError);
  py::register_exception<BoundExceeded>(m, "BoundExceeded", PyExc_ValueError);

  m.def("normalize", [](const std::string& text) { return OrderedPartition::parse(text).format(); },
        "Parse a partition such as '1,3/2' and return its canonical text.");
  m.def("statistics", &statistics, py::arg("partition"));
  m.def("partitions", [](int n, int k, bool unordered) {
          std::vector<std::string> out;
          for (const auto& p : unordered ? enumerate_unordered(n, k) : enumerate_ordered(n, k)) out.push_back(p.format());
          return out;
        },
        py::arg("n"), py::arg("k"), py::arg("unordered") = false);
  m.def("distributions", &distributions_text, py::arg("n"), py::arg("k"), py::arg("exprs"),
        py::arg("unordered") = false, py::arg("threads") = 1);
  m.def("distribution", [](int n, int k, const std::string& expr) {
          return distributions_text(n, k, {expr}, false, 1).front();
        },
        py::arg("n"), py::arg("k"), py::arg("expr"));
  m.def("q_stirling", [](int n, int k) { return q_stirling(n, k).to_string(); }, py::arg("n"), py::arg("k"));
  m.def("euler_mahonian", [](int n, int k) { return euler_mahonian_target(n, k, q_var()).to_string(); },
        py::arg("n"), py::arg("k"));
  m.def("psi", [](const std::string& steps, const std::vector<int>& xi) {
          return psi(PathDiagram{parse_steps(steps), xi}).format();
        },
        py::arg("steps"), py::arg("xi"));
  m.def("psi_inverse", [](const std::string& partition) {
          const PathDiagram d = psi_inverse(OrderedPartition::parse(partition));
          return py::make_tuple(format_steps(d.steps), d.xi);
        },
        py::arg("partition"));
  m.def("checks", [] {
    std::vector<std::string> names;
    for (const auto& c : check_catalog()) names.push_back(c.name);
    return names;
  });
  m.def("run_check", &check, py::arg("name"), py::arg("n_max") = -1);
  m.def("cli", &cli_run, py::arg("args"), "Run the command line; returns (exit_code, stdout, stderr).");
}
