#ifndef OSP_CHECKS_HPP
#define OSP_CHECKS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "osp/partition.hpp"

namespace osp {

// One verified instance, e.g. "n=5 k=3".
struct CheckRow {
  std::string instance;
  bool pass = true;
  std::string detail;  // first counterexample when !pass
};

struct CheckReport {
  std::string name;
  std::string title;
  bool empirical = false;  // a conjecture report, not a theorem check
  std::vector<CheckRow> rows;

  bool passed() const;
  const CheckRow* first_failure() const;
};

struct CheckOptions {
  int n_max = -1;  // < 0: the check's default bound
  EnumOptions enumeration;
  int threads = 1;
  std::function<void(std::string_view)> progress;  // optional diagnostics
};

struct CheckInfo {
  std::string name;
  std::string title;
  int default_n_max;
};

const std::vector<CheckInfo>& check_catalog();
// Throws std::invalid_argument for an unknown name.
CheckReport run_check(std::string_view name, const CheckOptions& opts = {});

// The three bMaj statistics against [k]_q! S_q(n,k); marked empirical.
CheckReport report_conjectures(int n_max, const CheckOptions& opts = {});

}  // namespace osp

#endif  // OSP_CHECKS_HPP
