#pragma once

// Named verification suites driving the exhaustive and randomized checks
// over fixed type/rank scopes. Each suite reports machine-readable per-case
// results; failures name the identity violated and the witnesses as words.

#include <string>
#include <vector>

#include "qweyl/newton.hpp"

namespace qweyl {
namespace suites {

struct SuiteCase {
  std::string id;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteCase> cases;

  bool all_pass() const {
    for (const auto& c : cases)
      if (!c.pass) return false;
    return true;
  }
  size_t fail_count() const {
    size_t k = 0;
    for (const auto& c : cases)
      if (!c.pass) ++k;
    return k;
  }
};

struct SuiteOptions {
  int max_rank = 99;
  std::vector<char> types;     // empty = every type in the suite's scope
  bool allow_large = false;    // admits E7-sized class computations
  size_t qbg_group_cap = 1152; // exhaustive-min route threshold
};

SuiteReport suite_xi_tables(const SuiteOptions& opts = {});
SuiteReport suite_main_theorem_class(const SuiteOptions& opts = {});
SuiteReport suite_main_theorem_qbg(const SuiteOptions& opts = {});
SuiteReport suite_key_lemma(const SuiteOptions& opts = {});
SuiteReport suite_qbg_lemmas(const SuiteOptions& opts = {});
SuiteReport suite_demazure(const SuiteOptions& opts = {});
SuiteReport suite_newton_consistency(const SuiteOptions& opts = {});
SuiteReport suite_bounds(const SuiteOptions& opts = {});
SuiteReport suite_two_expressions(const SuiteOptions& opts = {});

// suite registry: qbg-lemmas, demazure, two-expressions, bounds, key-lemma,
// xi-tables, main-theorem, newton-consistency
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace suites
}  // namespace qweyl
