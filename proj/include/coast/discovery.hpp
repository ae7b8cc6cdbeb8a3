#pragma once

#include <vector>

#include "coast/dag.hpp"
#include "coast/dataset.hpp"

namespace coast {

struct DiscoveryConfig {
  int max_parents = 5;
  int max_sweeps = 500;  // accepted-move budget per restart
  enum class Score { gaussian_bic };
  Score score = Score::gaussian_bic;
  int restart_seeds = 3;  // seeds 0..restart_seeds-1
};

struct FalsificationTest {
  int node = 0;
  int partner = 0;
  std::vector<int> conditioning;
  double partial_corr = 0.0;
  double p = 1.0;
  bool rejected = false;
};

struct FalsificationReport {
  std::size_t tested_independencies = 0;
  std::size_t rejected = 0;
  std::size_t skipped = 0;  // conditioning set too large for the sample
  double rejection_fraction = 0.0;
  std::vector<FalsificationTest> tests;

  nlohmann::json to_json(const std::vector<std::string>& nodes) const;
};

// Sum over environments of the per-environment Gaussian BIC,
//   sum_env [ -(n/2) sum_i log sigma_i^2 - (log n / 2) (q + |edges|) ],
// higher is better. Rank-deficient parent regressions are ridge-jittered.
double multi_env_score(const Dag& dag, const std::vector<Dataset>& datasets);

// Greedy hill-climbing over {add, delete, reverse} from the empty graph
// (plus required edges), best score-improving acyclic move first; seeded
// restarts start from random constraint-respecting DAGs. Returns the best
// graph across restarts.
Dag discover_shared_backbone(const std::vector<Dataset>& datasets, const DiscoveryConfig& cfg,
                             const std::set<Edge>& required = {},
                             const std::set<Edge>& forbidden = {});

// Local-Markov falsification: for each node, partial correlation of the node
// with each non-descendant non-parent given its parents (Fisher z).
FalsificationReport falsify(const Dag& dag, const Dataset& ds, double significance);

}  // namespace coast
