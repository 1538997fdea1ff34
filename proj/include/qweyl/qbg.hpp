#pragma once

// Quantum Bruhat graph on W: upward edges w -> w s_alpha raising length by
// one, downward edges dropping it by <2rho, alpha^vee> - 1 with weight
// alpha^vee. Queries generate neighbors on the fly; an explicit graph over
// an enumerated group table backs the exhaustive suites.

#include <optional>

#include "qweyl/weyl.hpp"

namespace qweyl {

struct QbgEdge {
  WeylElement target;  // source * s_alpha
  int root_id;
  bool downward;  // weight is alpha^vee if downward, 0 otherwise
};

std::vector<QbgEdge> qbg_neighbors(const RootSystem& rs, const WeylElement& w);

struct QbgResult {
  int d;
  IVec wt;  // coroot coordinates, integral
};

QbgResult qbg_query(const RootSystem& rs, const WeylElement& x,
                    const WeylElement& y);
int qbg_distance(const RootSystem& rs, const WeylElement& x,
                 const WeylElement& y);
IVec qbg_weight(const RootSystem& rs, const WeylElement& x,
                const WeylElement& y);
// d(x,y) if it does not exceed the bound, otherwise nullopt
std::optional<int> qbg_distance_bounded(const RootSystem& rs,
                                        const WeylElement& x,
                                        const WeylElement& y, int bound);

// verification mode: weights of ALL shortest paths from x to y, found by
// explicit enumeration (exponential; small ranks only). Deduplicated, sorted.
std::vector<IVec> qbg_all_shortest_path_weights(const RootSystem& rs,
                                                const WeylElement& x,
                                                const WeylElement& y);

class QbgGraph {
 public:
  struct Edge {
    int to;
    int root_id;
    bool down;
  };

  const WeylGroupTable* table = nullptr;
  std::vector<std::vector<Edge>> adj;
  std::vector<std::vector<Edge>> radj;

  static QbgGraph build(const WeylGroupTable& table);

  std::vector<int> dist_from(int src) const;
  std::vector<int> dist_to(int dst) const;
  // distance plus the weight of one shortest path
  QbgResult query(int src, int dst) const;
  // distances and one shortest-path weight to every vertex at once
  struct DistWt {
    std::vector<int> d;
    std::vector<IVec> wt;
  };
  DistWt dist_wt_from(int src) const;
  // checks that every shortest src->dst path has the same weight by dynamic
  // programming over the shortest-path DAG (covers all paths exactly)
  bool weight_unique(int src, int dst, const std::vector<int>& d_from_src,
                     const std::vector<int>& d_to_dst) const;
};

// DOT export of the full graph, rank <= 3 only
std::string qbg_dot(const RootSystem& rs);

}  // namespace qweyl
