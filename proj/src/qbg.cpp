#include "qweyl/qbg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace qweyl {

namespace {

Int two_rho_coroot_pairing(const RootSystem& rs, int root_id) {
  // <2rho, alpha^vee> = 2 * (coordinate sum of alpha^vee)
  Int s = 0;
  for (int j = 1; j <= rs.rank(); ++j) s += rs.pos_coroots[root_id][j];
  return 2 * s;
}

// classify w * s_alpha; returns -1 none, 0 upward, 1 downward
int classify_edge(const RootSystem& rs, int lw, int lv, int root_id) {
  if (lv == lw + 1) return 0;
  if (lv == lw - two_rho_coroot_pairing(rs, root_id) + 1) return 1;
  return -1;
}

IVec add_coroot(const RootSystem& rs, const IVec& wt, int root_id) {
  IVec r = wt;
  for (int j = 1; j <= rs.rank(); ++j) r[j] += rs.pos_coroots[root_id][j];
  return r;
}

}  // namespace

std::vector<QbgEdge> qbg_neighbors(const RootSystem& rs,
                                   const WeylElement& w) {
  std::vector<QbgEdge> out;
  int lw = length(rs, w);
  for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
    WeylElement v = mul(w, root_reflection(rs, static_cast<int>(a)));
    int kind = classify_edge(rs, lw, length(rs, v), static_cast<int>(a));
    if (kind < 0) continue;
    out.push_back({v, static_cast<int>(a), kind == 1});
  }
  return out;
}

namespace {

struct BfsNode {
  WeylElement w;
  int lw;
};

std::optional<QbgResult> bfs_query(const RootSystem& rs, const WeylElement& x,
                                   const WeylElement& y, int bound) {
  IVec target = canonical_key(rs, y);
  std::unordered_map<IVec, IVec, IVecHash> wt_of;  // visited -> path weight
  IVec zero(rs.rank() + 1, 0);
  IVec start = canonical_key(rs, x);
  if (start == target) return QbgResult{0, zero};
  wt_of[start] = zero;
  std::deque<BfsNode> frontier{{x, length(rs, x)}};
  int depth = 0;
  while (!frontier.empty() && depth < bound) {
    ++depth;
    std::deque<BfsNode> next;
    for (const auto& node : frontier) {
      const IVec wt_here = wt_of[canonical_key(rs, node.w)];
      for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
        WeylElement v = mul(node.w, root_reflection(rs, static_cast<int>(a)));
        int lv = length(rs, v);
        int kind = classify_edge(rs, node.lw, lv, static_cast<int>(a));
        if (kind < 0) continue;
        IVec key = canonical_key(rs, v);
        if (wt_of.count(key)) continue;
        IVec wt =
            kind == 1 ? add_coroot(rs, wt_here, static_cast<int>(a)) : wt_here;
        if (key == target) return QbgResult{depth, wt};
        wt_of[key] = wt;
        next.push_back({v, lv});
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

QbgResult qbg_query(const RootSystem& rs, const WeylElement& x,
                    const WeylElement& y) {
  // any pair is connected within |W| steps; length-based bound is cheaper
  int bound = length(rs, mul(x.inverse(), y)) + 1;
  bound = std::max(bound, static_cast<int>(rs.num_pos_roots()) * 2 + 1);
  auto r = bfs_query(rs, x, y, bound);
  if (!r) throw std::logic_error("quantum Bruhat graph query did not connect");
  return *r;
}

int qbg_distance(const RootSystem& rs, const WeylElement& x,
                 const WeylElement& y) {
  return qbg_query(rs, x, y).d;
}

IVec qbg_weight(const RootSystem& rs, const WeylElement& x,
                const WeylElement& y) {
  return qbg_query(rs, x, y).wt;
}

std::optional<int> qbg_distance_bounded(const RootSystem& rs,
                                        const WeylElement& x,
                                        const WeylElement& y, int bound) {
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  auto r = bfs_query(rs, x, y, bound);
  if (!r) return std::nullopt;
  return r->d;
}

std::vector<IVec> qbg_all_shortest_path_weights(const RootSystem& rs,
                                                const WeylElement& x,
                                                const WeylElement& y) {
  int d = qbg_distance(rs, x, y);
  // distance of every vertex to y, over reversed edges
  std::unordered_map<IVec, int, IVecHash> dist_to_y;
  {
    dist_to_y[canonical_key(rs, y)] = 0;
    std::deque<BfsNode> frontier{{y, length(rs, y)}};
    int depth = 0;
    while (!frontier.empty() && depth < d) {
      ++depth;
      std::deque<BfsNode> next;
      for (const auto& node : frontier) {
        for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
          // v = u * s_alpha is a reverse neighbor of u iff v -> u is an edge
          WeylElement v =
              mul(node.w, root_reflection(rs, static_cast<int>(a)));
          int lv = length(rs, v);
          if (classify_edge(rs, lv, node.lw, static_cast<int>(a)) < 0)
            continue;
          IVec key = canonical_key(rs, v);
          if (dist_to_y.count(key)) continue;
          dist_to_y[key] = depth;
          next.push_back({v, lv});
        }
      }
      frontier = std::move(next);
    }
  }

  std::vector<IVec> weights;
  IVec wt(rs.rank() + 1, 0);
  // depth-first over edges that stay on a shortest path
  std::function<void(const WeylElement&, int, int)> walk =
      [&](const WeylElement& u, int lu, int remaining) {
        if (remaining == 0) {
          weights.push_back(wt);
          return;
        }
        for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
          WeylElement v = mul(u, root_reflection(rs, static_cast<int>(a)));
          int lv = length(rs, v);
          int kind = classify_edge(rs, lu, lv, static_cast<int>(a));
          if (kind < 0) continue;
          auto it = dist_to_y.find(canonical_key(rs, v));
          if (it == dist_to_y.end() || it->second != remaining - 1) continue;
          if (kind == 1)
            for (int j = 1; j <= rs.rank(); ++j)
              wt[j] += rs.pos_coroots[a][j];
          walk(v, lv, remaining - 1);
          if (kind == 1)
            for (int j = 1; j <= rs.rank(); ++j)
              wt[j] -= rs.pos_coroots[a][j];
        }
      };
  walk(x, length(rs, x), d);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  return weights;
}

QbgGraph QbgGraph::build(const WeylGroupTable& table) {
  const RootSystem& rs = *table.rs;
  QbgGraph g;
  g.table = &table;
  g.adj.resize(table.size());
  g.radj.resize(table.size());
  for (size_t idx = 0; idx < table.size(); ++idx) {
    int lw = table.lengths[idx];
    for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
      IntMat m = table.mats[idx].mul(root_reflection(rs, static_cast<int>(a)).m);
      int to = table.index_of_key(m.apply(rs.key_base));
      int kind = classify_edge(rs, lw, table.lengths[to], static_cast<int>(a));
      if (kind < 0) continue;
      g.adj[idx].push_back({to, static_cast<int>(a), kind == 1});
      g.radj[to].push_back({static_cast<int>(idx), static_cast<int>(a),
                            kind == 1});
    }
  }
  return g;
}

namespace {

std::vector<int> bfs_over(const std::vector<std::vector<QbgGraph::Edge>>& adj,
                          int src) {
  std::vector<int> d(adj.size(), -1);
  d[src] = 0;
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (const auto& e : adj[u])
      if (d[e.to] < 0) {
        d[e.to] = d[u] + 1;
        q.push_back(e.to);
      }
  }
  return d;
}

}  // namespace

std::vector<int> QbgGraph::dist_from(int src) const {
  return bfs_over(adj, src);
}

std::vector<int> QbgGraph::dist_to(int dst) const {
  return bfs_over(radj, dst);
}

QbgResult QbgGraph::query(int src, int dst) const {
  const RootSystem& rs = *table->rs;
  std::vector<int> d(adj.size(), -1);
  std::vector<IVec> wt(adj.size());
  d[src] = 0;
  wt[src] = IVec(rs.rank() + 1, 0);
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    if (u == dst) return {d[dst], wt[dst]};
    for (const auto& e : adj[u]) {
      if (d[e.to] >= 0) continue;
      d[e.to] = d[u] + 1;
      wt[e.to] = e.down ? add_coroot(rs, wt[u], e.root_id) : wt[u];
      q.push_back(e.to);
    }
  }
  throw std::logic_error("quantum Bruhat graph query did not connect");
}

QbgGraph::DistWt QbgGraph::dist_wt_from(int src) const {
  const RootSystem& rs = *table->rs;
  DistWt out;
  out.d.assign(adj.size(), -1);
  out.wt.assign(adj.size(), IVec());
  out.d[src] = 0;
  out.wt[src] = IVec(rs.rank() + 1, 0);
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (const auto& e : adj[u]) {
      if (out.d[e.to] >= 0) continue;
      out.d[e.to] = out.d[u] + 1;
      out.wt[e.to] = e.down ? add_coroot(rs, out.wt[u], e.root_id) : out.wt[u];
      q.push_back(e.to);
    }
  }
  return out;
}

bool QbgGraph::weight_unique(int src, int dst,
                             const std::vector<int>& d_from_src,
                             const std::vector<int>& d_to_dst) const {
  const RootSystem& rs = *table->rs;
  int d = d_from_src[dst];
  // vertices on shortest paths, processed by distance from src
  std::vector<std::vector<int>> by_layer(d + 1);
  for (size_t u = 0; u < adj.size(); ++u)
    if (d_from_src[u] >= 0 && d_to_dst[u] >= 0 &&
        d_from_src[u] + d_to_dst[u] == d)
      by_layer[d_from_src[u]].push_back(static_cast<int>(u));
  std::vector<IVec> wt(adj.size());
  std::vector<char> has(adj.size(), 0);
  wt[src] = IVec(rs.rank() + 1, 0);
  has[src] = 1;
  for (int layer = 0; layer < d; ++layer)
    for (int u : by_layer[layer]) {
      if (!has[u]) continue;
      for (const auto& e : adj[u]) {
        if (d_from_src[e.to] != layer + 1 || d_to_dst[e.to] < 0 ||
            d_from_src[e.to] + d_to_dst[e.to] != d)
          continue;
        IVec cand = e.down ? add_coroot(rs, wt[u], e.root_id) : wt[u];
        if (!has[e.to]) {
          wt[e.to] = cand;
          has[e.to] = 1;
        } else if (wt[e.to] != cand) {
          return false;
        }
      }
    }
  return true;
}

std::string qbg_dot(const RootSystem& rs) {
  if (rs.rank() > 3)
    throw std::invalid_argument("DOT export is limited to rank <= 3");
  WeylGroupTable table = enumerate_group(rs);
  QbgGraph g = QbgGraph::build(table);
  auto label = [&](size_t idx) {
    auto word = reduced_word(rs, table.element(idx));
    if (word.empty()) return std::string("e");
    std::string s;
    for (int i : word) s += std::to_string(i);
    return s;
  };
  std::ostringstream os;
  os << "digraph qbg {\n";
  for (size_t idx = 0; idx < table.size(); ++idx)
    os << "  n" << idx << " [label=\"" << label(idx) << "\"];\n";
  for (size_t idx = 0; idx < table.size(); ++idx)
    for (const auto& e : g.adj[idx]) {
      os << "  n" << idx << " -> n" << e.to;
      if (e.down) {
        os << " [style=dashed,label=\"";
        const IVec& cor = rs.pos_coroots[e.root_id];
        bool first = true;
        for (int j = 1; j <= rs.rank(); ++j) {
          if (cor[j] == 0) continue;
          if (!first) os << "+";
          if (cor[j] != 1) os << cor[j];
          os << "a" << j << "v";
          first = false;
        }
        os << "\"]";
      }
      os << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace qweyl
