#include "qweyl/weyl.hpp"

#include <algorithm>
#include <deque>

namespace qweyl {

WeylElement weyl_identity(const RootSystem& rs) {
  IntMat id = IntMat::identity(rs.rank());
  return {id, id};
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw std::invalid_argument("simple reflection index out of range");
  IntMat m = IntMat::identity(rs.rank());
  for (int j = 1; j <= rs.rank(); ++j) m.at(i, j) -= rs.datum.cartan[i][j];
  return {m, m};
}

WeylElement root_reflection(const RootSystem& rs, int root_id) {
  IntMat m = IntMat::identity(rs.rank());
  const IVec& row = rs.pairing_row[root_id];
  const IVec& cor = rs.pos_coroots[root_id];
  for (int j = 1; j <= rs.rank(); ++j)
    for (int k = 1; k <= rs.rank(); ++k) m.at(k, j) -= row[j] * cor[k];
  return {m, m};
}

WeylElement mul(const WeylElement& a, const WeylElement& b) {
  return {a.m.mul(b.m), b.minv.mul(a.minv)};
}

WeylElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = weyl_identity(rs);
  for (int i : word) w = mul(w, simple_reflection(rs, i));
  return w;
}

IVec canonical_key(const RootSystem& rs, const WeylElement& w) {
  return w.m.apply(rs.key_base);
}

QVec coweight_action(const WeylElement& w, const QVec& lambda) {
  return w.m.apply(lambda);
}

namespace {

bool is_negative_coroot_image(const RootSystem& rs, const IntMat& m,
                              int root_id) {
  const IVec& cor = rs.pos_coroots[root_id];
  for (int i = 1; i <= rs.rank(); ++i) {
    Int s = 0;
    for (int j = 1; j <= rs.rank(); ++j) s += m.at(i, j) * cor[j];
    if (s != 0) return s < 0;
  }
  return false;
}

int mat_length(const RootSystem& rs, const IntMat& m) {
  int l = 0;
  for (size_t a = 0; a < rs.num_pos_roots(); ++a)
    if (is_negative_coroot_image(rs, m, static_cast<int>(a))) ++l;
  return l;
}

// right descent test: w(alpha_i) < 0, read off column i of the matrix
bool right_descent(const RootSystem& rs, const IntMat& m, int i) {
  for (int k = 1; k <= rs.rank(); ++k)
    if (m.at(k, i) != 0) return m.at(k, i) < 0;
  return false;
}

IntMat int_mat_inverse(const RootSystem& rs, const IntMat& m) {
  int n = rs.rank();
  std::vector<QVec> rows(n + 1, QVec(n + 1, Rat(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) rows[i][j] = m.at(i, j);
  auto inv = rat_inverse(rows, n);
  IntMat r;
  r.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (denominator(inv[i][j]) != 1)
        throw std::logic_error("non-integral Weyl matrix inverse");
      r.at(i, j) = numerator(inv[i][j]).convert_to<Int>();
    }
  return r;
}

WeylElement from_mat(const RootSystem& rs, const IntMat& m) {
  return {m, int_mat_inverse(rs, m)};
}

IntMat perm_conjugate(const RootSystem& rs, const DiagramAutomorphism& g,
                      const IntMat& m) {
  IntMat r;
  r.n = m.n;
  for (int i = 1; i <= rs.rank(); ++i)
    for (int j = 1; j <= rs.rank(); ++j) r.at(g.perm[i], g.perm[j]) = m.at(i, j);
  return r;
}

}  // namespace

bool sends_root_negative(const RootSystem& rs, const WeylElement& w,
                         int root_id) {
  return is_negative_coroot_image(rs, w.m, root_id);
}

int root_image(const RootSystem& rs, const WeylElement& w, int root_id,
               bool* negative) {
  IVec img = w.m.apply(rs.pos_coroots[root_id]);
  bool neg = false;
  for (int i = 1; i <= rs.rank(); ++i)
    if (img[i] != 0) { neg = img[i] < 0; break; }
  if (neg)
    for (auto& x : img) x = -x;
  if (negative) *negative = neg;
  int id = rs.coroot_index(img);
  if (id < 0) throw std::logic_error("matrix does not permute the coroots");
  return id;
}

int length(const RootSystem& rs, const WeylElement& w) {
  return mat_length(rs, w.m);
}

bool is_identity(const WeylElement& w) {
  return w.m == IntMat::identity(w.m.n);
}

std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> strip;
  IntMat m = w.m;
  IntMat id = IntMat::identity(rs.rank());
  while (m != id) {
    int i = 1;
    while (i <= rs.rank() && !right_descent(rs, m, i)) ++i;
    if (i > rs.rank()) throw std::logic_error("no descent on a non-identity");
    strip.push_back(i);
    m = m.mul(simple_reflection(rs, i).m);
  }
  std::reverse(strip.begin(), strip.end());
  return strip;
}

WeylElement longest_element(const RootSystem& rs) {
  std::vector<int> all(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i) all[i - 1] = i;
  return longest_parabolic(rs, all);
}

WeylElement longest_parabolic(const RootSystem& rs,
                              const std::vector<int>& J) {
  WeylElement w = weyl_identity(rs);
  for (;;) {
    int pick = 0;
    for (int i : J)
      if (!right_descent(rs, w.m, i)) { pick = i; break; }
    if (pick == 0) return w;
    w = mul(w, simple_reflection(rs, pick));
  }
}

WeylElement zeta(const RootSystem& rs, int i) {
  auto minuscule = minuscule_coweight_indices(rs);
  if (std::find(minuscule.begin(), minuscule.end(), i) == minuscule.end())
    throw std::invalid_argument("varpi_" + std::to_string(i) +
                                "^vee is not minuscule in " + rs.label());
  std::vector<int> J;
  for (int k = 1; k <= rs.rank(); ++k)
    if (k != i) J.push_back(k);
  return mul(longest_parabolic(rs, J), longest_element(rs));
}

int reflection_length(const RootSystem& rs, const WeylElement& w) {
  (void)rs;
  return int_rank_minus_identity(w.m);
}

bool is_coxeter_of(const RootSystem& rs, const WeylElement& w,
                   const std::vector<int>& J) {
  std::vector<int> word = reduced_word(rs, w);
  if (word.size() != J.size()) return false;
  std::vector<int> sorted = word, js = J;
  std::sort(sorted.begin(), sorted.end());
  std::sort(js.begin(), js.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  return sorted == js;
}

WeylElement apply_automorphism(const RootSystem& rs,
                               const DiagramAutomorphism& sigma0,
                               const WeylElement& w) {
  return {perm_conjugate(rs, sigma0, w.m), perm_conjugate(rs, sigma0, w.minv)};
}

int WeylGroupTable::index_of(const WeylElement& w) const {
  return index_of_key(canonical_key(*rs, w));
}

int WeylGroupTable::index_of_key(const IVec& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

size_t weyl_order(const RootSystem& rs) {
  size_t n = rs.rank();
  auto fact = [](size_t k) {
    size_t f = 1;
    for (size_t i = 2; i <= k; ++i) f *= i;
    return f;
  };
  switch (rs.type()) {
    case 'A': return fact(n + 1);
    case 'B':
    case 'C': return (size_t(1) << n) * fact(n);
    case 'D': return (size_t(1) << (n - 1)) * fact(n);
    case 'E': return n == 6 ? 51840 : (n == 7 ? 2903040 : 696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

WeylGroupTable enumerate_group(const RootSystem& rs, size_t cap) {
  size_t order = weyl_order(rs);
  if (order > cap)
    throw std::runtime_error("group " + rs.label() + " has " +
                             std::to_string(order) +
                             " elements, above the cap " + std::to_string(cap) +
                             "; raise the cap to at least " +
                             std::to_string(order));
  WeylGroupTable t;
  t.rs = &rs;
  int n = rs.rank();
  std::vector<IntMat> gens(n + 1);
  for (int i = 1; i <= n; ++i) gens[i] = simple_reflection(rs, i).m;

  std::vector<IntMat> invs;
  IntMat id = IntMat::identity(n);
  t.mats.push_back(id);
  invs.push_back(id);
  t.lengths.push_back(0);
  t.index_[id.apply(rs.key_base)] = 0;

  std::vector<int> layer{0};
  int depth = 0;
  while (!layer.empty()) {
    ++depth;
    std::vector<std::pair<IVec, std::pair<IntMat, IntMat>>> found;
    for (int idx : layer) {
      for (int i = 1; i <= n; ++i) {
        if (right_descent(rs, t.mats[idx], i)) continue;  // goes down
        IntMat m = t.mats[idx].mul(gens[i]);
        IVec key = m.apply(rs.key_base);
        if (t.index_.count(key)) continue;
        t.index_[key] = -1;  // reserve
        found.push_back({key, {m, gens[i].mul(invs[idx])}});
      }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> next;
    for (auto& f : found) {
      int idx = static_cast<int>(t.mats.size());
      t.index_[f.first] = idx;
      t.mats.push_back(f.second.first);
      invs.push_back(f.second.second);
      t.lengths.push_back(depth);
      next.push_back(idx);
    }
    layer = std::move(next);
  }

  t.inv_index.resize(t.size());
  for (size_t idx = 0; idx < t.size(); ++idx) {
    int inv = t.index_of_key(invs[idx].apply(rs.key_base));
    if (inv < 0) throw std::logic_error("inverse missing from enumeration");
    t.inv_index[idx] = inv;
  }
  t.rmult.assign(t.size(), std::vector<int>(n + 1, -1));
  for (size_t idx = 0; idx < t.size(); ++idx)
    for (int i = 1; i <= n; ++i) {
      IntMat m = t.mats[idx].mul(gens[i]);
      t.rmult[idx][i] = t.index_of_key(m.apply(rs.key_base));
    }
  return t;
}

TwistedClass twisted_conjugacy_class(const RootSystem& rs,
                                     const WeylElement& w,
                                     const DiagramAutomorphism& sigma0,
                                     const TwistedClassOptions& opts) {
  int n = rs.rank();
  std::vector<IntMat> gens(n + 1);
  for (int i = 1; i <= n; ++i) gens[i] = simple_reflection(rs, i).m;

  TwistedClass out;
  std::unordered_map<IVec, char, IVecHash> seen;
  std::deque<IntMat> frontier;

  std::vector<IntMat> min_mats;
  auto visit = [&](const IntMat& m) {
    IVec key = m.apply(rs.key_base);
    if (seen.count(key)) return;
    seen[key] = 1;
    if (seen.size() > opts.cap)
      throw std::runtime_error(
          "twisted class in " + rs.label() + " exceeds the cap " +
          std::to_string(opts.cap) + "; raise the class cap");
    frontier.push_back(m);
    if (opts.collect_members) out.members.push_back(from_mat(rs, m));
    int l = mat_length(rs, m);
    if (out.size == 0 || l < out.min_length) {
      out.min_length = l;
      min_mats.clear();
    }
    if (l == out.min_length) min_mats.push_back(m);
    int lr = int_rank_minus_identity(m);
    if (out.size == 0 || lr < out.min_reflection_length)
      out.min_reflection_length = lr;
    ++out.size;
  };

  visit(w.m);
  while (!frontier.empty()) {
    IntMat m = frontier.front();
    frontier.pop_front();
    for (int i = 1; i <= n; ++i)
      visit(gens[i].mul(m).mul(gens[sigma0.perm[i]]));
  }

  std::sort(min_mats.begin(), min_mats.end(),
            [&](const IntMat& a, const IntMat& b) {
              return a.apply(rs.key_base) < b.apply(rs.key_base);
            });
  for (const auto& m : min_mats) out.min_length_members.push_back(from_mat(rs, m));
  if (opts.collect_members)
    std::sort(out.members.begin(), out.members.end(),
              [&](const WeylElement& a, const WeylElement& b) {
                return canonical_key(rs, a) < canonical_key(rs, b);
              });
  return out;
}

std::vector<int> reflection_length_bfs(const WeylGroupTable& table) {
  const RootSystem& rs = *table.rs;
  std::vector<int> refl_ids;
  for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
    int idx = table.index_of(root_reflection(rs, static_cast<int>(a)));
    refl_ids.push_back(idx);
  }
  std::vector<int> dist(table.size(), -1);
  dist[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    for (int r : refl_ids) {
      IntMat m = table.mats[idx].mul(table.mats[r]);
      int nxt = table.index_of_key(m.apply(rs.key_base));
      if (dist[nxt] < 0) {
        dist[nxt] = dist[idx] + 1;
        queue.push_back(nxt);
      }
    }
  }
  return dist;
}

}  // namespace qweyl
