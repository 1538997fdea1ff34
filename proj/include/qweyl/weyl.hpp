#pragma once

// Finite Weyl group machinery: elements as exact integer matrices on the
// coroot lattice, length and reflection length, longest elements, group
// enumeration, and sigma0-twisted conjugacy classes computed by closure
// (never requiring full group enumeration).

#include <optional>
#include <unordered_map>
#include <vector>

#include "qweyl/rootdata.hpp"

namespace qweyl {

// w acts on the coroot lattice; m is the action matrix (column j = image of
// alpha_j^vee), minv the matrix of w^{-1}. The pair is kept in sync by all
// operations, which makes inversion free.
struct WeylElement {
  IntMat m, minv;

  WeylElement inverse() const { return {minv, m}; }
  bool operator==(const WeylElement& o) const { return m == o.m; }
  bool operator!=(const WeylElement& o) const { return m != o.m; }
};

WeylElement weyl_identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
// s_alpha for a positive root id
WeylElement root_reflection(const RootSystem& rs, int root_id);
WeylElement mul(const WeylElement& a, const WeylElement& b);
WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

// image of the scaled rho^vee; faithful on the group, lexicographic order
// on keys is the canonical element order
IVec canonical_key(const RootSystem& rs, const WeylElement& w);

QVec coweight_action(const WeylElement& w, const QVec& lambda);

// sign of w(alpha) for the positive root with this id
bool sends_root_negative(const RootSystem& rs, const WeylElement& w,
                         int root_id);
// id of the root +-w(alpha(root_id)); negative flag returned separately
int root_image(const RootSystem& rs, const WeylElement& w, int root_id,
               bool* negative);

int length(const RootSystem& rs, const WeylElement& w);
bool is_identity(const WeylElement& w);

// greedy reduced word (smallest right descent first while stripping)
std::vector<int> reduced_word(const RootSystem& rs, const WeylElement& w);

WeylElement longest_element(const RootSystem& rs);
WeylElement longest_parabolic(const RootSystem& rs, const std::vector<int>& J);

// zeta_i = w_{i,0} w_0; requires varpi_i^vee minuscule
WeylElement zeta(const RootSystem& rs, int i);

// codimension of the fixed space = rank(m - 1) over Q
int reflection_length(const RootSystem& rs, const WeylElement& w);

// true iff w is a product of the simple reflections indexed by J, each
// appearing exactly once (in some order)
bool is_coxeter_of(const RootSystem& rs, const WeylElement& w,
                   const std::vector<int>& J);

// index-permutation action of a finite diagram automorphism
WeylElement apply_automorphism(const RootSystem& rs,
                               const DiagramAutomorphism& sigma0,
                               const WeylElement& w);

// Full enumeration of W, breadth-first from the identity. Elements are
// indexed in BFS order with each layer sorted by canonical key, so indices
// are deterministic.
class WeylGroupTable {
 public:
  static constexpr size_t kDefaultCap = 51840;  // covers E6

  const RootSystem* rs = nullptr;
  std::vector<IntMat> mats;
  std::vector<int> lengths;
  std::vector<int> inv_index;
  std::vector<std::vector<int>> rmult;  // [idx][i] = index of w * s_i

  size_t size() const { return mats.size(); }
  WeylElement element(size_t idx) const {
    return {mats[idx], mats[inv_index[idx]]};
  }
  int index_of(const WeylElement& w) const;
  int index_of_key(const IVec& key) const;

 private:
  std::unordered_map<IVec, int, IVecHash> index_;
  friend WeylGroupTable enumerate_group(const RootSystem& rs, size_t cap);
};

// Throws std::runtime_error naming the required cap when |W| exceeds it.
WeylGroupTable enumerate_group(const RootSystem& rs,
                               size_t cap = WeylGroupTable::kDefaultCap);

size_t weyl_order(const RootSystem& rs);  // closed-form order of W

// Orbit of w under u . w . sigma0(u)^{-1} for u in W, computed by closure
// over simple reflections. min-length members are sorted by canonical key.
//
// Convention for type A twists: sigma0 is the diagram flip i -> n+1-i,
// which equals conjugation by w_0 on W. Under that dictionary
// O_{sigma0}(xi) * w_0 = O_id(xi w_0), so minimal-length members of
// O_{sigma0}(w_{i,0} w_0) are the maximal-length members of O_id(w_{i,0})
// multiplied by w_0 on the right.
struct TwistedClass {
  size_t size = 0;
  int min_length = 0;
  int min_reflection_length = 0;
  std::vector<WeylElement> min_length_members;
  std::vector<WeylElement> members;  // populated only on request
};

struct TwistedClassOptions {
  size_t cap = 200000;
  bool collect_members = false;
};

TwistedClass twisted_conjugacy_class(const RootSystem& rs,
                                     const WeylElement& w,
                                     const DiagramAutomorphism& sigma0,
                                     const TwistedClassOptions& opts = {});

// Test-support oracle: reflection length of every table element by BFS over
// products of (all) reflections. Index-aligned with the table.
std::vector<int> reflection_length_bfs(const WeylGroupTable& table);

}  // namespace qweyl
