#pragma once

// Exact root-system data for the irreducible finite types in Bourbaki
// labeling: Cartan matrices, positive (co)roots generated by reflection
// closure, fundamental coweights as exact rationals, diagram automorphisms,
// and the affine diagram with orbit counting.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qweyl/numeric.hpp"

namespace qweyl {

struct CartanDatum {
  char type_letter = 'A';
  int rank = 0;
  // cartan[i][j] = <alpha_i, alpha_j^vee>, live block [1..n] x [1..n]
  std::vector<IVec> cartan;
};

class RootSystem {
 public:
  CartanDatum datum;

  // positive roots in simple-root coordinates and their coroots in
  // simple-coroot coordinates, paired index-by-index
  std::vector<IVec> pos_roots;
  std::vector<IVec> pos_coroots;
  // pairing_row[a][j] = <alpha(a), alpha_j^vee>; row of the root in the
  // fundamental-weight basis, so <alpha(a), lambda> = pairing_row[a] . lambda
  std::vector<IVec> pairing_row;

  IVec two_rho;                    // sum of positive roots, root coordinates
  std::vector<QVec> fund_coweight; // [i] = varpi_i^vee in coroot coords
  int theta_id = -1;               // highest root index
  IVec key_base;                   // scaled rho^vee: integer regular dominant

  std::vector<IVec> affine_cartan; // [0..n] x [0..n]

  int rank() const { return datum.rank; }
  char type() const { return datum.type_letter; }
  size_t num_pos_roots() const { return pos_roots.size(); }

  int coroot_index(const IVec& coroot) const;  // -1 if not a positive coroot
  int root_index(const IVec& root) const;

  // <alpha(a), lambda> for a positive root id and coweight in coroot coords
  Rat pairing(int root_id, const QVec& lambda) const;
  Int pairing(int root_id, const IVec& lambda) const;
  // <alpha_i, lambda> for a simple root
  Rat simple_pairing(int i, const QVec& lambda) const;
  // <2rho, lambda>
  Rat two_rho_pairing(const QVec& lambda) const;

  Rat depth(const QVec& lambda) const;
  bool is_dominant(const QVec& lambda) const;
  bool is_regular_dominant(const QVec& lambda) const;
  // dominance order: nu <= nu2 iff all coroot coordinates of nu2-nu are >= 0
  bool dominance_leq(const QVec& nu, const QVec& nu2) const;

  std::string label() const;  // e.g. "A3"

 private:
  std::unordered_map<IVec, int, IVecHash> coroot_ids_;
  std::unordered_map<IVec, int, IVecHash> root_ids_;
  friend RootSystem build_root_system(char, int);
};

// Valid: A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), E6, E7, E8, F4, G2.
// Throws std::invalid_argument otherwise.
RootSystem build_root_system(char type_letter, int rank);

QVec fundamental_coweight(const RootSystem& rs, int i);

// indices i with <theta, varpi_i^vee> = 1; empty for E8, F4, G2
std::vector<int> minuscule_coweight_indices(const RootSystem& rs);

// Permutation of the finite diagram {1..n} (perm[0] = 0) or of the affine
// diagram {0..n}. Must preserve the corresponding Cartan matrix.
struct DiagramAutomorphism {
  std::vector<int> perm;  // size n+1
  bool affine = false;

  int operator()(int i) const { return perm[i]; }
  int order() const;
  bool is_identity() const;

  static DiagramAutomorphism identity(int rank);
  // code 1 = identity; 2 = the nontrivial involution (A_n n>=2, D_n, E6);
  // 3 = triality 1 -> 3 -> 4 -> 1 on D_4
  static DiagramAutomorphism finite_by_code(const RootSystem& rs, int code);
  static DiagramAutomorphism finite(const RootSystem& rs,
                                    const std::vector<int>& perm);
  static DiagramAutomorphism affine_auto(const RootSystem& rs,
                                         const std::vector<int>& perm);
};

// number of orbits of the cyclic group generated by an affine-diagram
// automorphism on {0..n}
int affine_orbit_count(const RootSystem& rs, const DiagramAutomorphism& g);
std::vector<std::vector<int>> affine_orbits(const RootSystem& rs,
                                            const DiagramAutomorphism& g);

// orbits of a finite diagram automorphism on {1..n}
std::vector<std::vector<int>> finite_orbits(const RootSystem& rs,
                                            const DiagramAutomorphism& g);

// sigma0 acting on a coweight in coroot coordinates
QVec sigma0_apply(const DiagramAutomorphism& sigma0, const QVec& lambda);

// A sigma0-invariant dominant rational coweight with provenance flags.
struct NewtonPoint {
  QVec nu;
  bool dominant = false;
  bool sigma0_invariant = false;
  bool regular = false;
};

std::string root_system_json(const RootSystem& rs);

}  // namespace qweyl
