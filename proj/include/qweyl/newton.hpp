#pragma once

// Top-level computations: the sigma0-orbit average mu_diamond, the defect
// Xi_sigma = mu_diamond - nu(b_max), the three routes to the dimension of
// X(mu, b_max), and the minimal-length analysis of the twisted class of
// zeta, including its partial-Coxeter J-sets.

#include "qweyl/affine.hpp"

namespace qweyl {

// average of the sigma0-orbit of a dominant mu
QVec mu_diamond(const RootSystem& rs, const DiagramAutomorphism& sigma0,
                const QVec& mu);

// (1/o_tr) sum of wt((zeta sigma0)^j x, (zeta sigma0)^{j+1} x)
QVec av_sigma(const RootSystem& rs, const FrobeniusDatum& datum,
              const WeylElement& x);

// Coordinate-wise minimal xi with <varpi_i^vee + xi, varpi_O> integral and
// <xi, varpi_O> >= 0 on every sigma0-orbit O, xi constant on orbits.
// Quasi-split datum yields 0.
QVec xi_sigma(const RootSystem& rs, const FrobeniusDatum& datum);

// mu_diamond - Xi_sigma for dominant mu of depth >= 2; the regular flag
// records whether the proven hypothesis of the closed form holds.
// min_depth = 3 selects the strict regime (the intermediate hypothesis of
// the quasi-split reduction) for diagnostic comparison.
NewtonPoint nu_b_max(const RootSystem& rs, const FrobeniusDatum& datum,
                     const QVec& mu, int min_depth = 2);

// d(zeta^{-1} x, sigma0(x)); the mu-independent dimension of a single
// translation cell in the depth >= 2 regime
int dim_translation(const RootSystem& rs, const FrobeniusDatum& datum,
                    const WeylElement& x);

struct DimOptions {
  size_t qbg_cap = WeylGroupTable::kDefaultCap;
  size_t class_cap = 200000;
  bool allow_large = false;  // lifts the class cap to cover E7
};

struct DimensionReport {
  std::string datum;
  char type = 'A';
  int rank = 0;
  int tau = 0;
  int sigma0_code_order = 1;
  std::optional<int> value_qbg;
  std::optional<int> value_class;
  std::optional<int> value_rank;
  bool class_lengths_agree = true;  // min ell == min ell_R over the class
  bool class_minimal_coxeter = true;  // minimal members are partial Coxeter
  std::vector<std::vector<int>> qbg_witnesses;    // minimizing x, as words
  std::vector<std::vector<int>> class_witnesses;  // min-length members
  std::vector<std::vector<int>> j_sets;
  QVec xi;
  std::optional<NewtonPoint> nu_bmax;

  bool values_agree() const;
};

enum class DimStrategy { qbg, class_route, rank, all };

DimensionReport dim_x_mu_bmax(const RootSystem& rs,
                              const FrobeniusDatum& datum,
                              DimStrategy strategy,
                              const DimOptions& opts = {});

std::string report_json(const RootSystem& rs, const DimensionReport& r);

struct KeyLemmaReport {
  size_t class_size = 0;
  int min_length = 0;
  int min_reflection_length = 0;
  bool identity_in_class = false;
  bool all_minimal_are_coxeter = false;
  std::vector<std::vector<int>> j_sets;            // sorted supports
  std::vector<std::vector<int>> minimal_words;
  int rank_difference = 0;  // |sigma0 \ S~| - |sigma \ S~|
};

KeyLemmaReport verify_key_lemma(const RootSystem& rs,
                                const FrobeniusDatum& datum,
                                size_t class_cap = 200000);

// Specialized membership test for nu in B(G, mu): sigma0-invariant dominant
// with the orbit congruence <varpi_i^vee + (mu_diamond - nu), varpi_O> in Z
// and positivity <mu_diamond - nu, varpi_O> >= 0 on orbits where nu is
// nonzero against the roots. Only the Ad(tau_i) base-point normalization is
// representable here; there is no general sigma(0) input.
bool b_g_mu_membership(const RootSystem& rs, const FrobeniusDatum& datum,
                       const QVec& mu, const QVec& nu);

// one TSV row per datum: type, rank, tau, sigma0, xi coordinates
std::string xi_table_tsv_row(const RootSystem& rs, const FrobeniusDatum& datum);

std::string coweight_pretty(const RootSystem& rs, const QVec& v);

}  // namespace qweyl
