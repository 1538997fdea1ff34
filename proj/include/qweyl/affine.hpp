#pragma once

// Extended affine Weyl group of the adjoint group: elements t^lambda w with
// lambda in the coweight lattice, Iwahori-Matsumoto length, length-zero
// elements tau_i, Demazure products (rule-based fold and the depth >= 2
// closed form), sigma-twisted Demazure powers and generic Newton points.

#include "qweyl/qbg.hpp"

namespace qweyl {

struct ExtendedAffineElement {
  QVec lambda;    // coroot coordinates, lies in the coweight lattice
  WeylElement w;  // finite part

  bool operator==(const ExtendedAffineElement& o) const {
    return lambda == o.lambda && w == o.w;
  }
  bool operator!=(const ExtendedAffineElement& o) const {
    return !(*this == o);
  }
};

ExtendedAffineElement affine_identity(const RootSystem& rs);
ExtendedAffineElement translation(const RootSystem& rs, const QVec& lambda);
ExtendedAffineElement from_finite(const RootSystem& rs, const WeylElement& w);
ExtendedAffineElement mul(const ExtendedAffineElement& a,
                          const ExtendedAffineElement& b);
ExtendedAffineElement inverse(const ExtendedAffineElement& a);

// lambda pairs integrally with every simple root
bool in_coweight_lattice(const RootSystem& rs, const QVec& lambda);

// Iwahori-Matsumoto: sum over alpha > 0 of |<alpha,lambda>| when
// w^{-1}(alpha) > 0 and |<alpha,lambda> - 1| otherwise.
// Throws std::invalid_argument if lambda is not in the coweight lattice.
Int im_length(const RootSystem& rs, const ExtendedAffineElement& x);

// tau_i = t^{varpi_i^vee} w_{i,0} w_0; requires varpi_i^vee minuscule
ExtendedAffineElement tau_element(const RootSystem& rs, int i);

// Omega-component: 0 for W_aff, else the tau index of the length-zero part
int omega_index(const RootSystem& rs, const ExtendedAffineElement& x);

// x = omega * s_{word[0]} * ... * s_{word[k-1]}, word over affine nodes 0..n
struct AffineWord {
  ExtendedAffineElement omega;
  std::vector<int> word;
};
AffineWord affine_reduced_word(const RootSystem& rs,
                               const ExtendedAffineElement& x);

ExtendedAffineElement affine_simple_left(const RootSystem& rs, int j,
                                         const ExtendedAffineElement& x);
ExtendedAffineElement affine_simple_right(const RootSystem& rs,
                                          const ExtendedAffineElement& x,
                                          int j);

// rule-based fold: a = omega s_{i_1}...s_{i_k} reduced, then
// a * b = omega (s_{i_1} * ( ... (s_{i_k} * b)))
ExtendedAffineElement demazure_product(const RootSystem& rs,
                                       const ExtendedAffineElement& a,
                                       const ExtendedAffineElement& b);

// closed form for x1 t^{mu1} y1 * x2 t^{mu2} y2 with depth(mu_i) >= 2:
// x1 t^{mu1 + mu2 - wt(y1^{-1}, x2)} y2
ExtendedAffineElement demazure_closed_form(
    const RootSystem& rs, const WeylElement& x1, const QVec& mu1,
    const WeylElement& y1, const WeylElement& x2, const QVec& mu2,
    const WeylElement& y2);

// sigma = Ad(tau sigma0), a length-preserving automorphism of the extended
// affine Weyl group; tau trivial encodes the quasi-split case.
struct FrobeniusDatum {
  const RootSystem* rs = nullptr;
  int tau_index = 0;  // 0 = trivial tau
  DiagramAutomorphism sigma0;

  WeylElement zeta;             // finite part of tau (identity if trivial)
  ExtendedAffineElement tau;
  int o_tr = 1;                 // order of sigma on the coweight lattice
  int o_sigma = 1;              // order of Ad(tau sigma0) on the whole group
  int period_ratio = 1;         // o_sigma / o_tr
  DiagramAutomorphism affine_perm_sigma;   // action of Ad(tau sigma0) on S~
  DiagramAutomorphism affine_perm_sigma0;  // action of sigma0 on S~

  bool quasi_split() const { return tau_index == 0; }
  std::string label() const;

  ExtendedAffineElement sigma(const ExtendedAffineElement& x) const;
  WeylElement sigma0_on(const WeylElement& w) const;
  QVec sigma0_on(const QVec& lambda) const;
  // the map x -> zeta . sigma0(x) on W, i.e. "(zeta sigma0)" applied once
  WeylElement zeta_sigma0(const WeylElement& x) const;
};

FrobeniusDatum make_frobenius(const RootSystem& rs, int tau_index,
                              const DiagramAutomorphism& sigma0);

// w * sigma(w) * sigma^2(w) * ... * sigma^{n-1}(w)
ExtendedAffineElement twisted_demazure_power(const RootSystem& rs,
                                             const FrobeniusDatum& datum,
                                             const ExtendedAffineElement& x,
                                             int n);

// Newton point of the generic sigma-conjugacy class of the Iwahori double
// coset of x, from the stabilized linear growth of twisted Demazure powers.
// max_periods caps the iteration; non-detection raises std::runtime_error.
NewtonPoint generic_newton_point(const RootSystem& rs,
                                 const FrobeniusDatum& datum,
                                 const ExtendedAffineElement& x,
                                 int max_periods = 64);

std::string affine_element_json(const RootSystem& rs,
                                const ExtendedAffineElement& x);

}  // namespace qweyl
