#include "qweyl/affine.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace qweyl {

ExtendedAffineElement affine_identity(const RootSystem& rs) {
  return {qvec_zero(rs.rank()), weyl_identity(rs)};
}

ExtendedAffineElement translation(const RootSystem& rs, const QVec& lambda) {
  return {lambda, weyl_identity(rs)};
}

ExtendedAffineElement from_finite(const RootSystem& rs, const WeylElement& w) {
  return {qvec_zero(rs.rank()), w};
}

ExtendedAffineElement mul(const ExtendedAffineElement& a,
                          const ExtendedAffineElement& b) {
  return {qvec_add(a.lambda, a.w.m.apply(b.lambda)), mul(a.w, b.w)};
}

ExtendedAffineElement inverse(const ExtendedAffineElement& a) {
  QVec l = a.w.minv.apply(a.lambda);
  for (auto& x : l) x = -x;
  return {l, a.w.inverse()};
}

bool in_coweight_lattice(const RootSystem& rs, const QVec& lambda) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (denominator(rs.simple_pairing(i, lambda)) != 1) return false;
  return true;
}

Int im_length(const RootSystem& rs, const ExtendedAffineElement& x) {
  if (!in_coweight_lattice(rs, x.lambda))
    throw std::invalid_argument(
        "translation part is not in the coweight lattice");
  WeylElement winv = x.w.inverse();
  Int total = 0;
  for (size_t a = 0; a < rs.num_pos_roots(); ++a) {
    Rat p = rs.pairing(static_cast<int>(a), x.lambda);
    Int v = numerator(p).convert_to<Int>();
    if (sends_root_negative(rs, winv, static_cast<int>(a))) v -= 1;
    total += v < 0 ? -v : v;
  }
  return total;
}

namespace {

// x(affine simple root j) written as the pair (finite root, delta coeff):
// for j >= 1 it is w(alpha_j) - <w(alpha_j), lambda> delta, for j = 0 it is
// -w(theta) + (1 + <w(theta), lambda>) delta. Descents read off its sign.

// ell(x s_j) < ell(x)
bool right_descends(const RootSystem& rs, const ExtendedAffineElement& x,
                    int j) {
  bool neg;
  int root = j == 0 ? rs.theta_id : j - 1;  // simple pairs seed ids 0..n-1
  int aid = root_image(rs, x.w, root, &neg);
  Rat p = rs.pairing(aid, x.lambda);
  if (neg) p = -p;
  if (j == 0) {
    Rat c = 1 + p;
    return c < 0 || (c == 0 && !neg);
  }
  return p > 0 || (p == 0 && neg);
}

// ell(s_j x) > ell(x)
bool left_ascends(const RootSystem& rs, const ExtendedAffineElement& x,
                  int j) {
  if (j == 0) {
    Rat c = 1 - rs.pairing(rs.theta_id, x.lambda);
    if (c != 0) return c > 0;
    return sends_root_negative(rs, x.w.inverse(), rs.theta_id);
  }
  Rat p = rs.simple_pairing(j, x.lambda);
  if (p != 0) return p > 0;
  return !sends_root_negative(rs, x.w.inverse(), j - 1);
}

}  // namespace

ExtendedAffineElement tau_element(const RootSystem& rs, int i) {
  auto minuscule = minuscule_coweight_indices(rs);
  if (std::find(minuscule.begin(), minuscule.end(), i) == minuscule.end())
    throw std::invalid_argument("varpi_" + std::to_string(i) +
                                "^vee is not minuscule in " + rs.label());
  ExtendedAffineElement tau{fundamental_coweight(rs, i), zeta(rs, i)};
  if (im_length(rs, tau) != 0)
    throw std::logic_error("tau element does not have length zero");
  return tau;
}

int omega_index(const RootSystem& rs, const ExtendedAffineElement& x) {
  if (x == affine_identity(rs)) return 0;
  for (int i : minuscule_coweight_indices(rs))
    if (x == tau_element(rs, i)) return i;
  throw std::invalid_argument("not a length-zero element");
}

ExtendedAffineElement affine_simple_left(const RootSystem& rs, int j,
                                         const ExtendedAffineElement& x) {
  if (j == 0) {
    // s_0 = t^{theta^vee} s_theta
    WeylElement st = root_reflection(rs, rs.theta_id);
    QVec l = st.m.apply(x.lambda);
    for (int k = 1; k <= rs.rank(); ++k) l[k] += rs.pos_coroots[rs.theta_id][k];
    return {l, mul(st, x.w)};
  }
  WeylElement s = simple_reflection(rs, j);
  return {s.m.apply(x.lambda), mul(s, x.w)};
}

ExtendedAffineElement affine_simple_right(const RootSystem& rs,
                                          const ExtendedAffineElement& x,
                                          int j) {
  if (j == 0) {
    WeylElement st = root_reflection(rs, rs.theta_id);
    QVec th = x.w.m.apply(to_qvec(rs.pos_coroots[rs.theta_id]));
    return {qvec_add(x.lambda, th), mul(x.w, st)};
  }
  return {x.lambda, mul(x.w, simple_reflection(rs, j))};
}

AffineWord affine_reduced_word(const RootSystem& rs,
                               const ExtendedAffineElement& x) {
  AffineWord out;
  ExtendedAffineElement cur = x;
  std::vector<int> strip;
  for (;;) {
    int pick = -1;
    for (int j = 0; j <= rs.rank(); ++j)
      if (right_descends(rs, cur, j)) { pick = j; break; }
    if (pick < 0) break;
    strip.push_back(pick);
    cur = affine_simple_right(rs, cur, pick);
  }
  if (im_length(rs, cur) != 0)
    throw std::logic_error("descent stripping did not reach length zero");
  std::reverse(strip.begin(), strip.end());
  out.omega = std::move(cur);
  out.word = std::move(strip);
  return out;
}

namespace {

ExtendedAffineElement demazure_fold(const RootSystem& rs,
                                    const AffineWord& a,
                                    const ExtendedAffineElement& b) {
  ExtendedAffineElement acc = b;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
    if (left_ascends(rs, acc, *it)) acc = affine_simple_left(rs, *it, acc);
  return mul(a.omega, acc);
}

}  // namespace

ExtendedAffineElement demazure_product(const RootSystem& rs,
                                       const ExtendedAffineElement& a,
                                       const ExtendedAffineElement& b) {
  return demazure_fold(rs, affine_reduced_word(rs, a), b);
}

ExtendedAffineElement demazure_closed_form(
    const RootSystem& rs, const WeylElement& x1, const QVec& mu1,
    const WeylElement& y1, const WeylElement& x2, const QVec& mu2,
    const WeylElement& y2) {
  if (rs.depth(mu1) < 2 || rs.depth(mu2) < 2)
    throw std::invalid_argument(
        "closed form requires both cocharacters to have depth >= 2");
  IVec wt = qbg_weight(rs, y1.inverse(), x2);
  QVec expo = qvec_sub(qvec_add(mu1, mu2), to_qvec(wt));
  if (!rs.is_dominant(expo))
    throw std::logic_error("closed-form exponent failed to be dominant");
  return mul(from_finite(rs, x1),
             mul(translation(rs, expo), from_finite(rs, y2)));
}

std::string FrobeniusDatum::label() const {
  std::string s;
  if (!sigma0.is_identity()) s += std::to_string(sigma0.order());
  s += rs->label();
  if (tau_index > 0) s += " tau" + std::to_string(tau_index);
  return s;
}

WeylElement FrobeniusDatum::sigma0_on(const WeylElement& w) const {
  return apply_automorphism(*rs, sigma0, w);
}

QVec FrobeniusDatum::sigma0_on(const QVec& lambda) const {
  return sigma0_apply(sigma0, lambda);
}

WeylElement FrobeniusDatum::zeta_sigma0(const WeylElement& x) const {
  return mul(zeta, sigma0_on(x));
}

ExtendedAffineElement FrobeniusDatum::sigma(
    const ExtendedAffineElement& x) const {
  ExtendedAffineElement y{sigma0_on(x.lambda), sigma0_on(x.w)};
  if (tau_index == 0) return y;
  return mul(tau, mul(y, inverse(tau)));
}

namespace {

std::vector<int> affine_permutation(const RootSystem& rs,
                                    const FrobeniusDatum& d) {
  std::vector<ExtendedAffineElement> simples;
  for (int j = 0; j <= rs.rank(); ++j)
    simples.push_back(affine_simple_left(rs, j, affine_identity(rs)));
  std::vector<int> perm(rs.rank() + 1, -1);
  for (int j = 0; j <= rs.rank(); ++j) {
    ExtendedAffineElement img = d.sigma(simples[j]);
    int k = 0;
    while (k <= rs.rank() && !(img == simples[k])) ++k;
    if (k > rs.rank())
      throw std::logic_error("sigma does not permute the affine reflections");
    perm[j] = k;
  }
  return perm;
}

}  // namespace

FrobeniusDatum make_frobenius(const RootSystem& rs, int tau_index,
                              const DiagramAutomorphism& sigma0) {
  FrobeniusDatum d;
  d.rs = &rs;
  d.tau_index = tau_index;
  d.sigma0 = sigma0;
  if (tau_index == 0) {
    d.zeta = weyl_identity(rs);
    d.tau = affine_identity(rs);
  } else {
    d.tau = tau_element(rs, tau_index);  // validates minuscule
    d.zeta = d.tau.w;
  }

  // order of sigma on the coweight lattice: order of the map zeta . sigma0
  {
    IntMat p;
    p.n = rs.rank();
    for (int j = 1; j <= rs.rank(); ++j) p.at(sigma0.perm[j], j) = 1;
    IntMat l = d.zeta.m.mul(p);
    IntMat acc = l;
    IntMat id = IntMat::identity(rs.rank());
    int ord = 1;
    while (acc != id) {
      acc = acc.mul(l);
      ++ord;
      if (ord > 10000) throw std::logic_error("runaway lattice order");
    }
    d.o_tr = ord;
  }

  // order of Ad(tau sigma0): smallest j with sigma0^j = 1 and the twisted
  // power tau sigma0(tau) ... sigma0^{j-1}(tau) = 1
  {
    int s0_ord = sigma0.order();
    ExtendedAffineElement acc = d.tau;
    ExtendedAffineElement cur = d.tau;
    int j = 1;
    for (;;) {
      if (j % s0_ord == 0 && acc == affine_identity(rs)) break;
      cur = ExtendedAffineElement{sigma0_apply(sigma0, cur.lambda),
                                  apply_automorphism(rs, sigma0, cur.w)};
      acc = mul(acc, cur);
      ++j;
      if (j > 10000) throw std::logic_error("runaway automorphism order");
    }
    d.o_sigma = j;
  }
  if (d.o_sigma % d.o_tr != 0)
    throw std::logic_error("o_tr does not divide o_sigma");
  d.period_ratio = d.o_sigma / d.o_tr;

  d.affine_perm_sigma =
      DiagramAutomorphism::affine_auto(rs, affine_permutation(rs, d));
  d.affine_perm_sigma0 = DiagramAutomorphism::affine_auto(rs, sigma0.perm);
  return d;
}

ExtendedAffineElement twisted_demazure_power(const RootSystem& rs,
                                             const FrobeniusDatum& datum,
                                             const ExtendedAffineElement& x,
                                             int n) {
  if (n < 1) throw std::invalid_argument("power must be >= 1");
  // x^{sigma,k+1} = x * sigma(x^{sigma,k})
  AffineWord decomp = affine_reduced_word(rs, x);
  ExtendedAffineElement acc = x;
  for (int k = 1; k < n; ++k)
    acc = demazure_fold(rs, decomp, datum.sigma(acc));
  return acc;
}

namespace {

QVec dominant_representative(const RootSystem& rs, QVec v) {
  for (;;) {
    int i = 0;
    for (int k = 1; k <= rs.rank(); ++k)
      if (rs.simple_pairing(k, v) < 0) { i = k; break; }
    if (i == 0) return v;
    v = simple_reflection(rs, i).m.apply(v);
  }
}

}  // namespace

NewtonPoint generic_newton_point(const RootSystem& rs,
                                 const FrobeniusDatum& datum,
                                 const ExtendedAffineElement& x,
                                 int max_periods) {
  const int o = datum.o_sigma;
  AffineWord decomp = affine_reduced_word(rs, x);
  ExtendedAffineElement p = x;  // tracks x^{sigma, k*o + 1}
  Int len_cur = im_length(rs, p);
  ExtendedAffineElement sample_cur = p;
  Int delta_prev = -1;
  for (int k = 1; k <= max_periods; ++k) {
    for (int step = 0; step < o; ++step)
      p = demazure_fold(rs, decomp, datum.sigma(p));
    Int len_next = im_length(rs, p);
    Int delta = len_next - len_cur;
    ExtendedAffineElement sample_next = p;
    if (delta == delta_prev && sample_next.w == sample_cur.w) {
      QVec gamma = qvec_scale(
          Rat(1, o), qvec_sub(sample_next.lambda, sample_cur.lambda));
      QVec nu = dominant_representative(rs, gamma);
      int d0 = datum.sigma0.order();
      QVec sum = nu, orb = nu;
      for (int j = 1; j < d0; ++j) {
        orb = sigma0_apply(datum.sigma0, orb);
        sum = qvec_add(sum, orb);
      }
      nu = qvec_scale(Rat(1, d0), sum);
      if (rs.two_rho_pairing(nu) != Rat(delta, o))
        throw std::runtime_error(
            "newton point extraction mismatch against length growth");
      NewtonPoint np;
      np.nu = nu;
      np.dominant = rs.is_dominant(nu);
      np.sigma0_invariant = sigma0_apply(datum.sigma0, nu) == nu;
      np.regular = rs.is_regular_dominant(nu);
      return np;
    }
    delta_prev = delta;
    len_cur = len_next;
    sample_cur = std::move(sample_next);
  }
  throw std::runtime_error("twisted power growth did not stabilize within " +
                           std::to_string(max_periods) + " periods");
}

std::string affine_element_json(const RootSystem& rs,
                                const ExtendedAffineElement& x) {
  nlohmann::json j;
  auto lam = nlohmann::json::array();
  for (int k = 1; k <= rs.rank(); ++k)
    lam.push_back({numerator(x.lambda[k]).convert_to<Int>(),
                   denominator(x.lambda[k]).convert_to<Int>()});
  j["lambda"] = lam;
  j["word"] = reduced_word(rs, x.w);
  AffineWord decomp = affine_reduced_word(rs, x);
  j["omega"] = omega_index(rs, decomp.omega);
  return j.dump();
}

}  // namespace qweyl
