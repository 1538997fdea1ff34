#include "qweyl/newton.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qweyl {

QVec mu_diamond(const RootSystem& rs, const DiagramAutomorphism& sigma0,
                const QVec& mu) {
  if (!rs.is_dominant(mu))
    throw std::invalid_argument("mu_diamond requires a dominant coweight");
  int d = sigma0.order();
  QVec sum = mu, orb = mu;
  for (int j = 1; j < d; ++j) {
    orb = sigma0_apply(sigma0, orb);
    sum = qvec_add(sum, orb);
  }
  return qvec_scale(Rat(1, d), sum);
}

QVec av_sigma(const RootSystem& rs, const FrobeniusDatum& datum,
              const WeylElement& x) {
  QVec sum = qvec_zero(rs.rank());
  WeylElement cur = x;
  for (int j = 0; j < datum.o_tr; ++j) {
    WeylElement next = datum.zeta_sigma0(cur);
    sum = qvec_add(sum, to_qvec(qbg_weight(rs, cur, next)));
    cur = next;
  }
  return qvec_scale(Rat(1, datum.o_tr), sum);
}

QVec xi_sigma(const RootSystem& rs, const FrobeniusDatum& datum) {
  QVec xi = qvec_zero(rs.rank());
  if (datum.quasi_split()) return xi;
  const QVec& cw = rs.fund_coweight[datum.tau_index];
  for (const auto& orbit : finite_orbits(rs, datum.sigma0)) {
    Rat s = 0;
    for (int j : orbit) s += cw[j];
    Rat t = rat_frac(-s);  // minimal nonnegative with s + t integral
    Rat coeff = t / Rat(static_cast<Int>(orbit.size()));
    for (int j : orbit) xi[j] = coeff;
  }
  // minimality guard: on each orbit the next-smaller congruence solution is
  // negative, i.e. the chosen coefficient is below 1/|orbit|
  for (const auto& orbit : finite_orbits(rs, datum.sigma0))
    if (xi[orbit[0]] >= Rat(1, static_cast<Int>(orbit.size())))
      throw std::logic_error("xi solver produced a non-minimal coordinate");
  return xi;
}

NewtonPoint nu_b_max(const RootSystem& rs, const FrobeniusDatum& datum,
                     const QVec& mu, int min_depth) {
  if (min_depth < 2)
    throw std::invalid_argument("the closed form needs depth >= 2");
  if (!rs.is_dominant(mu))
    throw std::invalid_argument("nu_b_max requires a dominant mu");
  if (rs.depth(mu) < min_depth)
    throw std::invalid_argument("nu_b_max requires depth(mu) >= " +
                                std::to_string(min_depth));
  QVec nu = qvec_sub(mu_diamond(rs, datum.sigma0, mu), xi_sigma(rs, datum));
  NewtonPoint np;
  np.nu = nu;
  np.dominant = rs.is_dominant(nu);
  np.sigma0_invariant = sigma0_apply(datum.sigma0, nu) == nu;
  np.regular = rs.is_regular_dominant(nu);
  return np;
}

int dim_translation(const RootSystem& rs, const FrobeniusDatum& datum,
                    const WeylElement& x) {
  WeylElement from = mul(datum.zeta.inverse(), x);
  WeylElement to = datum.sigma0_on(x);
  return qbg_distance(rs, from, to);
}

bool DimensionReport::values_agree() const {
  std::vector<int> vals;
  if (value_qbg) vals.push_back(*value_qbg);
  if (value_class) vals.push_back(*value_class);
  if (value_rank) vals.push_back(*value_rank);
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] != vals[0]) return false;
  return true;
}

namespace {

std::vector<int> support_of_word(const std::vector<int>& word) {
  std::set<int> s(word.begin(), word.end());
  return std::vector<int>(s.begin(), s.end());
}

}  // namespace

DimensionReport dim_x_mu_bmax(const RootSystem& rs,
                              const FrobeniusDatum& datum,
                              DimStrategy strategy, const DimOptions& opts) {
  DimensionReport r;
  r.datum = datum.label();
  r.type = rs.type();
  r.rank = rs.rank();
  r.tau = datum.tau_index;
  r.sigma0_code_order = datum.sigma0.order();
  r.xi = xi_sigma(rs, datum);

  bool want_qbg = strategy == DimStrategy::qbg || strategy == DimStrategy::all;
  // 'all' degrades to the class and rank routes above the enumeration cap;
  // asking for qbg alone there is a hard refusal
  if (strategy == DimStrategy::all && weyl_order(rs) > opts.qbg_cap)
    want_qbg = false;
  bool want_class =
      strategy == DimStrategy::class_route || strategy == DimStrategy::all;
  bool want_rank =
      strategy == DimStrategy::rank || strategy == DimStrategy::all;

  if (want_rank) {
    r.value_rank = affine_orbit_count(rs, datum.affine_perm_sigma0) -
                   affine_orbit_count(rs, datum.affine_perm_sigma);
  }

  if (want_class) {
    TwistedClassOptions copts;
    copts.cap = opts.allow_large ? 3000000 : opts.class_cap;
    TwistedClass cls = twisted_conjugacy_class(rs, datum.zeta, datum.sigma0,
                                               copts);
    r.value_class = cls.min_reflection_length;
    r.class_lengths_agree = cls.min_length == cls.min_reflection_length;
    for (const auto& m : cls.min_length_members) {
      auto word = reduced_word(rs, m);
      r.class_witnesses.push_back(word);
      auto supp = support_of_word(word);
      if (!is_coxeter_of(rs, m, supp)) r.class_minimal_coxeter = false;
      if (std::find(r.j_sets.begin(), r.j_sets.end(), supp) == r.j_sets.end())
        r.j_sets.push_back(supp);
    }
    std::sort(r.j_sets.begin(), r.j_sets.end());
  }

  if (want_qbg) {
    WeylGroupTable table = enumerate_group(rs, opts.qbg_cap);
    QbgGraph graph = QbgGraph::build(table);
    WeylElement zinv = datum.zeta.inverse();
    std::vector<int> dims(table.size());
    parallel_for(table.size(), [&](size_t idx) {
      WeylElement x = table.element(idx);
      int src = table.index_of(mul(zinv, x));
      int dst = table.index_of(datum.sigma0_on(x));
      dims[idx] = graph.dist_from(src)[dst];
    });
    int best = dims[0];
    for (int d : dims) best = std::min(best, d);
    r.value_qbg = best;
    for (size_t idx = 0; idx < table.size(); ++idx)
      if (dims[idx] == best)
        r.qbg_witnesses.push_back(reduced_word(rs, table.element(idx)));
  }
  return r;
}

std::string report_json(const RootSystem& rs, const DimensionReport& r) {
  nlohmann::json j;
  j["datum"] = {{"type", std::string(1, r.type)},
                {"rank", r.rank},
                {"tau", r.tau},
                {"sigma0", r.sigma0_code_order}};
  if (r.value_qbg) j["value_qbg"] = *r.value_qbg;
  if (r.value_class) j["value_class"] = *r.value_class;
  if (r.value_rank) j["value_rank"] = *r.value_rank;
  j["class_lengths_agree"] = r.class_lengths_agree;
  j["class_minimal_coxeter"] = r.class_minimal_coxeter;
  nlohmann::json witnesses;
  if (!r.qbg_witnesses.empty()) witnesses["qbg"] = r.qbg_witnesses;
  if (!r.class_witnesses.empty()) witnesses["class"] = r.class_witnesses;
  j["witnesses"] = witnesses;
  j["J_sets"] = r.j_sets;
  auto xi = nlohmann::json::array();
  for (int k = 1; k <= rs.rank(); ++k)
    xi.push_back({numerator(r.xi[k]).convert_to<Int>(),
                  denominator(r.xi[k]).convert_to<Int>()});
  j["xi_sigma"] = xi;
  if (r.nu_bmax) {
    auto nu = nlohmann::json::array();
    for (int k = 1; k <= rs.rank(); ++k)
      nu.push_back({numerator(r.nu_bmax->nu[k]).convert_to<Int>(),
                    denominator(r.nu_bmax->nu[k]).convert_to<Int>()});
    j["nu_b_max"] = {{"nu", nu}, {"regular", r.nu_bmax->regular}};
  }
  return j.dump(2);
}

KeyLemmaReport verify_key_lemma(const RootSystem& rs,
                                const FrobeniusDatum& datum,
                                size_t class_cap) {
  if (datum.quasi_split())
    throw std::invalid_argument("key lemma analysis needs a nontrivial tau");
  KeyLemmaReport rep;
  TwistedClassOptions copts;
  copts.cap = class_cap;
  TwistedClass cls =
      twisted_conjugacy_class(rs, datum.zeta, datum.sigma0, copts);
  rep.class_size = cls.size;
  rep.min_length = cls.min_length;
  rep.min_reflection_length = cls.min_reflection_length;
  rep.identity_in_class = cls.min_length == 0;
  rep.all_minimal_are_coxeter = true;
  std::set<std::vector<int>> jsets;
  for (const auto& m : cls.min_length_members) {
    auto word = reduced_word(rs, m);
    rep.minimal_words.push_back(word);
    auto supp = support_of_word(word);
    if (!is_coxeter_of(rs, m, supp)) rep.all_minimal_are_coxeter = false;
    jsets.insert(supp);
  }
  rep.j_sets.assign(jsets.begin(), jsets.end());
  rep.rank_difference = affine_orbit_count(rs, datum.affine_perm_sigma0) -
                        affine_orbit_count(rs, datum.affine_perm_sigma);
  return rep;
}

bool b_g_mu_membership(const RootSystem& rs, const FrobeniusDatum& datum,
                       const QVec& mu, const QVec& nu) {
  if (!rs.is_dominant(mu))
    throw std::invalid_argument("membership test requires a dominant mu");
  if (sigma0_apply(datum.sigma0, nu) != nu) return false;
  if (!rs.is_dominant(nu)) return false;
  QVec md = mu_diamond(rs, datum.sigma0, mu);
  QVec diff = qvec_sub(md, nu);  // mu_diamond - nu
  const QVec* base = nullptr;
  QVec zero = qvec_zero(rs.rank());
  base = datum.quasi_split() ? &zero : &rs.fund_coweight[datum.tau_index];
  for (const auto& orbit : finite_orbits(rs, datum.sigma0)) {
    bool touched = false;
    for (int j : orbit)
      if (rs.simple_pairing(j, nu) != 0) touched = true;
    if (!touched) continue;
    Rat congr = 0, pos = 0;
    for (int j : orbit) {
      congr += (*base)[j] + diff[j];
      pos += diff[j];
    }
    if (denominator(congr) != 1) return false;
    if (pos < 0) return false;
  }
  return true;
}

std::string coweight_pretty(const RootSystem& rs, const QVec& v) {
  std::string out;
  for (int j = 1; j <= rs.rank(); ++j) {
    if (v[j] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[j] != 1) out += rat_str(v[j]) + " ";
    out += "a" + std::to_string(j) + "v";
  }
  return out.empty() ? "0" : out;
}

std::string xi_table_tsv_row(const RootSystem& rs,
                             const FrobeniusDatum& datum) {
  std::ostringstream os;
  os << rs.type() << "\t" << rs.rank() << "\t" << datum.tau_index << "\t"
     << datum.sigma0.order() << "\t";
  QVec xi = xi_sigma(rs, datum);
  for (int j = 1; j <= rs.rank(); ++j) {
    if (j > 1) os << ",";
    os << rat_str(xi[j]);
  }
  return os.str();
}

}  // namespace qweyl
