#include "qweyl/suites.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace qweyl {
namespace suites {

namespace {

struct DatumSpec {
  char type;
  int rank;
  int tau;
  int s0 = 1;  // sigma0 code: 1 id, 2 involution, 3 triality
};

std::string spec_id(const DatumSpec& s) {
  std::string out;
  if (s.s0 > 1) out += std::to_string(s.s0);
  out += std::string(1, s.type) + std::to_string(s.rank);
  out += " tau" + std::to_string(s.tau);
  return out;
}

std::string word_str(const std::vector<int>& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += std::to_string(i);
  return s;
}

// Holds the root system and derived tables at stable addresses for the
// duration of one suite run.
struct GroupData {
  std::unique_ptr<RootSystem> rs;
  std::unique_ptr<WeylGroupTable> table;
  std::unique_ptr<QbgGraph> graph;
};

class Cache {
 public:
  const RootSystem& rs(char t, int n) {
    return *entry(t, n).rs;
  }
  const WeylGroupTable& table(char t, int n) {
    auto& e = entry(t, n);
    if (!e.table)
      e.table = std::make_unique<WeylGroupTable>(
          enumerate_group(*e.rs, weyl_order(*e.rs)));
    return *e.table;
  }
  const QbgGraph& graph(char t, int n) {
    auto& e = entry(t, n);
    if (!e.graph) e.graph = std::make_unique<QbgGraph>(QbgGraph::build(table(t, n)));
    return *e.graph;
  }

 private:
  GroupData& entry(char t, int n) {
    auto key = std::make_pair(t, n);
    auto it = data_.find(key);
    if (it == data_.end()) {
      GroupData g;
      g.rs = std::make_unique<RootSystem>(build_root_system(t, n));
      it = data_.emplace(key, std::move(g)).first;
    }
    return it->second;
  }
  std::map<std::pair<char, int>, GroupData> data_;
};

bool keep(const DatumSpec& s, const SuiteOptions& o) {
  if (s.rank > o.max_rank) return false;
  if (!o.types.empty() &&
      std::find(o.types.begin(), o.types.end(), s.type) == o.types.end())
    return false;
  return true;
}

// scope of the Xi table: split forms plus the twisted forms with nonzero tau
std::vector<DatumSpec> xi_scope() {
  std::vector<DatumSpec> v;
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) v.push_back({'A', n, i, 1});
  for (int n = 2; n <= 5; ++n) v.push_back({'B', n, 1, 1});
  for (int n = 2; n <= 5; ++n) v.push_back({'C', n, n, 1});
  for (int n = 4; n <= 6; ++n) {
    v.push_back({'D', n, 1, 1});
    v.push_back({'D', n, n, 1});
  }
  v.push_back({'E', 6, 1, 1});
  v.push_back({'E', 7, 7, 1});
  for (int n = 3; n <= 5; n += 2)
    for (int i = 1; i <= n; i += 2) v.push_back({'A', n, i, 2});
  for (int n = 4; n <= 6; ++n) v.push_back({'D', n, n, 2});
  return v;
}

std::vector<DatumSpec> main_theorem_scope(bool allow_large) {
  std::vector<DatumSpec> v;
  for (const auto& s : xi_scope())
    if (!(s.type == 'E' && s.rank == 7)) v.push_back(s);
  v.push_back({'D', 4, 1, 3});  // triality
  v.push_back({'E', 6, 1, 2});
  if (allow_large) v.push_back({'E', 7, 7, 1});
  return v;
}

std::vector<DatumSpec> key_lemma_scope(bool allow_large) {
  std::vector<DatumSpec> v;
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) v.push_back({'A', n, i, 1});
  for (int n = 2; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) v.push_back({'A', n, i, 2});
  for (int n = 2; n <= 6; ++n) v.push_back({'B', n, 1, 1});
  for (int n = 2; n <= 6; ++n) v.push_back({'C', n, n, 1});
  for (int n = 4; n <= 6; ++n) {
    v.push_back({'D', n, 1, 1});
    v.push_back({'D', n, n, 1});
    v.push_back({'D', n, 1, 2});
    v.push_back({'D', n, n, 2});
  }
  v.push_back({'D', 4, 1, 3});
  v.push_back({'E', 6, 1, 1});
  v.push_back({'E', 6, 1, 2});
  if (allow_large) v.push_back({'E', 7, 7, 1});
  return v;
}

int gcd_int(int a, int b) { return b == 0 ? a : gcd_int(b, a % b); }

// closed forms of Xi_sigma per type
QVec expected_xi(const RootSystem& rs, const DatumSpec& s) {
  int n = rs.rank();
  QVec xi = qvec_zero(n);
  if (s.s0 == 1) {
    switch (s.type) {
      case 'A':
        for (int j = 1; j <= n; ++j)
          xi[j] = rat_frac(Rat(s.tau * j, n + 1));
        break;
      case 'B':
        xi[n] = Rat(1, 2);
        break;
      case 'C':
        for (int j = 1; j <= n; j += 2) xi[j] = Rat(1, 2);
        break;
      case 'D':
        if (s.tau == 1) {
          xi[n - 1] = xi[n] = Rat(1, 2);
        } else {
          for (int j = 1; j <= n - 2; j += 2) xi[j] = Rat(1, 2);
          if (n % 2 == 1) {
            xi[n - 1] = 1 - rat_frac(Rat(n - 2, 4));
            xi[n] = 1 - rat_frac(Rat(n, 4));
          } else if (n % 4 == 0) {
            xi[n - 1] = 1 - rat_frac(Rat(n - 2, 4));
          } else {
            xi[n] = 1 - rat_frac(Rat(n, 4));
          }
        }
        break;
      case 'E':
        if (n == 6) {
          xi[1] = Rat(2, 3);
          xi[3] = Rat(1, 3);
          xi[5] = Rat(2, 3);
          xi[6] = Rat(1, 3);
        } else {
          xi[2] = xi[5] = xi[7] = Rat(1, 2);
        }
        break;
    }
    return xi;
  }
  if (s.type == 'A') {
    // n, i odd
    xi[(n + 1) / 2] = Rat(1, 2);
    return xi;
  }
  // 2D_n with tau_n
  for (int j = 1; j <= n - 2; j += 2) xi[j] = Rat(1, 2);
  if (n % 2 == 0) xi[n - 1] = xi[n] = Rat(1, 4);
  return xi;
}

// J sets asserted case by case; outer vector lists the admissible choices
std::vector<std::vector<int>> expected_j_sets(const DatumSpec& s) {
  int n = s.rank;
  std::vector<std::vector<int>> out;
  auto odds_upto = [](int hi) {
    std::vector<int> v;
    for (int j = 1; j <= hi; j += 2) v.push_back(j);
    return v;
  };
  if (s.type == 'A' && s.s0 == 1) {
    int kappa = (n + 1) / gcd_int(n + 1, s.tau);
    std::vector<int> J;
    for (int j = 1; j <= n; ++j)
      if (j % kappa != 0) J.push_back(j);
    out.push_back(J);
  } else if (s.type == 'A') {
    if (n % 2 == 1 && s.tau % 2 == 1)
      out.push_back({(n + 1) / 2});
    else
      out.push_back({});
  } else if (s.type == 'B') {
    out.push_back({n});
  } else if (s.type == 'C') {
    out.push_back(odds_upto(n));
  } else if (s.type == 'D' && s.s0 == 1) {
    if (s.tau == 1) {
      out.push_back({n - 1, n});
    } else if (n % 2 == 1) {
      auto J = odds_upto(n - 2);
      J.push_back(n - 1);
      J.push_back(n);
      out.push_back(J);
    } else if (n % 4 == 0) {
      out.push_back(odds_upto(n));
    } else {
      auto J = odds_upto(n - 2);
      J.push_back(n);
      out.push_back(J);
    }
  } else if (s.type == 'D' && s.s0 == 2) {
    if (s.tau == 1) {
      out.push_back({});
    } else if (n % 2 == 1) {
      out.push_back(odds_upto(n - 2));
    } else {
      out.push_back(odds_upto(n));  // = odds up to n-1
      auto J = odds_upto(n - 2);
      J.push_back(n);
      out.push_back(J);
    }
  } else if (s.type == 'D' && s.s0 == 3) {
    out.push_back({});
  } else if (s.type == 'E' && n == 6 && s.s0 == 1) {
    out.push_back({1, 3, 5, 6});
  } else if (s.type == 'E' && n == 6 && s.s0 == 2) {
    out.push_back({});
  } else if (s.type == 'E' && n == 7) {
    out.push_back({2, 5, 7});
  }
  for (auto& J : out) std::sort(J.begin(), J.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string qvec_str(const RootSystem& rs, const QVec& v) {
  return coweight_pretty(rs, v);
}

}  // namespace

SuiteReport suite_xi_tables(const SuiteOptions& opts) {
  SuiteReport rep{"xi-tables", {}};
  for (const auto& s : xi_scope()) {
    if (!keep(s, opts)) continue;
    const RootSystem rs = build_root_system(s.type, s.rank);
    auto sigma0 = DiagramAutomorphism::finite_by_code(rs, s.s0);
    FrobeniusDatum datum = make_frobenius(rs, s.tau, sigma0);
    QVec got = xi_sigma(rs, datum);
    QVec want = expected_xi(rs, s);
    SuiteCase c;
    c.id = spec_id(s);
    c.pass = got == want;
    if (!c.pass)
      c.detail = "xi_sigma = " + qvec_str(rs, got) + ", closed form = " +
                 qvec_str(rs, want);
    // the pairing <2rho, xi> must reproduce the rank-difference dimension
    if (c.pass) {
      int rank_val = affine_orbit_count(rs, datum.affine_perm_sigma0) -
                     affine_orbit_count(rs, datum.affine_perm_sigma);
      if (rs.two_rho_pairing(got) != rank_val) {
        c.pass = false;
        c.detail = "<2rho, xi> = " + rat_str(rs.two_rho_pairing(got)) +
                   " but rank route gives " + std::to_string(rank_val);
      }
    }
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

SuiteReport suite_main_theorem_class(const SuiteOptions& opts) {
  SuiteReport rep{"main-theorem/class", {}};
  for (const auto& s : main_theorem_scope(opts.allow_large)) {
    if (!keep(s, opts)) continue;
    const RootSystem rs = build_root_system(s.type, s.rank);
    auto sigma0 = DiagramAutomorphism::finite_by_code(rs, s.s0);
    FrobeniusDatum datum = make_frobenius(rs, s.tau, sigma0);
    DimOptions dopts;
    dopts.allow_large = opts.allow_large;
    DimensionReport rc =
        dim_x_mu_bmax(rs, datum, DimStrategy::class_route, dopts);
    DimensionReport rr = dim_x_mu_bmax(rs, datum, DimStrategy::rank, dopts);
    SuiteCase c;
    c.id = spec_id(s);
    c.pass = rc.value_class && rr.value_rank &&
             *rc.value_class == *rr.value_rank && rc.class_lengths_agree;
    if (!c.pass) {
      std::ostringstream d;
      d << "min ell_R over class = " << rc.value_class.value_or(-1)
        << ", min ell agrees: " << (rc.class_lengths_agree ? "yes" : "NO")
        << ", rank route = " << rr.value_rank.value_or(-1);
      c.detail = d.str();
    }
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

SuiteReport suite_main_theorem_qbg(const SuiteOptions& opts) {
  SuiteReport rep{"main-theorem/qbg", {}};
  for (const auto& s : main_theorem_scope(false)) {
    if (!keep(s, opts)) continue;
    const RootSystem rs = build_root_system(s.type, s.rank);
    if (weyl_order(rs) > opts.qbg_group_cap) continue;
    auto sigma0 = DiagramAutomorphism::finite_by_code(rs, s.s0);
    FrobeniusDatum datum = make_frobenius(rs, s.tau, sigma0);
    DimOptions dopts;
    dopts.qbg_cap = opts.qbg_group_cap;
    DimensionReport r = dim_x_mu_bmax(rs, datum, DimStrategy::qbg, dopts);
    DimensionReport rr = dim_x_mu_bmax(rs, datum, DimStrategy::rank, dopts);
    SuiteCase c;
    c.id = spec_id(s);
    c.pass = r.value_qbg && rr.value_rank && *r.value_qbg == *rr.value_rank;
    if (!c.pass)
      c.detail = "min_x d(zeta^-1 x, sigma0(x)) = " +
                 std::to_string(r.value_qbg.value_or(-1)) +
                 ", rank route = " + std::to_string(rr.value_rank.value_or(-1));
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

SuiteReport suite_key_lemma(const SuiteOptions& opts) {
  SuiteReport rep{"key-lemma", {}};
  for (const auto& s : key_lemma_scope(opts.allow_large)) {
    if (!keep(s, opts)) continue;
    const RootSystem rs = build_root_system(s.type, s.rank);
    auto sigma0 = DiagramAutomorphism::finite_by_code(rs, s.s0);
    FrobeniusDatum datum = make_frobenius(rs, s.tau, sigma0);
    size_t cap = opts.allow_large ? 3000000 : 200000;
    KeyLemmaReport r = verify_key_lemma(rs, datum, cap);
    auto want = expected_j_sets(s);
    SuiteCase c;
    c.id = spec_id(s);
    std::ostringstream detail;
    bool ok = true;
    if (r.j_sets != want) {
      ok = false;
      detail << "J sets differ: computed {";
      for (const auto& J : r.j_sets) detail << " {" << word_str(J) << "}";
      detail << " } expected {";
      for (const auto& J : want) detail << " {" << word_str(J) << "}";
      detail << " };";
    }
    if (!r.all_minimal_are_coxeter) {
      ok = false;
      detail << " a minimal member is not a partial Coxeter element;";
    }
    for (const auto& J : r.j_sets)
      if (static_cast<int>(J.size()) != r.rank_difference) {
        ok = false;
        detail << " |J| = " << J.size() << " but orbit difference = "
               << r.rank_difference << ";";
      }
    if (r.min_length != r.rank_difference ||
        r.min_reflection_length != r.rank_difference) {
      ok = false;
      detail << " class minima (" << r.min_length << ", "
             << r.min_reflection_length << ") differ from orbit difference "
             << r.rank_difference << ";";
    }
    // with trivial sigma0, the minimal set is exactly the Coxeter elements
    // of W_J; check it by generating them all
    if (ok && s.s0 == 1) {
      std::set<IVec> min_keys;
      for (const auto& w : r.minimal_words)
        min_keys.insert(canonical_key(rs, from_word(rs, w)));
      std::set<IVec> cox_keys;
      for (const auto& J : r.j_sets) {
        std::vector<int> perm = J;
        std::sort(perm.begin(), perm.end());
        do {
          cox_keys.insert(canonical_key(rs, from_word(rs, perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
      if (min_keys != cox_keys) {
        ok = false;
        detail << " minimal set is not the full Coxeter set of W_J;";
      }
    }
    c.pass = ok;
    c.detail = detail.str();
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

SuiteReport suite_qbg_lemmas(const SuiteOptions& opts) {
  SuiteReport rep{"qbg-lemmas", {}};
  Cache cache;
  const std::vector<std::pair<char, int>> scope = {
      {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'D', 4}};
  for (auto [t, n] : scope) {
    if (!keep({t, n, 0, 1}, opts)) continue;
    const RootSystem& rs = cache.rs(t, n);
    const WeylGroupTable& table = cache.table(t, n);
    const QbgGraph& graph = cache.graph(t, n);
    size_t N = table.size();

    std::vector<std::vector<int>> dist_to(N);
    for (size_t y = 0; y < N; ++y) dist_to[y] = graph.dist_to(static_cast<int>(y));

    bool id_ok = true, pair_ok = true, unique_ok = true;
    std::string id_bad, pair_bad, unique_bad;
    for (size_t x = 0; x < N && (id_ok || pair_ok || unique_ok); ++x) {
      auto dw = graph.dist_wt_from(static_cast<int>(x));
      for (size_t y = 0; y < N; ++y) {
        const IVec& wt = dw.wt[y];
        Int wt_sum = 0;
        for (int j = 1; j <= rs.rank(); ++j) wt_sum += wt[j];
        // length-distance-weight identity
        if (id_ok && table.lengths[y] - table.lengths[x] !=
                         dw.d[y] - 2 * wt_sum) {
          id_ok = false;
          id_bad = word_str(reduced_word(rs, table.element(x))) + " -> " +
                   word_str(reduced_word(rs, table.element(y)));
        }
        // <wt, alpha> <= 2 on simple roots
        if (pair_ok)
          for (int i = 1; i <= rs.rank(); ++i)
            if (rs.simple_pairing(i, to_qvec(wt)) > 2) {
              pair_ok = false;
              pair_bad = word_str(reduced_word(rs, table.element(x))) +
                         " -> " + word_str(reduced_word(rs, table.element(y)));
            }
        // all shortest paths carry the same weight
        if (unique_ok &&
            !graph.weight_unique(static_cast<int>(x), static_cast<int>(y),
                                 dw.d, dist_to[y])) {
          unique_ok = false;
          unique_bad = word_str(reduced_word(rs, table.element(x))) + " -> " +
                       word_str(reduced_word(rs, table.element(y)));
        }
      }
    }
    std::string label = rs.label();
    rep.cases.push_back({label + " length-distance-weight", id_ok,
                         id_ok ? "" : "fails at " + id_bad});
    rep.cases.push_back({label + " wt-pairing<=2", pair_ok,
                         pair_ok ? "" : "fails at " + pair_bad});
    rep.cases.push_back({label + " shortest-path weight uniqueness", unique_ok,
                         unique_ok ? "" : "fails at " + unique_bad});

    // explicit enumeration of shortest paths on the three smallest types
    if (weyl_order(rs) <= 24) {
      bool enum_ok = true;
      std::string enum_bad;
      for (size_t x = 0; x < N && enum_ok; ++x)
        for (size_t y = 0; y < N && enum_ok; ++y) {
          auto weights = qbg_all_shortest_path_weights(rs, table.element(x),
                                                       table.element(y));
          if (weights.size() != 1) {
            enum_ok = false;
            enum_bad = word_str(reduced_word(rs, table.element(x))) + " -> " +
                       word_str(reduced_word(rs, table.element(y)));
          }
        }
      rep.cases.push_back({label + " uniqueness by full enumeration", enum_ok,
                           enum_ok ? "" : "fails at " + enum_bad});
    }
  }
  return rep;
}

SuiteReport suite_demazure(const SuiteOptions& opts) {
  SuiteReport rep{"demazure", {}};
  Cache cache;
  const std::vector<std::pair<char, int>> scope = {
      {'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}};
  for (auto [t, n] : scope) {
    if (!keep({t, n, 0, 1}, opts)) continue;
    const RootSystem& rs = cache.rs(t, n);
    const WeylGroupTable& table = cache.table(t, n);
    std::mt19937_64 rng(0x5eed0 + static_cast<unsigned>(t) * 100 + n);
    auto rand_elt = [&] {
      return table.element(rng() % table.size());
    };
    auto rand_mu = [&](int lo, int hi) {
      QVec mu = qvec_zero(rs.rank());
      for (int i = 1; i <= rs.rank(); ++i) {
        int c = lo + static_cast<int>(rng() % (hi - lo + 1));
        mu = qvec_add(mu, qvec_scale(Rat(c), rs.fund_coweight[i]));
      }
      return mu;
    };

    bool cf_ok = true;
    std::string cf_bad;
    for (int trial = 0; trial < 1000 && cf_ok; ++trial) {
      WeylElement x1 = rand_elt(), y1 = rand_elt(), x2 = rand_elt(),
                  y2 = rand_elt();
      QVec mu1 = rand_mu(2, 4), mu2 = rand_mu(2, 4);
      ExtendedAffineElement a =
          mul(from_finite(rs, x1),
              mul(translation(rs, mu1), from_finite(rs, y1)));
      ExtendedAffineElement b =
          mul(from_finite(rs, x2),
              mul(translation(rs, mu2), from_finite(rs, y2)));
      ExtendedAffineElement lhs = demazure_product(rs, a, b);
      ExtendedAffineElement rhs =
          demazure_closed_form(rs, x1, mu1, y1, x2, mu2, y2);
      if (!(lhs == rhs)) {
        cf_ok = false;
        cf_bad = "trial " + std::to_string(trial);
      }
    }
    rep.cases.push_back({rs.label() + " closed form = rule fold", cf_ok,
                         cf_ok ? "" : cf_bad});

    bool as_ok = true;
    std::string as_bad;
    for (int trial = 0; trial < 1000 && as_ok; ++trial) {
      auto rand_affine = [&] {
        QVec lam = qvec_zero(rs.rank());
        for (int i = 1; i <= rs.rank(); ++i) {
          int c = -1 + static_cast<int>(rng() % 4);
          lam = qvec_add(lam, qvec_scale(Rat(c), rs.fund_coweight[i]));
        }
        return ExtendedAffineElement{lam, rand_elt()};
      };
      ExtendedAffineElement a = rand_affine(), b = rand_affine(),
                            c = rand_affine();
      ExtendedAffineElement l =
          demazure_product(rs, demazure_product(rs, a, b), c);
      ExtendedAffineElement r =
          demazure_product(rs, a, demazure_product(rs, b, c));
      if (!(l == r)) {
        as_ok = false;
        as_bad = "trial " + std::to_string(trial);
      }
    }
    rep.cases.push_back(
        {rs.label() + " associativity", as_ok, as_ok ? "" : as_bad});
  }
  return rep;
}

SuiteReport suite_newton_consistency(const SuiteOptions& opts) {
  SuiteReport rep{"newton-consistency", {}};
  Cache cache;
  struct Entry {
    char t;
    int n;
    std::vector<int> taus;
    int s0 = 1;
  };
  const std::vector<Entry> scope = {{'A', 2, {1, 2}, 1},
                                    {'A', 3, {1, 2, 3}, 1},
                                    {'B', 2, {1}, 1},
                                    {'A', 3, {1}, 2}};
  for (const auto& e : scope) {
    if (!keep({e.t, e.n, 0, e.s0}, opts)) continue;
    const RootSystem& rs = cache.rs(e.t, e.n);
    const WeylGroupTable& table = cache.table(e.t, e.n);
    QVec rho_v = qvec_zero(rs.rank());
    for (int i = 1; i <= rs.rank(); ++i)
      rho_v = qvec_add(rho_v, rs.fund_coweight[i]);
    for (int tau : e.taus) {
      FrobeniusDatum datum = make_frobenius(
          rs, tau, DiagramAutomorphism::finite_by_code(rs, e.s0));
      for (int scale = 2; scale <= 3; ++scale) {
        QVec mu = qvec_scale(Rat(scale), rho_v);
        bool ok = true;
        std::string bad;
        for (size_t idx = 0; idx < table.size() && ok; ++idx) {
          WeylElement x = table.element(idx);
          QVec xmu = coweight_action(x, mu);
          NewtonPoint np =
              generic_newton_point(rs, datum, translation(rs, xmu));
          QVec rhs = qvec_sub(mu_diamond(rs, datum.sigma0, mu),
                              av_sigma(rs, datum, x));
          if (rs.two_rho_pairing(np.nu) != rs.two_rho_pairing(rhs)) {
            ok = false;
            bad = "pairing mismatch at x = " +
                  word_str(reduced_word(rs, x));
          } else if (np.regular && np.nu != rhs) {
            ok = false;
            bad = "vector mismatch at regular x = " +
                  word_str(reduced_word(rs, x));
          }
        }
        rep.cases.push_back({spec_id({e.t, e.n, tau, e.s0}) + " mu=" +
                                 std::to_string(scale) + "rho_v",
                             ok, bad});
      }
    }
  }

  // dominance extremes: min_x av_sigma(x) = Xi_sigma, and the dominance
  // maximum of the iterated Newton points is mu_diamond - Xi_sigma
  struct Entry2 {
    char t;
    int n;
    int tau;
  };
  const std::vector<Entry2> scope2 = {
      {'A', 2, 1}, {'A', 3, 2}, {'B', 2, 1}, {'C', 3, 3}};
  for (const auto& e : scope2) {
    if (!keep({e.t, e.n, e.tau, 1}, opts)) continue;
    const RootSystem& rs = cache.rs(e.t, e.n);
    const WeylGroupTable& table = cache.table(e.t, e.n);
    FrobeniusDatum datum =
        make_frobenius(rs, e.tau, DiagramAutomorphism::identity(rs.rank()));
    std::vector<QVec> avs(table.size());
    for (size_t idx = 0; idx < table.size(); ++idx)
      avs[idx] = av_sigma(rs, datum, table.element(idx));
    QVec xi = xi_sigma(rs, datum);
    bool min_ok = false;
    for (const auto& av : avs)
      if (av == xi) min_ok = true;
    if (min_ok)
      for (const auto& av : avs)
        if (!rs.dominance_leq(xi, av)) min_ok = false;
    rep.cases.push_back({spec_id({e.t, e.n, e.tau, 1}) + " min av = xi",
                         min_ok, min_ok ? "" : "no dominance minimum at xi"});

    QVec rho_v = qvec_zero(rs.rank());
    for (int i = 1; i <= rs.rank(); ++i)
      rho_v = qvec_add(rho_v, rs.fund_coweight[i]);
    QVec mu = qvec_scale(Rat(2), rho_v);
    NewtonPoint best = nu_b_max(rs, datum, mu);
    bool max_ok = false;
    std::vector<QVec> nus(table.size());
    for (size_t idx = 0; idx < table.size(); ++idx) {
      QVec xmu = coweight_action(table.element(idx), mu);
      nus[idx] = generic_newton_point(rs, datum, translation(rs, xmu)).nu;
    }
    for (const auto& nu : nus)
      if (nu == best.nu) max_ok = true;
    if (max_ok)
      for (const auto& nu : nus)
        if (!rs.dominance_leq(nu, best.nu)) max_ok = false;
    rep.cases.push_back({spec_id({e.t, e.n, e.tau, 1}) +
                             " dominance max of nu = mu_diamond - xi",
                         max_ok,
                         max_ok ? "" : "maximum not attained at nu_b_max"});
  }
  return rep;
}

SuiteReport suite_bounds(const SuiteOptions& opts) {
  SuiteReport rep{"bounds", {}};
  Cache cache;
  const std::vector<std::pair<char, int>> oracle_scope = {
      {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'B', 2}, {'B', 3},
      {'B', 4}, {'C', 2}, {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}};
  for (auto [t, n] : oracle_scope) {
    if (!keep({t, n, 0, 1}, opts)) continue;
    const RootSystem& rs = cache.rs(t, n);
    const WeylGroupTable& table = cache.table(t, n);
    std::vector<int> oracle = reflection_length_bfs(table);
    bool ok = true;
    std::string bad;
    for (size_t idx = 0; idx < table.size(); ++idx) {
      WeylElement w = table.element(idx);
      int lr = reflection_length(rs, w);
      if (lr != oracle[idx] || lr > table.lengths[idx] || lr > rs.rank()) {
        ok = false;
        bad = "element " + word_str(reduced_word(rs, w)) + ": rank route " +
              std::to_string(lr) + ", BFS " + std::to_string(oracle[idx]);
        break;
      }
    }
    rep.cases.push_back(
        {rs.label() + " reflection length = BFS oracle", ok, bad});
  }

  const std::vector<std::pair<char, int>> sandwich_scope = {{'A', 3},
                                                            {'B', 3}};
  for (auto [t, n] : sandwich_scope) {
    if (!keep({t, n, 0, 1}, opts)) continue;
    const RootSystem& rs = cache.rs(t, n);
    const WeylGroupTable& table = cache.table(t, n);
    const QbgGraph& graph = cache.graph(t, n);
    bool ok = true;
    std::string bad;
    for (size_t x = 0; x < table.size() && ok; ++x) {
      auto d = graph.dist_from(static_cast<int>(x));
      for (size_t y = 0; y < table.size(); ++y) {
        IntMat prod = table.mats[table.inv_index[x]].mul(table.mats[y]);
        int idx = table.index_of_key(prod.apply(rs.key_base));
        int l = table.lengths[idx];
        int lr = int_rank_minus_identity(prod);
        if (!(l >= d[y] && d[y] >= lr)) {
          ok = false;
          bad = word_str(reduced_word(rs, table.element(x))) + " -> " +
                word_str(reduced_word(rs, table.element(y)));
          break;
        }
      }
    }
    rep.cases.push_back(
        {rs.label() + " ell >= d >= ell_R on all pairs", ok, bad});
  }
  return rep;
}

SuiteReport suite_two_expressions(const SuiteOptions& opts) {
  SuiteReport rep{"two-expressions", {}};
  Cache cache;
  const std::vector<DatumSpec> scope = {{'A', 3, 1, 1}, {'A', 3, 2, 1},
                                        {'A', 3, 3, 1}, {'D', 4, 1, 1},
                                        {'A', 3, 1, 2}};
  for (const auto& s : scope) {
    if (!keep(s, opts)) continue;
    const RootSystem& rs = cache.rs(s.type, s.rank);
    const WeylGroupTable& table = cache.table(s.type, s.rank);
    const QbgGraph& graph = cache.graph(s.type, s.rank);
    auto sigma0 = DiagramAutomorphism::finite_by_code(rs, s.s0);
    FrobeniusDatum datum = make_frobenius(rs, s.tau, sigma0);

    // f(x) = zeta sigma0(x) as an index map, with cached BFS distances
    std::vector<int> fmap(table.size());
    std::vector<int> s0map(table.size());
    int zidx = table.index_of(datum.zeta);
    for (size_t idx = 0; idx < table.size(); ++idx) {
      WeylElement img = datum.sigma0_on(table.element(idx));
      s0map[idx] = table.index_of(img);
      fmap[idx] = table.index_of_key(
          table.mats[zidx].mul(img.m).apply(rs.key_base));
    }
    std::vector<std::vector<int>> dist_cache(table.size());
    auto dist = [&](int a, int b) {
      if (dist_cache[a].empty()) dist_cache[a] = graph.dist_from(a);
      return dist_cache[a][b];
    };
    int zinv_idx = table.inv_index[zidx];
    bool ok = true;
    std::string bad;
    for (size_t x = 0; x < table.size(); ++x) {
      Int total = 0;
      int cur = static_cast<int>(x);
      for (int j = 0; j < datum.o_tr; ++j) {
        int nxt = fmap[cur];
        total += dist(cur, nxt);
        cur = nxt;
      }
      int src = table.index_of_key(
          table.mats[zinv_idx].mul(table.mats[x]).apply(rs.key_base));
      int rhs = dist(src, s0map[x]);
      if (total != Int(datum.o_tr) * rhs) {
        ok = false;
        bad = "x = " + word_str(reduced_word(rs, table.element(x)));
        break;
      }
    }
    rep.cases.push_back(
        {spec_id(s) + " average of d equals d(zeta^-1 x, sigma0 x)", ok, bad});
  }

  // <2rho, x^{-1} varpi_i^vee> = ell(x^{-1} zeta_i) - ell(x), all minuscule i
  const std::vector<std::pair<char, int>> id_scope = {
      {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}};
  for (auto [t, n] : id_scope) {
    if (!keep({t, n, 0, 1}, opts)) continue;
    const RootSystem& rs = cache.rs(t, n);
    const WeylGroupTable& table = cache.table(t, n);
    bool ok = true;
    std::string bad;
    for (int i : minuscule_coweight_indices(rs)) {
      WeylElement z = zeta(rs, i);
      int zidx = table.index_of(z);
      for (size_t x = 0; x < table.size() && ok; ++x) {
        const IntMat& xinv = table.mats[table.inv_index[x]];
        Rat lhs = rs.two_rho_pairing(xinv.apply(rs.fund_coweight[i]));
        int prod = table.index_of_key(
            xinv.mul(table.mats[zidx]).apply(rs.key_base));
        Rat rhs = table.lengths[prod] - table.lengths[x];
        if (lhs != rhs) {
          ok = false;
          bad = "i = " + std::to_string(i) + ", x = " +
                word_str(reduced_word(rs, table.element(x)));
        }
      }
      if (!ok) break;
    }
    rep.cases.push_back(
        {rs.label() + " <2rho, x^-1 varpi^vee> = ell(x^-1 zeta) - ell(x)", ok,
         bad});
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"qbg-lemmas",  "demazure",  "two-expressions",
          "bounds",      "key-lemma", "xi-tables",
          "main-theorem", "newton-consistency"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "qbg-lemmas") return suite_qbg_lemmas(opts);
  if (name == "demazure") return suite_demazure(opts);
  if (name == "two-expressions") return suite_two_expressions(opts);
  if (name == "bounds") return suite_bounds(opts);
  if (name == "key-lemma") return suite_key_lemma(opts);
  if (name == "xi-tables") return suite_xi_tables(opts);
  if (name == "newton-consistency") return suite_newton_consistency(opts);
  if (name == "main-theorem") {
    SuiteReport rep = suite_main_theorem_class(opts);
    SuiteReport qbg = suite_main_theorem_qbg(opts);
    rep.name = "main-theorem";
    for (auto& c : qbg.cases) {
      c.id += " [qbg]";
      rep.cases.push_back(std::move(c));
    }
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace suites
}  // namespace qweyl
