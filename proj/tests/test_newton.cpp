#include "doctest.h"
#include "json.hpp"
#include "qweyl/newton.hpp"

using namespace qweyl;

namespace {

QVec combo(const RootSystem& rs, const std::vector<int>& coeffs) {
  QVec v = qvec_zero(rs.rank());
  for (int i = 1; i <= rs.rank(); ++i)
    v = qvec_add(v, qvec_scale(Rat(coeffs[i - 1]), rs.fund_coweight[i]));
  return v;
}

QVec coroot_combo(const RootSystem& rs, std::initializer_list<Rat> coords) {
  QVec v = qvec_zero(rs.rank());
  int i = 1;
  for (const Rat& c : coords) v[i++] = c;
  return v;
}

}  // namespace

TEST_CASE("mu_diamond") {
  RootSystem a3 = build_root_system('A', 3);
  auto id = DiagramAutomorphism::identity(3);
  auto flip = DiagramAutomorphism::finite_by_code(a3, 2);
  QVec mu = combo(a3, {3, 1, 2});
  CHECK(mu_diamond(a3, id, mu) == mu);
  QVec md = mu_diamond(a3, flip, mu);
  CHECK(mu_diamond(a3, flip, md) == md);                    // idempotent
  CHECK(sigma0_apply(flip, md) == md);                      // invariant
  CHECK(a3.two_rho_pairing(md) == a3.two_rho_pairing(mu));  // 2rho invariant
  QVec not_dom = qvec_sub(qvec_zero(3), mu);
  CHECK_THROWS_AS(mu_diamond(a3, flip, not_dom), std::invalid_argument);
}

TEST_CASE("xi_sigma closed forms") {
  // B_n, tau_1: half of the last simple coroot
  for (int n = 2; n <= 5; ++n) {
    RootSystem rs = build_root_system('B', n);
    FrobeniusDatum d =
        make_frobenius(rs, 1, DiagramAutomorphism::identity(n));
    QVec xi = xi_sigma(rs, d);
    for (int j = 1; j < n; ++j) CHECK(xi[j] == 0);
    CHECK(xi[n] == Rat(1, 2));
  }
  // A_n, tau_i: fractional parts ij/(n+1)
  for (int n = 1; n <= 5; ++n) {
    RootSystem rs = build_root_system('A', n);
    for (int i = 1; i <= n; ++i) {
      FrobeniusDatum d =
          make_frobenius(rs, i, DiagramAutomorphism::identity(n));
      QVec xi = xi_sigma(rs, d);
      for (int j = 1; j <= n; ++j)
        CHECK(xi[j] == rat_frac(Rat(i * j, n + 1)));
    }
  }
  // twisted A_n with n, i odd: half the middle coroot
  {
    RootSystem rs = build_root_system('A', 3);
    auto flip = DiagramAutomorphism::finite_by_code(rs, 2);
    CHECK(xi_sigma(rs, make_frobenius(rs, 1, flip)) ==
          coroot_combo(rs, {0, Rat(1, 2), 0}));
  }
  {
    RootSystem rs = build_root_system('A', 5);
    auto flip = DiagramAutomorphism::finite_by_code(rs, 2);
    for (int i : {1, 3, 5})
      CHECK(xi_sigma(rs, make_frobenius(rs, i, flip)) ==
            coroot_combo(rs, {0, 0, Rat(1, 2), 0, 0}));
  }
  // twisted D_4 with tau_4
  {
    RootSystem rs = build_root_system('D', 4);
    auto sw = DiagramAutomorphism::finite_by_code(rs, 2);
    CHECK(xi_sigma(rs, make_frobenius(rs, 4, sw)) ==
          coroot_combo(rs, {Rat(1, 2), 0, Rat(1, 4), Rat(1, 4)}));
  }
  // E6 tau_1: minimality forces coefficient 1/3 on the last coroot, and
  // the 2rho pairing reproduces the rank-difference dimension 4
  {
    RootSystem rs = build_root_system('E', 6);
    FrobeniusDatum d =
        make_frobenius(rs, 1, DiagramAutomorphism::identity(6));
    QVec xi = xi_sigma(rs, d);
    CHECK(xi == coroot_combo(rs, {Rat(2, 3), 0, Rat(1, 3), 0, Rat(2, 3),
                                  Rat(1, 3)}));
    CHECK(rs.two_rho_pairing(xi) == 4);
  }
  // quasi-split: zero
  {
    RootSystem rs = build_root_system('C', 3);
    CHECK(xi_sigma(rs, make_frobenius(
                           rs, 0, DiagramAutomorphism::identity(3))) ==
          qvec_zero(3));
  }
}

TEST_CASE("nu_b_max") {
  RootSystem b2 = build_root_system('B', 2);
  FrobeniusDatum qs = make_frobenius(b2, 0, DiagramAutomorphism::identity(2));
  QVec mu = combo(b2, {2, 3});
  CHECK(nu_b_max(b2, qs, mu).nu == mu);  // quasi-split keeps mu_diamond

  FrobeniusDatum d = make_frobenius(b2, 1, DiagramAutomorphism::identity(2));
  NewtonPoint np = nu_b_max(b2, d, mu);
  QVec want = mu;
  want[2] -= Rat(1, 2);  // mu - alpha_2^vee / 2
  CHECK(np.nu == want);
  CHECK(np.regular);
  CHECK(np.dominant);

  QVec shallow = combo(b2, {1, 2});
  CHECK_THROWS_AS(nu_b_max(b2, d, shallow), std::invalid_argument);
  QVec not_dom = qvec_sub(qvec_zero(2), mu);
  CHECK_THROWS_AS(nu_b_max(b2, d, not_dom), std::invalid_argument);

  // the strict regime rejects depth-2 input and agrees above it
  CHECK_THROWS_AS(nu_b_max(b2, d, mu, 3), std::invalid_argument);  // depth 2
  QVec deep = combo(b2, {3, 4});
  CHECK(nu_b_max(b2, d, deep, 3).nu == nu_b_max(b2, d, deep).nu);
  CHECK_THROWS_AS(nu_b_max(b2, d, deep, 1), std::invalid_argument);
}

TEST_CASE("dim_translation") {
  RootSystem a2 = build_root_system('A', 2);
  FrobeniusDatum qs = make_frobenius(a2, 0, DiagramAutomorphism::identity(2));
  CHECK(dim_translation(a2, qs, from_word(a2, {1, 2})) == 0);  // d(x, x)

  FrobeniusDatum d = make_frobenius(a2, 1, DiagramAutomorphism::identity(2));
  // at x = 1 this is d(zeta^{-1}, 1) = 2 = ell_R(zeta)
  CHECK(dim_translation(a2, d, weyl_identity(a2)) == 2);

  // Cor: the o_tr-fold average of distances equals the single distance
  RootSystem a3 = build_root_system('A', 3);
  FrobeniusDatum d2 = make_frobenius(a3, 2, DiagramAutomorphism::identity(3));
  WeylGroupTable table = enumerate_group(a3);
  for (size_t idx = 0; idx < table.size(); ++idx) {
    WeylElement x = table.element(idx);
    Int total = 0;
    WeylElement cur = x;
    for (int j = 0; j < d2.o_tr; ++j) {
      WeylElement nxt = d2.zeta_sigma0(cur);
      total += qbg_distance(a3, cur, nxt);
      cur = nxt;
    }
    CHECK(total == Int(d2.o_tr) * dim_translation(a3, d2, x));
  }
}

TEST_CASE("dimension strategies") {
  // quasi-split data give zero through every route
  for (int s0 : {1, 2}) {
    RootSystem a3 = build_root_system('A', 3);
    FrobeniusDatum qs = make_frobenius(
        a3, 0, DiagramAutomorphism::finite_by_code(a3, s0));
    DimensionReport r = dim_x_mu_bmax(a3, qs, DimStrategy::all);
    CHECK(r.value_qbg == 0);
    CHECK(r.value_class == 0);
    CHECK(r.value_rank == 0);
    CHECK(r.values_agree());
  }
  // twisted A_3 with tau_1: dimension 1
  {
    RootSystem a3 = build_root_system('A', 3);
    FrobeniusDatum d =
        make_frobenius(a3, 1, DiagramAutomorphism::finite_by_code(a3, 2));
    DimensionReport r = dim_x_mu_bmax(a3, d, DimStrategy::all);
    CHECK(r.value_rank == 1);
    CHECK(r.value_class == 1);
    CHECK(r.value_qbg == 1);
    CHECK(r.class_lengths_agree);
    CHECK(r.class_minimal_coxeter);
    CHECK(r.j_sets == std::vector<std::vector<int>>{{2}});
  }
  // E6 tau_1 by the rank route
  {
    RootSystem e6 = build_root_system('E', 6);
    FrobeniusDatum d =
        make_frobenius(e6, 1, DiagramAutomorphism::identity(6));
    DimensionReport r = dim_x_mu_bmax(e6, d, DimStrategy::rank);
    CHECK(r.value_rank == 4);
  }
}

TEST_CASE("key lemma reports") {
  {
    RootSystem b3 = build_root_system('B', 3);
    FrobeniusDatum d = make_frobenius(b3, 1, DiagramAutomorphism::identity(3));
    KeyLemmaReport r = verify_key_lemma(b3, d);
    CHECK(r.j_sets == std::vector<std::vector<int>>{{3}});
    CHECK(r.all_minimal_are_coxeter);
    CHECK(r.rank_difference == 1);
    CHECK(r.min_length == r.min_reflection_length);
  }
  {
    RootSystem c3 = build_root_system('C', 3);
    FrobeniusDatum d = make_frobenius(c3, 3, DiagramAutomorphism::identity(3));
    KeyLemmaReport r = verify_key_lemma(c3, d);
    CHECK(r.j_sets == std::vector<std::vector<int>>{{1, 3}});
    CHECK(r.rank_difference == 2);
  }
  {
    RootSystem d4 = build_root_system('D', 4);
    FrobeniusDatum d =
        make_frobenius(d4, 4, DiagramAutomorphism::finite_by_code(d4, 2));
    KeyLemmaReport r = verify_key_lemma(d4, d);
    CHECK(r.j_sets == std::vector<std::vector<int>>{{1, 3}, {1, 4}});
    CHECK(r.all_minimal_are_coxeter);
  }
  {
    RootSystem d4 = build_root_system('D', 4);
    FrobeniusDatum d =
        make_frobenius(d4, 1, DiagramAutomorphism::finite_by_code(d4, 3));
    KeyLemmaReport r = verify_key_lemma(d4, d);
    CHECK(r.identity_in_class);
    CHECK(r.j_sets == std::vector<std::vector<int>>{{}});
  }
  RootSystem a2 = build_root_system('A', 2);
  CHECK_THROWS_AS(
      verify_key_lemma(a2, make_frobenius(
                               a2, 0, DiagramAutomorphism::identity(2))),
      std::invalid_argument);
}

TEST_CASE("partial Coxeter twists attain the minimal dimension") {
  struct Case {
    char t;
    int n;
    int tau;
    int s0;
  };
  for (const Case& c : {Case{'A', 3, 1, 1}, Case{'A', 3, 2, 1},
                        Case{'A', 3, 1, 2}, Case{'D', 4, 4, 1}}) {
    RootSystem rs = build_root_system(c.t, c.n);
    FrobeniusDatum d = make_frobenius(
        rs, c.tau, DiagramAutomorphism::finite_by_code(rs, c.s0));
    DimensionReport rep = dim_x_mu_bmax(rs, d, DimStrategy::all);
    REQUIRE(rep.values_agree());
    int best = *rep.value_qbg;
    std::set<std::vector<int>> jsets(rep.j_sets.begin(), rep.j_sets.end());
    WeylGroupTable table = enumerate_group(rs);
    size_t attained = 0;
    for (size_t idx = 0; idx < table.size(); ++idx) {
      WeylElement x = table.element(idx);
      WeylElement twist =
          mul(x.inverse(), mul(d.zeta, d.sigma0_on(x)));
      auto word = reduced_word(rs, twist);
      std::set<int> s(word.begin(), word.end());
      std::vector<int> supp(s.begin(), s.end());
      if (is_coxeter_of(rs, twist, supp) && jsets.count(supp)) {
        CHECK(dim_translation(rs, d, x) == best);
        ++attained;
      }
    }
    CHECK(attained > 0);
  }
}

TEST_CASE("key lemma patterns continue at ranks 7 and 8") {
  struct Case {
    char t;
    int n;
    int tau;
    int s0;
    std::vector<std::vector<int>> j;
  };
  const std::vector<Case> cases = {
      {'B', 8, 1, 1, {{8}}},
      {'C', 8, 8, 1, {{1, 3, 5, 7}}},
      {'D', 8, 1, 1, {{7, 8}}},
      {'D', 8, 8, 1, {{1, 3, 5, 7}}},          // n = 0 mod 4
      {'D', 7, 7, 1, {{1, 3, 5, 6, 7}}},       // n odd
      {'D', 8, 8, 2, {{1, 3, 5, 7}, {1, 3, 5, 8}}},
      {'A', 8, 3, 1, {{1, 2, 4, 5, 7, 8}}},    // kappa = 3
      {'A', 7, 4, 1, {{1, 3, 5, 7}}},          // kappa = 2
      {'A', 7, 3, 2, {{4}}},                   // n, i odd
  };
  for (const auto& c : cases) {
    RootSystem rs = build_root_system(c.t, c.n);
    FrobeniusDatum d = make_frobenius(
        rs, c.tau, DiagramAutomorphism::finite_by_code(rs, c.s0));
    KeyLemmaReport r = verify_key_lemma(rs, d, 3000000);
    CAPTURE(c.t);
    CAPTURE(c.n);
    CAPTURE(c.tau);
    CHECK(r.j_sets == c.j);
    CHECK(r.all_minimal_are_coxeter);
    CHECK(r.min_length == r.rank_difference);
    CHECK(r.min_reflection_length == r.rank_difference);
  }
}

TEST_CASE("neutrally acceptable membership") {
  RootSystem b2 = build_root_system('B', 2);
  FrobeniusDatum qs = make_frobenius(b2, 0, DiagramAutomorphism::identity(2));
  QVec mu = combo(b2, {2, 3});
  CHECK(b_g_mu_membership(b2, qs, mu, mu_diamond(b2, qs.sigma0, mu)));

  FrobeniusDatum d = make_frobenius(b2, 1, DiagramAutomorphism::identity(2));
  NewtonPoint np = nu_b_max(b2, d, mu);
  CHECK(b_g_mu_membership(b2, d, mu, np.nu));
  // mu_diamond itself violates the congruence for the twisted form
  CHECK_FALSE(b_g_mu_membership(b2, d, mu, mu));
  // above mu_diamond fails positivity
  QVec above = qvec_add(mu, combo(b2, {1, 1}));
  CHECK_FALSE(b_g_mu_membership(b2, d, mu, above));

  // sigma0-asymmetric vectors are rejected in twisted types
  RootSystem a3 = build_root_system('A', 3);
  FrobeniusDatum tw =
      make_frobenius(a3, 0, DiagramAutomorphism::finite_by_code(a3, 2));
  QVec mu3 = combo(a3, {2, 2, 2});
  QVec asym = coroot_combo(a3, {1, 1, 2});
  CHECK_FALSE(b_g_mu_membership(a3, tw, mu3, asym));
  QVec neg = qvec_sub(qvec_zero(3), mu3);
  CHECK_THROWS_AS(b_g_mu_membership(a3, tw, neg, mu3),
                  std::invalid_argument);
}

TEST_CASE("report serialization") {
  RootSystem a3 = build_root_system('A', 3);
  FrobeniusDatum d =
      make_frobenius(a3, 1, DiagramAutomorphism::finite_by_code(a3, 2));
  DimensionReport r = dim_x_mu_bmax(a3, d, DimStrategy::all);
  QVec mu = combo(a3, {2, 2, 2});
  r.nu_bmax = nu_b_max(a3, d, mu);
  auto j = nlohmann::json::parse(report_json(a3, r));
  CHECK(j["value_rank"] == 1);
  CHECK(j["value_class"] == 1);
  CHECK(j["J_sets"] == nlohmann::json::array({{2}}));
  CHECK(j["datum"]["tau"] == 1);
  CHECK(j.contains("nu_b_max"));
  CHECK(xi_table_tsv_row(a3, d) == "A\t3\t1\t2\t0,1/2,0");
}
