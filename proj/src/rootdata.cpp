#include "qweyl/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace qweyl {

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(BigInt(s));
  return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

int int_rank_minus_identity(const IntMat& m) {
  using I128 = __int128;
  int n = m.n;
  I128 a[kMaxDim][kMaxDim];
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      a[i][j] = m.at(i, j) - (i == j ? 1 : 0);
  int rank = 0;
  I128 prev = 1;
  for (int col = 1; col <= n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank + 1; r <= n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    ++rank;
    for (int j = 1; j <= n; ++j) std::swap(a[rank][j], a[pivot][j]);
    for (int r = rank + 1; r <= n; ++r) {
      for (int j = col + 1; j <= n; ++j)
        a[r][j] = (a[rank][col] * a[r][j] - a[r][col] * a[rank][j]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
  }
  return rank;
}

std::vector<QVec> rat_inverse(const std::vector<QVec>& rows, int n) {
  // Gauss-Jordan on [A | I]
  std::vector<QVec> a(n + 1, QVec(2 * n + 2, Rat(0)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) a[i][j] = rows[i][j];
    a[i][n + i] = 1;
  }
  for (int col = 1; col <= n; ++col) {
    int pivot = -1;
    for (int r = col; r <= n; ++r)
      if (a[r][col] != 0) { pivot = r; break; }
    if (pivot < 0) throw std::invalid_argument("matrix is singular");
    std::swap(a[col], a[pivot]);
    Rat inv = Rat(1) / a[col][col];
    for (int j = 1; j <= 2 * n + 1; ++j) a[col][j] *= inv;
    for (int r = 1; r <= n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (int j = 1; j <= 2 * n + 1; ++j) a[r][j] -= f * a[col][j];
    }
  }
  std::vector<QVec> inv(n + 1, QVec(n + 1, Rat(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

namespace {

void add_edge(std::vector<IVec>& c, int i, int j, Int cij, Int cji) {
  c[i][j] = cij;
  c[j][i] = cji;
}

std::vector<IVec> cartan_matrix(char t, int n) {
  std::vector<IVec> c(n + 1, IVec(n + 1, 0));
  for (int i = 1; i <= n; ++i) c[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 1; i < upto; ++i) add_edge(c, i, i + 1, -1, -1);
  };
  switch (t) {
    case 'A':
      chain(n);
      break;
    case 'B':
      chain(n - 1);
      add_edge(c, n - 1, n, -2, -1);
      break;
    case 'C':
      chain(n - 1);
      add_edge(c, n - 1, n, -1, -2);
      break;
    case 'D':
      chain(n - 1);
      add_edge(c, n - 2, n, -1, -1);
      break;
    case 'E':
      // chain 1-3-4-5-...-n, node 2 hangs off node 4
      add_edge(c, 1, 3, -1, -1);
      for (int i = 3; i < n; ++i) add_edge(c, i, i + 1, -1, -1);
      c[4][5] = c[5][4] = -1;
      add_edge(c, 2, 4, -1, -1);
      break;
    case 'F':
      add_edge(c, 1, 2, -1, -1);
      add_edge(c, 2, 3, -2, -1);
      add_edge(c, 3, 4, -1, -1);
      break;
    case 'G':
      add_edge(c, 1, 2, -1, -3);
      break;
  }
  return c;
}

bool valid_type(char t, int n) {
  switch (t) {
    case 'A': return n >= 1 && n <= kMaxDim - 1;
    case 'B': return n >= 2 && n <= kMaxDim - 1;
    case 'C': return n >= 2 && n <= kMaxDim - 1;
    case 'D': return n >= 4 && n <= kMaxDim - 1;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

bool is_positive_vec(const IVec& v) {
  for (Int x : v)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

int RootSystem::coroot_index(const IVec& coroot) const {
  auto it = coroot_ids_.find(coroot);
  return it == coroot_ids_.end() ? -1 : it->second;
}

int RootSystem::root_index(const IVec& root) const {
  auto it = root_ids_.find(root);
  return it == root_ids_.end() ? -1 : it->second;
}

Rat RootSystem::pairing(int root_id, const QVec& lambda) const {
  const IVec& row = pairing_row[root_id];
  Rat s = 0;
  for (int j = 1; j <= rank(); ++j)
    if (row[j] != 0) s += Rat(row[j]) * lambda[j];
  return s;
}

Int RootSystem::pairing(int root_id, const IVec& lambda) const {
  const IVec& row = pairing_row[root_id];
  Int s = 0;
  for (int j = 1; j <= rank(); ++j) s += row[j] * lambda[j];
  return s;
}

Rat RootSystem::simple_pairing(int i, const QVec& lambda) const {
  Rat s = 0;
  for (int j = 1; j <= rank(); ++j)
    if (datum.cartan[i][j] != 0) s += Rat(datum.cartan[i][j]) * lambda[j];
  return s;
}

Rat RootSystem::two_rho_pairing(const QVec& lambda) const {
  // <2rho, alpha_j^vee> = 2, so the pairing is twice the coordinate sum
  Rat s = 0;
  for (int j = 1; j <= rank(); ++j) s += lambda[j];
  return 2 * s;
}

Rat RootSystem::depth(const QVec& lambda) const {
  Rat d = simple_pairing(1, lambda);
  for (int i = 2; i <= rank(); ++i) d = std::min(d, simple_pairing(i, lambda));
  return d;
}

bool RootSystem::is_dominant(const QVec& lambda) const {
  for (int i = 1; i <= rank(); ++i)
    if (simple_pairing(i, lambda) < 0) return false;
  return true;
}

bool RootSystem::is_regular_dominant(const QVec& lambda) const {
  for (int i = 1; i <= rank(); ++i)
    if (simple_pairing(i, lambda) <= 0) return false;
  return true;
}

bool RootSystem::dominance_leq(const QVec& nu, const QVec& nu2) const {
  for (int j = 1; j <= rank(); ++j)
    if (nu2[j] - nu[j] < 0) return false;
  return true;
}

std::string RootSystem::label() const {
  return std::string(1, type()) + std::to_string(rank());
}

RootSystem build_root_system(char type_letter, int rank) {
  if (!valid_type(type_letter, rank))
    throw std::invalid_argument("not an irreducible type: " +
                                std::string(1, type_letter) +
                                std::to_string(rank));
  RootSystem rs;
  rs.datum.type_letter = type_letter;
  rs.datum.rank = rank;
  rs.datum.cartan = cartan_matrix(type_letter, rank);
  const int n = rank;
  const auto& c = rs.datum.cartan;

  // closure of the simple (root, coroot) pairs under simple reflections
  std::deque<int> work;
  for (int i = 1; i <= n; ++i) {
    IVec root(n + 1, 0), coroot(n + 1, 0);
    root[i] = coroot[i] = 1;
    rs.root_ids_[root] = static_cast<int>(rs.pos_roots.size());
    rs.coroot_ids_[coroot] = static_cast<int>(rs.pos_coroots.size());
    work.push_back(static_cast<int>(rs.pos_roots.size()));
    rs.pos_roots.push_back(root);
    rs.pos_coroots.push_back(coroot);
  }
  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    for (int i = 1; i <= n; ++i) {
      IVec root = rs.pos_roots[id];
      IVec coroot = rs.pos_coroots[id];
      Int pr = 0, pc = 0;
      for (int k = 1; k <= n; ++k) {
        pr += root[k] * c[k][i];   // <root, alpha_i^vee>
        pc += c[i][k] * coroot[k]; // <alpha_i, coroot>
      }
      root[i] -= pr;
      coroot[i] -= pc;
      if (!is_positive_vec(root)) continue;
      if (rs.root_ids_.count(root)) continue;
      rs.root_ids_[root] = static_cast<int>(rs.pos_roots.size());
      rs.coroot_ids_[coroot] = static_cast<int>(rs.pos_coroots.size());
      work.push_back(static_cast<int>(rs.pos_roots.size()));
      rs.pos_roots.push_back(root);
      rs.pos_coroots.push_back(coroot);
    }
  }

  rs.pairing_row.resize(rs.pos_roots.size());
  for (size_t a = 0; a < rs.pos_roots.size(); ++a) {
    IVec row(n + 1, 0);
    for (int j = 1; j <= n; ++j) {
      Int s = 0;
      for (int k = 1; k <= n; ++k) s += rs.pos_roots[a][k] * c[k][j];
      row[j] = s;
    }
    rs.pairing_row[a] = row;
  }

  rs.two_rho.assign(n + 1, 0);
  for (const auto& r : rs.pos_roots)
    for (int j = 1; j <= n; ++j) rs.two_rho[j] += r[j];

  // highest root: the unique positive root of maximal height
  Int best = -1;
  for (size_t a = 0; a < rs.pos_roots.size(); ++a) {
    Int h = std::accumulate(rs.pos_roots[a].begin(), rs.pos_roots[a].end(),
                            Int(0));
    if (h > best) {
      best = h;
      rs.theta_id = static_cast<int>(a);
    }
  }

  // fundamental coweights: rows of (C^T)^{-1}
  std::vector<QVec> ct(n + 1, QVec(n + 1, Rat(0)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) ct[i][j] = c[j][i];
  rs.fund_coweight = rat_inverse(ct, n);

  // scaled rho^vee used as the faithful key base
  QVec rho_v = qvec_zero(n);
  for (int i = 1; i <= n; ++i) rho_v = qvec_add(rho_v, rs.fund_coweight[i]);
  BigInt lcm = 1;
  for (int j = 1; j <= n; ++j)
    lcm = boost::multiprecision::lcm(lcm, denominator(rho_v[j]));
  rs.key_base.assign(n + 1, 0);
  for (int j = 1; j <= n; ++j)
    rs.key_base[j] =
        static_cast<Int>(numerator(rho_v[j]) * (lcm / denominator(rho_v[j])));

  // affine Cartan matrix: node 0 attached through -theta
  rs.affine_cartan.assign(n + 1, IVec(n + 1, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) rs.affine_cartan[i][j] = c[i][j];
  rs.affine_cartan[0][0] = 2;
  for (int j = 1; j <= n; ++j) {
    rs.affine_cartan[0][j] = -rs.pairing_row[rs.theta_id][j];
    Int s = 0;
    for (int k = 1; k <= n; ++k) s += c[j][k] * rs.pos_coroots[rs.theta_id][k];
    rs.affine_cartan[j][0] = -s;
  }
  return rs;
}

QVec fundamental_coweight(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw std::invalid_argument("fundamental coweight index out of range");
  return rs.fund_coweight[i];
}

std::vector<int> minuscule_coweight_indices(const RootSystem& rs) {
  std::vector<int> out;
  const IVec& theta = rs.pos_roots[rs.theta_id];
  for (int i = 1; i <= rs.rank(); ++i)
    if (theta[i] == 1) out.push_back(i);
  return out;
}

int DiagramAutomorphism::order() const {
  int n = static_cast<int>(perm.size()) - 1;
  int ord = 1;
  std::vector<int> cur(perm);
  auto is_id = [&] {
    for (int i = 0; i <= n; ++i)
      if (cur[i] != i) return false;
    return true;
  };
  while (!is_id()) {
    std::vector<int> next(n + 1);
    for (int i = 0; i <= n; ++i) next[i] = perm[cur[i]];
    cur = next;
    ++ord;
  }
  return ord;
}

bool DiagramAutomorphism::is_identity() const {
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramAutomorphism DiagramAutomorphism::identity(int rank) {
  DiagramAutomorphism g;
  g.perm.resize(rank + 1);
  for (int i = 0; i <= rank; ++i) g.perm[i] = i;
  return g;
}

DiagramAutomorphism DiagramAutomorphism::finite(const RootSystem& rs,
                                                const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != rs.rank() + 1 || perm[0] != 0)
    throw std::invalid_argument("finite automorphism: bad permutation size");
  const auto& c = rs.datum.cartan;
  for (int i = 1; i <= rs.rank(); ++i)
    for (int j = 1; j <= rs.rank(); ++j)
      if (c[perm[i]][perm[j]] != c[i][j])
        throw std::invalid_argument(
            "permutation does not preserve the Cartan matrix");
  DiagramAutomorphism g;
  g.perm = perm;
  return g;
}

DiagramAutomorphism DiagramAutomorphism::finite_by_code(const RootSystem& rs,
                                                        int code) {
  int n = rs.rank();
  if (code == 1) return identity(n);
  std::vector<int> p(n + 1);
  for (int i = 0; i <= n; ++i) p[i] = i;
  if (code == 2) {
    switch (rs.type()) {
      case 'A':
        if (n < 2) throw std::invalid_argument("A_1 has no diagram flip");
        for (int i = 1; i <= n; ++i) p[i] = n + 1 - i;
        break;
      case 'D':
        std::swap(p[n - 1], p[n]);
        break;
      case 'E':
        if (n != 6)
          throw std::invalid_argument("only E6 has a diagram involution");
        p[1] = 6; p[6] = 1; p[3] = 5; p[5] = 3;
        break;
      default:
        throw std::invalid_argument(std::string("type ") + rs.type() +
                                    " has no nontrivial diagram automorphism");
    }
  } else if (code == 3) {
    if (rs.type() != 'D' || n != 4)
      throw std::invalid_argument("triality only exists for D4");
    p[1] = 3; p[3] = 4; p[4] = 1;
  } else {
    throw std::invalid_argument("sigma0 code must be 1, 2 or 3");
  }
  return finite(rs, p);
}

DiagramAutomorphism DiagramAutomorphism::affine_auto(
    const RootSystem& rs, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != rs.rank() + 1)
    throw std::invalid_argument("affine automorphism: bad permutation size");
  const auto& c = rs.affine_cartan;
  for (int i = 0; i <= rs.rank(); ++i)
    for (int j = 0; j <= rs.rank(); ++j)
      if (c[perm[i]][perm[j]] != c[i][j])
        throw std::invalid_argument(
            "permutation does not preserve the affine Cartan matrix");
  DiagramAutomorphism g;
  g.perm = perm;
  g.affine = true;
  return g;
}

std::vector<std::vector<int>> affine_orbits(const RootSystem& rs,
                                            const DiagramAutomorphism& g) {
  if (!g.affine) {
    // a finite automorphism extends to the affine diagram fixing node 0
    return affine_orbits(rs, DiagramAutomorphism::affine_auto(rs, g.perm));
  }
  int n = rs.rank();
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      orb.push_back(j);
      j = g.perm[j];
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(orb);
  }
  return orbits;
}

int affine_orbit_count(const RootSystem& rs, const DiagramAutomorphism& g) {
  return static_cast<int>(affine_orbits(rs, g).size());
}

std::vector<std::vector<int>> finite_orbits(const RootSystem& rs,
                                            const DiagramAutomorphism& g) {
  int n = rs.rank();
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> orbits;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      orb.push_back(j);
      j = g.perm[j];
    }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(orb);
  }
  return orbits;
}

QVec sigma0_apply(const DiagramAutomorphism& sigma0, const QVec& lambda) {
  QVec out(lambda.size(), Rat(0));
  for (size_t j = 1; j < lambda.size(); ++j) out[sigma0.perm[j]] = lambda[j];
  return out;
}

std::string root_system_json(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = std::string(1, rs.type());
  j["rank"] = rs.rank();
  auto mat = nlohmann::json::array();
  for (int i = 1; i <= rs.rank(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 1; k <= rs.rank(); ++k) row.push_back(rs.datum.cartan[i][k]);
    mat.push_back(row);
  }
  j["cartan"] = mat;
  auto roots = nlohmann::json::array();
  for (const auto& r : rs.pos_roots)
    roots.push_back(std::vector<Int>(r.begin() + 1, r.end()));
  j["positive_roots"] = roots;
  j["two_rho"] = std::vector<Int>(rs.two_rho.begin() + 1, rs.two_rho.end());
  auto cw = nlohmann::json::array();
  for (int i = 1; i <= rs.rank(); ++i) {
    auto vec = nlohmann::json::array();
    for (int k = 1; k <= rs.rank(); ++k) {
      const Rat& x = rs.fund_coweight[i][k];
      vec.push_back({numerator(x).convert_to<Int>(),
                     denominator(x).convert_to<Int>()});
    }
    cw.push_back(vec);
  }
  j["fundamental_coweights"] = cw;
  return j.dump(2);
}

}  // namespace qweyl
