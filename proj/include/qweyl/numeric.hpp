#pragma once

// Exact arithmetic primitives shared by all modules: arbitrary-precision
// rationals, small integer matrices acting on (co)root lattices, and the
// fraction-free rank computation used for reflection length.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qweyl {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;   // integer lattice vector, slot 0 reserved
using QVec = std::vector<Rat>;   // rational lattice vector, slot 0 reserved

// Vectors and matrices are indexed 1..n (Bourbaki labels); slot 0 is kept
// zero so that affine-diagram data can use node 0 without re-indexing.
constexpr int kMaxDim = 9;

inline BigInt rat_floor(const Rat& r) {
  BigInt num = numerator(r), den = denominator(r);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline Rat rat_frac(const Rat& r) { return r - Rat(rat_floor(r)); }

std::string rat_str(const Rat& r);
Rat rat_parse(const std::string& s);

inline QVec to_qvec(const IVec& v) {
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = v[i];
  return q;
}

inline QVec qvec_zero(int n) { return QVec(n + 1, Rat(0)); }

inline QVec qvec_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec qvec_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec qvec_scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

// Square integer matrix with live block [1..n] x [1..n]; everything outside
// the block stays zero so whole-array equality is element equality.
struct IntMat {
  int n = 0;
  std::array<Int, kMaxDim * kMaxDim> a{};

  static IntMat identity(int n) {
    IntMat m;
    m.n = n;
    for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
    return m;
  }

  Int& at(int i, int j) { return a[i * kMaxDim + j]; }
  Int at(int i, int j) const { return a[i * kMaxDim + j]; }

  IntMat mul(const IntMat& o) const {
    IntMat r;
    r.n = n;
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        Int v = at(i, k);
        if (v == 0) continue;
        for (int j = 1; j <= n; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  IVec apply(const IVec& v) const {
    IVec r(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      Int s = 0;
      for (int j = 1; j <= n; ++j) s += at(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  QVec apply(const QVec& v) const {
    QVec r(n + 1, Rat(0));
    for (int i = 1; i <= n; ++i) {
      Rat s = 0;
      for (int j = 1; j <= n; ++j)
        if (at(i, j) != 0) s += Rat(at(i, j)) * v[j];
      r[i] = s;
    }
    return r;
  }

  bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }
};

// rank over Q of (m - c*I) restricted to the live block, by fraction-free
// elimination in __int128 (entries are tiny; Hadamard bound << 2^126).
int int_rank_minus_identity(const IntMat& m);

// exact inverse of an n x n rational matrix given as rows[1..n][1..n]
std::vector<QVec> rat_inverse(const std::vector<QVec>& rows, int n);

struct IVecHash {
  size_t operator()(const IVec& v) const {
    size_t h = 1469598103934665603ull;
    for (Int x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Runs fn(i) for i in [0, count). Worker count comes from the QWEYL_WORKERS
// environment variable, defaulting to hardware_concurrency. fn must only
// touch per-index state.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

}  // namespace qweyl
