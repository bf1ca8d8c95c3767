#pragma once

#include <cstdlib>
#include <map>
#include <vector>

#include "subgrow/presentation.hpp"

namespace subgrow {

// Dense row-major matrix of arbitrary-precision integers. Rows index
// relators, columns index generators.
struct IntegerMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntegerMatrix() = default;
  IntegerMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {
    if (r < 0 || c < 0) throw input_error("negative matrix dimension");
  }

  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Entry (i,j) = signed exponent sum of generator j in relator i.
inline IntegerMatrix abelianization_matrix(const FinitePresentation& P) {
  IntegerMatrix M(static_cast<int>(P.relators.size()), P.num_generators);
  for (int i = 0; i < M.rows; ++i)
    for (const Letter& l : P.relators[i].letters()) M.at(i, l.gen) += l.sign;
  return M;
}

// Elementary divisors d1 | d2 | ... | d_rank, all positive.
struct SmithForm {
  std::vector<Int> divisors;
  int rank = 0;
  int rows = 0;
  int cols = 0;

  Int torsion_order() const {
    Int t = 1;
    for (const Int& d : divisors)
      if (d > 1) t *= d;
    return t;
  }
};

// Diagonalization by unimodular row/column operations. Pivoting picks the
// smallest nonzero absolute value in the remaining submatrix, which keeps
// entry growth tame at desk scale.
inline SmithForm smith_normal_form(IntegerMatrix M, std::size_t max_entries = 16u << 20) {
  if (M.a.size() > max_entries)
    throw resource_error("smith_normal_form: matrix exceeds entry cap " +
                         std::to_string(max_entries));
  using boost::multiprecision::abs;
  const int n = std::min(M.rows, M.cols);
  SmithForm out;
  out.rows = M.rows;
  out.cols = M.cols;

  for (int t = 0; t < n; ++t) {
    // Locate the smallest nonzero entry of the trailing submatrix.
    int pr = -1, pc = -1;
    for (int i = t; i < M.rows; ++i)
      for (int j = t; j < M.cols; ++j) {
        const Int& v = M.at(i, j);
        if (v == 0) continue;
        if (pr < 0 || abs(v) < abs(M.at(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;  // trailing submatrix is zero

    for (;;) {
      if (pr != t)
        for (int j = t; j < M.cols; ++j) std::swap(M.at(t, j), M.at(pr, j));
      if (pc != t)
        for (int i = t; i < M.rows; ++i) std::swap(M.at(i, t), M.at(i, pc));

      // Reduce column and row by the pivot.
      bool clean = true;
      for (int i = t + 1; i < M.rows; ++i) {
        if (M.at(i, t) == 0) continue;
        Int q = M.at(i, t) / M.at(t, t);
        if (q != 0)
          for (int j = t; j < M.cols; ++j) M.at(i, j) -= q * M.at(t, j);
        if (M.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < M.cols; ++j) {
        if (M.at(t, j) == 0) continue;
        Int q = M.at(t, j) / M.at(t, t);
        if (q != 0)
          for (int i = t; i < M.rows; ++i) M.at(i, j) -= q * M.at(i, t);
        if (M.at(t, j) != 0) clean = false;
      }

      if (clean) {
        // Pivot must divide every remaining entry; if not, fold the offending
        // row into row t and continue eliminating.
        int br = -1, bc = -1;
        for (int i = t + 1; i < M.rows && br < 0; ++i)
          for (int j = t + 1; j < M.cols; ++j)
            if (M.at(i, j) % M.at(t, t) != 0) {
              br = i;
              bc = j;
              break;
            }
        if (br < 0) break;
        for (int j = t; j < M.cols; ++j) M.at(t, j) += M.at(br, j);
        (void)bc;
      }

      // Re-pick the pivot within the trailing submatrix.
      pr = -1;
      pc = -1;
      for (int i = t; i < M.rows; ++i)
        for (int j = t; j < M.cols; ++j) {
          const Int& v = M.at(i, j);
          if (v == 0) continue;
          if (pr < 0 || abs(v) < abs(M.at(pr, pc))) {
            pr = i;
            pc = j;
          }
        }
    }

    out.divisors.push_back(abs(M.at(t, t)));
  }

  out.rank = static_cast<int>(out.divisors.size());
  return out;
}

// Row reduction over F_p; a deliberately separate code path from the SNF so
// the universal-coefficients identity is a real cross-check.
inline int rank_mod_p(const IntegerMatrix& M, long p) {
  if (!is_small_prime(p)) throw input_error("rank_mod_p: modulus must be prime");
  std::vector<std::vector<long>> m(M.rows, std::vector<long>(M.cols));
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      Int r = M.at(i, j) % p;
      if (r < 0) r += p;
      m[i][j] = static_cast<long>(r);
    }
  int rank = 0;
  for (int col = 0; col < M.cols && rank < M.rows; ++col) {
    int piv = -1;
    for (int i = rank; i < M.rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    // Normalize pivot row to 1 via modular inverse (p prime).
    long inv = 1, base = m[rank][col] % p, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (int j = col; j < M.cols; ++j) m[rank][j] = m[rank][j] * inv % p;
    for (int i = 0; i < M.rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      long f = m[i][col];
      for (int j = col; j < M.cols; ++j)
        m[i][j] = ((m[i][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// The first-homology complexity measures: b1 over Q, the torsion order of
// H1(-, Z), and b1 over F_p for each requested prime.
struct HomologySummary {
  int b1 = 0;
  Int torsion_order = 1;
  std::map<long, int> b1_mod;

  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

inline HomologySummary homology_summary(const FinitePresentation& P,
                                        const std::vector<long>& primes = {2}) {
  IntegerMatrix M = abelianization_matrix(P);
  SmithForm snf = smith_normal_form(M);
  HomologySummary h;
  h.b1 = P.num_generators - snf.rank;
  h.torsion_order = snf.torsion_order();
  for (long p : primes) h.b1_mod[p] = P.num_generators - rank_mod_p(M, p);
  for (auto& [p, v] : h.b1_mod)
    if (v < h.b1)
      throw internal_error("universal coefficients violated: b1_mod[" +
                           std::to_string(p) + "] < b1");
  return h;
}

}  // namespace subgrow
