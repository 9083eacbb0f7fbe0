#include "skms/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace skms {

QVec qvec_zero(size_t n) { return QVec(n, Rat(0)); }

bool qvec_is_zero(const QVec& v) {
  for (const Rat& x : v)
    if (sign(x) != 0) return false;
  return true;
}

QVec qvec_add(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  QVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVec qvec_scale(const Rat& c, const QVec& v) {
  QVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

Rat qvec_dot(const QVec& a, const QVec& b) {
  assert(a.size() == b.size());
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool qvec_lex_less(const QVec& a, const QVec& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

QMat qmat_identity(size_t n) {
  QMat m(n, qvec_zero(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t r = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  QMat out(r, qvec_zero(c));
  for (size_t i = 0; i < r; ++i) {
    assert(a[i].size() == k);
    for (size_t t = 0; t < k; ++t) {
      if (sign(a[i][t]) == 0) continue;
      for (size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

QVec qmat_apply(const QMat& m, const QVec& v) {
  QVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i) out[i] = qvec_dot(m[i], v);
  return out;
}

QMat qmat_transpose(const QMat& m) {
  size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
  QMat out(c, qvec_zero(r));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) out[j][i] = m[i][j];
  return out;
}

QMat qmat_add(const QMat& a, const QMat& b) {
  QMat out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = qvec_add(a[i], b[i]);
  return out;
}

QMat qmat_scale(const Rat& c, const QMat& m) {
  QMat out(m.size());
  for (size_t i = 0; i < m.size(); ++i) out[i] = qvec_scale(c, m[i]);
  return out;
}

bool qmat_equal(const QMat& a, const QMat& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

size_t qmat_rank(const QMat& m) {
  if (m.empty() || m[0].empty()) return 0;
  size_t r = m.size(), c = m[0].size();
  // Clear denominators row-wise, then Bareiss.
  ZMat a(r, ZVec(c));
  for (size_t i = 0; i < r; ++i) {
    Int l(1);
    for (size_t j = 0; j < c; ++j) l = lcm(l, m[i][j].get_den());
    for (size_t j = 0; j < c; ++j) {
      Rat x = m[i][j] * Rat(l);
      a[i][j] = x.get_num();
    }
  }
  Int prev(1);
  size_t rank = 0;
  for (size_t col = 0; col < c && rank < r; ++col) {
    size_t piv = rank;
    while (piv < r && sign(a[piv][col]) == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[rank]);
    for (size_t i = rank + 1; i < r; ++i) {
      for (size_t j = col + 1; j < c; ++j) {
        Int t = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        a[i][j] = t / prev;  // exact by Bareiss
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMat& a) {
  std::vector<size_t> pivots;
  if (a.empty()) return pivots;
  size_t r = a.size(), c = a[0].size(), row = 0;
  for (size_t col = 0; col < c && row < r; ++col) {
    size_t piv = row;
    while (piv < r && sign(a[piv][col]) == 0) ++piv;
    if (piv == r) continue;
    std::swap(a[piv], a[row]);
    Rat inv = 1 / a[row][col];
    for (size_t j = col; j < c; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < r; ++i) {
      if (i == row || sign(a[i][col]) == 0) continue;
      Rat f = a[i][col];
      for (size_t j = col; j < c; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<QVec> qmat_solve(const QMat& a, const QVec& b) {
  size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
  QMat aug(r);
  for (size_t i = 0; i < r; ++i) {
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  std::vector<size_t> pivots = rref(aug);
  for (size_t i = pivots.size(); i < r; ++i)
    if (sign(aug[i][c]) != 0) return std::nullopt;
  if (!pivots.empty() && pivots.back() == c) return std::nullopt;
  QVec x = qvec_zero(c);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][c];
  return x;
}

std::optional<QMat> qmat_inverse(const QMat& m) {
  size_t n = m.size();
  QMat aug(n);
  for (size_t i = 0; i < n; ++i) {
    assert(m[i].size() == n);
    aug[i] = m[i];
    for (size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rat(1) : Rat(0));
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n) return std::nullopt;
  QMat inv(n, qvec_zero(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<QVec> qmat_kernel(const QMat& a) {
  if (a.empty()) return {};
  size_t c = a[0].size();
  QMat m = a;
  std::vector<size_t> pivots = rref(m);
  std::vector<bool> is_pivot(c, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (size_t j = 0; j < c; ++j) {
    if (is_pivot[j]) continue;
    QVec v = qvec_zero(c);
    v[j] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool qmat_positive_definite(const QMat& m) {
  size_t n = m.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (m[i][j] != m[j][i]) return false;
  // Leading principal minors via rational Gaussian elimination.
  QMat a = m;
  for (size_t k = 0; k < n; ++k) {
    if (sign(a[k][k]) <= 0) return false;
    for (size_t i = k + 1; i < n; ++i) {
      Rat f = a[i][k] / a[k][k];
      for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

ZVec primitive_integer(const QVec& v) {
  Int l(1);
  for (const Rat& x : v) l = lcm(l, x.get_den());
  ZVec out(v.size());
  Int g(0);
  for (size_t i = 0; i < v.size(); ++i) {
    Rat x = v[i] * Rat(l);
    out[i] = x.get_num();
    g = gcd(g, out[i]);
  }
  if (sign(g) > 0)
    for (Int& x : out) x /= g;
  return out;
}

ZVec primitive_lex_positive(const QVec& v) {
  ZVec out = primitive_integer(v);
  for (const Int& x : out) {
    if (sign(x) == 0) continue;
    if (sign(x) < 0)
      for (Int& y : out) y = -y;
    break;
  }
  return out;
}

ZMat integer_kernel(const ZMat& m) {
  size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
  if (c == 0) return {};
  if (r == 0) {
    ZMat basis(c, ZVec(c, Int(0)));
    for (size_t i = 0; i < c; ++i) basis[i][i] = 1;
    return basis;
  }
  // Smith normal form: track the right transform V with M V = (transformed).
  ZMat a = m;
  ZMat v(c, ZVec(c, Int(0)));
  for (size_t i = 0; i < c; ++i) v[i][i] = 1;

  auto col_swap = [&](size_t i, size_t j) {
    for (size_t t = 0; t < r; ++t) std::swap(a[t][i], a[t][j]);
    for (size_t t = 0; t < c; ++t) std::swap(v[t][i], v[t][j]);
  };
  auto col_add = [&](size_t dst, size_t src, const Int& f) {
    for (size_t t = 0; t < r; ++t) a[t][dst] += f * a[t][src];
    for (size_t t = 0; t < c; ++t) v[t][dst] += f * v[t][src];
  };
  auto row_add = [&](size_t dst, size_t src, const Int& f) {
    for (size_t t = 0; t < c; ++t) a[dst][t] += f * a[src][t];
  };

  size_t k = 0;
  while (k < r && k < c) {
    // Find a nonzero pivot in the lower-right block.
    size_t pi = k, pj = k;
    bool found = false;
    for (size_t i = k; i < r && !found; ++i)
      for (size_t j = k; j < c && !found; ++j)
        if (sign(a[i][j]) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    std::swap(a[pi], a[k]);
    col_swap(pj, k);
    // Reduce until pivot divides its row and column, then clear.
    bool again = true;
    while (again) {
      again = false;
      for (size_t i = k + 1; i < r; ++i) {
        if (sign(a[i][k]) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][k].get_mpz_t(), a[k][k].get_mpz_t());
        row_add(i, k, -q);
        if (sign(a[i][k]) != 0) {
          std::swap(a[i], a[k]);
          again = true;
        }
      }
      for (size_t j = k + 1; j < c; ++j) {
        if (sign(a[k][j]) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[k][j].get_mpz_t(), a[k][k].get_mpz_t());
        col_add(j, k, -q);
        if (sign(a[k][j]) != 0) {
          col_swap(j, k);
          again = true;
        }
      }
    }
    ++k;
  }
  ZMat basis;
  for (size_t j = k; j < c; ++j) {
    ZVec col(c);
    for (size_t t = 0; t < c; ++t) col[t] = v[t][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace skms
