#include "stdlat/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "stdlat/errors.hpp"

namespace stdlat {

namespace {

void check_square(const IntMatrix& m) {
  for (const auto& r : m) {
    if (r.size() != m.size()) throw InputError("matrix is not square");
  }
}

void row_axpy(IntVector& target, const Integer& q, const IntVector& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

// Replaces (r1, r2) by (s*r1 + t*r2, -b/g*r1 + a/g*r2); determinant 1.
void combine_rows(IntVector& r1, IntVector& r2, const Integer& s,
                  const Integer& t, const Integer& a_g, const Integer& b_g) {
  for (std::size_t j = 0; j < r1.size(); ++j) {
    Integer x = r1[j];
    Integer y = r2[j];
    r1[j] = s * x + t * y;
    r2[j] = a_g * y - b_g * x;
  }
}

// Reduced row echelon form over Q in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& r : m) out.push_back(stdlat::to_rational(r));
  return out;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  check_square(m);
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Integer determinant(const LatticeBasis& b) { return determinant(b.rows()); }

HermiteForm hermite_form(const IntMatrix& m) {
  HermiteForm out;
  out.h = m;
  out.u = identity_matrix(m.size());
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  auto& h = out.h;
  auto& u = out.u;

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (h[i][c] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 h[r][c].get_mpz_t(), h[i][c].get_mpz_t());
      Integer a_g = h[r][c] / g;
      Integer b_g = h[i][c] / g;
      combine_rows(h[r], h[i], s, t, a_g, b_g);
      combine_rows(u[r], u[i], s, t, a_g, b_g);
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      for (auto& x : h[r]) x = -x;
      for (auto& x : u[r]) x = -x;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
      if (q == 0) continue;
      row_axpy(h[i], q, h[r]);
      row_axpy(u[i], q, u[r]);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

bool same_lattice(const LatticeBasis& b, const LatticeBasis& c) {
  if (b.dim() != c.dim()) {
    throw InputError("same_lattice: dimension mismatch");
  }
  return hermite_form(b.rows()).h == hermite_form(c.rows()).h;
}

Membership member(const IntMatrix& generators, const IntVector& v) {
  Membership out;
  if (generators.empty()) {
    out.is_member = std::all_of(v.begin(), v.end(),
                                [](const Integer& x) { return x == 0; });
    return out;
  }
  if (v.size() != generators[0].size()) {
    throw InputError("member: vector length does not match the basis");
  }
  auto x = solve_left(generators, stdlat::to_rational(v));
  if (!x) return out;
  IntVector coeffs;
  coeffs.reserve(x->size());
  for (const auto& c : *x) {
    if (c.get_den() != 1) return out;
    coeffs.push_back(c.get_num());
  }
  out.is_member = true;
  out.coeffs = std::move(coeffs);
  return out;
}

Membership member(const LatticeBasis& b, const IntVector& v) {
  return member(b.rows(), v);
}

bool is_basis_of(const IntMatrix& vectors, const IntMatrix& generators) {
  if (vectors.size() != generators.size()) return false;
  for (const auto& v : vectors) {
    if (!member(generators, v)) return false;
  }
  return gram_determinant(vectors) == gram_determinant(generators);
}

bool is_basis_of(const IntMatrix& vectors, const LatticeBasis& b) {
  if (vectors.size() != b.dim()) return false;
  for (const auto& v : vectors) {
    if (v.size() != b.dim()) return false;
    if (!member(b, v)) return false;
  }
  return abs(determinant(vectors)) == b.covolume();
}

GsoData gso(const IntMatrix& generators) {
  const std::size_t k = generators.size();
  GsoData g;
  g.mu.assign(k, RatVector(k, 0));
  g.bstar_sq.assign(k, 0);
  g.bstar.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    RatVector bi = stdlat::to_rational(generators[i]);
    RatVector star = bi;
    for (std::size_t j = 0; j < i; ++j) {
      g.mu[i][j] = dot(bi, g.bstar[j]) / g.bstar_sq[j];
      for (std::size_t c = 0; c < star.size(); ++c) {
        star[c] -= g.mu[i][j] * g.bstar[j][c];
      }
    }
    g.mu[i][i] = 1;
    g.bstar_sq[i] = dot(star, star);
    if (g.bstar_sq[i] == 0) {
      throw InputError("gso: generators are linearly dependent");
    }
    g.bstar.push_back(std::move(star));
  }
  return g;
}

GsoData gso(const LatticeBasis& b) { return gso(b.rows()); }

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  RatMatrix a = to_rational(m);
  return rref(a, m[0].size()).size();
}

Integer gram_determinant(const IntMatrix& generators) {
  IntMatrix gram(generators.size(), IntVector(generators.size()));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) {
      gram[i][j] = dot(generators[i], generators[j]);
    }
  }
  return determinant(gram);
}

std::optional<RatVector> solve_left(const IntMatrix& generators,
                                    const RatVector& v) {
  const std::size_t k = generators.size();
  const std::size_t n = v.size();
  // Columns of the system are the generators; unknowns are their weights.
  RatMatrix a(n, RatVector(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = generators[i][j];
    a[j][k] = v[j];
  }
  auto pivots = rref(a, k + 1);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  if (pivots.size() != k) {
    throw InputError("solve_left: generators are linearly dependent");
  }
  RatVector x(k);
  for (std::size_t r = 0; r < k; ++r) x[pivots[r]] = a[r][k];
  return x;
}

IntMatrix integer_left_kernel(const IntMatrix& m) {
  HermiteForm hf = hermite_form(m);
  return IntMatrix(hf.u.begin() + static_cast<std::ptrdiff_t>(hf.rank),
                   hf.u.end());
}

IntMatrix integer_right_kernel(const IntMatrix& m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  RatMatrix a = to_rational(m);
  auto pivots = rref(a, cols);
  IntMatrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    RatVector z(cols, 0);
    z[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = -a[r][free];
    Integer den = 1;
    for (const auto& x : z) den = lcm(den, Integer(x.get_den()));
    IntVector zi(cols);
    Integer g = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      Rational scaled = z[j] * den;
      zi[j] = scaled.get_num();
      g = gcd(g, zi[j]);
    }
    for (auto& x : zi) x /= g;
    out.push_back(std::move(zi));
  }
  return out;
}

Integer maximal_minor_gcd(const IntMatrix& m) {
  const std::size_t k = m.size();
  if (k == 0) return 1;
  const std::size_t n = m[0].size();
  if (k > n) return 0;
  std::vector<std::size_t> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  Integer g = 0;
  IntMatrix sub(k, IntVector(k));
  while (true) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][cols[j]];
    }
    g = gcd(g, determinant(sub));
    if (g == 1) return g;
    // Next k-combination of {0..n-1} in lexicographic order.
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

RatMatrix inverse(const IntMatrix& square) {
  check_square(square);
  const std::size_t n = square.size();
  RatMatrix a(n, RatVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = square[i][j];
    a[i][n + i] = 1;
  }
  auto pivots = rref(a, n);
  if (pivots.size() != n) throw InputError("inverse: matrix is singular");
  RatMatrix out(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  }
  return out;
}

RatVector RowEchelon::reduce(const IntVector& v) const {
  RatVector r = stdlat::to_rational(v);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational f = r[pivots_[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) r[j] -= f * rows_[i][j];
  }
  return r;
}

bool RowEchelon::is_independent(const IntVector& v) const {
  RatVector r = reduce(v);
  return std::any_of(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
}

bool RowEchelon::add(const IntVector& v) {
  RatVector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
  if (it == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  const Rational inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

Integer ceil_sqrt(const Rational& q) {
  if (q <= 0) return 0;
  const Integer& a = q.get_num();
  const Integer& b = q.get_den();
  Integer s = sqrt(Integer(a * b));
  Integer m = s / b;
  while (m * m * b < a) ++m;
  while (m > 0 && (m - 1) * (m - 1) * b >= a) --m;
  return m;
}

Integer floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer ceil_of(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer round_half_even(const Rational& q) {
  Integer f = floor_of(q);
  Rational frac = q - Rational(f);
  static const Rational half(1, 2);
  if (frac < half) return f;
  if (frac > half) return f + 1;
  return (f % 2 == 0) ? f : Integer(f + 1);
}

}  // namespace stdlat
