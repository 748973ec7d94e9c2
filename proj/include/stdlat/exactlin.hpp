#pragma once

// Exact integer and rational linear algebra.
//
// Functions taking an IntMatrix of "generators" accept k linearly independent
// rows in n-dimensional space (k <= n), i.e. a lattice that is not necessarily
// full-rank in its ambient space. The LatticeBasis overloads are the square
// special case.

#include <cstddef>
#include <optional>
#include <vector>

#include "stdlat/types.hpp"

namespace stdlat {

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);
Integer determinant(const LatticeBasis& b);

// Row Hermite normal form.
//
// Convention: H = U·M is in upper row-echelon form; every pivot is positive;
// entries above a pivot lie in [0, pivot); zero rows come last. U is square
// (rows(M) x rows(M)) and unimodular. H is unique for a given row span, so
// two matrices generate the same Z-module iff their nonzero H rows coincide.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
};

HermiteForm hermite_form(const IntMatrix& m);

// True iff both bases generate the same lattice. Throws InputError on a
// dimension mismatch.
bool same_lattice(const LatticeBasis& b, const LatticeBasis& c);

struct Membership {
  bool is_member = false;
  // Integer coefficients x with x·B = v; empty unless is_member.
  IntVector coeffs;

  explicit operator bool() const { return is_member; }
};

Membership member(const LatticeBasis& b, const IntVector& v);
Membership member(const IntMatrix& generators, const IntVector& v);

// True iff `vectors` is a basis of the lattice: every vector lies in it and
// the covolumes agree.
bool is_basis_of(const IntMatrix& vectors, const LatticeBasis& b);
bool is_basis_of(const IntMatrix& vectors, const IntMatrix& generators);

struct GsoData {
  // Lower triangular, unit diagonal: b_i = sum_j mu[i][j] * bstar_j.
  RatMatrix mu;
  RatVector bstar_sq;
  RatMatrix bstar;
};

GsoData gso(const LatticeBasis& b);
GsoData gso(const IntMatrix& generators);

std::size_t rank(const IntMatrix& m);

// det(G G^T); equals det(G)^2 for square G.
Integer gram_determinant(const IntMatrix& generators);

// Unique x with x·G = v when it exists (G has independent rows).
std::optional<RatVector> solve_left(const IntMatrix& generators,
                                    const RatVector& v);

// Basis of {x in Z^k : x·M = 0} for a k x m integer matrix M.
IntMatrix integer_left_kernel(const IntMatrix& m);

// Basis of {z in Q^m : M z = 0}, scaled to primitive integer vectors.
IntMatrix integer_right_kernel(const IntMatrix& m);

// gcd of all k x k minors of a k x n matrix (0 if rank < k).
Integer maximal_minor_gcd(const IntMatrix& m);

RatMatrix inverse(const IntMatrix& square);

// Incremental rank tracking over Q: add() reports whether a vector is
// independent of everything accepted so far, and keeps it if so.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t ambient_dim) : dim_(ambient_dim) {}

  bool is_independent(const IntVector& v) const;
  bool add(const IntVector& v);
  std::size_t rank() const { return rows_.size(); }

 private:
  RatVector reduce(const IntVector& v) const;

  std::size_t dim_;
  RatMatrix rows_;
  std::vector<std::size_t> pivots_;
};

// Smallest integer m with m*m >= q (q >= 0).
Integer ceil_sqrt(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
// Nearest integer; exact halves go to the even neighbour.
Integer round_half_even(const Rational& q);

}  // namespace stdlat
