#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "vecrel/scalar.hpp"

namespace vecrel {

using Vector = std::vector<Scalar>;

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);
bool is_zero_vector(const Vector& v);

// Scales a rational vector to integer entries with content 1 and positive
// leading nonzero entry. Canonical line representative.
Vector canonical_direction(const Vector& v);

// True iff a = c*b for some nonzero scalar c (both nonzero).
bool proportional(const Vector& a, const Vector& b);

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& cols);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector apply(const Vector& v) const;  // this * v

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  // Row-reduces in place to RREF; returns pivot column indices.
  std::vector<std::size_t> rref();

  std::size_t rank() const;
  Scalar determinant() const;  // square only
  Matrix inverse() const;      // square, invertible only

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Basis of the right null space {x : m x = 0}. Deterministic: free columns
// in increasing order, each basis vector has a 1 in its free slot.
std::vector<Vector> kernel(const Matrix& m);

// Exact determinant of the square submatrix using all rows and the given
// columns (0-based, in the given order). |cols| must equal m.rows().
Scalar minor_det(const Matrix& m, const std::vector<std::size_t>& cols);

// A subspace of Q^k given by an independent basis. The trivial subspace has
// an empty basis.
class Subspace {
 public:
  Subspace(std::size_t ambient, std::vector<Vector> basis);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& gens);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
};

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// A point of projective space, stored as any nonzero homogeneous
// representative. Equality is equality up to nonzero scale.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(Vector coords);
  const Vector& coords() const { return v_; }
  std::size_t ambient() const { return v_.size(); }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return proportional(a.v_, b.v_);
  }
  friend bool operator!=(const ProjectivePoint& a, const ProjectivePoint& b) { return !(a == b); }

 private:
  Vector v_;
};

// True iff the points span a subspace of dimension <= 2 (lie on one
// projective line).
bool collinear(const std::vector<ProjectivePoint>& pts);

// Multi-ratio of 2k points whose consecutive triples {P_{2i-1},P_{2i},P_{2i+1}}
// are collinear (cyclically): the product of signed ratios
// (P_{2i-1}-P_{2i})/(P_{2i}-P_{2i+1}) in any affine chart avoiding the points.
// Computed chart-independently from homogeneous coordinates. Throws
// std::domain_error when two consecutive points at a denominator position
// coincide or a collinearity precondition fails.
Scalar multi_ratio(const std::vector<ProjectivePoint>& pts);

// Line through two distinct projective points / affine span of points.
Subspace join(const ProjectivePoint& a, const ProjectivePoint& b);
Subspace join(const std::vector<ProjectivePoint>& pts);

// The unique intersection point of two subspaces meeting in a line.
// Throws std::domain_error if dim(intersection) != 1.
ProjectivePoint meet_point(const Subspace& a, const Subspace& b);

}  // namespace vecrel
