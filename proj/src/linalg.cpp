#include "vecrel/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace vecrel {

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector canonical_direction(const Vector& v) {
  mpz_class den_lcm = 1;
  for (const Scalar& s : v) {
    mpz_class d = s.den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    den_lcm = den_lcm / g * d;
  }
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class content = 0;
  for (const Scalar& s : v) {
    mpz_class z = s.num() * (den_lcm / s.den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    ints.push_back(z);
  }
  if (content == 0) return Vector(v.size(), Scalar(0));
  int lead = 0;
  for (const mpz_class& z : ints) {
    if (z != 0) {
      lead = sgn(z);
      break;
    }
  }
  if (lead < 0) content = -content;
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Scalar(mpz_class(ints[i] / content));
  return r;
}

bool proportional(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  if (is_zero_vector(a) || is_zero_vector(b)) return false;
  // a = c b: cross-multiply a_i b_j == a_j b_i for all pairs, and supports match.
  std::size_t i0 = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i].is_zero()) != (b[i].is_zero())) return false;
    if (!a[i].is_zero() && i0 == a.size()) i0 = i;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] * b[i0] != a[i0] * b[i]) return false;
  }
  return true;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = init.size();
  cols_ = rows_ ? init.begin()->size() : 0;
  a_.resize(rows_ * cols_);
  std::size_t r = 0;
  for (const auto& row : init) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    std::size_t c = 0;
    for (long x : row) at(r, c++) = Scalar(x);
    ++r;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  Matrix m(cols[0].size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows_) throw std::invalid_argument("ragged columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vector Matrix::col(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += at(i, k) * o.at(k, j);
    }
  return p;
}

Vector Matrix::apply(const Vector& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix apply shape mismatch");
  Vector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t pc = 0; pc < cols_ && pr < rows_; ++pc) {
    std::size_t sel = rows_;
    for (std::size_t r = pr; r < rows_; ++r) {
      if (!at(r, pc).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == rows_) continue;
    if (sel != pr)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(sel, c), at(pr, c));
    Scalar inv = at(pr, pc).inv();
    for (std::size_t c = pc; c < cols_; ++c) at(pr, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr || at(r, pc).is_zero()) continue;
      Scalar f = at(r, pc);
      for (std::size_t c = pc; c < cols_; ++c) at(r, c) -= f * at(pr, c);
    }
    pivots.push_back(pc);
    ++pr;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return m.rref().size();
}

Scalar Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
  Matrix m = *this;
  Scalar det(1);
  for (std::size_t p = 0; p < rows_; ++p) {
    std::size_t sel = rows_;
    for (std::size_t r = p; r < rows_; ++r) {
      if (!m.at(r, p).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == rows_) return Scalar(0);
    if (sel != p) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(sel, c), m.at(p, c));
      det = -det;
    }
    det *= m.at(p, p);
    Scalar inv = m.at(p, p).inv();
    for (std::size_t r = p + 1; r < rows_; ++r) {
      if (m.at(r, p).is_zero()) continue;
      Scalar f = m.at(r, p) * inv;
      for (std::size_t c = p; c < cols_; ++c) m.at(r, c) -= f * m.at(p, c);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = Scalar(1);
  }
  auto piv = aug.rref();
  if (piv.size() != rows_ || piv.back() >= cols_) throw std::domain_error("matrix not invertible");
  Matrix inv(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  return inv;
}

std::vector<Vector> kernel(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots = r.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Scalar minor_det(const Matrix& m, const std::vector<std::size_t>& cols) {
  if (cols.size() != m.rows()) throw std::invalid_argument("minor: column count must equal row count");
  Matrix sub(m.rows(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c] >= m.cols()) throw std::out_of_range("minor: column index");
    for (std::size_t r = 0; r < m.rows(); ++r) sub.at(r, c) = m.at(r, cols[c]);
  }
  return sub.determinant();
}

Subspace::Subspace(std::size_t ambient, std::vector<Vector> basis)
    : ambient_(ambient), basis_(std::move(basis)) {
  for (const Vector& v : basis_)
    if (v.size() != ambient_) throw std::invalid_argument("subspace basis dimension mismatch");
  if (!basis_.empty() && Matrix::from_rows(basis_).rank() != basis_.size())
    throw std::invalid_argument("subspace basis not independent");
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& gens) {
  Matrix m = gens.empty() ? Matrix(0, ambient) : Matrix::from_rows(gens);
  auto pivots = m.rref();
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(m.row(i));
  return Subspace(ambient, std::move(basis));
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) return false;
  if (is_zero_vector(v)) return true;
  std::vector<Vector> gens = basis_;
  gens.push_back(v);
  return Matrix::from_rows(gens).rank() == basis_.size();
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace ambient mismatch");
  std::vector<Vector> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Subspace::span(a.ambient(), gens);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace ambient mismatch");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient(), {});
  // Solve A^T x + B^T y = 0; intersection vectors are A^T x.
  std::size_t da = a.dim(), db = b.dim();
  Matrix sys(a.ambient(), da + db);
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t i = 0; i < a.ambient(); ++i) sys.at(i, j) = a.basis()[j][i];
  for (std::size_t j = 0; j < db; ++j)
    for (std::size_t i = 0; i < b.ambient(); ++i) sys.at(i, da + j) = -b.basis()[j][i];
  std::vector<Vector> null = kernel(sys);
  std::vector<Vector> gens;
  for (const Vector& x : null) {
    Vector v(a.ambient(), Scalar(0));
    for (std::size_t j = 0; j < da; ++j)
      if (!x[j].is_zero()) v = v + x[j] * a.basis()[j];
    gens.push_back(std::move(v));
  }
  return Subspace::span(a.ambient(), gens);
}

ProjectivePoint::ProjectivePoint(Vector coords) : v_(std::move(coords)) {
  if (is_zero_vector(v_)) throw std::invalid_argument("projective point needs nonzero coordinates");
}

bool collinear(const std::vector<ProjectivePoint>& pts) {
  std::vector<Vector> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) rows.push_back(p.coords());
  return Matrix::from_rows(rows).rank() <= 2;
}

namespace {

// Finds a linear functional phi (as a covector) nonvanishing on every point.
Vector chart_functional(const std::vector<ProjectivePoint>& pts) {
  const std::size_t k = pts[0].ambient();
  auto ok = [&](const Vector& phi) {
    for (const auto& p : pts) {
      Scalar s(0);
      for (std::size_t i = 0; i < k; ++i) s += phi[i] * p.coords()[i];
      if (s.is_zero()) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < k; ++i) {
    Vector phi(k, Scalar(0));
    phi[i] = Scalar(1);
    if (ok(phi)) return phi;
  }
  // Deterministic sweep over small integer combinations.
  for (long t = 1; t < 1000; ++t) {
    Vector phi(k);
    long x = 1;
    for (std::size_t i = 0; i < k; ++i) {
      phi[i] = Scalar(x);
      x = x * (t + 2) % 10007 + 1;
    }
    if (ok(phi)) return phi;
  }
  throw std::domain_error("multi_ratio: could not find a chart avoiding the points");
}

}  // namespace

Scalar multi_ratio(const std::vector<ProjectivePoint>& pts) {
  const std::size_t m = pts.size();
  if (m < 4 || m % 2 != 0) throw std::invalid_argument("multi_ratio needs an even number (>= 4) of points");
  const std::size_t k = pts[0].ambient();
  for (const auto& p : pts)
    if (p.ambient() != k) throw std::invalid_argument("multi_ratio: mixed ambient dimensions");
  for (std::size_t i = 0; i < m; i += 2) {
    if (!collinear({pts[i], pts[(i + 1) % m], pts[(i + 2) % m]}))
      throw std::domain_error("multi_ratio: consecutive triple not collinear");
  }
  Vector phi = chart_functional(pts);
  auto eval = [&](const Vector& v) {
    Scalar s(0);
    for (std::size_t i = 0; i < k; ++i) s += phi[i] * v[i];
    return s;
  };
  // w_{ab} = phi(p_b) p_a - phi(p_a) p_b is a direction vector of the affine
  // difference P_a - P_b; consecutive w's are parallel by collinearity.
  auto w = [&](std::size_t a, std::size_t b) {
    return eval(pts[b].coords()) * pts[a].coords() - eval(pts[a].coords()) * pts[b].coords();
  };
  Scalar result(1);
  for (std::size_t i = 0; i + 1 < m; i += 2) {
    Vector num = w(i, i + 1);
    Vector den = w(i + 1, (i + 2) % m);
    if (is_zero_vector(den)) throw std::domain_error("multi_ratio: degenerate denominator (equal consecutive points)");
    if (is_zero_vector(num)) return Scalar(0);
    std::size_t j = 0;
    while (den[j].is_zero()) ++j;
    Scalar t = num[j] / den[j];
    for (std::size_t c = 0; c < k; ++c)
      if (num[c] != t * den[c]) throw std::domain_error("multi_ratio: ratio not well-defined (collinearity violated)");
    result *= t;
  }
  return result;
}

Subspace join(const ProjectivePoint& a, const ProjectivePoint& b) {
  return Subspace::span(a.ambient(), {a.coords(), b.coords()});
}

Subspace join(const std::vector<ProjectivePoint>& pts) {
  std::vector<Vector> gens;
  gens.reserve(pts.size());
  for (const auto& p : pts) gens.push_back(p.coords());
  return Subspace::span(pts.empty() ? 0 : pts[0].ambient(), gens);
}

ProjectivePoint meet_point(const Subspace& a, const Subspace& b) {
  Subspace m = intersect(a, b);
  if (m.dim() != 1) throw std::domain_error("meet_point: intersection is not a single point");
  return ProjectivePoint(canonical_direction(m.basis()[0]));
}

}  // namespace vecrel
