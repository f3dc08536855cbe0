#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vecrel/linalg.hpp"
#include "vecrel/rng.hpp"

using namespace vecrel;

namespace {

Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

}  // namespace

TEST_CASE("scalar arithmetic stays canonical") {
  Scalar a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Scalar::parse("-6/4") == Scalar(-3, 2));
  CHECK(Scalar::parse("7").str() == "7");
  CHECK((Scalar(1, 3) + Scalar(2, 5)).str() == "11/15");
  CHECK(Scalar(5, -10) == Scalar(-1, 2));
  CHECK(Scalar(-1, 2).den() > 0);
  CHECK_THROWS(Scalar(1, 0));
  CHECK_THROWS(Scalar(1) / Scalar(0));
}

TEST_CASE("scalar field axioms on random samples") {
  Rng rng(7);
  for (int it = 0; it < 200; ++it) {
    Scalar a(rng.int_in(-50, 50), rng.int_in(1, 30));
    Scalar b(rng.int_in(-50, 50), rng.int_in(1, 30));
    Scalar c(rng.int_in(-50, 50), rng.int_in(1, 30));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
  }
}

TEST_CASE("kernel: single homogeneous equation") {
  Matrix m{{1, 1}};
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(proportional(k[0], vec({1, -1})));
}

TEST_CASE("kernel: full column rank gives empty basis") {
  CHECK(kernel(Matrix::identity(2)).empty());
}

TEST_CASE("kernel: 2x3 example from hand elimination") {
  Matrix m{{1, 2, 3}, {4, 5, 6}};
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec({1, -2, 1}));
}

TEST_CASE("kernel vectors annihilate the matrix exactly") {
  Rng rng(11);
  for (int it = 0; it < 50; ++it) {
    std::size_t r = 1 + rng.int_in(0, 3), c = 1 + rng.int_in(0, 4);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.small_int();
    for (const Vector& v : kernel(m)) CHECK(is_zero_vector(m.apply(v)));
  }
}

TEST_CASE("minor: oracle values") {
  CHECK(minor_det(Matrix::identity(3), {0, 1, 2}) == Scalar(1));
  Matrix m{{1, 2}, {3, 4}};
  CHECK(minor_det(m, {0, 1}) == Scalar(-2));
  Matrix w{{1, 2, 5}, {3, 4, 6}};
  CHECK(minor_det(w, {1, 1}) == Scalar(0));
  CHECK_THROWS(minor_det(m, {0}));
}

TEST_CASE("minor of inverse is reciprocal") {
  Rng rng(13);
  for (int it = 0; it < 30; ++it) {
    Matrix m = rng.invertible_matrix(3);
    std::vector<std::size_t> all{0, 1, 2};
    CHECK(minor_det(m, all) * minor_det(m.inverse(), all) == Scalar(1));
  }
}

TEST_CASE("intersect: plane meets plane in a line") {
  Subspace a = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
  Subspace b = Subspace::span(3, {vec({0, 0, 1}), vec({1, 1, 1})});
  Subspace m = intersect(a, b);
  REQUIRE(m.dim() == 1);
  CHECK(proportional(m.basis()[0], vec({1, 1, 0})));
}

TEST_CASE("intersect: idempotence and transverse lines") {
  Subspace u = Subspace::span(3, {vec({1, 2, 3}), vec({0, 1, 1})});
  Subspace uu = intersect(u, u);
  CHECK(uu.dim() == 2);
  CHECK(uu.contains(vec({1, 2, 3})));
  CHECK(uu.contains(vec({0, 1, 1})));
  Subspace e1 = Subspace::span(3, {vec({1, 0, 0})});
  Subspace e2 = Subspace::span(3, {vec({0, 1, 0})});
  CHECK(intersect(e1, e2).dim() == 0);
}

TEST_CASE("dimension formula dim(a ^ b) + dim(a + b) = dim a + dim b") {
  Rng rng(17);
  for (int it = 0; it < 60; ++it) {
    std::size_t amb = 4;
    std::vector<Vector> ga, gb;
    for (int i = 0; i < 2; ++i) ga.push_back(rng.vector(amb));
    for (int i = 0; i < 3; ++i) gb.push_back(rng.vector(amb));
    Subspace a = Subspace::span(amb, ga), b = Subspace::span(amb, gb);
    CHECK(intersect(a, b).dim() + subspace_sum(a, b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("multi_ratio: collinear affine values 0,1,2,3") {
  std::vector<ProjectivePoint> pts;
  for (long x : {0L, 1L, 2L, 3L}) pts.emplace_back(vec({x, 1}));
  CHECK(multi_ratio(pts) == Scalar(-1, 3));
}

TEST_CASE("multi_ratio: equal consecutive points") {
  std::vector<ProjectivePoint> pts{ProjectivePoint(vec({0, 1})), ProjectivePoint(vec({0, 1})),
                                   ProjectivePoint(vec({2, 1})), ProjectivePoint(vec({3, 1}))};
  // P2 = P1 sits in a numerator slot: the value is zero.
  CHECK(multi_ratio(pts) == Scalar(0));
  // In a denominator slot it is a structured error.
  std::vector<ProjectivePoint> bad{ProjectivePoint(vec({0, 1})), ProjectivePoint(vec({1, 1})),
                                   ProjectivePoint(vec({1, 1})), ProjectivePoint(vec({3, 1}))};
  CHECK_THROWS(multi_ratio(bad));
}

namespace {

// Hexagon of points with consecutive triples collinear: odd points random,
// even points random combinations on the joining lines.
std::vector<ProjectivePoint> random_multi_ratio_input(Rng& rng, std::size_t k) {
  for (;;) {
    std::vector<Vector> odd;
    for (int i = 0; i < 3; ++i) odd.push_back(rng.nonzero_vector(k));
    std::vector<Vector> all;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const Vector& a = odd[i];
      const Vector& b = odd[(i + 1) % 3];
      Vector mid = rng.nonzero_int() * a + rng.nonzero_int() * b;
      if (is_zero_vector(mid)) ok = false;
      all.push_back(a);
      if (ok) all.push_back(mid);
    }
    if (!ok) continue;
    std::vector<ProjectivePoint> pts;
    for (auto& v : all) pts.emplace_back(v);
    try {
      multi_ratio(pts);
    } catch (const std::domain_error&) {
      continue;
    }
    return pts;
  }
}

}  // namespace

TEST_CASE("multi_ratio: cyclic shift by two leaves the value invariant") {
  Rng rng(19);
  for (int it = 0; it < 40; ++it) {
    auto pts = random_multi_ratio_input(rng, 3);
    auto shifted = pts;
    std::rotate(shifted.begin(), shifted.begin() + 2, shifted.end());
    CHECK(multi_ratio(pts) == multi_ratio(shifted));
  }
}

TEST_CASE("multi_ratio: projective invariance under GL_k") {
  Rng rng(23);
  for (int it = 0; it < 40; ++it) {
    auto pts = random_multi_ratio_input(rng, 3);
    Matrix g = rng.invertible_matrix(3);
    std::vector<ProjectivePoint> moved;
    for (const auto& p : pts) moved.emplace_back(g.apply(p.coords()));
    CHECK(multi_ratio(pts) == multi_ratio(moved));
  }
}

TEST_CASE("multi_ratio: 4 collinear points, reversal keeps the value and an odd shift inverts it") {
  Rng rng(29);
  for (int it = 0; it < 40; ++it) {
    Vector a = rng.nonzero_vector(3);
    Vector b = rng.nonzero_vector(3);
    std::vector<ProjectivePoint> pts;
    bool ok = true;
    for (int i = 0; i < 4; ++i) {
      Vector p = rng.small_int() * a + rng.small_int() * b;
      if (is_zero_vector(p)) {
        ok = false;
        break;
      }
      pts.emplace_back(p);
    }
    if (!ok) continue;
    Scalar v;
    try {
      v = multi_ratio(pts);
    } catch (const std::domain_error&) {
      continue;
    }
    if (v.is_zero()) continue;
    std::vector<ProjectivePoint> rev(pts.rbegin(), pts.rend());
    CHECK(multi_ratio(rev) == v);
    std::vector<ProjectivePoint> odd{pts[1], pts[2], pts[3], pts[0]};
    CHECK(multi_ratio(odd) == v.inv());
  }
}

TEST_CASE("meet_point and join") {
  ProjectivePoint a(vec({1, 0, 0})), b(vec({0, 1, 0}));
  ProjectivePoint c(vec({0, 0, 1})), d(vec({1, 1, 1}));
  ProjectivePoint p = meet_point(join(a, b), join(c, d));
  CHECK(p == ProjectivePoint(vec({1, 1, 0})));
  CHECK_THROWS(meet_point(join(a, b), join(a, b)));
}

TEST_CASE("canonical_direction clears denominators deterministically") {
  Vector v{Scalar(-2, 3), Scalar(4, 9), Scalar(0)};
  CHECK(canonical_direction(v) == vec({3, -2, 0}));
}
