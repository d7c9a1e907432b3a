#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "diskbez/bernstein.hpp"
#include "diskbez/disk_bezier.hpp"
#include "oracles.hpp"

using namespace diskbez;
using namespace diskbez::testing;

namespace {

double dist(double ax, double ay, double bx, double by) { return std::hypot(ax - bx, ay - by); }

}  // namespace

TEST_CASE("curve construction invariants") {
  CHECK_THROWS_AS(DiskRationalBezier({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DiskRationalBezier({{0, 0, 1}}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DiskRationalBezier({{0, 0, 1}, {1, 1, 1}}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(DiskRationalBezier({{0, 0, 1}, {1, 1, 1}}, {1, -3}), std::invalid_argument);
  CHECK_THROWS_AS(DiskRationalBezier({{0, 0, 1}, {1, 1, 1}}, {1, NAN}), std::invalid_argument);
  const DiskRationalBezier pt({{3, 4, 0}}, {2});
  CHECK(pt.degree() == 0);
  const auto p = evaluate(pt, 0.4);
  CHECK(p.x == 3);
  CHECK(p.y == 4);
}

TEST_CASE("evaluate") {
  const auto c = example1();
  const auto p0 = evaluate(c, 0.0);
  const auto p1 = evaluate(c, 1.0);
  CHECK(p0.x == 96);
  CHECK(p0.y == 141);
  CHECK(p0.r == 1);
  CHECK(p1.x == 486);
  CHECK(p1.y == 140);
  CHECK(p1.r == 6);

  const DiskRationalBezier line({{0, 0, 0}, {2, 0, 2}}, {1, 1});
  const auto mid = evaluate(line, 0.5);
  CHECK(mid.x == doctest::Approx(1.0));
  CHECK(mid.y == doctest::Approx(0.0));
  CHECK(mid.r == doctest::Approx(1.0));

  CHECK_THROWS_AS(evaluate(c, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(c, 1.01), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(c, NAN), std::invalid_argument);
}

TEST_CASE("de Casteljau") {
  const auto c = example1();
  const auto a0 = de_casteljau(c, 0.0).apex;
  CHECK(a0.x == 96);
  CHECK(a0.y == 141);
  CHECK(a0.r == 1);
  const auto a1 = de_casteljau(c, 1.0).apex;
  CHECK(a1.x == 486);
  CHECK(a1.y == 140);
  CHECK(a1.r == 6);

  const auto tri = de_casteljau(c, 0.5);
  REQUIRE(tri.levels.size() == 6);
  for (std::size_t j = 0; j < tri.levels.size(); ++j) CHECK(tri.levels[j].size() == 6 - j);
  const auto e = evaluate(c, 0.5);
  CHECK(std::abs(tri.apex.x - e.x) < 1e-10);
  CHECK(std::abs(tri.apex.y - e.y) < 1e-10);
  CHECK(std::abs(tri.apex.r - e.r) < 1e-10);

  CHECK_THROWS_AS(de_casteljau(c, 2.0), std::invalid_argument);
}

TEST_CASE("evaluate and de Casteljau agree on random curves") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(0, 8);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = random_curve(rng, deg(rng));
    const double t = ut(rng);
    const auto a = evaluate(c, t);
    const auto b = de_casteljau(c, t).apex;
    CHECK(std::abs(a.x - b.x) < 1e-10);
    CHECK(std::abs(a.y - b.y) < 1e-10);
    CHECK(std::abs(a.r - b.r) < 1e-10);
    const auto nc = naive_center(c, t);
    CHECK(std::abs(a.x - nc.x) < 1e-9);
    CHECK(std::abs(a.y - nc.y) < 1e-9);
  }
}

TEST_CASE("subdivision") {
  const auto c = example1();
  for (double cut : {0.5, 0.2, 0.83}) {
    const auto [left, right] = subdivide(c, cut);
    CHECK(left.degree() == c.degree());
    CHECK(right.degree() == c.degree());
    const auto lc = evaluate(left, 1.0), r0 = evaluate(right, 0.0), cc = evaluate(c, cut);
    CHECK(std::abs(lc.x - cc.x) < 1e-9);
    CHECK(std::abs(lc.y - cc.y) < 1e-9);
    CHECK(std::abs(lc.r - cc.r) < 1e-9);
    CHECK(std::abs(r0.x - cc.x) < 1e-9);
    CHECK(std::abs(r0.y - cc.y) < 1e-9);
    CHECK(std::abs(r0.r - cc.r) < 1e-9);
    const auto l0 = evaluate(left, 0.0);
    CHECK(l0.x == 96);
    CHECK(l0.y == 141);
    CHECK(l0.r == 1);
  }

  const auto [left, right] = subdivide(c, 0.5);
  double worst_center = 0.0, worst_radius = 0.0;
  for (int j = 0; j <= 50; ++j) {
    const double t = j / 50.0;
    const auto ref = evaluate(c, t);
    const auto seg = t <= 0.5 ? evaluate(left, t / 0.5) : evaluate(right, (t - 0.5) / 0.5);
    worst_center = std::max(worst_center, dist(ref.x, ref.y, seg.x, seg.y));
    worst_radius = std::max(worst_radius, std::abs(ref.r - seg.r));
  }
  CHECK(worst_center < 1e-9);
  CHECK(worst_radius < 1e-9);

  CHECK_THROWS_AS(subdivide(c, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(subdivide(c, 1.0), std::invalid_argument);
}

TEST_CASE("degree elevation") {
  const DiskRationalBezier line({{0, 0, 0}, {1, 0, 2}}, {1, 1});
  const auto e = elevate(line, 1);
  REQUIRE(e.degree() == 2);
  const std::vector<double> ew(e.weights().begin(), e.weights().end());
  CHECK(ew == std::vector<double>{1, 1, 1});
  CHECK(e.disks()[0] == Disk(0, 0, 0));
  CHECK(e.disks()[1].cx() == doctest::Approx(0.5));
  CHECK(e.disks()[1].cy() == 0.0);
  CHECK(e.disks()[1].r() == doctest::Approx(1.0));
  CHECK(e.disks()[2] == Disk(1, 0, 2));

  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto c = random_curve(rng, 1 + trial % 6);
    const auto e1 = elevate(c, 1);
    for (int j = 0; j <= 100; ++j) {
      const double t = j / 100.0;
      const auto a = evaluate(c, t), b = evaluate(e1, t);
      CHECK(std::abs(a.x - b.x) < 1e-10);
      CHECK(std::abs(a.y - b.y) < 1e-10);
      CHECK(std::abs(a.r - b.r) < 1e-10);
    }
    const auto e2 = elevate(c, 2);
    const auto e11 = elevate(e1, 1);
    REQUIRE(e2.degree() == e11.degree());
    for (int i = 0; i <= e2.degree(); ++i) {
      auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)); };
      CHECK(near(e2.weights()[i], e11.weights()[i]));
      CHECK(near(e2.disks()[i].cx(), e11.disks()[i].cx()));
      CHECK(near(e2.disks()[i].cy(), e11.disks()[i].cy()));
      CHECK(near(e2.disks()[i].r(), e11.disks()[i].r()));
    }
  }
  CHECK_THROWS_AS(elevate(line, 0), std::invalid_argument);
}

TEST_CASE("exact degree reduction") {
  std::mt19937_64 rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const int deg = 1 + trial % 5;
    const int s = 1 + trial % 3;
    const auto c = random_curve(rng, deg);
    const auto back = try_exact_reduce(elevate(c, s), deg);
    REQUIRE(back.has_value());
    REQUIRE(back->degree() == deg);
    const double scale = back->weights()[0] / c.weights()[0];
    CHECK(scale > 0.0);
    for (int i = 0; i <= deg; ++i) {
      CHECK(std::abs(back->disks()[i].r() - c.disks()[i].r()) < 1e-11);
      CHECK(std::abs(back->disks()[i].cx() - c.disks()[i].cx()) < 1e-9);
      CHECK(std::abs(back->disks()[i].cy() - c.disks()[i].cy()) < 1e-9);
      CHECK(back->weights()[i] == doctest::Approx(scale * c.weights()[i]).epsilon(1e-10));
    }
  }

  CHECK_FALSE(try_exact_reduce(example1(), 4).has_value());

  const DiskRationalBezier quad({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}, {1, 1, 1});
  const auto lin = try_exact_reduce(quad, 1);
  REQUIRE(lin.has_value());
  CHECK(lin->disks()[0].cx() == doctest::Approx(0.0));
  CHECK(lin->disks()[0].r() == doctest::Approx(0.0));
  CHECK(lin->disks()[1].cx() == doctest::Approx(2.0));
  CHECK(lin->disks()[1].cy() == doctest::Approx(2.0));
  CHECK(lin->disks()[1].r() == doctest::Approx(2.0));

  // reducible center but a radius polynomial of full degree
  const DiskRationalBezier bumped({{0, 0, 0}, {1, 1, 3}, {2, 2, 2}}, {1, 1, 1});
  CHECK_FALSE(try_exact_reduce(bumped, 1).has_value());

  CHECK_THROWS_AS(try_exact_reduce(quad, 2), std::invalid_argument);
  CHECK_THROWS_AS(try_exact_reduce(quad, 0), std::invalid_argument);
}

TEST_CASE("end interpolation, convex hull and affine invariance") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  std::uniform_real_distribution<double> ua(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_curve(rng, 1 + trial % 8);
    const int n = c.degree();

    const auto e0 = evaluate(c, 0.0), e1 = evaluate(c, 1.0);
    CHECK(e0.x == c.disks()[0].cx());
    CHECK(e0.y == c.disks()[0].cy());
    CHECK(e0.r == c.disks()[0].r());
    CHECK(e1.x == c.disks()[n].cx());
    CHECK(e1.y == c.disks()[n].cy());
    CHECK(e1.r == c.disks()[n].r());

    const double t = ut(rng);
    const auto p = evaluate(c, t);
    std::vector<Point2> centers;
    double ax = 0.0, ay = 0.0, asum = 0.0, hull_radius = 0.0;
    for (int i = 0; i <= n; ++i) {
      centers.push_back({c.disks()[i].cx(), c.disks()[i].cy()});
      const double alpha = rational_basis(c.weights(), i, t);
      CHECK(alpha >= 0.0);
      ax += alpha * c.disks()[i].cx();
      ay += alpha * c.disks()[i].cy();
      asum += alpha;
      hull_radius += alpha * c.disks()[i].r();
    }
    CHECK(std::abs(asum - 1.0) < 1e-12);
    CHECK(dist(ax, ay, p.x, p.y) < 1e-9);
    CHECK(distance_to_hull(convex_hull(centers), {p.x, p.y}) <= hull_radius + 1e-9);

    const double a11 = ua(rng), a12 = ua(rng), a21 = ua(rng), a22 = ua(rng);
    const double bx = 50 * ua(rng), by = 50 * ua(rng);
    std::vector<Disk> mapped;
    for (const auto& d : c.disks()) {
      mapped.emplace_back(a11 * d.cx() + a12 * d.cy() + bx, a21 * d.cx() + a22 * d.cy() + by, d.r());
    }
    const DiskRationalBezier cm(mapped, {c.weights().begin(), c.weights().end()});
    const auto q = evaluate(cm, t);
    CHECK(std::abs(q.x - (a11 * p.x + a12 * p.y + bx)) < 1e-9);
    CHECK(std::abs(q.y - (a21 * p.x + a22 * p.y + by)) < 1e-9);
  }
}

TEST_CASE("a huge interior weight pulls the center onto its control point") {
  std::mt19937_64 rng(17);
  for (int n : {2, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_curve(rng, n, 1.0, 1.0);
      const int i = n / 2;
      std::vector<double> w(n + 1, 1.0);
      w[i] = 1e6;
      const DiskRationalBezier heavy({c.disks().begin(), c.disks().end()}, w);
      for (int j = 0; j <= 40; ++j) {
        const double t = 0.3 + 0.4 * j / 40.0;
        const auto p = evaluate(heavy, t);
        CHECK(dist(p.x, p.y, c.disks()[i].cx(), c.disks()[i].cy()) < 1e-3);
      }
      const auto p0 = evaluate(heavy, 0.0);
      CHECK(p0.x == c.disks()[0].cx());
    }
  }
}

TEST_CASE("uniform grid and batch sampling") {
  const auto g = uniform_grid(5);
  CHECK(g == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK_THROWS_AS(uniform_grid(1), std::invalid_argument);

  const auto c = example1();
  const auto grid = uniform_grid(1001);
  const auto s = sample(c, grid);
  for (std::size_t j = 0; j < grid.size(); j += 37) {
    const auto e = evaluate(c, grid[j]);
    CHECK(std::abs(s.x[j] - e.x) < 1e-10);
    CHECK(std::abs(s.y[j] - e.y) < 1e-10);
    CHECK(std::abs(s.r[j] - e.r) < 1e-10);
  }
  const std::vector<double> bad{0.5, 1.5};
  CHECK_THROWS_AS(sample(c, bad), std::invalid_argument);
}
