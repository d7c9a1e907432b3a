#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskbez/kernels/eval.hpp"
#include "oracles.hpp"

using namespace diskbez;
using namespace diskbez::kernels;
using namespace diskbez::testing;

namespace {

struct Controls {
  std::vector<double> wx, wy, w, r;
  HomogeneousControls view() const { return {wx, wy, w, r}; }
};

Controls controls_of(const DiskRationalBezier& c) {
  Controls h;
  for (std::size_t i = 0; i < c.disks().size(); ++i) {
    const double w = c.weights()[i];
    h.wx.push_back(w * c.disks()[i].cx());
    h.wy.push_back(w * c.disks()[i].cy());
    h.w.push_back(w);
    h.r.push_back(c.disks()[i].r());
  }
  return h;
}

struct Out {
  std::vector<double> x, y, r;
  explicit Out(std::size_t n) : x(n), y(n), r(n) {}
  SampleBuffers view() { return {x, y, r}; }
};

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar kernel matches naive evaluation") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int degree = 0; degree <= 12; ++degree) {
    const auto c = random_curve(rng, degree);
    const Controls h = controls_of(c);
    std::vector<double> t(57);
    for (double& v : t) v = u(rng);
    t[0] = 0.0;
    t[1] = 1.0;
    Out o(t.size());
    eval_batch(Isa::Scalar, h.view(), t, o.view());
    for (std::size_t j = 0; j < t.size(); ++j) {
      const Point2 p = naive_center(c, t[j]);
      CHECK(o.x[j] == doctest::Approx(p.x).epsilon(1e-10).scale(1.0));
      CHECK(o.y[j] == doctest::Approx(p.y).epsilon(1e-10).scale(1.0));
      CHECK(o.r[j] == doctest::Approx(naive_radius(c, t[j])).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("every available ISA reproduces the scalar kernel bit for bit") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
    if (!isa_available(isa)) {
      MESSAGE("skipping unavailable ISA " << std::string(isa_name(isa)));
      continue;
    }
    for (int degree = 0; degree <= 15; ++degree) {
      const auto c = random_curve(rng, degree, 1e-3, 1e3, 50.0);
      const Controls h = controls_of(c);
      // lengths cover empty input, partial vectors and several full ones plus a tail
      for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 1001u}) {
        std::vector<double> t(len);
        for (double& v : t) v = u(rng);
        Out ref(len), got(len);
        detail::eval_batch_scalar(h.view(), t, ref.view());
        eval_batch(isa, h.view(), t, got.view());
        CHECK(same_bits(ref.x, got.x));
        CHECK(same_bits(ref.y, got.y));
        CHECK(same_bits(ref.r, got.r));
      }
    }
  }
}

TEST_CASE("dispatch honours the environment and validates inputs") {
  const char* env = std::getenv("DISKBEZ_ISA");
  if (env != nullptr && std::string(env) == "scalar") {
    CHECK(active_isa() == Isa::Scalar);
  } else {
    CHECK(active_isa() == (isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar));
  }
  MESSAGE("active ISA: " << std::string(isa_name(active_isa())));

  const Controls h = controls_of(example1());
  std::vector<double> t{0.0, 0.5};
  Out small(1);
  CHECK_THROWS_AS(eval_batch(Isa::Scalar, h.view(), t, small.view()), std::invalid_argument);
  Controls broken = h;
  broken.r.pop_back();
  Out ok(2);
  CHECK_THROWS_AS(eval_batch(Isa::Scalar, broken.view(), t, ok.view()), std::invalid_argument);
  if (!isa_available(Isa::Avx2)) {
    CHECK_THROWS_AS(eval_batch(Isa::Avx2, h.view(), t, ok.view()), std::invalid_argument);
  }
}
