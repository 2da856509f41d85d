#include <doctest.h>

#include <random>

#include "gravab/error.hpp"
#include "gravab/gravfield.hpp"
#include "oracle.hpp"

using namespace gravab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_input;
}

// Points away from sphere surfaces, where the Hessian is discontinuous.
Vec3 random_point(std::mt19937_64& rng, const SourceConfiguration& cfg) {
  std::uniform_real_distribution<double> d(-0.04, 0.04);
  for (;;) {
    Vec3 p(d(rng), d(rng), d(rng));
    bool ok = true;
    for (const auto& s : cfg.spheres()) {
      if (std::abs((p - s.center).norm() - s.radius) < 1e-3) ok = false;
      if ((p - s.center).norm() < 1e-3) ok = false;
    }
    if (ok) return p;
  }
}

}  // namespace

TEST_CASE("single sphere closed forms") {
  const SphereSource s{Vec3::Zero(), 0.01, 1e4};
  const double gm = oracle::G * s.mass();
  CHECK(s.mass() == doctest::Approx(1e4 * 4.0 / 3.0 * oracle::pi * 1e-6));
  CHECK(sphere_potential(Vec3(0.02, 0, 0), s) == doctest::Approx(-gm / 0.02).epsilon(1e-14));
  CHECK(sphere_potential(Vec3::Zero(), s) == doctest::Approx(-1.5 * gm / 0.01).epsilon(1e-14));
  CHECK(sphere_potential(Vec3(0.005, 0, 0), s) ==
        doctest::Approx(oracle::sphere_u(0.005, 0.01, 1e4)).epsilon(1e-14));
  // continuity at the surface
  CHECK(sphere_potential(Vec3(0.01, 0, 0), s) ==
        doctest::Approx(sphere_potential(Vec3(0.01 - 1e-15, 0, 0), s)).epsilon(1e-12));
  const FieldSample f = sphere_field(Vec3(0.0, 0.03, 0.0), s);
  CHECK(f.gradient.y() == doctest::Approx(gm / 9e-4).epsilon(1e-14));
  CHECK(f.hessian(1, 1) == doctest::Approx(-2.0 * gm / 2.7e-5).epsilon(1e-14));
  CHECK(f.hessian(0, 0) == doctest::Approx(gm / 2.7e-5).epsilon(1e-14));
}

TEST_CASE("configuration validation") {
  CHECK(code_of([] { SourceConfiguration({SphereSource{Vec3::Zero(), -1.0, 1.0}}); }) ==
        ErrorCode::invalid_input);
  CHECK(code_of([] { SourceConfiguration({SphereSource{Vec3::Zero(), 1.0, 0.0}}); }) ==
        ErrorCode::invalid_input);
  CHECK(code_of([] { SourceConfiguration::symmetric_pair(0.015, 0.01, 1e4); }) == ErrorCode::overlap);
  CHECK(code_of([] {
          SphereSource a{Vec3::Zero(), 0.01, 1e4};
          SourceConfiguration({a, a});
        }) == ErrorCode::duplicate_sphere);
  CHECK_NOTHROW(SourceConfiguration::symmetric_pair(0.02, 0.01, 1e4));  // touching
  const auto pair = SourceConfiguration::symmetric_pair(0.03, 0.01, 1e4);
  CHECK(pair.is_symmetric_axial_pair());
  CHECK(pair.local_density(Vec3(0.015, 0, 0)) == 1e4);
  CHECK(pair.local_density(Vec3::Zero()) == 0.0);
}

TEST_CASE("gradient and Hessian match finite differences") {
  const auto cfg = SourceConfiguration::symmetric_pair(0.03, 0.01, 1e4);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const Vec3 p = random_point(rng, cfg);
    const FieldSample f = field_sample(p, cfg);
    const double hstep = 1e-6;
    for (int k = 0; k < 3; ++k) {
      Vec3 dp = Vec3::Zero();
      dp[k] = hstep;
      const double du = (source_potential(p + dp, cfg) - source_potential(p - dp, cfg)) / (2 * hstep);
      CHECK(std::abs(du - f.gradient[k]) <= 1e-6 * f.gradient.norm());
      const Vec3 dg = (field_sample(p + dp, cfg).gradient - field_sample(p - dp, cfg).gradient) /
                      (2 * hstep);
      CHECK((dg - f.hessian.col(k)).norm() <= 1e-6 * f.hessian.norm());
    }
  }
}

TEST_CASE("Poisson and Laplace") {
  const auto cfg = SourceConfiguration::symmetric_pair(0.03, 0.01, 1e4);
  const double scale = 4.0 * oracle::pi * oracle::G * 1e4;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Vec3 p = random_point(rng, cfg);
    const double trace = field_sample(p, cfg).hessian.trace();
    const double expected = 4.0 * oracle::pi * oracle::G * cfg.local_density(p);
    CHECK(std::abs(trace - expected) < 1e-9 * scale);
  }
}

TEST_CASE("superposition and mirror symmetry") {
  const SphereSource a{Vec3(-0.015, 0, 0), 0.01, 1e4};
  const SphereSource b{Vec3(0.015, 0, 0), 0.01, 2e4};
  const SourceConfiguration both({a, b});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Vec3 p = random_point(rng, both);
    const FieldSample f = field_sample(p, both);
    const FieldSample fa = sphere_field(p, a), fb = sphere_field(p, b);
    CHECK(f.potential == doctest::Approx(fa.potential + fb.potential).epsilon(1e-14));
    CHECK((f.gradient - fa.gradient - fb.gradient).norm() <= 1e-14 * f.gradient.norm());
  }
  const auto pair = SourceConfiguration::symmetric_pair(0.03, 0.01, 1e4);
  for (int i = 0; i < 50; ++i) {
    const Vec3 p = random_point(rng, pair);
    const Vec3 m(-p.x(), p.y(), p.z());
    const FieldSample f = field_sample(p, pair), g = field_sample(m, pair);
    CHECK(f.potential == doctest::Approx(g.potential).epsilon(1e-14));
    CHECK(f.gradient.x() == doctest::Approx(-g.gradient.x()).epsilon(1e-12));
  }
  CHECK(field_sample(Vec3::Zero(), pair).gradient.norm() == 0.0);
}

TEST_CASE("Earth term and potential difference") {
  const auto pair = SourceConfiguration::symmetric_pair(0.03, 0.01, 1e4);
  const auto earth = pair.with_earth(true, 9.81);
  const Vec3 p(0.01, 0, 0);
  CHECK(field_sample(p, earth).potential ==
        doctest::Approx(field_sample(p, pair).potential + 9.81 * 0.01).epsilon(1e-14));
  CHECK(field_sample(p, earth).gradient.x() ==
        doctest::Approx(field_sample(p, pair).gradient.x() + 9.81).epsilon(1e-14));
  CHECK(source_potential(p, earth) == source_potential(p, pair));
  const double du = potential_difference(pair, Vec3::Zero(), p);
  CHECK(du == doctest::Approx(oracle::pair_u(0, 0.03, 0.01, 1e4) - oracle::pair_u(0.01, 0.03, 0.01, 1e4))
                  .epsilon(1e-12));
}
