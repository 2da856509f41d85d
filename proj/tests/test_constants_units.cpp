#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "gravab/constants.hpp"
#include "gravab/error.hpp"
#include "gravab/units.hpp"
#include "oracle.hpp"

using namespace gravab;

TEST_CASE("constants are consistent") {
  PhysicalConstants pc;
  CHECK_NOTHROW(pc.validate());
  CHECK(constants::h == doctest::Approx(2.0 * std::numbers::pi * constants::hbar).epsilon(1e-15));
  pc.G = -1.0;
  CHECK_THROWS_AS(pc.validate(), Error);
  PhysicalConstants bad_h;
  bad_h.h *= 1.001;
  CHECK_THROWS_AS(bad_h.validate(), Error);
}

TEST_CASE("cesium Compton frequency") {
  const double omega = compton_angular_frequency(cesium());
  CHECK(omega == doctest::Approx(oracle::m_cs * oracle::c * oracle::c / oracle::hbar).epsilon(1e-12));
  CHECK(omega == doctest::Approx(1.88e26).epsilon(0.01));
  AtomSpecies massless{"x", 0.0, 0.0};
  try {
    compton_angular_frequency(massless);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_input);
  }
}

TEST_CASE("species catalog") {
  CHECK(species_by_name("cs").mass == cesium().mass);
  CHECK(species_by_name("Cs133").mass == cesium().mass);
  CHECK(species_by_name("rb87").mass == doctest::Approx(86.909180527 * oracle::amu));
  CHECK(species_names().size() >= 4);
  try {
    species_by_name("unobtainium");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_species);
  }
}

TEST_CASE("unit conversion") {
  CHECK(convert_units(1.38, "cm", "m") == doctest::Approx(0.0138));
  CHECK(convert_units(10.0, "g/cm3", "kg/m3") == doctest::Approx(1.0e4));
  CHECK(convert_units(2e9, "cm-3", "m-3") == doctest::Approx(2e15));
  CHECK(convert_units(1.0, "mG", "G") == doctest::Approx(1e-3));
  CHECK(convert_units(100.0, "kHz", "Hz") == doctest::Approx(1e5));
  CHECK(convert_units(852.0, "nm", "m") == doctest::Approx(852e-9));
  CHECK(convert_units(0.1, "um", "m") == doctest::Approx(1e-7));
  CHECK(convert_units(0.1, "μm", "m") == convert_units(0.1, "um", "m"));
  CHECK(convert_units(3.0, "m", "m") == 3.0);
  try {
    convert_units(1.0, "furlong", "m");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_unit);
  }
  CHECK_THROWS_AS(convert_units(1.0, "cm", "kHz"), Error);
}

TEST_CASE("unit round trip within one ulp") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mant(1.0, 10.0);
  std::uniform_int_distribution<int> expo(-30, 30);
  const std::pair<const char*, const char*> pairs[] = {
      {"cm", "m"}, {"mm", "m"}, {"um", "m"}, {"nm", "m"}, {"g/cm3", "kg/m3"},
      {"cm-3", "m-3"}, {"mG", "G"}, {"kHz", "Hz"}};
  for (const auto& [from, to] : pairs) {
    for (int i = 0; i < 2000; ++i) {
      const double v = mant(rng) * std::pow(10.0, expo(rng));
      const double back = convert_units(convert_units(v, from, to), to, from);
      const double ulp = std::nextafter(v, std::numeric_limits<double>::infinity()) - v;
      CHECK(std::abs(back - v) <= ulp);
    }
  }
}
