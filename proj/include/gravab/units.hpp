#pragma once

#include <string_view>

namespace gravab {

/// Converts between the fixed set of ingestion units and their SI (or
/// Gauss) counterpart: cm, mm, um, nm <-> m; g/cm3 <-> kg/m3;
/// cm-3 <-> m-3; mG <-> G; kHz <-> Hz. "μm" and "um" are both accepted.
/// A unit converted to itself returns the value unchanged.
/// Throws unsupported-unit for any other pair.
double convert_units(double value, std::string_view from_unit, std::string_view to_unit);

}  // namespace gravab
