#pragma once

namespace fsolink {

// Constants used by the geometry pipeline. Defaults: WGS-84 gravitational
// parameter, exact SI light speed, mean Earth radius.
struct PhysicalConstants {
    double mu_earth_m3_s2 = 3.986004418e14;
    double light_speed_m_s = 299792458.0;
    double earth_radius_m = 6.371e6;
};

// Equatorial radius, available for configurations that want it instead of
// the mean radius default.
inline constexpr double kEquatorialEarthRadiusM = 6.378137e6;

}  // namespace fsolink
