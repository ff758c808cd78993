#pragma once

#include "mshare/common.hpp"

#include <cmath>

namespace mshare {

struct GeoPoint {
    double latitude = 0.0;  // degrees, |lat| <= 90
    double longitude = 0.0; // degrees, |lon| <= 180
};

inline constexpr double kEarthRadiusKm = 6371.0088;

/// Great-circle distance between two points, haversine formulation.
/// Symmetric, non-negative, zero iff the points coincide.
template <typename Scalar = double>
Scalar haversine_km(const GeoPoint& p, const GeoPoint& q) {
    constexpr Scalar deg = static_cast<Scalar>(M_PI / 180.0);
    const Scalar lat1 = static_cast<Scalar>(p.latitude) * deg;
    const Scalar lat2 = static_cast<Scalar>(q.latitude) * deg;
    const Scalar dlat = static_cast<Scalar>(q.latitude - p.latitude) * deg;
    const Scalar dlon = static_cast<Scalar>(q.longitude - p.longitude) * deg;

    const Scalar sl = std::sin(dlat / 2);
    const Scalar so = std::sin(dlon / 2);
    Scalar a = sl * sl + std::cos(lat1) * std::cos(lat2) * so * so;
    // Clamp against rounding before the arcsine.
    if (a > Scalar(1)) {
        a = Scalar(1);
    } else if (a < Scalar(0)) {
        a = Scalar(0);
    }
    return static_cast<Scalar>(kEarthRadiusKm) * 2 * std::asin(std::sqrt(a));
}

} // namespace mshare
