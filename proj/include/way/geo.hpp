#pragma once

#include <vector>

namespace way::geo {

inline constexpr double kEarthRadiusKm = 6371.0;

// Longitude/latitude pair in degrees. Longitude is kept in [-180, 180);
// the antimeridian (+180) wraps to -180 so grid indices stay canonical.
struct GeoPoint {
  double lon = 0.0;
  double lat = 0.0;
};

// Wraps an arbitrary longitude into [-180, 180).
double normalize_lon(double lon_deg);

// True iff lat is in [-90, 90] and both values are finite.
bool valid_point(double lon_deg, double lat_deg);

// Builds a point with the longitude normalized. Throws DataError when the
// latitude is out of range.
GeoPoint make_point(double lon_deg, double lat_deg);

// Uniform global grid. 360 and 180 must be integer multiples of cell_size.
struct GridSpec {
  double cell_size = 1.0;

  int cols() const;
  int rows() const;
  void validate() const;
};

struct GridCell {
  int col = 0;
  int row = 0;

  bool operator==(const GridCell&) const = default;
};

GridCell cell_of(const GeoPoint& p, const GridSpec& spec);
GeoPoint cell_center(const GridCell& c, const GridSpec& spec);

// Great-circle distance, mean Earth radius 6371.0 km.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

// Spherical centroid: normalized mean of the unit vectors of the vertices.
GeoPoint spherical_centroid(const std::vector<GeoPoint>& polygon);

// Area of a small spherical polygon in km^2 (spherical-excess line integral).
double spherical_polygon_area_km2(const std::vector<GeoPoint>& polygon);

}  // namespace way::geo
