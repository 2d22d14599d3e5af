#include "way/geo.hpp"

#include <cmath>
#include <numbers>

#include "way/common.hpp"

namespace way::geo {

namespace {
constexpr double kDegToRad = std::numbers::pi / 180.0;
}

double normalize_lon(double lon_deg) {
  double x = std::fmod(lon_deg + 180.0, 360.0);
  if (x < 0.0) x += 360.0;
  return x - 180.0;
}

bool valid_point(double lon_deg, double lat_deg) {
  return std::isfinite(lon_deg) && std::isfinite(lat_deg) && lat_deg >= -90.0 &&
         lat_deg <= 90.0;
}

GeoPoint make_point(double lon_deg, double lat_deg) {
  if (!valid_point(lon_deg, lat_deg)) {
    throw DataError("invalid coordinates (" + std::to_string(lon_deg) + ", " +
                    std::to_string(lat_deg) + ")");
  }
  return GeoPoint{normalize_lon(lon_deg), lat_deg};
}

int GridSpec::cols() const { return static_cast<int>(std::lround(360.0 / cell_size)); }
int GridSpec::rows() const { return static_cast<int>(std::lround(180.0 / cell_size)); }

void GridSpec::validate() const {
  if (!(cell_size > 0.0)) throw ConfigError("grid cell_size must be positive");
  const double c = 360.0 / cell_size;
  const double r = 180.0 / cell_size;
  if (std::abs(c - std::round(c)) > 1e-9 || std::abs(r - std::round(r)) > 1e-9) {
    throw ConfigError("grid cell_size must divide 360 and 180 evenly");
  }
}

GridCell cell_of(const GeoPoint& p, const GridSpec& spec) {
  const double lon = normalize_lon(p.lon);
  int col = static_cast<int>(std::floor((lon + 180.0) / spec.cell_size));
  int row = static_cast<int>(std::floor((p.lat + 90.0) / spec.cell_size));
  // lat = 90 lands exactly on the upper edge; it belongs to the top row.
  if (row >= spec.rows()) row = spec.rows() - 1;
  if (col >= spec.cols()) col = spec.cols() - 1;
  return GridCell{col, row};
}

GeoPoint cell_center(const GridCell& c, const GridSpec& spec) {
  return GeoPoint{(c.col + 0.5) * spec.cell_size - 180.0,
                  (c.row + 0.5) * spec.cell_size - 90.0};
}

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
  const double phi1 = a.lat * kDegToRad;
  const double phi2 = b.lat * kDegToRad;
  const double dphi = (b.lat - a.lat) * kDegToRad;
  const double dlam = (b.lon - a.lon) * kDegToRad;
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlam / 2.0);
  const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
  return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

GeoPoint spherical_centroid(const std::vector<GeoPoint>& polygon) {
  if (polygon.empty()) throw DataError("centroid of empty polygon");
  double x = 0.0, y = 0.0, z = 0.0;
  for (const auto& p : polygon) {
    const double lam = p.lon * kDegToRad;
    const double phi = p.lat * kDegToRad;
    x += std::cos(phi) * std::cos(lam);
    y += std::cos(phi) * std::sin(lam);
    z += std::sin(phi);
  }
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (norm < 1e-12) throw DataError("degenerate polygon centroid");
  return GeoPoint{std::atan2(y, x) / kDegToRad,
                  std::asin(z / norm) / kDegToRad};
}

double spherical_polygon_area_km2(const std::vector<GeoPoint>& polygon) {
  const std::size_t n = polygon.size();
  if (n < 3) throw DataError("polygon needs at least 3 vertices");
  // Green's-theorem form of the spherical excess; exact for geodesic edges of
  // small extent, which is all a port outline needs.
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const GeoPoint& p1 = polygon[i];
    const GeoPoint& p2 = polygon[(i + 1) % n];
    double dlam = (p2.lon - p1.lon) * kDegToRad;
    // Shortest way around for edges crossing the antimeridian.
    if (dlam > std::numbers::pi) dlam -= 2.0 * std::numbers::pi;
    if (dlam < -std::numbers::pi) dlam += 2.0 * std::numbers::pi;
    sum += dlam * (std::sin(p1.lat * kDegToRad) + std::sin(p2.lat * kDegToRad));
  }
  return std::abs(sum) / 2.0 * kEarthRadiusKm * kEarthRadiusKm;
}

}  // namespace way::geo
