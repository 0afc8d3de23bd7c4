#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <variant>

#include "fuchsian/errors.hpp"
#include "fuchsian/tolerances.hpp"

namespace fuchsian {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

double wrap_angle(double t);                  // into [0, 2pi)
double ccw_delta(double from, double to);     // counterclockwise gap, in [0, 2pi)
double angular_distance(double a, double b);  // min over both directions

/// A point of the open unit disk (Poincare model).
struct Point {
    double x = 0, y = 0;
    Complex c() const { return {x, y}; }
    static Point from(Complex w) { return {w.real(), w.imag()}; }
};

/// Validated construction for user-facing input; points too close to the
/// circle are rejected because the metric formulas lose all precision there.
Point make_point(double x, double y);

/// A point of the boundary circle, stored as its angle in [0, 2pi).
struct BoundaryPoint {
    double theta = 0;
    static BoundaryPoint at(double t) { return {wrap_angle(t)}; }
    Complex c() const { return {std::cos(theta), std::sin(theta)}; }
};

/// Oriented geodesic, from source to target. "Left"/"Right" are relative to
/// travel along the orientation.
struct DirectedGeodesic {
    BoundaryPoint source, target;
    DirectedGeodesic reversed() const { return {target, source}; }
};

/// Validated construction (endpoints must be angularly separated).
DirectedGeodesic make_geodesic(BoundaryPoint source, BoundaryPoint target);

enum class Side { Left, Right, On };
enum class BoundarySide { Left, Right, Endpoint };

Side opposite(Side s);

// Signed incidence residual of p against the geodesic: equals
// sinh(signed hyperbolic distance), positive on the left.
double side_residual(const DirectedGeodesic& g, const Point& p);
Side side_of(const DirectedGeodesic& g, const Point& p);
double distance_to_geodesic(const DirectedGeodesic& g, const Point& p);

// Which open boundary arc (left or right of the endpoint pair) contains b.
BoundarySide boundary_interval_side(const DirectedGeodesic& g, const BoundaryPoint& b);

double distance(const Point& p, const Point& q);

/*
    Arclength frame of a geodesic carrier.

    m is the carrier point nearest the disk center and psi the tangent angle
    there, pointing toward the target. Mapping m to the origin by
    w -> (w - m)/(1 - conj(m) w) straightens the carrier into a diameter, so
    position(s) = ((tanh(s/2) e^{i psi}) + m) / (1 + conj(m) tanh(s/2) e^{i psi})
    parametrizes the geodesic by hyperbolic arclength s, with s = -inf/+inf at
    the source/target. This stays well-conditioned for near-diameter carriers,
    where the (center, radius) form of the carrier circle blows up.
*/
struct CarrierFrame {
    Complex m;
    double psi = 0;
    Complex position(double s) const;
    double tangent_angle(double s) const;
    double param_of(Complex on_carrier) const; // meaningful for points on the carrier
};
CarrierFrame frame_of(const DirectedGeodesic& g);

/// Closed half-plane: the region on and to the left of the carrier.
struct HalfPlane {
    DirectedGeodesic carrier;
    bool contains(const Point& p) const;
};

using SegmentEnd = std::variant<Point, BoundaryPoint>;

Complex segment_end_c(const SegmentEnd& e);
bool segment_end_finite(const SegmentEnd& e);

/// Portion of a geodesic between two incident endpoints (finite or ideal),
/// stored with arclength parameters; s_start < s_end along the carrier, and
/// an ideal end has parameter -inf or +inf.
struct Segment {
    DirectedGeodesic carrier;
    SegmentEnd start, end;
    double s_start = 0, s_end = 0;
    double length() const { return s_end - s_start; }
    Segment reversed() const;
};

Segment make_segment(const DirectedGeodesic& carrier, SegmentEnd a, SegmentEnd b);

struct CrossResult {
    enum Kind { No, Yes, Touches } kind = No;
    Point at{};           // intersection (Yes) or the touching endpoint
    double gamma_param = 0; // arclength parameter of `at` along the queried geodesic
};

/// Does the geodesic cross the segment transversally?
CrossResult crosses(const DirectedGeodesic& g, const Segment& s);

/// Transversal intersection point of two carriers, if one exists strictly
/// inside the unit disk.
std::optional<Point> intersect_carriers(const DirectedGeodesic& a, const DirectedGeodesic& b);

/*
    Orientation-preserving isometry, stored as a real matrix acting on the
    upper half-plane by z -> (az+b)/(cz+d), det normalized to 1. The disk
    action is obtained by conjugating with the fixed Cayley map
    z -> (z - i)/(z + i), which turns the matrix into the SU(1,1) pair
        alpha = (a+d)/2 + i(b-c)/2,   beta = (a-d)/2 - i(b+c)/2,
    acting on the disk by w -> (alpha w + beta)/(conj(beta) w + conj(alpha)).
*/
struct Isometry {
    double a = 1, b = 0, c = 0, d = 1;

    static Isometry identity() { return {}; }
    static Isometry from_entries(double a, double b, double c, double d);

    Isometry inverse() const { return {d, -b, -c, a}; }
    Isometry normalized() const;
    double trace() const { return a + d; }

    std::pair<Complex, Complex> su11() const;
    Point apply(const Point& p) const;
    BoundaryPoint apply(const BoundaryPoint& b) const;
    DirectedGeodesic apply(const DirectedGeodesic& g) const;
    Segment apply(const Segment& s) const;

    // fixed point inside the open disk (elliptic elements only)
    std::optional<Point> fixed_point_in_disk() const;
};

Isometry operator*(const Isometry& g, const Isometry& h); // composition g after h

bool projectively_equal(const Isometry& g, const Isometry& h, double tol = 1e-9);

DirectedGeodesic geodesic_through(const Point& p, const Point& q);

/// The geodesic through p whose tangent at p has angle phi; p sits between
/// source and target.
DirectedGeodesic geodesic_from_direction(const Point& p, double phi);

/// Half-plane of points at least as close to p as to q; carrier oriented so
/// that p lies on the left.
HalfPlane perpendicular_bisector(const Point& p, const Point& q);

Point foot_of_perpendicular(const DirectedGeodesic& g, const Point& p);

/// Tangent angle at `base` of the geodesic from `base` toward `target`
/// (target may lie on the closed disk).
double direction_from(const Point& base, Complex target);

// Cayley adapter between the upper half-plane and the disk.
Point disk_from_halfplane(Complex z);
Complex halfplane_from_disk(const Point& p);
BoundaryPoint boundary_from_halfplane(std::optional<double> x); // nullopt = infinity
std::optional<double> halfplane_from_boundary(const BoundaryPoint& b);

} // namespace fuchsian
