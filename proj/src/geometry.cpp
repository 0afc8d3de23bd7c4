#include "fuchsian/geometry.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace fuchsian {

Tolerances& tolerances() {
    static Tolerances t;
    return t;
}

double wrap_angle(double t) {
    double w = std::fmod(t, kTwoPi);
    if (w < 0) w += kTwoPi;
    if (w >= kTwoPi) w = 0; // fmod may round up to 2pi
    return w;
}

double ccw_delta(double from, double to) {
    return wrap_angle(to - from);
}

double angular_distance(double a, double b) {
    double d = wrap_angle(a - b);
    return std::min(d, kTwoPi - d);
}

Point make_point(double x, double y) {
    if (x * x + y * y > 1.0 - 1e-6)
        throw DegenerateInput("point too close to the boundary circle");
    return {x, y};
}

DirectedGeodesic make_geodesic(BoundaryPoint source, BoundaryPoint target) {
    if (angular_distance(source.theta, target.theta) <= tolerances().geodesic)
        throw DegenerateInput("geodesic endpoints coincide");
    return {source, target};
}

Side opposite(Side s) {
    if (s == Side::Left) return Side::Right;
    if (s == Side::Right) return Side::Left;
    return Side::On;
}

namespace {

/*
    Side function of the directed geodesic from u = e^{i tu} to v = e^{i tv}:

        G(w) = sin(tv - tu) (|w|^2 + 1) + D x + E y,
        D = 2 (sin tu - sin tv),  E = 2 (cos tv - cos tu),

    whose zero set is the carrier (a circle orthogonal to the unit circle, or
    a diameter when the endpoints are antipodal) and which is positive exactly
    on the left of the orientation. Dividing by
    (1 - cos(tv - tu)) (1 - |w|^2) yields sinh of the signed distance.
*/
struct SideCoeffs {
    double delta, D, E;
    double eval(double x, double y) const {
        return delta * (x * x + y * y + 1.0) + D * x + E * y;
    }
};

SideCoeffs side_coeffs(const DirectedGeodesic& g) {
    double tu = g.source.theta, tv = g.target.theta;
    return {std::sin(tv - tu),
            2.0 * (std::sin(tu) - std::sin(tv)),
            2.0 * (std::cos(tv) - std::cos(tu))};
}

Complex mobius_to_origin(Complex base, Complex w) {
    return (w - base) / (1.0 - std::conj(base) * w);
}

Complex mobius_from_origin(Complex base, Complex w) {
    return (w + base) / (1.0 + std::conj(base) * w);
}

} // namespace

double side_residual(const DirectedGeodesic& g, const Point& p) {
    SideCoeffs co = side_coeffs(g);
    double G = co.eval(p.x, p.y);
    double den = (1.0 - std::cos(g.target.theta - g.source.theta)) *
                 (1.0 - (p.x * p.x + p.y * p.y));
    return G / den;
}

Side side_of(const DirectedGeodesic& g, const Point& p) {
    double r = side_residual(g, p);
    if (std::abs(r) < tolerances().on) return Side::On;
    return r > 0 ? Side::Left : Side::Right;
}

double distance_to_geodesic(const DirectedGeodesic& g, const Point& p) {
    return std::asinh(std::abs(side_residual(g, p)));
}

BoundarySide boundary_interval_side(const DirectedGeodesic& g, const BoundaryPoint& b) {
    double snap = tolerances().vertex;
    if (angular_distance(b.theta, g.source.theta) < snap ||
        angular_distance(b.theta, g.target.theta) < snap)
        return BoundarySide::Endpoint;
    // the left side of the geodesic meets the circle along the ccw arc from
    // target to source
    double arc = ccw_delta(g.target.theta, g.source.theta);
    return ccw_delta(g.target.theta, b.theta) < arc ? BoundarySide::Left
                                                    : BoundarySide::Right;
}

double distance(const Point& p, const Point& q) {
    double dx = p.x - q.x, dy = p.y - q.y;
    double num = dx * dx + dy * dy;
    double den = (1.0 - (p.x * p.x + p.y * p.y)) * (1.0 - (q.x * q.x + q.y * q.y));
    return 2.0 * std::asinh(std::sqrt(num / den));
}

Complex CarrierFrame::position(double s) const {
    if (s > 50.0 || s < -50.0) {
        // past double precision of tanh; return the ideal endpoint
        Complex zeta = std::polar(1.0, psi) * (s > 0 ? 1.0 : -1.0);
        Complex w = mobius_from_origin(m, zeta);
        return w / std::abs(w);
    }
    Complex zeta = std::tanh(s / 2.0) * std::polar(1.0, psi);
    return mobius_from_origin(m, zeta);
}

double CarrierFrame::tangent_angle(double s) const {
    Complex zeta = std::tanh(s / 2.0) * std::polar(1.0, psi);
    return psi - 2.0 * std::arg(1.0 + std::conj(m) * zeta);
}

double CarrierFrame::param_of(Complex p) const {
    Complex zeta = mobius_to_origin(m, p);
    double r = std::abs(zeta);
    if (r >= 1.0) r = 1.0 - 1e-16;
    double s = 2.0 * std::atanh(r);
    double along = std::cos(std::arg(zeta) - psi);
    return along >= 0 ? s : -s;
}

CarrierFrame frame_of(const DirectedGeodesic& g) {
    SideCoeffs co = side_coeffs(g);
    Complex u = g.source.c(), v = g.target.c();
    if (std::abs(co.delta) < 1e-12) {
        // diameter
        return {Complex{0, 0}, std::arg(v - u)};
    }
    double dn = std::hypot(co.D, co.E);
    double sgn = co.delta > 0 ? 1.0 : -1.0;
    Complex chat = -sgn * Complex{co.D / dn, co.E / dn};
    double cmag = dn / (2.0 * std::abs(co.delta));
    double r = std::sqrt(std::max(cmag * cmag - 1.0, 0.0));
    Complex m = chat / (cmag + r);
    // counterclockwise traversal around the carrier circle iff delta < 0
    Complex tangent = (co.delta < 0 ? Complex{0, 1} : Complex{0, -1}) * (-chat);
    return {m, std::arg(tangent)};
}

bool HalfPlane::contains(const Point& p) const {
    return side_of(carrier, p) != Side::Right;
}

Complex segment_end_c(const SegmentEnd& e) {
    if (std::holds_alternative<Point>(e)) return std::get<Point>(e).c();
    return std::get<BoundaryPoint>(e).c();
}

bool segment_end_finite(const SegmentEnd& e) {
    return std::holds_alternative<Point>(e);
}

Segment Segment::reversed() const {
    Segment r;
    r.carrier = carrier.reversed();
    r.start = end;
    r.end = start;
    r.s_start = -s_end;
    r.s_end = -s_start;
    return r;
}

Segment make_segment(const DirectedGeodesic& carrier, SegmentEnd a, SegmentEnd b) {
    CarrierFrame fr = frame_of(carrier);
    auto param = [&](const SegmentEnd& e) -> double {
        if (segment_end_finite(e)) {
            Point p = std::get<Point>(e);
            Complex zeta = mobius_to_origin(fr.m, p.c());
            // incidence check: the straightened point must sit on the diameter
            double off = std::abs(std::sin(std::arg(zeta) - fr.psi)) * std::abs(zeta);
            double sinh_off = 2.0 * off / (1.0 - std::norm(zeta));
            if (std::abs(sinh_off) > 1e-9)
                throw DegenerateInput("segment endpoint not on the carrier");
            return fr.param_of(p.c());
        }
        BoundaryPoint bp = std::get<BoundaryPoint>(e);
        if (angular_distance(bp.theta, carrier.source.theta) <
            angular_distance(bp.theta, carrier.target.theta)) {
            if (angular_distance(bp.theta, carrier.source.theta) > 1e-7)
                throw DegenerateInput("ideal segment endpoint not on the carrier");
            return -std::numeric_limits<double>::infinity();
        }
        if (angular_distance(bp.theta, carrier.target.theta) > 1e-7)
            throw DegenerateInput("ideal segment endpoint not on the carrier");
        return std::numeric_limits<double>::infinity();
    };
    double sa = param(a), sb = param(b);
    Segment s;
    s.carrier = carrier;
    if (sa <= sb) {
        s.start = a; s.end = b; s.s_start = sa; s.s_end = sb;
    } else {
        s.start = b; s.end = a; s.s_start = sb; s.s_end = sa;
    }
    return s;
}

std::optional<Point> intersect_carriers(const DirectedGeodesic& a, const DirectedGeodesic& b) {
    SideCoeffs ca = side_coeffs(a), cb = side_coeffs(b);
    // the radical line of two circles orthogonal to the unit circle passes
    // through the origin
    double lx = cb.delta * ca.D - ca.delta * cb.D;
    double ly = cb.delta * ca.E - ca.delta * cb.E;
    double ln = std::hypot(lx, ly);
    if (ln < 1e-14) {
        // both carriers are diameters (or identical); diameters meet at 0
        if (std::abs(ca.delta) < 1e-12 && std::abs(cb.delta) < 1e-12) {
            if (std::abs(ca.D * cb.E - ca.E * cb.D) < 1e-14) return std::nullopt;
            return Point{0, 0};
        }
        return std::nullopt;
    }
    double dx = -ly / ln, dy = lx / ln;
    const SideCoeffs& q = std::abs(ca.delta) >= std::abs(cb.delta) ? ca : cb;
    if (std::abs(q.delta) < 1e-14) {
        // both effectively diameters
        return Point{0, 0};
    }
    // q.delta s^2 + L s + q.delta = 0 along w = s (dx, dy); roots multiply to 1
    double L = q.D * dx + q.E * dy;
    double disc = L * L - 4.0 * q.delta * q.delta;
    if (disc < 0) return std::nullopt;
    double sq = std::sqrt(disc);
    double r = -(L + std::copysign(sq, L)) / 2.0;
    double s1 = r / q.delta;
    double s2 = q.delta / r;
    double s = std::abs(s1) <= std::abs(s2) ? s1 : s2;
    if (std::abs(s) >= 1.0) return std::nullopt;
    return Point{s * dx, s * dy};
}

namespace {

// -1, 0, +1 classification of a segment endpoint against a geodesic
int end_sign(const DirectedGeodesic& g, const SegmentEnd& e) {
    if (segment_end_finite(e)) {
        double r = side_residual(g, std::get<Point>(e));
        if (std::abs(r) < tolerances().on) return 0;
        return r > 0 ? 1 : -1;
    }
    switch (boundary_interval_side(g, std::get<BoundaryPoint>(e))) {
        case BoundarySide::Endpoint: return 0;
        case BoundarySide::Left: return 1;
        default: return -1;
    }
}

} // namespace

CrossResult crosses(const DirectedGeodesic& g, const Segment& seg) {
    int sa = end_sign(g, seg.start);
    int sb = end_sign(g, seg.end);
    CarrierFrame gf = frame_of(g);
    if (sa == 0 || sb == 0) {
        Complex at = segment_end_c(sa == 0 ? seg.start : seg.end);
        return {CrossResult::Touches, Point::from(at), gf.param_of(at)};
    }
    if (sa == sb) return {CrossResult::No, {}, 0};
    auto p = intersect_carriers(g, seg.carrier);
    if (!p) return {CrossResult::Touches, {}, 0}; // numerically tangent
    return {CrossResult::Yes, *p, gf.param_of(p->c())};
}

Isometry Isometry::from_entries(double a, double b, double c, double d) {
    double det = a * d - b * c;
    if (det <= 1e-14)
        throw DegenerateInput("isometry matrix must have positive determinant");
    double s = 1.0 / std::sqrt(det);
    return {a * s, b * s, c * s, d * s};
}

Isometry Isometry::normalized() const {
    return from_entries(a, b, c, d);
}

std::pair<Complex, Complex> Isometry::su11() const {
    return {Complex{(a + d) / 2.0, (b - c) / 2.0},
            Complex{(a - d) / 2.0, -(b + c) / 2.0}};
}

Point Isometry::apply(const Point& p) const {
    auto [al, be] = su11();
    Complex w = p.c();
    Complex r = (al * w + be) / (std::conj(be) * w + std::conj(al));
    return Point::from(r);
}

BoundaryPoint Isometry::apply(const BoundaryPoint& b) const {
    auto [al, be] = su11();
    Complex w = b.c();
    Complex r = (al * w + be) / (std::conj(be) * w + std::conj(al));
    return BoundaryPoint::at(std::arg(r));
}

DirectedGeodesic Isometry::apply(const DirectedGeodesic& g) const {
    return {apply(g.source), apply(g.target)};
}

Segment Isometry::apply(const Segment& s) const {
    auto move_end = [&](const SegmentEnd& e) -> SegmentEnd {
        if (segment_end_finite(e)) return apply(std::get<Point>(e));
        return apply(std::get<BoundaryPoint>(e));
    };
    Segment r;
    r.carrier = apply(s.carrier);
    r.start = move_end(s.start);
    r.end = move_end(s.end);
    CarrierFrame fr = frame_of(r.carrier);
    r.s_start = std::isinf(s.s_start) ? s.s_start
                                      : fr.param_of(segment_end_c(r.start));
    r.s_end = std::isinf(s.s_end) ? s.s_end : fr.param_of(segment_end_c(r.end));
    return r;
}

std::optional<Point> Isometry::fixed_point_in_disk() const {
    auto [al, be] = su11();
    // conj(beta) w^2 + (conj(alpha) - alpha) w - beta = 0
    if (std::abs(be) < 1e-14) return Point{0, 0};
    Complex A = std::conj(be);
    Complex B = std::conj(al) - al;
    Complex disc = std::sqrt(B * B + 4.0 * A * be);
    Complex w1 = (-B + disc) / (2.0 * A);
    Complex w2 = (-B - disc) / (2.0 * A);
    Complex w = std::abs(w1) < std::abs(w2) ? w1 : w2;
    if (std::abs(w) >= 1.0 - 1e-9) return std::nullopt;
    return Point::from(w);
}

Isometry operator*(const Isometry& g, const Isometry& h) {
    return Isometry::from_entries(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                                  g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

bool projectively_equal(const Isometry& g, const Isometry& h, double tol) {
    double dm = std::max({std::abs(g.a - h.a), std::abs(g.b - h.b),
                          std::abs(g.c - h.c), std::abs(g.d - h.d)});
    double dp = std::max({std::abs(g.a + h.a), std::abs(g.b + h.b),
                          std::abs(g.c + h.c), std::abs(g.d + h.d)});
    return std::min(dm, dp) < tol;
}

double direction_from(const Point& base, Complex target) {
    return std::arg(mobius_to_origin(base.c(), target));
}

DirectedGeodesic geodesic_from_direction(const Point& p, double phi) {
    Complex e = std::polar(1.0, phi);
    Complex u = mobius_from_origin(p.c(), -e);
    Complex v = mobius_from_origin(p.c(), e);
    return {BoundaryPoint::at(std::arg(u)), BoundaryPoint::at(std::arg(v))};
}

DirectedGeodesic geodesic_through(const Point& p, const Point& q) {
    if (distance(p, q) <= tolerances().geodesic)
        throw DegenerateInput("coincident points define no geodesic");
    return geodesic_from_direction(p, direction_from(p, q.c()));
}

HalfPlane perpendicular_bisector(const Point& p, const Point& q) {
    if (distance(p, q) <= tolerances().geodesic)
        throw DegenerateInput("bisector of coincident points");
    // The ideal endpoints of the bisector satisfy
    //   |e^{i t} - p|^2 (1 - |q|^2) = |e^{i t} - q|^2 (1 - |p|^2),
    // i.e. Re(e^{-i t} w) = |p|^2 - |q|^2 with w = p(1-|q|^2) - q(1-|p|^2).
    double np = std::norm(p.c()), nq = std::norm(q.c());
    Complex w = p.c() * (1.0 - nq) - q.c() * (1.0 - np);
    double rhs = np - nq;
    double aw = std::abs(w);
    double xang = std::acos(std::clamp(rhs / aw, -1.0, 1.0));
    double base = std::arg(w);
    DirectedGeodesic g{BoundaryPoint::at(base + xang), BoundaryPoint::at(base - xang)};
    if (side_of(g, p) != Side::Left) g = g.reversed();
    return {g};
}

Point foot_of_perpendicular(const DirectedGeodesic& g, const Point& p) {
    CarrierFrame fr = frame_of(g);
    Complex z = mobius_to_origin(fr.m, p.c()) * std::polar(1.0, -fr.psi);
    // foot on the real diameter: x t^2 - (1+|z|^2) t + x = 0, inner root
    double x = z.real(), n = std::norm(z);
    double t = 2.0 * x / ((1.0 + n) + std::sqrt((1.0 + n) * (1.0 + n) - 4.0 * x * x));
    Complex f = mobius_from_origin(fr.m, t * std::polar(1.0, fr.psi));
    return Point::from(f);
}

Point disk_from_halfplane(Complex z) {
    Complex w = (z - Complex{0, 1}) / (z + Complex{0, 1});
    if (std::abs(w) >= 1.0 - 1e-12)
        throw DegenerateInput("half-plane point maps onto the boundary circle");
    return Point::from(w);
}

Complex halfplane_from_disk(const Point& p) {
    Complex w = p.c();
    return Complex{0, 1} * (1.0 + w) / (1.0 - w);
}

BoundaryPoint boundary_from_halfplane(std::optional<double> x) {
    if (!x) return BoundaryPoint::at(0.0);
    Complex w = (Complex{*x, 0} - Complex{0, 1}) / (Complex{*x, 0} + Complex{0, 1});
    return BoundaryPoint::at(std::arg(w));
}

std::optional<double> halfplane_from_boundary(const BoundaryPoint& b) {
    if (angular_distance(b.theta, 0.0) < 1e-12) return std::nullopt;
    Complex w = b.c();
    Complex z = Complex{0, 1} * (1.0 + w) / (1.0 - w);
    return z.real();
}

} // namespace fuchsian
