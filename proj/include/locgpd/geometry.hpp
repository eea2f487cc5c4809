#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "locgpd/core.hpp"

namespace locgpd::geom {

struct UnitVector3 {
    double x = 0, y = 0, z = 1;

    UnitVector3() = default;
    UnitVector3(double x_, double y_, double z_);   // renormalizes

    double dot(const UnitVector3& o) const { return x * o.x + y * o.y + z * o.z; }
    UnitVector3 cross_raw(const UnitVector3& o) const;   // not normalized
    bool near(const UnitVector3& o, double tol = 1e-9) const;
};

/// Signed area of the spherical triangle in (-2pi, 2pi], via the solid
/// angle arctangent 2*atan2(x.(y cross z), 1 + x.y + y.z + z.x). Throws
/// DegenerateTriangle when two vertices are antipodal within tolerance.
double signed_triangle_area(const UnitVector3& x, const UnitVector3& y,
                            const UnitVector3& z, double tol = 1e-12);

/// Element (y, x, a) of the spherical-area groupoid: an arrow x -> y with
/// area coordinate a (no 4pi quotient).
struct SphereArrow {
    UnitVector3 y;   // target point
    UnitVector3 x;   // source point
    double a = 0;
};

inline constexpr double sphere_window_tol = 1e-9;
inline constexpr double compose_tol = 1e-9;

/// (z,y,a).(y,x,a') = (z,x,a+a'+A(xyz)), defined when the endpoints meet,
/// x+z is not antipodal and |A| < pi (open window). Endpoint mismatch
/// throws NotComposable.
std::optional<SphereArrow> mult_sphere(const SphereArrow& g, const SphereArrow& h);

/// Reduce the area coordinate mod 4pi into (-2pi, 2pi] (the globalizable
/// variant of the groupoid).
double reduce_mod_4pi(double a);

/// The six-arrow witness along a subdivided tetrahedron path: evaluates
/// F(E((D(CB))A)) and ((F((ED)C))B)A; the two area coordinates come out as
/// +2pi and -2pi.
struct TetrahedronWitness {
    SphereArrow left;    // F(E((D(CB))A))
    SphereArrow right;   // ((F((ED)C))B)A
    std::vector<UnitVector3> points;   // x1..x7
};
TetrahedronWitness tetrahedron_witness();

/// Arrow of the s2 x s2 lambda-groupoid.
struct LambdaArrow {
    UnitVector3 y, yp;   // target pair
    UnitVector3 x, xp;   // source pair
    double a = 0;
};

/// Product with area a1+a2+A(xyz)+lambda*A(x'y'z'); windows |A| < pi and,
/// for lambda != 0, |A'| < pi/|lambda|.
std::optional<LambdaArrow> mult_lambda(const LambdaArrow& g, const LambdaArrow& h,
                                       double lambda);

struct PeriodLattice {
    bool rational = false;
    long long p = 0, q = 1;                   // lambda = p/q when rational
    double lambda = 0;
    std::optional<double> generator;          // 4pi gcd(p,q)/q for rational lambda
    double min_gap = 0;                       // min positive 4pi|m + lambda n|
    long long best_m = 0, best_n = 0;
    bool nondiscrete_evidence = false;
};

PeriodLattice monodromy_lattice_rational(long long p, long long q);
PeriodLattice monodromy_lattice_scan(double lambda, long long N,
                                double evidence_threshold = 1e-3);

struct QuadCheck {
    int samples = 0;
    double max_deviation = 0;   // |((gh)k).a - (g(hk)).a| over admissible triples
};

/// Seeded sampling of admissible triples; both bracketings must agree
/// exactly (floating error only).
QuadCheck quad_check_sphere(int samples, std::uint64_t seed);
QuadCheck quad_check_lambda(double lambda, int samples, std::uint64_t seed);

// --- punctured-plane cover ----------------------------------------------

inline constexpr double cover_disk_cx = 1.0;
inline constexpr double cover_disk_cy = 0.0;
inline constexpr double cover_disk_r = 0.125;
inline constexpr double cover_ball_r = 0.75;

/// Point of the universal cover of the punctured plane: plane point plus
/// winding index relative to the downward ray from the disk center.
struct CoverPoint {
    double px = 0, py = 0;
    int w = 0;
};

bool segment_clears_disk(double px, double py, double qx, double qy);
int ray_crossings(double px, double py, double qx, double qy);   // signed

/// Product via segment lifting: defined when one factor lies in the
/// distinguished ball sheet (|p| < 3/4, w = 0). Throws SegmentHitsDisk
/// (as LeftRegion-style error) when the segment is blocked; nullopt when
/// neither factor is in the ball sheet.
struct SegmentHitsDisk : Error { using Error::Error; };
std::optional<CoverPoint> cover_mult(const CoverPoint& g, const CoverPoint& h);

struct CoverWitness {
    CoverPoint a, b, c;
    CoverPoint ab_c;   // (ab)c
    CoverPoint a_bc;   // a(bc)
};
/// The pinned triple around the removed disk: both evaluations land over
/// the same plane point with winding indices differing by one.
CoverWitness cover_witness();

// --- finite exports -------------------------------------------------------

struct FiniteExport {
    FiniteLocalGroupoid table;
    std::vector<std::string> dropped_pairs;   // NotClosed warnings
};

/// Tetrahedron sample: the seven points, the six arrows a=0 and the full
/// closure under defined products. 6-associativity fails on this table.
FiniteExport tetra_table();

/// Cover sample: the witness triangle points, their differences and
/// negations, windings {-1,0,1}. 3-associativity fails; the table is
/// inversional and carries the winding-one associator.
FiniteExport cover_witness_table();

/// Empty sample: the trivial table of units over n objects.
FiniteLocalGroupoid units_table(int n_objects);

} // namespace locgpd::geom
