#pragma once

#include "enumgeo/chow.hpp"
#include "enumgeo/integer.hpp"

namespace enumgeo {

/// Class of triples (line, cubic, point) where the cubic has a cusp at the
/// point: 24 y3^2 a^2 + 12 y3^3 a + 2 y3^4. The coefficients are the counts
/// of cuspidal cubics through 7 points, through 6 points with the cusp on a
/// line, and through 5 points with the cusp at a fixed point.
ChowElement class_a2f();

/// class_a2f further cut by the line passing through the cusp: (y1 + a) times
/// class_a2f.
ChowElement class_a2l();

/// class_a2l further cut by the line being tangent to the branch of the cusp:
/// class_a2l * (y3 + 2*lambda + 3a) with lambda = y1 - 2a, i.e. the Euler
/// class factor y3 + 2 y1 - a. Pure codimension 6.
ChowElement class_pa2();

/// Count of cuspidal-cubic-plus-tangent-line configurations: the cubic
/// through m1 general points, the line through m2 general points, the cusp
/// on the intersection of n generic lines with the line tangent to the cusp
/// branch there. Zero unless m1 + m2 + n = 7 (and automatically zero whenever
/// an exponent leaves the ring, e.g. n >= 3).
///
/// The raw multidegree of class_pa2 counts every geometric configuration
/// twice (the defining second-derivative section vanishes to order two along
/// the cusp's tangent cone), so the integrand is halved; an odd integrand
/// raises ConsistencyError.
ExactInteger cusp_tangent_line_count(long m1, long m2, long n);

/// Rational plane quartics with an E6 singularity (local form t -> (t^3, t^4))
/// on the intersection of n generic lines, through 8 - n general points.
/// Zero for n >= 3; n = 2, 1, 0 are solved in that order from the two
/// boundary expansions of the degree-4 WDVV relation, whose unknown enters
/// with coefficient one.
ExactInteger e6_quartic_count(long n);

}  // namespace enumgeo
