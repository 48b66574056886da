#ifndef CHARVAR_CHARTS_HPP
#define CHARVAR_CHARTS_HPP

#include <array>

#include "charvar/compactified.hpp"

namespace charvar {

// The two affine charts used around the special orbits for n = 5:
//   U1 = [b1 != 0, b2 != 0, c3 != 0, c4 != 0],
//   U2 = [c1 != 0, c2 != 0, b3 != 0, b4 != 0].
enum class Chart { U1, U2 };

// Affine coordinates of the four class points in a chart. In U1 the points
// read ([1:x1],[y1:1]), ([1:x2],[y2:1]), ([x3:1],[1:y3]), ([x4:1],[1:y4]);
// U2 swaps the roles of the two factors.
struct ChartPoint {
    Chart chart = Chart::U1;
    std::array<std::array<Rational, 2>, 4> coords;
};

// Extracts chart coordinates from a configuration with n = 5. Throws with a
// message naming the failed inequality when the point leaves the chart.
ChartPoint chart_point(const Configuration& cfg, Chart chart);

// The six generators of the special-orbit ideal in the chart, with the
// torus weights of diag(t, 1/t):
//   U1: X0..X3 = e_i (scaled), X4 = x1 - x2, X5 = x3 - x4,
//       weights (-2, -2, 2, 2, -2, 2);
//   U2: Y0..Y3, Y4 = z1 - z2, Y5 = z3 - z4, weights (2, 2, -2, -2, 2, -2).
struct ChartGenerators {
    std::array<Rational, 6> values;
    std::array<int, 6> weights;
};

ChartGenerators chart_generators(const ChartPoint& p,
                                 const std::vector<EigenvalueData>& eigen);

}  // namespace charvar

#endif
