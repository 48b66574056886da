#include "charvar/charts.hpp"

#include <stdexcept>
#include <string>

namespace charvar {

ChartPoint chart_point(const Configuration& cfg, Chart chart) {
    if (cfg.n() != 5) throw std::invalid_argument("charts require n = 5");
    ChartPoint out;
    out.chart = chart;
    for (size_t i = 0; i < 4; ++i) {
        const CompactifiedMatrix& m = cfg.mats()[i];
        // First pair of classes uses b != 0 in U1 and c != 0 in U2; the
        // second pair swaps them.
        const bool want_b = (chart == Chart::U1) == (i < 2);
        if (want_b && m.b() == 0)
            throw std::invalid_argument("chart violation: b" + std::to_string(i + 1) + " = 0");
        if (!want_b && m.c() == 0)
            throw std::invalid_argument("chart violation: c" + std::to_string(i + 1) + " = 0");
        const P1P1Point p = matrix_to_p1p1(m, cfg.eigen()[i], static_cast<int>(i + 1));
        if (want_b) {
            // b = SV != 0: ([1:x],[y:1]) with x = T/S, y = U/V.
            out.coords[i] = {p.t / p.s, p.u / p.v};
        } else {
            // c = TU != 0: ([x:1],[1:y]) with x = S/T, y = V/U.
            out.coords[i] = {p.s / p.t, p.v / p.u};
        }
    }
    return out;
}

ChartGenerators chart_generators(const ChartPoint& p,
                                 const std::vector<EigenvalueData>& eigen) {
    if (eigen.size() < 4) throw std::invalid_argument("need the four class data");
    ChartGenerators out;
    for (size_t i = 0; i < 4; ++i)
        out.values[i] = (p.coords[i][1] + p.coords[i][0]) / eigen[i].delta;
    out.values[4] = p.coords[0][0] - p.coords[1][0];
    out.values[5] = p.coords[2][0] - p.coords[3][0];
    if (p.chart == Chart::U1)
        out.weights = {-2, -2, 2, 2, -2, 2};
    else
        out.weights = {2, 2, -2, -2, 2, -2};
    return out;
}

}  // namespace charvar
