#ifndef NASHLIFT_BLOWUP_HPP
#define NASHLIFT_BLOWUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nashlift/fractional_ideal.hpp"

namespace nashlift {

struct GaussOptions {
    std::uint64_t seed = 0;
    int attempts = 5;
};

/// How the minors were obtained. Over-determined Jacobians are replaced by
/// codim random integer combinations of their rows.
struct GaussPath {
    bool row_reduced = false;
    std::uint64_t seed = 0;
    int attempt = 0;

    std::string to_string() const;
};

struct GaussMinors {
    FractionalIdeal ideal;
    GaussPath path;
};

/// The c x c Jacobian minors reduced on the chart; the unit ideal when c = 0.
GaussMinors gauss_minors(const ChartPtr& chart, const GaussOptions& options = {});

inline FractionalIdeal gauss_minor_ideal(const ChartPtr& chart, const GaussOptions& options = {}) {
    return gauss_minors(chart, options).ideal;
}

/// Where a chart variable comes from: a surviving parent variable, or the
/// ratio g_j / g_k of center generators.
struct VariableSource {
    enum class Kind { Parent, Ratio } kind;
    std::size_t index;
};

struct BlowupChart {
    ChartPtr chart;
    std::size_t selected; // generator k, equal to 1 on this chart up to the ratios
    RationalFunction exceptional; // g_k pulled back to the chart
    std::vector<VariableSource> sources; // one per chart variable
};

/// One chart per center generator not vanishing on the chart. Each chart is
/// the closure of the graph of the ratios, simplified by eliminating
/// variables that occur linearly with a constant coefficient.
std::vector<BlowupChart> blowup_charts(const ChartPtr& chart, const FractionalIdeal& center);

struct NashBlowup {
    std::vector<BlowupChart> charts;
    FractionalIdeal center;
    GaussPath path;
};

NashBlowup nash_blowup(const ChartPtr& chart, const GaussOptions& options = {});

/// Number of parent links above the chart.
int chart_level(const AffineChart& chart);

struct TowerNode {
    std::string path; // "root/k1/k0"
    int level = 0;
    ChartPtr chart;
    bool smooth = false;
    std::optional<std::size_t> selected;
    std::optional<GaussPath> gauss; // set on nodes that were blown up
};

struct TowerReport {
    std::vector<TowerNode> nodes; // breadth first, children in generator order
    std::vector<std::size_t> charts_per_level;
    std::optional<int> smooth_level; // first level with no singular chart left
    int max_iter = 0;
    bool hit_max_iter = false;
};

TowerReport iterate_until_smooth(const ChartPtr& chart, int max_iter,
                                 const GaussOptions& options = {});

} // namespace nashlift

#endif
