#ifndef NASHLIFT_ARCS_HPP
#define NASHLIFT_ARCS_HPP

#include <optional>
#include <string>
#include <vector>

#include "nashlift/ladder.hpp"
#include "nashlift/series.hpp"

namespace nashlift {

/// One series per chart variable.
struct Arc {
    ChartPtr chart;
    std::vector<TruncatedSeries> components;

    int truncation() const;
    bool exact() const;
    /// Constant terms: the point of the chart the arc passes through.
    std::vector<Rational> center() const;
};

/// Every chart generator pulls back to zero through the known precision.
bool lies_on_chart(const Arc& arc);

TruncatedSeries evaluate_on_arc(const Polynomial& f, const Arc& arc);
TruncatedSeries evaluate_on_arc(const RationalFunction& f, const Arc& arc);

/// Minimum over generators; Infinite when all numerators vanish exactly.
Valuation ideal_valuation_along_arc(const FractionalIdeal& f, const Arc& arc);

/// Throws the nonsingular-point hypothesis violation unless some c x c
/// Jacobian minor has finite valuation along the arc.
void require_smooth_generic_point(const Arc& arc);

struct BlowupLift {
    std::size_t chart; // index into the chart list
    Arc arc;
    std::int64_t loss; // valuation of the selected generator
};

/// Lifts to the chart whose generator has minimal valuation (lowest index on
/// ties). `charts` must come from blowup_charts(arc.chart, center).
BlowupLift lift_through_blowup(const Arc& arc, const FractionalIdeal& center,
                               const std::vector<BlowupChart>& charts);

/// Parent-map composition reproduces `original` through the lifted precision.
bool round_trip_holds(const Arc& lifted, const Arc& original);

struct TowerLiftStep {
    std::string path;
    Arc arc;
    bool smooth_at_center = false;
    std::optional<GaussPath> gauss;
    std::optional<std::size_t> selected; // generator chosen to reach the next step
    std::int64_t loss = 0;
};

struct TowerLiftReport {
    std::vector<TowerLiftStep> steps; // steps[0] is the input arc
    bool success = false;
    int max_levels = 0;

    const Arc& lifted() const { return steps.back().arc; }
    int level() const { return static_cast<int>(steps.size()) - 1; }
};

TowerLiftReport lift_through_tower(const Arc& arc, int max_levels, const GaussOptions& options = {});

enum class Verdict { EventuallyGeometric, NotYetDetermined, DivergentPattern };

std::string to_string(Verdict v);

struct CriterionReport {
    int n = 0;
    int depth = 0;
    Valuation base; // along F_1
    std::vector<Valuation> values; // along F_{(n+2)^i}, i = 1..depth
    Verdict verdict = Verdict::NotYetDetermined;
    std::optional<int> onset; // index i into 1..depth
    std::int64_t ratio = 0;
    std::optional<int> divergent_index;
    bool truncation_adequate = true;
};

CriterionReport geometric_criterion_test(const Arc& arc, const FIdealLadder& ladder);

struct ProbeLevel {
    int level = 0;
    std::string path;
    std::vector<Rational> center;
    bool smooth_at_center = false;
};

struct StableTransformReport {
    std::vector<ProbeLevel> levels;
    std::optional<int> stable_level;
    int max_levels = 0;
};

/// Follows a polynomial parametrization through the Nash tower until its
/// center point is a smooth point of the chart it lands on.
StableTransformReport stable_transform_probe(const Arc& curve, int max_levels,
                                             const GaussOptions& options = {});

} // namespace nashlift

#endif
