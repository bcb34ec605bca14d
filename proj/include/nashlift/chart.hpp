#ifndef NASHLIFT_CHART_HPP
#define NASHLIFT_CHART_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nashlift/groebner.hpp"
#include "nashlift/matrix.hpp"
#include "nashlift/rational_function.hpp"

namespace nashlift {

class AffineChart;
using ChartPtr = std::shared_ptr<const AffineChart>;

/// Coordinates of the map to the parent chart, one polynomial (in the child
/// ring) per parent variable.
struct ParentMap {
    ChartPtr parent;
    std::vector<Polynomial> coordinates;
};

/// An affine model V(I) in Q^N of declared dimension n. The defining ideal is
/// assumed radical and equidimensional; that hypothesis is not verified.
class AffineChart {
public:
    /// Validates dimension(ideal) == dim (dim = -1 for the empty chart).
    AffineChart(Ideal ideal, int dim, std::optional<ParentMap> parent = std::nullopt);

    /// Dimension computed from the ideal when not given.
    static ChartPtr make(Ideal ideal, std::optional<int> dim = std::nullopt,
                         std::optional<ParentMap> parent = std::nullopt);

    const RingPtr& ring() const noexcept { return ideal_.ring(); }
    const Ideal& ideal() const noexcept { return ideal_; }
    std::size_t nvars() const noexcept { return ideal_.ring()->nvars(); }
    int dim() const noexcept { return dim_; }
    int codim() const noexcept { return static_cast<int>(nvars()) - dim_; }
    const std::optional<ParentMap>& parent() const noexcept { return parent_; }
    bool is_empty() const { return dim_ < 0; }

    Polynomial reduce(const Polynomial& f) const { return normal_form(f, ideal_); }
    bool vanishes(const Polynomial& f) const { return contains(ideal_, f); }

private:
    Ideal ideal_;
    int dim_;
    std::optional<ParentMap> parent_;
};

/// Every parent generator pulls back into the chart ideal.
bool parent_map_consistent(const AffineChart& chart);

/// Rows are the stored generators of the chart ideal, columns the variables.
PolyMatrix jacobian(const AffineChart& chart);

/// Chart ideal plus all c x c Jacobian minors.
Ideal singular_locus(const AffineChart& chart);

/// Jacobian criterion. The empty chart counts as smooth.
bool is_smooth(const AffineChart& chart);

/// Rank of the Jacobian at a rational point of the chart equals the codimension.
bool is_smooth_at(const AffineChart& chart, const std::vector<Rational>& point);

/// Expresses dx_k for the dependent variables through the basis differentials:
///   certificate * dx_dependent[i] = sum_j numerators[i][j] * dx_basis[j].
struct DifferentialFrame {
    ChartPtr chart;
    std::vector<std::size_t> basis;
    std::vector<std::size_t> dependent;
    std::vector<std::size_t> certificate_rows;
    Polynomial certificate;
    PolyMatrix numerators; // dependent.size() x basis.size()

    std::size_t rank() const noexcept { return basis.size(); }

    RationalFunction expansion(std::size_t dep, std::size_t b) const {
        return RationalFunction(numerators[dep][b], certificate);
    }

    /// certificate * D_b f, where D_b is the frame derivation along basis[b].
    Polynomial scaled_derivative(const Polynomial& f, std::size_t b) const;

    /// D_b f on a rational function.
    RationalFunction derivative(const RationalFunction& f, std::size_t b) const;

    std::vector<std::string> basis_names() const;
};

/// Picks `preferred` when its certificate minor is nonzero on the chart,
/// otherwise the first admissible basis in lexicographic subset order.
DifferentialFrame differential_frame(const ChartPtr& chart,
                                     const std::optional<std::vector<std::size_t>>& preferred = {});

/// All Jacobian rows annihilate the expansions modulo the chart ideal.
bool frame_relations_hold(const DifferentialFrame& frame);

} // namespace nashlift

#endif
