#ifndef NASHLIFT_LADDER_HPP
#define NASHLIFT_LADDER_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nashlift/blowup.hpp"

namespace nashlift {

/// (t, m*D_1 t, ..., m*D_n t) with m the frame certificate.
std::vector<Polynomial> scaled_jet(const DifferentialFrame& frame, const Polynomial& t);

/// Coefficient of dx_basis in (s_0 + ds_0) ^ ... ^ (s_n + ds_n) with every
/// differential expanded through the frame: det[s_i | D_b s_i].
RationalFunction principal_parts_wedge(const DifferentialFrame& frame,
                                       const std::vector<RationalFunction>& sections);

/// s_0 ... s_n * dlog(s_1/s_0) ^ ... ^ dlog(s_n/s_0), evaluated independently
/// of principal_parts_wedge.
RationalFunction dlog_wedge(const DifferentialFrame& frame,
                            const std::vector<RationalFunction>& sections);

/// sum_i (-1)^i s_i Ds_0 ^ ... (omit i) ... ^ Ds_n for the connection
/// D = d + eta, eta given by its coefficients on the basis differentials.
RationalFunction connection_wedge(const DifferentialFrame& frame,
                                  const std::vector<RationalFunction>& sections,
                                  const std::vector<RationalFunction>& eta);

struct LadderOptions {
    GaussOptions gauss;
    std::optional<std::vector<std::size_t>> frame;
};

/// Entries F_1, F_{n+2}, F_{(n+2)^2}, ... on the base chart.
struct FIdealLadder {
    ChartPtr chart;
    int n = 0;
    DifferentialFrame frame;
    GaussPath gauss;
    std::vector<FractionalIdeal> entries;
    FractionalIdeal running_product; // product of all entries, minimized

    int depth() const noexcept { return static_cast<int>(entries.size()) - 1; }
    std::uint64_t index_of_entry(int i) const;
};

/// Ladder holding only F_1, the Gauss minor ideal.
FIdealLadder start_ladder(const ChartPtr& chart, const LadderOptions& options = {});

/// The next entry: the ideal of wedges of n+1 sections drawn from
/// {t_j * x_k}, t_j spanning the product I of all entries and x_k ranging
/// over 1 and the chart variables. Computed from the module spanned by the
/// jets of t_j and t_j * dx_k, which has the same maximal minors; the
/// generating set returned is a minimized one.
FractionalIdeal next_F(const FIdealLadder& ladder);

/// Same ideal by enumerating every (n+1)-subset of the spanning set.
/// Exponentially slower; kept as a cross-check.
FractionalIdeal next_F_literal(const FIdealLadder& ladder);

void extend_ladder(FIdealLadder& ladder);

FIdealLadder build_ladder(const ChartPtr& chart, int depth, const LadderOptions& options = {});

/// Nonzero base-(n+2) digits of i as (position, digit), lowest position first.
std::vector<std::pair<unsigned, unsigned>> composite_F_digits(std::uint64_t i, int n);

/// F_i as the product of ladder entries raised to the digits of i.
FractionalIdeal composite_F(const FIdealLadder& ladder, std::uint64_t i);

} // namespace nashlift

#endif
