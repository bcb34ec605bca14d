#ifndef NASHLIFT_IO_HPP
#define NASHLIFT_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nashlift/arcs.hpp"

namespace nashlift {

/// Variety file:
///   vars x y;
///   ideal y^2 - x^3;          (comma separated generators)
///   dim 1;                    (optional, computed when absent)
///   center x^2, y;            (optional blowup center for `lift`)
///   include "other.var";      (statements of another file, path relative to this one)
/// `#` starts a comment.
struct VarietyFile {
    ChartPtr chart;
    std::optional<std::vector<Polynomial>> center;
};

VarietyFile parse_variety(std::string_view text, const std::filesystem::path& base = {});
VarietyFile load_variety(const std::filesystem::path& path);

/// Arc file: `x = t^2; y = t^3 + 2t^5; trunc 64;`. A trailing `+ O(t^k)`
/// marks a component known only through t^(k-1); otherwise components are
/// exact polynomials. `trunc` sets the working order (default_order when
/// absent).
Arc parse_arc(std::string_view text, const ChartPtr& chart, int default_order = 64,
              const std::filesystem::path& base = {});
Arc load_arc(const std::filesystem::path& path, const ChartPtr& chart, int default_order = 64);

/// Canonical text; parse_variety(chart_to_text(c)) reproduces c and the
/// text again.
std::string chart_to_text(const AffineChart& chart);
std::string arc_to_text(const Arc& arc);

} // namespace nashlift

#endif
