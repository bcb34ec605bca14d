#ifndef NASHLIFT_TOOLS_APP_HPP
#define NASHLIFT_TOOLS_APP_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nashlift::app {

inline constexpr const char* kVersion = "0.1.0";

struct JobSpec {
    std::string command;
    std::string variety;
    std::string arc;
    int max_iter = 8;
    int depth = 4;
    std::optional<int> trunc;
    std::uint64_t seed = 0;
    std::string format = "text";
    std::vector<std::string> frame;
    int n = 2;
    int trials = 25;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"smooth", "nash",      "tower", "ladder",
                                            "lift",   "criterion", "probe", "dlog-check"};
    return c;
}

/// Runs one job. Returns 0 on success, 2 on hypothesis violations, 1 on any
/// other error (message on `err`).
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

} // namespace nashlift::app

#endif
