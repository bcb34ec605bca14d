#ifndef NASHLIFT_IDENTITY_HPP
#define NASHLIFT_IDENTITY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nashlift/ladder.hpp"

namespace nashlift {

/// Test chart of dimension n with a nontrivial frame: the cusp for n = 1,
/// the quadric cone x1*x2 = x3^2 + ... + x_{n+1}^2 otherwise.
ChartPtr identity_chart(int n);

struct IdentityTrial {
    bool dlog = false;        // det formula equals the dlog product
    bool connection = false;  // unchanged under D -> D + eta
    bool homogeneity = false; // scaling every section by lambda gives lambda^(n+1)
    bool all() const { return dlog && connection && homogeneity; }
};

/// One trial with random polynomial sections, a random rational scaling and a
/// random connection form.
IdentityTrial run_identity_trial(const DifferentialFrame& frame, std::mt19937_64& rng);

struct IdentitySuite {
    int n = 0;
    int trials = 0;
    int passed = 0;
    int dlog = 0;
    int connection = 0;
    int homogeneity = 0;
    std::uint64_t seed = 0;
};

IdentitySuite run_identity_suite(int n, int trials, std::uint64_t seed);

} // namespace nashlift

#endif
