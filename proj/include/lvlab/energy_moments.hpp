#pragma once

#include "lvlab/dirichlet.hpp"
#include "lvlab/util.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace lvlab {

// Discrete moments sum_{M<n1,n2<=2M} |R(n1/n2)|^p with |R| cached per
// reduced fraction.
double discrete_moment(const PointSet& W, std::int64_t M, int p,
                       std::uint64_t work_budget = 1000000000ULL);
double discrete_moment_uncached(const PointSet& W, std::int64_t M, int p); // test oracle

// Level sets of u = floor(t1 - t2) over ordered pairs, bucketed dyadically
// by the representation count r(u) in (B, 2B].
struct LevelSetSummary {
    struct Bucket {
        double B; // dyadic scale, r(u) in (B, 2B]
        std::vector<std::pair<long long, std::uint64_t>> members; // (u, r(u))
        std::uint64_t count_sum = 0;   // sum r(u)
        std::uint64_t count_sq_sum = 0; // sum r(u)^2
    };
    std::vector<Bucket> buckets;
    std::uint64_t total_pairs = 0; // must equal |W|^2
};
LevelSetSummary level_sets(const PointSet& W);

// Third-moment split by d = gcd(n1, n2) <= D versus > D.
struct GcdSplit {
    double threshold = 0.0;
    double small_sum = 0.0;
    double large_sum = 0.0;
    double total = 0.0;
    std::map<std::int64_t, double> per_d; // partial sums for d <= 64
};
GcdSplit gcd_split_moment(const PointSet& W, std::int64_t N, double D, int p = 3,
                          std::uint64_t work_budget = 1000000000ULL);

// Heath-Brown difference sum and its closed-form right-hand side.
double hb_sum(const PointSet& W, const std::vector<cdouble>& a, std::int64_t M,
              std::uint64_t work_budget = 1000000000ULL);
double hb_rhs(std::size_t set_size, double M, double T);

// |W|^3 N^{1-2s} + |W|^2 N^{2-2s}
double energy_rhs_basic(std::size_t set_size, double N, double sigma);
// |W| N^{4-4s} + |W|^{21/8} T^{1/4} N^{1-2s} + |W|^3 N^{1-2s}
double energy_rhs_refined(std::size_t set_size, double N, double T, double sigma);

} // namespace lvlab
