#pragma once

#include "lvlab/dirichlet.hpp"
#include "lvlab/util.hpp"

#include <cstdint>
#include <vector>

namespace lvlab {

// G = M_W M_W^*, entries G[t1,t2] = sum_n w(n/N)^2 n^{i(t1-t2)}.
struct GramMatrix {
    std::size_t dim = 0;
    std::int64_t N = 0;
    std::vector<cdouble> a; // row-major dim x dim, Hermitian

    cdouble& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
    double hermitian_residual() const; // max_ij |G_ij - conj(G_ji)|
};

GramMatrix build_gram(const PointSet& W, std::int64_t N,
                      std::uint64_t work_budget = 1000000000ULL);

double trace_gram(const GramMatrix& G);

struct Trace3 {
    double value;
    double imag_residual; // |Im| of the trace accumulator, should be ~0
};
Trace3 trace_gram_cubed(const GramMatrix& G);

// Power iteration from the all-ones start vector; seeded random restarts on
// detected degeneracy. Returns the top singular value of M_W, i.e.
// sqrt(lambda_max(G)). Checks PSD up to -1e-8 * tr(G).
double top_singular(const GramMatrix& G);

struct SpectrumSummary {
    double s1 = 0.0;
    double trace1 = 0.0;
    double trace3 = 0.0;
    double trace3_imag_residual = 0.0;
    double hermitian_residual = 0.0;
};
SpectrumSummary spectrum_summary(const GramMatrix& G);

// 2 (max(tr3 - tr1^3/m^2, 0))^{1/6} + 2 (tr1/m)^{1/2}
double trace_sv_bound(double trace1, double trace3, std::size_t m);

// (x_1,  2 (sum x^6 - (sum x^2)^3/k^2)^{1/6} + 2 (sum x^2 / k)^{1/2})
std::pair<double, double> real_power_inequality(const std::vector<double>& xs);

// N^{1-2 sigma} * s1^2
double spectral_count_bound(double N, double sigma, double s1);

} // namespace lvlab
