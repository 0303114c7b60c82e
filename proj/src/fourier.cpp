#include "lvlab/fourier.hpp"
#include "lvlab/errors.hpp"
#include "lvlab/kernels.hpp"
#include "lvlab/quadrature.hpp"
#include "lvlab/smooth_weight.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <unordered_map>

namespace lvlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

// Flattened panel nodes over [1,2]: abscissae, their logs, and the quadrature
// weight folded together with w(u)^2. Keyed by panel count; small counts are
// reused by every hhat evaluation so they are cached.
struct PanelNodes {
    std::vector<double> u, logu, coef;
};

std::shared_ptr<const PanelNodes> make_nodes(std::size_t panels) {
    auto nodes = std::make_shared<PanelNodes>();
    std::size_t total = panels * kGlOrder;
    nodes->u.reserve(total);
    nodes->logu.reserve(total);
    nodes->coef.reserve(total);
    double h = 1.0 / double(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        double mid = 1.0 + h * (double(p) + 0.5);
        for (int i = 0; i < kGlOrder; ++i) {
            double u = mid + 0.5 * h * kGlNode[i];
            nodes->u.push_back(u);
            nodes->logu.push_back(std::log(u));
            nodes->coef.push_back(0.5 * h * kGlWeight[i] * sq(SmoothWeight::eval(u)));
        }
    }
    return nodes;
}

constexpr std::size_t kCachePanelLimit = 1 << 14;

std::shared_ptr<const PanelNodes> get_nodes(std::size_t panels) {
    if (panels > kCachePanelLimit) return make_nodes(panels);
    static std::mutex mu;
    static std::unordered_map<std::size_t, std::shared_ptr<const PanelNodes>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(panels);
        if (it != cache.end()) return it->second;
    }
    auto nodes = make_nodes(panels);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(panels, nodes).first->second;
}

cdouble eval_panels(double t, double xi, std::size_t panels) {
    auto nodes = get_nodes(panels);
    return kernels::blend_phase_sum(nodes->logu.data(), nodes->u.data(), nodes->coef.data(),
                                    nodes->u.size(), t, -kTwoPi * xi);
}

std::size_t seed_panels(double t, double xi) {
    double width = 0.25 * std::min(1.0, kTwoPi / (1.0 + std::fabs(t) + kTwoPi * std::fabs(xi)));
    auto p = std::size_t(std::ceil(1.0 / width));
    return p < 4 ? 4 : p;
}

} // namespace

cdouble eval_h(double t, double u) {
    double w = SmoothWeight::eval(u);
    if (w == 0.0) return {0.0, 0.0};
    double ph = t * std::log(u);
    return w * w * cdouble(std::cos(ph), std::sin(ph));
}

cdouble fourier_h_fixed(double t, double xi, std::size_t panels) {
    return eval_panels(t, xi, panels);
}

FourierEval fourier_h_detail(double t, double xi) {
    if (std::fabs(t) > kFourierEnvelope || std::fabs(xi) > kFourierEnvelope)
        throw DomainError("fourier_h: |t|,|xi| outside the quadrature envelope");
    std::size_t panels = seed_panels(t, xi);
    if (panels > kFourierMaxPanels)
        throw AccuracyNotReached("fourier_h: seed panel count over budget");
    cdouble v = eval_panels(t, xi, panels);
    while (true) {
        std::size_t panels2 = 2 * panels;
        if (panels2 > kFourierMaxPanels)
            throw AccuracyNotReached("fourier_h: refinement exceeded panel budget");
        cdouble v2 = eval_panels(t, xi, panels2);
        if (std::abs(v2 - v) <= std::max(kFourierRelTol * std::abs(v2), kFourierAbsFloor))
            return {v2, panels2};
        v = v2;
        panels = panels2;
    }
}

cdouble fourier_h(double t, double xi) { return fourier_h_detail(t, xi).value; }

double decay_ratio(double t, double xi, int j) {
    bool t0 = t == 0.0, xi0 = xi == 0.0;
    if (t0 && xi0) throw DivisionDomain("decay_ratio: t and xi both zero");
    double envelope;
    if (xi0) {
        envelope = std::pow((1.0 + std::fabs(xi)) / std::fabs(t), j);
    } else if (t0) {
        envelope = std::pow((1.0 + std::fabs(t)) / std::fabs(xi), j);
    } else {
        envelope = std::min(std::pow((1.0 + std::fabs(t)) / std::fabs(xi), j),
                            std::pow((1.0 + std::fabs(xi)) / std::fabs(t), j));
    }
    return std::abs(fourier_h(t, xi)) / envelope;
}

} // namespace lvlab
