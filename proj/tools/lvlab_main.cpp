#include "lvlab/affine.hpp"
#include "lvlab/config.hpp"
#include "lvlab/dirichlet.hpp"
#include "lvlab/energy_moments.hpp"
#include "lvlab/errors.hpp"
#include "lvlab/exponents.hpp"
#include "lvlab/kernels.hpp"
#include "lvlab/poisson.hpp"
#include "lvlab/primes.hpp"
#include "lvlab/smooth_weight.hpp"
#include "lvlab/spectral.hpp"
#include "lvlab/zeta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace lvlab;

namespace {

struct Out {
    std::ostream* os = &std::cout;
    std::ofstream file;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw UsageError("cannot open output path: " + path);
        os = &file;
    }
};

json provenance_json(const RunConfig& cfg, const std::string& command) {
    json p;
    p["tool"] = std::string(kToolName) + " v" + kToolVersion;
    p["command"] = command;
    p["eps"] = cfg.eps;
    p["work_budget"] = cfg.work_budget;
    p["memory_budget"] = cfg.memory_budget;
    p["seed"] = cfg.seed;
    return p;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
    std::vector<Rat> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(rat_from_string(tok));
    }
    return out;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

int cmd_bounds_table(const RunConfig& cfg, const std::string& sigmas_csv,
                     const std::string& ns_csv, int k, const std::string& out_path) {
    Out out;
    out.open(out_path);
    *out.os << cfg.provenance("bounds-table");
    *out.os << "sigma,n,k,classical,thm1,fullbound,bigN,jutila,zd_ingham,zd_huxley,zd_new,zd_"
               "envelope\n";
    auto sigmas = parse_rat_list(sigmas_csv);
    auto ns = parse_rat_list(ns_csv);
    for (const auto& s : sigmas) {
        if (!(s > Rat(1, 2) && s < 1)) throw UsageError("sigma outside (1/2,1): " + rat_str(s));
        for (const auto& n : ns) {
            RegimePoint p(s, n, k);
            auto zd = zero_density_curves(s);
            std::string bigN = "", jut = "";
            try {
                bigN = rat_str(bigN_exponent(p));
                jut = rat_str(jutila_exponent(p));
            } catch (const DomainError&) {
                // outside the stated (sigma, n) region; leave cells empty
            }
            *out.os << rat_str(s) << ',' << rat_str(n) << ',' << k << ','
                    << rat_str(classical_exponent(p)) << ',' << rat_str(thm1_exponent(p)) << ','
                    << rat_str(fullbound_exponent(p)) << ',' << bigN << ',' << jut << ','
                    << rat_str(zd.ingham) << ',' << rat_str(zd.huxley) << ',' << rat_str(zd.znew)
                    << ',' << rat_str(zd.envelope) << '\n';
        }
    }
    return 0;
}

json trace_report_json(const TraceReport& r) {
    json j;
    j["N"] = r.N;
    j["set_size"] = r.set_size;
    j["trace3_exact"] = r.trace3_exact;
    j["truncation_radius"] = r.truncation_radius;
    auto cpx = [](cdouble z) { return json{{"re", z.real()}, {"im", z.imag()}}; };
    j["classes"] = {{"zero", cpx(r.S0)},
                    {"one_nonzero", cpx(r.S1)},
                    {"two_nonzero", cpx(r.S2)},
                    {"three_nonzero", cpx(r.S3)}};
    j["main_term"] = r.main_term;
    j["main_term_asymptotic"] = r.main_term_asymptotic;
    j["diag_gap"] = r.diag_gap;
    j["tail_bound"] = r.tail_bound;
    j["residual"] = r.residual;
    j["residual_rel"] = r.trace3_exact != 0.0 ? r.residual / r.trace3_exact : 0.0;
    j["residual_asymptotic"] = r.residual_asymptotic;
    j["imag_residual"] = r.imag_residual;
    j["hhat_evaluations"] = r.hhat_evaluations;
    return j;
}

int cmd_trace_verify(const RunConfig& cfg, std::int64_t N, int count, double delta,
                     const std::string& out_path) {
    std::uint64_t allowed = 1024ULL * std::max<std::uint64_t>(1, cfg.work_budget / 1000000000ULL);
    if (std::uint64_t(N) > allowed)
        throw BudgetExceeded("trace-verify: N over budget (raise work_budget)");
    double T = std::pow(double(N), 1.2);
    PointSet W = random_separated_set(cfg.seed, std::size_t(count), 0.0, T, delta);
    auto rep = s_split(W, N, cfg.eps, cfg.work_budget);
    double tol = cfg.tolerance("trace_residual_rel", 1e-6);
    bool pass = rep.residual <= tol * rep.trace3_exact;

    Out out;
    out.open(out_path);
    json j;
    j["provenance"] = provenance_json(cfg, "trace-verify");
    j["delta"] = delta;
    j["T"] = T;
    j["report"] = trace_report_json(rep);
    j["tolerance_rel"] = tol;
    j["pass"] = pass;
    *out.os << j.dump(2) << '\n';
    return pass ? 0 : 1;
}

int cmd_construct_extremal(const RunConfig& cfg, const std::string& Ns_csv, double sigma,
                           double eps_param, double vcoeff, double ccoeff,
                           const std::string& out_path) {
    Out out;
    out.open(out_path);
    *out.os << cfg.provenance("construct-extremal");
    *out.os << "N,J,H,threshold,count,count_floor,pass\n";
    std::vector<double> logN, logC;
    std::stringstream ss(Ns_csv);
    std::string tok;
    bool all_pass = true;
    while (std::getline(ss, tok, ',')) {
        std::int64_t N = std::stoll(tok);
        auto built = extremal_construction(N, sigma, eps_param);
        double V = vcoeff * built.H;
        auto samples = scan_abs(built.poly, double(N), 2.0 * double(N), 0.25, EvalKind::Raw);
        auto large = extract_large_values(samples, V, 1.0);
        double floor_count = ccoeff * std::pow(double(N), 2.0 - 2.0 * sigma);
        bool pass = double(large.size()) >= floor_count;
        all_pass = all_pass && pass;
        char buf[160];
        std::snprintf(buf, sizeof(buf), "%lld,%d,%.6g,%.6g,%zu,%.6g,%d\n", (long long)N, built.J,
                      built.H, V, large.size(), floor_count, int(pass));
        *out.os << buf;
        logN.push_back(std::log(double(N)));
        logC.push_back(std::log(std::max<double>(double(large.size()), 1.0)));
    }
    if (logN.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < logN.size(); ++i) {
            mx += logN[i];
            my += logC[i];
        }
        mx /= double(logN.size());
        my /= double(logN.size());
        double sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < logN.size(); ++i) {
            sxx += (logN[i] - mx) * (logN[i] - mx);
            sxy += (logN[i] - mx) * (logC[i] - my);
        }
        char buf[128];
        std::snprintf(buf, sizeof(buf), "# fitted_slope=%.6f target=%.6f\n", sxy / sxx,
                      2.0 - 2.0 * sigma);
        *out.os << buf;
    }
    return all_pass ? 0 : 1;
}

int cmd_jf_bench(const RunConfig& cfg, int B, double T, int M, const std::string& out_path) {
    auto farey = fixture_farey(B, T);
    auto nf = farey_cell_count(B);
    auto rnd = fixture_random_intervals(T, int(nf), cfg.seed);
    JValueDetail df, dr;
    double jf = j_value(farey, M, &df);
    double jr = j_value(rnd, M, &dr);
    double bf = propsumaff_bound(farey, M);
    double br = propsumaff_bound(rnd, M);

    Out out;
    out.open(out_path);
    json j;
    j["provenance"] = provenance_json(cfg, "jf-bench");
    j["B"] = B;
    j["T"] = T;
    j["M"] = M;
    j["cells"] = nf;
    auto fixture = [&](const DensityProfile& p, double jv, const JValueDetail& d, double bound) {
        json f;
        f["l1"] = p.l1();
        f["l2sq"] = p.l2sq();
        f["j_value"] = jv;
        f["arg_dyadic"] = {d.M1, d.M2, d.M3};
        f["propsumaff_bound"] = bound;
        f["ratio"] = jv / bound;
        f["C_at_T02"] = jv / (std::pow(T, 0.2) * bound);
        return f;
    };
    j["farey"] = fixture(farey, jf, df, bf);
    j["random"] = fixture(rnd, jr, dr, br);
    j["farey_over_random"] = (jf / bf) / (jr / br);
    *out.os << j.dump(2) << '\n';
    return 0;
}

int cmd_energy_report(const RunConfig& cfg, const std::string& source, std::int64_t N, int count,
                      double delta, std::int64_t M, const std::string& out_path) {
    PointSet W;
    double sigma = 0.6;
    if (source == "random") {
        double T = std::pow(double(N), 1.2);
        W = random_separated_set(cfg.seed, std::size_t(count), 0.0, T, delta);
    } else if (source == "extremal") {
        auto built = extremal_construction(N, sigma, 0.2);
        auto samples = scan_abs(built.poly, double(N), 2.0 * double(N), 0.25, EvalKind::Raw);
        W = extract_large_values(samples, 0.3 * built.H, 1.0);
    } else {
        throw UsageError("energy-report: --source must be random or extremal");
    }
    auto E = additive_energy(W);
    auto ls = level_sets(W);
    double m2 = moment_L2(W), m4 = moment_L4(W);
    double dm3 = discrete_moment(W, M, 3, cfg.work_budget);
    auto split = gcd_split_moment(W, M, double(M * M) / std::max(W.length, 1.0), 3,
                                  cfg.work_budget);
    std::vector<cdouble> ones(std::size_t(M), cdouble(1.0, 0.0));
    double hb = hb_sum(W, ones, M, cfg.work_budget);
    double hbr = hb_rhs(W.size(), double(M), std::max(W.length, 1.0));

    Out out;
    out.open(out_path);
    json j;
    j["provenance"] = provenance_json(cfg, "energy-report");
    j["source"] = source;
    j["set_size"] = W.size();
    j["T"] = W.length;
    j["energy"] = E;
    j["energy_rhs_basic"] = energy_rhs_basic(W.size(), double(N), sigma);
    j["energy_rhs_refined"] =
        energy_rhs_refined(W.size(), double(N), std::max(W.length, 1.0), sigma);
    if (W.size() <= 40) j["energy_bruteforce"] = energy_bruteforce(W);
    j["moment_L2"] = m2;
    j["moment_L2_over_W"] = m2 / double(W.size());
    j["moment_L4"] = m4;
    j["moment_L4_over_E"] = m4 / double(E);
    j["discrete_moment3"] = dm3;
    j["gcd_split"] = {{"D", split.threshold},
                      {"small", split.small_sum},
                      {"large", split.large_sum},
                      {"total", split.total}};
    j["hb_sum"] = hb;
    j["hb_rhs"] = hbr;
    j["hb_ratio"] = hb / hbr;
    json buckets = json::array();
    for (auto& b : ls.buckets)
        buckets.push_back({{"B", b.B},
                           {"size", b.members.size()},
                           {"count_sum", b.count_sum},
                           {"count_sq_sum", b.count_sq_sum}});
    j["level_sets"] = buckets;
    *out.os << j.dump(2) << '\n';
    return 0;
}

int cmd_primes_check(const RunConfig& cfg, double x, double y, double y_exp,
                     const std::string& out_path) {
    if (y <= 0.0 && y_exp > 0.0) y = std::ceil(std::pow(x, y_exp));
    auto row = corollary1_scan(x, y);
    Out out;
    out.open(out_path);
    *out.os << cfg.provenance("primes-check");
    *out.os << "x,y,count,target,tolerance,pass\n";
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.0f,%.6f,%.6f,%d\n", row.x, row.y, row.count,
                  row.target, row.tolerance, int(row.pass));
    *out.os << buf;
    return row.pass ? 0 : 1;
}

int cmd_zeros(const RunConfig& cfg, double height, const std::string& out_path) {
    auto zl = find_zeros(height);
    Out out;
    out.open(out_path);
    *out.os << cfg.provenance("zeros");
    char buf[128];
    std::snprintf(buf, sizeof(buf), "# main_term=%.3f\n", zero_count_main_term(height));
    *out.os << buf;
    zl.write(*out.os);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) + ": large-values laboratory for Dirichlet polynomials"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string config_path, out_path, isa;
    std::uint64_t seed_flag = 0;
    double eps_flag = 0.0;
    app.add_option("--config", config_path, "line-oriented key = value config file");
    auto* seed_opt = app.add_option("--seed", seed_flag, "64-bit run seed");
    app.add_option("--out", out_path, "output path (default stdout)");
    auto* eps_opt = app.add_option("--eps", eps_flag, "truncation exponent (default 0.1)");
    app.add_option("--isa", isa, "force kernel ISA: scalar or avx2");

    auto* bt = app.add_subcommand("bounds-table", "exponent table over a (sigma, n) grid");
    std::string sigmas = "3/4", ns = "4/5";
    int k = 4;
    bt->add_option("--sigma", sigmas, "comma list of rationals, e.g. 3/4,7/10");
    bt->add_option("--n", ns, "comma list of rationals (N = T^n)");
    bt->add_option("--k", k, "Holder index for the full bound");

    auto* tv = app.add_subcommand("trace-verify", "two-route cubic trace identity");
    std::int64_t tvN = 64;
    int tv_count = 8;
    double tv_delta = 2.0;
    tv->add_option("--N", tvN, "polynomial length");
    tv->add_option("--count", tv_count, "point count |W|");
    tv->add_option("--delta", tv_delta, "separation");

    auto* ce = app.add_subcommand("construct-extremal", "footnote lower-bound construction");
    std::string ceNs = "4096";
    double ce_sigma = 0.6, ce_eps = 0.2, ce_v = 0.3, ce_c = 0.01;
    ce->add_option("--N", ceNs, "comma list of lengths");
    ce->add_option("--sigma", ce_sigma, "exponent sigma in (1/2,1)");
    ce->add_option("--eps-param", ce_eps, "construction epsilon");
    ce->add_option("--vthresh", ce_v, "value threshold coefficient (of N^sigma)");
    ce->add_option("--count-floor", ce_c, "count floor coefficient (of N^{2-2sigma})");

    auto* jf = app.add_subcommand("jf-bench", "J(f) fixtures: farey vs random");
    int jfB = 8, jfM = 4;
    double jfT = 4096.0;
    jf->add_option("--B", jfB, "farey height scale");
    jf->add_option("--T", jfT, "cell scale");
    jf->add_option("--M", jfM, "dyadic sup range");

    auto* er = app.add_subcommand("energy-report", "energy, level sets, moments, HB ratio");
    std::string er_source = "random";
    std::int64_t erN = 256, erM = 64;
    int er_count = 16;
    double er_delta = 2.0;
    er->add_option("--source", er_source, "random | extremal");
    er->add_option("--N", erN, "length scale");
    er->add_option("--count", er_count, "point count for random source");
    er->add_option("--delta", er_delta, "separation for random source");
    er->add_option("--M", erM, "discrete moment scale");

    auto* pc = app.add_subcommand("primes-check", "short-interval prime counts");
    double pc_x = 1e8, pc_y = 0.0, pc_yexp = 17.0 / 30.0;
    pc->add_option("--x", pc_x, "window start");
    pc->add_option("--y", pc_y, "window length (overrides --y-exp)");
    pc->add_option("--y-exp", pc_yexp, "window length exponent: y = ceil(x^exp)");

    auto* zr = app.add_subcommand("zeros", "critical-line zeros by Hardy Z scan");
    double zr_height = 100.0;
    zr->add_option("--height", zr_height, "scan ceiling (<= 1e4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (!config_path.empty()) cfg.load_file(config_path);
        // flags override file values
        if (seed_opt->count()) cfg.seed = seed_flag;
        if (eps_opt->count()) cfg.eps = eps_flag;
        cfg.validate();
        if (!isa.empty()) {
            if (isa == "scalar")
                kernels::set_isa(kernels::Isa::Scalar);
            else if (isa == "avx2")
                kernels::set_isa(kernels::Isa::Avx2);
            else
                throw UsageError("--isa must be scalar or avx2");
        }
        cfg.output_path = out_path;

        if (bt->parsed()) return cmd_bounds_table(cfg, sigmas, ns, k, out_path);
        if (tv->parsed()) return cmd_trace_verify(cfg, tvN, tv_count, tv_delta, out_path);
        if (ce->parsed())
            return cmd_construct_extremal(cfg, ceNs, ce_sigma, ce_eps, ce_v, ce_c, out_path);
        if (jf->parsed()) return cmd_jf_bench(cfg, jfB, jfT, jfM, out_path);
        if (er->parsed())
            return cmd_energy_report(cfg, er_source, erN, er_count, er_delta, erM, out_path);
        if (pc->parsed()) return cmd_primes_check(cfg, pc_x, pc_y, pc_yexp, out_path);
        if (zr->parsed()) return cmd_zeros(cfg, zr_height, out_path);
        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
