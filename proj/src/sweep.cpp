#include "qlr/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace qlr {

namespace {

void validate_config(const SweepConfig& cfg) {
    if (!(cfg.P > 0.0 && cfg.P < 1.0)) {
        throw OutOfRangeError("sweep P must lie in (0,1)");
    }
    if (cfg.q_steps < 1 || cfg.p_steps < 1) {
        throw OutOfRangeError("q_steps and p_steps must be >= 1");
    }
    if (!(cfg.margin > 0.0 && cfg.margin < 0.5)) {
        throw OutOfRangeError("margin must lie in (0, 0.5)");
    }
}

// Closed uniform grid over [margin, 1-margin]; a single step lands at 0.5.
double grid_value(double margin, int steps, int i) {
    if (steps == 1) return 0.5;
    return margin + i * (1.0 - 2.0 * margin) / (steps - 1);
}

const char* branch_name(SignBranch b) {
    return b == SignBranch::Plus ? "plus" : "minus";
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    const TransitionMatrix m = ds_matrix_from_P(cfg.P);

    SweepResult result;
    for (int qi = 0; qi < cfg.q_steps; ++qi) {
        const double q = grid_value(cfg.margin, cfg.q_steps, qi);
        for (int pi = 0; pi < cfg.p_steps; ++pi) {
            const double p = grid_value(cfg.margin, cfg.p_steps, pi);
            ++result.total;

            ContextData c;
            c.pa = {q, 1.0 - q};
            c.pb = {p, 1.0 - p};
            c.matrix = m;
            c = validate_context(c, cfg.tol);

            if (classify(c) != Classification::Trigonometric) {
                ++result.skipped;
                continue;
            }
            for (SignBranch branch : {SignBranch::Plus, SignBranch::Minus}) {
                if (cfg.sign == SignMode::Plus && branch != SignBranch::Plus) continue;
                if (cfg.sign == SignMode::Minus && branch != SignBranch::Minus) continue;
                const BlochPoint pt = to_bloch(c, branch);
                const double lambda1 = interference_coefficient(c, 0);
                const double phi1 = relative_phases(lambda1, branch)[0];
                result.points.push_back({q, p, cfg.P, lambda1, phi1, pt.x, pt.y, pt.z,
                                         pt.color.r, pt.color.g, pt.color.b, branch});
            }
        }
    }
    return result;
}

double rc_fraction(double P, int n) {
    SweepConfig cfg;
    cfg.P = P;
    cfg.q_steps = n;
    cfg.p_steps = n;
    const SweepResult r = run_sweep(cfg);
    return static_cast<double>(r.total - r.skipped) / static_cast<double>(r.total);
}

void write_csv(std::ostream& out, const SweepResult& result) {
    out << "q,p,P,lambda1,phi1,x,y,z,r,g,b,branch\n";
    for (const auto& rec : result.points) {
        out << fmt_double(rec.q) << ',' << fmt_double(rec.p) << ',' << fmt_double(rec.P) << ','
            << fmt_double(rec.lambda1) << ',' << fmt_double(rec.phi1) << ',' << fmt_double(rec.x)
            << ',' << fmt_double(rec.y) << ',' << fmt_double(rec.z) << ',' << fmt_double(rec.r)
            << ',' << fmt_double(rec.g) << ',' << fmt_double(rec.b) << ','
            << branch_name(rec.branch) << '\n';
    }
}

void write_json(std::ostream& out, const SweepConfig& cfg, const SweepResult& result) {
    nlohmann::json j;
    j["config"] = {
        {"P", cfg.P},
        {"q_steps", cfg.q_steps},
        {"p_steps", cfg.p_steps},
        {"sign", cfg.sign == SignMode::Plus    ? "plus"
                 : cfg.sign == SignMode::Minus ? "minus"
                                               : "both"},
        {"tol", cfg.tol},
        {"margin", cfg.margin},
        {"color", "r=q, g=p, b=0 linear ramps"},
    };
    j["skipped"] = result.skipped;
    j["total"] = result.total;
    auto& points = j["points"] = nlohmann::json::array();
    for (const auto& rec : result.points) {
        points.push_back({{"q", rec.q},
                          {"p", rec.p},
                          {"P", rec.P},
                          {"lambda1", rec.lambda1},
                          {"phi1", rec.phi1},
                          {"x", rec.x},
                          {"y", rec.y},
                          {"z", rec.z},
                          {"r", rec.r},
                          {"g", rec.g},
                          {"b", rec.b},
                          {"branch", branch_name(rec.branch)}});
    }
    out << j.dump(2) << '\n';
}

}  // namespace qlr
