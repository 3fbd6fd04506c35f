#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlr/bloch.hpp"
#include "qlr/interference.hpp"
#include "qlr/prob_model.hpp"
#include "qlr/qlra.hpp"
#include "qlr/sweep.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitHyperbolic = 2;

qlr::SignBranch parse_branch(const std::string& s) {
    if (s == "plus") return qlr::SignBranch::Plus;
    if (s == "minus") return qlr::SignBranch::Minus;
    throw qlr::OutOfRangeError("--sign must be plus or minus for this command");
}

qlr::SignMode parse_sign_mode(const std::string& s) {
    if (s == "plus") return qlr::SignMode::Plus;
    if (s == "minus") return qlr::SignMode::Minus;
    if (s == "both") return qlr::SignMode::Both;
    throw qlr::OutOfRangeError("--sign must be plus, minus or both");
}

const char* classification_name(qlr::Classification c) {
    return c == qlr::Classification::Trigonometric ? "trigonometric" : "hyperbolic";
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw qlr::ValidationError("cannot open output file: " + out_path);
    out << j.dump(2) << '\n';
}

json state_report(const qlr::QLState& s) {
    const auto canonical = qlr::a_canonical_basis(s.source.matrix);
    const auto born_b = qlr::born_probabilities(s, qlr::b_basis());
    const auto born_a = qlr::born_probabilities(s, canonical);
    return json{
        {"psi", {{"beta1", {{"re", s.psi[0].real()}, {"im", s.psi[0].imag()}}},
                 {"beta2", {{"re", s.psi[1].real()}, {"im", s.psi[1].imag()}}}}},
        {"phases", {s.profile.phases[0], s.profile.phases[1]}},
        {"lambda", {s.profile.lambda[0], s.profile.lambda[1]}},
        {"sign", s.profile.sign_branch == qlr::SignBranch::Plus ? "plus" : "minus"},
        {"born_b_basis", {born_b[0], born_b[1]}},
        {"born_a_canonical", {born_a[0], born_a[1]}},
    };
}

json bloch_report(const qlr::BlochPoint& pt) {
    return json{
        {"x", pt.x},
        {"y", pt.y},
        {"z", pt.z},
        {"color", {pt.color.r, pt.color.g, pt.color.b}},
        {"branch", pt.branch == qlr::SignBranch::Plus ? "plus" : "minus"},
    };
}

int run(int argc, char** argv) {
    CLI::App app{"Quantum-like representation of two-observable probabilistic data"};
    app.require_subcommand(1);

    double q = 0.5, p = 0.5, P = 0.5;
    double tol = qlr::kDefaultTol;
    std::string sign = "plus";
    std::string format = "json";
    std::string out_path;
    std::string counts_path;
    int q_steps = 101, p_steps = 101;
    double margin = 0.01;

    auto add_context_flags = [&](CLI::App* cmd) {
        cmd->add_option("--q", q, "P(a=alpha1)")->required();
        cmd->add_option("--p", p, "P(b=beta1)")->required();
        cmd->add_option("--P", P, "transition probability p_{beta1,alpha1}")->required();
        cmd->add_option("--tol", tol, "validation tolerance");
    };

    auto* check = app.add_subcommand("check", "validate and classify a (q,p,P) context");
    add_context_flags(check);

    auto* represent = app.add_subcommand("represent", "build the complex amplitude");
    add_context_flags(represent);
    represent->add_option("--sign", sign, "phase branch: plus|minus");
    represent->add_option("--format", format, "output format (json)");
    represent->add_option("--out", out_path, "write output to file");

    auto* bloch = app.add_subcommand("bloch", "map a context to a Bloch-sphere point");
    add_context_flags(bloch);
    bloch->add_option("--sign", sign, "phase branch: plus|minus");
    bloch->add_option("--format", format, "output format (json)");
    bloch->add_option("--out", out_path, "write output to file");

    auto* sweep = app.add_subcommand("sweep", "grid sweep over (q,p) at fixed P");
    sweep->add_option("--P", P, "transition probability")->required();
    sweep->add_option("--q-steps", q_steps, "grid points along q");
    sweep->add_option("--p-steps", p_steps, "grid points along p");
    sweep->add_option("--sign", sign, "plus|minus|both");
    sweep->add_option("--margin", margin, "open-interval inset of the grid");
    sweep->add_option("--tol", tol, "validation tolerance");
    sweep->add_option("--format", format, "output format: json|csv");
    sweep->add_option("--out", out_path, "write point cloud to file");

    auto* ingest = app.add_subcommand("ingest", "estimate a context from a counts file");
    ingest->add_option("--counts", counts_path, "counts JSON file")->required();
    ingest->add_option("--sign", sign, "phase branch: plus|minus");
    ingest->add_option("--tol", tol, "validation tolerance");
    ingest->add_option("--format", format, "output format (json)");
    ingest->add_option("--out", out_path, "write output to file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    if (check->parsed()) {
        const auto c = qlr::make_context(q, p, P, tol);
        const auto lambda = qlr::interference_coefficients(c);
        const auto cls = qlr::classify(c);
        emit(json{{"valid", true},
                  {"q", c.pa[0]},
                  {"p", c.pb[0]},
                  {"P", c.matrix(0, 0)},
                  {"lambda", {lambda[0], lambda[1]}},
                  {"classification", classification_name(cls)}},
             out_path);
        return cls == qlr::Classification::Trigonometric ? kExitOk : kExitHyperbolic;
    }

    if (represent->parsed()) {
        const auto c = qlr::make_context(q, p, P, tol);
        const auto s = qlr::represent(c, parse_branch(sign));
        emit(state_report(s), out_path);
        return kExitOk;
    }

    if (bloch->parsed()) {
        const auto c = qlr::make_context(q, p, P, tol);
        const auto pt = qlr::to_bloch(c, parse_branch(sign));
        emit(bloch_report(pt), out_path);
        return kExitOk;
    }

    if (sweep->parsed()) {
        if (format != "json" && format != "csv") {
            throw qlr::OutOfRangeError("--format must be json or csv");
        }
        qlr::SweepConfig cfg;
        cfg.P = P;
        cfg.q_steps = q_steps;
        cfg.p_steps = p_steps;
        cfg.sign = parse_sign_mode(sign);
        cfg.tol = tol;
        cfg.margin = margin;
        const auto result = qlr::run_sweep(cfg);

        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!out_path.empty()) {
            file.open(out_path);
            if (!file) throw qlr::ValidationError("cannot open output file: " + out_path);
            out = &file;
        }
        if (format == "csv") {
            qlr::write_csv(*out, result);
        } else {
            qlr::write_json(*out, cfg, result);
        }
        std::cerr << "total " << result.total << ", emitted " << result.points.size()
                  << ", skipped " << result.skipped << '\n';
        return kExitOk;
    }

    // ingest
    std::ifstream in(counts_path);
    if (!in) throw qlr::ValidationError("cannot open counts file: " + counts_path);
    const auto counts = qlr::read_counts_json(in);
    const auto c = qlr::estimate_context(counts, tol);
    const auto lambda = qlr::interference_coefficients(c);
    const auto cls = qlr::classify(c);

    json report{
        {"q", c.pa[0]},
        {"p", c.pb[0]},
        {"matrix", {{c.matrix(0, 0), c.matrix(0, 1)}, {c.matrix(1, 0), c.matrix(1, 1)}}},
        {"doubly_stochastic", true},
        {"lambda", {lambda[0], lambda[1]}},
        {"classification", classification_name(cls)},
    };
    if (cls == qlr::Classification::Trigonometric) {
        const auto branch = parse_branch(sign);
        const auto s = qlr::represent(c, branch);
        report["state"] = state_report(s);
        report["bloch"] = bloch_report(qlr::to_bloch(c, branch));
    }
    emit(report, out_path);
    return cls == qlr::Classification::Trigonometric ? kExitOk : kExitHyperbolic;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qlr::NotTrigonometricError& e) {
        std::cerr << "hyperbolic: " << e.what() << '\n';
        return kExitHyperbolic;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
}
