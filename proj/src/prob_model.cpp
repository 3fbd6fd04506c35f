#include "qlr/prob_model.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace qlr {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0)) {
        std::ostringstream msg;
        msg << what << " must be strictly positive, got " << v;
        throw NonPositiveError(msg.str());
    }
}

// Renormalizes a pair whose sum is within tol of 1; throws otherwise.
std::array<double, 2> normalize_pair(std::array<double, 2> v, double tol, const char* what) {
    require_positive(v[0], what);
    require_positive(v[1], what);
    const double sum = v[0] + v[1];
    if (std::abs(sum - 1.0) > tol) {
        std::ostringstream msg;
        msg << what << " sums to " << sum << ", off by more than tol=" << tol;
        throw NotNormalizedError(msg.str());
    }
    return {v[0] / sum, v[1] / sum};
}

}  // namespace

ContextData validate_context(ContextData c, double tol) {
    if (c.spectrum.a_labels[0] == c.spectrum.a_labels[1] ||
        c.spectrum.b_labels[0] == c.spectrum.b_labels[1]) {
        throw ValidationError("spectrum labels must be distinct within each observable");
    }

    c.pa = normalize_pair(c.pa, tol, "a-marginal");
    c.pb = normalize_pair(c.pb, tol, "b-marginal");

    auto& m = c.matrix.p;
    for (int beta = 0; beta < 2; ++beta) {
        for (int alpha = 0; alpha < 2; ++alpha) {
            require_positive(m[beta][alpha], "transition probability");
        }
    }
    // Rows must sum to 1 before column renormalization can hide a violation.
    for (int beta = 0; beta < 2; ++beta) {
        const double row = m[beta][0] + m[beta][1];
        if (std::abs(row - 1.0) > tol) {
            std::ostringstream msg;
            msg << "matrix row " << beta << " sums to " << row << " (not doubly stochastic)";
            throw NotDoublyStochasticError(msg.str());
        }
    }
    for (int alpha = 0; alpha < 2; ++alpha) {
        const double col = m[0][alpha] + m[1][alpha];
        if (std::abs(col - 1.0) > tol) {
            std::ostringstream msg;
            msg << "matrix column " << alpha << " sums to " << col;
            throw NotNormalizedError(msg.str());
        }
        m[0][alpha] /= col;
        m[1][alpha] /= col;
    }
    return c;
}

TransitionMatrix ds_matrix_from_P(double P) {
    if (!(P > 0.0 && P < 1.0)) {
        std::ostringstream msg;
        msg << "P must lie in the open interval (0,1), got " << P;
        throw NonPositiveError(msg.str());
    }
    TransitionMatrix m;
    m.p = {{{P, 1.0 - P}, {1.0 - P, P}}};
    return m;
}

ContextData estimate_context(const SampleCounts& counts, double tol) {
    const double a_total = static_cast<double>(counts.a_counts[0] + counts.a_counts[1]);
    const double b_total = static_cast<double>(counts.b_counts[0] + counts.b_counts[1]);
    require_positive(a_total, "a-sample total");
    require_positive(b_total, "b-sample total");

    ContextData c;
    c.pa = {counts.a_counts[0] / a_total, counts.a_counts[1] / a_total};
    c.pb = {counts.b_counts[0] / b_total, counts.b_counts[1] / b_total};
    for (int alpha = 0; alpha < 2; ++alpha) {
        const double col_total =
            static_cast<double>(counts.cond_counts[0][alpha] + counts.cond_counts[1][alpha]);
        require_positive(col_total, "a-conditioned column total");
        for (int beta = 0; beta < 2; ++beta) {
            c.matrix.p[beta][alpha] = counts.cond_counts[beta][alpha] / col_total;
        }
    }
    return validate_context(c, tol);
}

ContextData make_context(double q, double p, double P, double tol) {
    ContextData c;
    c.pa = {q, 1.0 - q};
    c.pb = {p, 1.0 - p};
    c.matrix = ds_matrix_from_P(P);
    return validate_context(c, tol);
}

SampleCounts read_counts_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("counts file is not valid JSON: ") + e.what());
    }
    try {
        SampleCounts counts;
        j.at("a_counts").get_to(counts.a_counts);
        j.at("b_counts").get_to(counts.b_counts);
        j.at("cond_counts").get_to(counts.cond_counts);
        for (auto n : counts.a_counts) {
            if (n < 0) throw ValidationError("counts must be nonnegative");
        }
        for (auto n : counts.b_counts) {
            if (n < 0) throw ValidationError("counts must be nonnegative");
        }
        for (const auto& row : counts.cond_counts) {
            for (auto n : row) {
                if (n < 0) throw ValidationError("counts must be nonnegative");
            }
        }
        return counts;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("counts file has wrong shape: ") + e.what());
    }
}

}  // namespace qlr
