#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qlr/bloch.hpp"
#include "qlr/interference.hpp"

namespace qlr {

enum class SignMode { Plus, Minus, Both };

// Grid sweep over (q, p) at fixed P. The grid is closed over
// [margin, 1 - margin]; endpoints 0 and 1 are never sampled.
struct SweepConfig {
    double P = 0.5;
    int q_steps = 101;
    int p_steps = 101;
    SignMode sign = SignMode::Plus;
    double tol = kDefaultTol;
    double margin = 0.01;
};

struct SweepRecord {
    double q, p, P;
    double lambda1, phi1;
    double x, y, z;
    double r, g, b;
    SignBranch branch;
};

struct SweepResult {
    std::vector<SweepRecord> points;
    std::size_t skipped = 0;  // RC-violating grid cells
    std::size_t total = 0;    // grid cells evaluated
};

// Evaluates every grid cell, emitting Bloch points for trigonometric cells
// and counting hyperbolic ones as skipped. Output is ordered by
// (q index, p index, branch) with plus before minus.
SweepResult run_sweep(const SweepConfig& cfg);

// Fraction of an n x n interior grid (default margin) that is trigonometric.
double rc_fraction(double P, int n);

// CSV with header `q,p,P,lambda1,phi1,x,y,z,r,g,b,branch`; floats in
// round-trip (17 significant digit) format.
void write_csv(std::ostream& out, const SweepResult& result);

// JSON envelope {"config":..., "skipped":N, "total":M, "points":[...]}.
void write_json(std::ostream& out, const SweepConfig& cfg, const SweepResult& result);

}  // namespace qlr
