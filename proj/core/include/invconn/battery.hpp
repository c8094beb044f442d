#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "invconn/conncalc.hpp"

namespace invconn::battery {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0;  // measured defect or count
    double tol = 0;
    std::string detail;
};

// The numerical checks for mu_4 - mu_5 on u(n), n >= 3 (RangeError otherwise).
std::vector<CheckResult> verify_unitary(int n, double tol = 1e-9, uint64_t seed = 42);

struct EinsteinRow {
    std::string algebra;
    double alpha = 0;
    conncalc::EinsteinReport report;
    double parallel_torsion = 0;  // max |nabla^alpha T^alpha|
    bool flat = false;            // curvature below flat_tol
    std::string note;
};

EinsteinRow einstein_row(const conncalc::MatrixAlgebra& alg, double alpha, double tol = 1e-9,
                         double flat_tol = 1e-10);

std::string format_checks(const std::vector<CheckResult>& checks);

}  // namespace invconn::battery
