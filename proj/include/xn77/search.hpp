#pragma once

#include "xn77/solution.hpp"

#include <gmpxx.h>

#include <vector>

namespace xn77 {

struct SearchBounds {
    unsigned long alpha_max = 0;
    unsigned long beta_max = 0;
    unsigned long y_max = 1;
    unsigned long n_min = 3;
    unsigned long n_max = 3;
    bool exceptional_only = false;  // keep only alpha odd, beta even, x odd

    void validate() const;  // throws std::invalid_argument
};

// Exhaustive scan of x^2 + p^alpha * q^beta = y^n over the box
// alpha <= alpha_max, beta <= beta_max, 1 <= y <= y_max, n_min <= n <= n_max,
// gcd(x, y) = 1, x >= 1.  Deterministic output in (n, alpha, beta, x) order
// regardless of thread count.
std::vector<Solution> brute_search(const SearchBounds& bounds, unsigned threads = 1,
                                   unsigned long p = 7, unsigned long q = 11);

struct CrossCheckReport {
    std::vector<Solution> brute_only;     // found by scan, missed by casework
    std::vector<Solution> casework_only;  // produced by casework, missed by scan

    bool consistent() const { return brute_only.empty() && casework_only.empty(); }
};

// Symmetric difference of two solution lists (order/duplicates ignored).
CrossCheckReport diff_solution_sets(std::vector<Solution> brute, std::vector<Solution> casework);

// Runs the scan against the structured solvers (n = 3 curves, n = 4
// factorization, composite lifts) over the overlapping region and reports any
// disagreement.  Composite-exponent tuples are compared only when their cube
// root preimage also fits the y bound.
CrossCheckReport cross_check(const SearchBounds& bounds, unsigned threads = 1);

}  // namespace xn77
