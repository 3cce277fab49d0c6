#pragma once

#include "xn77/solution.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace xn77 {

// analyze_prime_case only handles odd prime exponents >= 5
struct UnsupportedConfiguration : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Parity { Even, Odd };

inline Parity parity_of(unsigned long v) { return v % 2 ? Parity::Odd : Parity::Even; }
const char* to_string(Parity p);

// Squarefree kernel d of 7^alpha * 11^beta and what the mod-8 sieve says
// about it.  x odd forces 1 + d = 0 (mod 8), which only d = 7 satisfies;
// the x-odd branch is closed for every other d and open ("exceptional")
// exactly when alpha is odd and beta even.
struct DClassification {
    int d = 1;                         // 7^(alpha mod 2) * 11^(beta mod 2)
    bool no_solution_by_mod8 = false;  // x odd but 1 + d != 0 (mod 8)
    bool exceptional = false;          // alpha odd, beta even, x odd
};
DClassification classify_d(Parity alpha, Parity beta, Parity x);

// Rational point Y = y_num / denom^2, X = x_num / denom^3 on
// X^2 = Y^3 - 7^alpha1 * 11^beta1, denom a product of powers of 7 and 11.
struct CurvePoint {
    mpz_class y_num;
    mpz_class x_num;
    mpz_class denom;

    bool operator==(const CurvePoint&) const = default;
};

// S-integral points with |denominator| built from at most denom_cap
// combined powers of 7 and 11 and y_num <= y_bound * denom^2.
// Both signs of x_num are reported; x_num = 0 points appear once.
std::vector<CurvePoint> mordell_points(unsigned long alpha1, unsigned long beta1,
                                       unsigned long y_bound, unsigned denom_cap);

// Complete n = 3 solution list with alpha <= alpha_max, beta <= beta_max,
// y <= y_bound: reduces to Mordell curves X^2 = Y^3 - k over the six
// residues of alpha, beta mod 6 and clears denominators back to integers.
std::vector<Solution> solve_n3(unsigned long alpha_max, unsigned long beta_max,
                               unsigned long y_bound, unsigned threads = 1);

// Solutions with exponent target_n obtained from base entries whose y is a
// perfect (target_n / n)-th power.  Base exponents must divide target_n.
std::vector<Solution> lift_to_composite(const std::vector<Solution>& base, unsigned long target_n);

// Complete n = 4 solution list for one exponent pair via the factorization
// (y^2 - x)(y^2 + x) = 7^alpha * 11^beta: walks all divisor splittings.
std::vector<Solution> solve_n4(unsigned long alpha, unsigned long beta);

// The two genus-1 quartics behind the n = 5, d = 7 rank argument:
//   OddBeta:   11 V^2 = 5 U^4 - 70 U^2 + 49
//   EvenBeta:     V^2 = 5 U^4 - 70 U^2 + 49
// Points U = u_num / 7^denom_pow (lowest terms), V = v_num / 7^(2*denom_pow),
// |u_num| <= u_bound, denom_pow <= denom_cap.
enum class QuarticVariant { OddBeta, EvenBeta };
struct QuarticPoint {
    mpz_class u_num;
    mpz_class v_num;
    unsigned denom_pow = 0;

    bool operator==(const QuarticPoint&) const = default;
};
std::vector<QuarticPoint> quartic_case_points(QuarticVariant variant, unsigned long u_bound,
                                              unsigned denom_cap);

enum class Verdict { NoSolution, SolutionsListed, Exceptional };
const char* to_string(Verdict v);

enum class StepKind {
    RingSelection,       // pick d from the parity profile
    Mod8Sieve,           // x odd vs 1 + d mod 8
    CandidatePrimes,     // primitive divisor must lie in {2, 7, 11}
    ExcludeTwo,          // parity of Lucas terms / 2 | D
    ExcludeSeven,        // 7 | D or rank-of-apparition forcing
    ExcludeEleven,       // 11 | D or rank-of-apparition forcing
    RankForcing,         // surviving exponent forced by a rank bound
    QuarticReduction,    // n = 5, d = 7 drops to the two quartics
    DefectiveLookup,     // table scan for sequences without primitive divisors
    DefectiveArithmetic, // finite check attached to a table row
    ExceptionalRegion    // x odd, d = 7 left open
};
const char* to_string(StepKind k);

struct CaseStep {
    StepKind kind;
    std::string rule;    // the arithmetic fact being applied
    std::string detail;  // concrete numbers this run checked
    bool checked;        // the attached computation was run and agreed
};

struct CaseReport {
    unsigned long n = 5;
    Parity alpha_parity = Parity::Even;
    Parity beta_parity = Parity::Even;
    int d = 1;
    std::vector<CaseStep> steps;
    Verdict verdict = Verdict::NoSolution;

    bool all_checked() const;
};

// Transcript of the exclusion argument for prime n >= 5 and the given
// parities of alpha and beta (both parities of x are covered inside).
CaseReport analyze_prime_case(unsigned long n, Parity alpha_parity, Parity beta_parity);

}  // namespace xn77
