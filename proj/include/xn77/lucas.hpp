#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <vector>

namespace xn77 {

// Trial division gave up: cofactor too large to certify prime.
struct FactorizationTooHard : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lucas sequence attached to phi = (u + v*sqrt(-d))/2 and its conjugate:
//   L_m = (phi^m - phibar^m) / (phi - phibar)
//   L_0 = 0, L_1 = 1, L_m = u*L_{m-1} - Q*L_{m-2}
// with trace P = u, norm Q = (u^2 + d*v^2)/4, discriminant D = -d*v^2.
struct LucasParams {
    LucasParams(mpz_class u, mpz_class v, int d);

    mpz_class u, v;
    int d;

    mpz_class recurrence_q() const;   // (u^2 + d*v^2)/4
    mpz_class discriminant() const;   // -d*v^2
};

// One row of the embedded defective-pair table: for this ring and index
// the sequence of (u + v*sqrt(-d))/2 has no primitive divisor, and the
// pair's norm is y.
struct DefectiveEntry {
    int d;
    unsigned long n;
    long u, v;
    long term;       // L_n
    long y;          // norm of the generator
    const char* phi; // display form

    bool operator==(const DefectiveEntry&) const = default;
};

struct PrimitiveDivisorVerdict {
    bool has_primitive = false;
    std::optional<mpz_class> witness;              // least primitive prime divisor
    std::vector<mpz_class> prime_factors;          // distinct primes of |L_n|
    std::optional<DefectiveEntry> defective_match; // table row when known defective
};

mpz_class lucas_term(const LucasParams& params, unsigned long m);

// Least m in [1, cap] with q | L_m, computed mod q.  q >= 2.
std::optional<unsigned long> rank_of_apparition(const LucasParams& params, const mpz_class& q,
                                                unsigned long cap);

// Does L_n (n >= 2) have a prime divisor q with q coprime to D and to every
// earlier term?  |L_n| is factored by trial division up to trial_bound;
// a surviving cofactor above trial_bound^2 raises FactorizationTooHard.
PrimitiveDivisorVerdict has_primitive_divisor(const LucasParams& params, unsigned long n,
                                              unsigned long trial_bound = 1000000);

const std::vector<DefectiveEntry>& defective_table();
std::vector<DefectiveEntry> defective_table(int d, unsigned long n);

}  // namespace xn77
