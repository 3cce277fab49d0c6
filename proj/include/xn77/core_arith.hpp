#pragma once

#include <gmpxx.h>

#include <optional>

namespace xn77 {

// a = p^alpha * q^beta * core with gcd(core, p*q) = 1
struct SmoothDecomposition {
    unsigned long alpha = 0;
    unsigned long beta = 0;
    mpz_class core = 1;

    bool operator==(const SmoothDecomposition&) const = default;
};

// floor(a^(1/n)) for a >= 0, n >= 1.  Exact integer arithmetic throughout.
mpz_class int_nth_root(const mpz_class& a, unsigned long n);

// r with r^k == a if a is a perfect k-th power (k >= 2), else nullopt.
// a = 0 and a = 1 are k-th powers for every k.
std::optional<mpz_class> is_perfect_power(const mpz_class& a, unsigned long k);

// Pull all factors of p and q out of a >= 1.  p, q distinct, >= 2.
SmoothDecomposition strip_prime_powers(const mpz_class& a, unsigned long p, unsigned long q);

// Jacobi symbol (a/m), m odd positive.  Zero when gcd(a, m) > 1.
int jacobi(const mpz_class& a, const mpz_class& m);

}  // namespace xn77
