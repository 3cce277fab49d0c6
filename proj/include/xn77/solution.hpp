#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace xn77 {

// One coprime solution of x^2 + 7^alpha * 11^beta = y^n.
struct Solution {
    mpz_class x;
    mpz_class y;
    unsigned long alpha = 0;
    unsigned long beta = 0;
    unsigned long n = 3;

    bool operator==(const Solution&) const = default;
};

// canonical order: (n, alpha, beta, x)
bool operator<(const Solution& a, const Solution& b);

// 7^alpha * 11^beta
mpz_class seven_eleven_power(unsigned long alpha, unsigned long beta);

// Exact recomputation: x, y >= 1, gcd(x, y) = 1, n >= 3 and the equation holds.
bool verify_solution(const Solution& s);

std::string to_string(const Solution& s);

void sort_solutions(std::vector<Solution>& v);

}  // namespace xn77
