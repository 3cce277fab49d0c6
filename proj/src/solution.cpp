#include "xn77/solution.hpp"

#include <algorithm>
#include <tuple>

namespace xn77 {

bool operator<(const Solution& a, const Solution& b) {
    auto key = [](const Solution& s) { return std::tie(s.n, s.alpha, s.beta, s.x); };
    return key(a) < key(b);
}

mpz_class seven_eleven_power(unsigned long alpha, unsigned long beta) {
    mpz_class p7, p11;
    mpz_ui_pow_ui(p7.get_mpz_t(), 7, alpha);
    mpz_ui_pow_ui(p11.get_mpz_t(), 11, beta);
    return p7 * p11;
}

bool verify_solution(const Solution& s) {
    if (s.x < 1 || s.y < 1 || s.n < 3) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), s.x.get_mpz_t(), s.y.get_mpz_t());
    if (g != 1) return false;
    mpz_class yn;
    mpz_pow_ui(yn.get_mpz_t(), s.y.get_mpz_t(), s.n);
    return s.x * s.x + seven_eleven_power(s.alpha, s.beta) == yn;
}

std::string to_string(const Solution& s) {
    return "(x=" + s.x.get_str() + ", y=" + s.y.get_str() + ", alpha=" + std::to_string(s.alpha) +
           ", beta=" + std::to_string(s.beta) + ", n=" + std::to_string(s.n) + ")";
}

void sort_solutions(std::vector<Solution>& v) { std::sort(v.begin(), v.end()); }

}  // namespace xn77
