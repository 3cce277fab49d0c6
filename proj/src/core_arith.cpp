#include "xn77/core_arith.hpp"

#include <stdexcept>

namespace xn77 {

mpz_class int_nth_root(const mpz_class& a, unsigned long n) {
    if (n == 0) throw std::invalid_argument("int_nth_root: n must be >= 1");
    if (a < 0) throw std::invalid_argument("int_nth_root: a must be >= 0");
    mpz_class r;
    mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
    return r;
}

std::optional<mpz_class> is_perfect_power(const mpz_class& a, unsigned long k) {
    if (k < 2) throw std::invalid_argument("is_perfect_power: k must be >= 2");
    if (a < 0) throw std::invalid_argument("is_perfect_power: a must be >= 0");
    mpz_class r = int_nth_root(a, k);
    mpz_class back;
    mpz_pow_ui(back.get_mpz_t(), r.get_mpz_t(), k);
    if (back == a) return r;
    return std::nullopt;
}

SmoothDecomposition strip_prime_powers(const mpz_class& a, unsigned long p, unsigned long q) {
    if (a < 1) throw std::invalid_argument("strip_prime_powers: a must be >= 1");
    if (p < 2 || q < 2 || p == q)
        throw std::invalid_argument("strip_prime_powers: p, q must be distinct and >= 2");
    SmoothDecomposition out;
    mpz_class pz(p), qz(q);
    out.core = a;
    out.alpha = mpz_remove(out.core.get_mpz_t(), out.core.get_mpz_t(), pz.get_mpz_t());
    out.beta = mpz_remove(out.core.get_mpz_t(), out.core.get_mpz_t(), qz.get_mpz_t());
    return out;
}

int jacobi(const mpz_class& a, const mpz_class& m) {
    if (m <= 0 || mpz_even_p(m.get_mpz_t()))
        throw std::invalid_argument("jacobi: m must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), m.get_mpz_t());
}

}  // namespace xn77
