#include "xn77/quadfield.hpp"

#include "xn77/core_arith.hpp"

#include <algorithm>
#include <string>

namespace xn77 {

namespace {

bool even(const mpz_class& z) { return mpz_even_p(z.get_mpz_t()) != 0; }

void check_parity(const mpz_class& U, const mpz_class& V, int d) {
    if (d == 7 || d == 11) {
        // -d = 1 (mod 4): ring Z[(1+sqrt(-d))/2], need U = V (mod 2)
        if (even(U) != even(V))
            throw ParityViolation("QuadInt: U and V must agree mod 2 for d = " + std::to_string(d));
    } else {
        // ring Z[sqrt(-d)]: doubled coordinates must both be even
        if (!even(U) || !even(V))
            throw ParityViolation("QuadInt: U and V must both be even for d = " + std::to_string(d));
    }
}

}  // namespace

QuadInt::QuadInt(mpz_class U, mpz_class V, int d) : U_(std::move(U)), V_(std::move(V)), d_(d) {
    if (!valid_d(d)) throw std::invalid_argument("QuadInt: d must be one of 1, 7, 11, 77");
    check_parity(U_, V_, d_);
}

QuadInt QuadInt::conj() const { return QuadInt(U_, -V_, d_); }

mpz_class QuadInt::norm() const {
    mpz_class n = U_ * U_ + d_ * V_ * V_;
    // both parity classes make the numerator divisible by 4
    n /= 4;
    return n;
}

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    if (a.d() != b.d()) throw RingMismatch("QuadInt: operands live in different fields");
    // ((U1 + V1 s)(U2 + V2 s))/4 with s^2 = -d; result back in halves
    mpz_class U = a.U() * b.U() - mpz_class(a.d()) * a.V() * b.V();
    mpz_class V = a.U() * b.V() + a.V() * b.U();
    U /= 2;
    V /= 2;
    return QuadInt(U, V, a.d());
}

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
    if (a.d() != b.d()) throw RingMismatch("QuadInt: operands live in different fields");
    return QuadInt(a.U() + b.U(), a.V() + b.V(), a.d());
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
    if (a.d() != b.d()) throw RingMismatch("QuadInt: operands live in different fields");
    return QuadInt(a.U() - b.U(), a.V() - b.V(), a.d());
}

QuadInt pow(const QuadInt& a, unsigned long e) {
    QuadInt acc = QuadInt::one(a.d());
    QuadInt base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<std::pair<mpz_class, mpz_class>> cube_descent_77(const mpz_class& target) {
    static const long candidates[] = {1, -1, 49, -49, 121, -121, 5929, -5929};
    std::vector<std::pair<mpz_class, mpz_class>> out;
    for (long vc : candidates) {
        mpz_class v(vc);
        if (!mpz_divisible_p(target.get_mpz_t(), v.get_mpz_t())) continue;
        // v(3u^2 - 77v^2) = target  =>  3u^2 = target/v + 77 v^2
        mpz_class rhs = target / v + 77 * v * v;
        if (rhs < 0 || rhs % 3 != 0) continue;
        auto u = is_perfect_power(mpz_class(rhs / 3), 2);
        if (!u) continue;
        out.emplace_back(*u, v);
        if (*u != 0) out.emplace_back(-*u, v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

}  // namespace xn77
