#include "xn77/lucas.hpp"

#include "xn77/quadfield.hpp"

#include <string>
#include <utility>

namespace xn77 {

LucasParams::LucasParams(mpz_class u_, mpz_class v_, int d_)
    : u(std::move(u_)), v(std::move(v_)), d(d_) {
    if (!QuadInt::valid_d(d)) throw std::invalid_argument("LucasParams: d must be 1, 7, 11 or 77");
    if (v == 0) throw std::invalid_argument("LucasParams: v = 0 degenerates the sequence");
    QuadInt probe(u, v, d);  // borrows the ring's parity check
    (void)probe;
}

mpz_class LucasParams::recurrence_q() const { return (u * u + d * v * v) / 4; }

mpz_class LucasParams::discriminant() const { return -d * v * v; }

mpz_class lucas_term(const LucasParams& params, unsigned long m) {
    mpz_class prev = 0, cur = 1;  // L_0, L_1
    if (m == 0) return prev;
    const mpz_class Q = params.recurrence_q();
    for (unsigned long i = 1; i < m; ++i) {
        mpz_class next = params.u * cur - Q * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::optional<unsigned long> rank_of_apparition(const LucasParams& params, const mpz_class& q,
                                                unsigned long cap) {
    if (q < 2) throw std::invalid_argument("rank_of_apparition: q must be >= 2");
    const mpz_class u = params.u % q;
    const mpz_class Q = params.recurrence_q() % q;
    mpz_class prev = 0, cur = 1;
    for (unsigned long m = 1; m <= cap; ++m) {
        if (cur == 0) return m;
        mpz_class next = (u * cur - Q * prev) % q;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return std::nullopt;
}

namespace {

// distinct prime factors of a >= 1 by trial division
std::vector<mpz_class> trial_factor(mpz_class a, unsigned long bound) {
    std::vector<mpz_class> primes;
    auto strip = [&](unsigned long p) {
        if (mpz_divisible_ui_p(a.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_class pz(p);
            mpz_remove(a.get_mpz_t(), a.get_mpz_t(), pz.get_mpz_t());
        }
    };
    strip(2);
    for (unsigned long p = 3; p <= bound && a > 1; p += 2) {
        mpz_class p2 = mpz_class(p) * p;
        if (p2 > a) break;  // remaining cofactor is prime
        strip(p);
    }
    if (a > 1) {
        mpz_class limit = mpz_class(bound) * bound;
        if (a > limit)
            throw FactorizationTooHard("cofactor " + a.get_str() +
                                       " exceeds trial division certification limit");
        primes.push_back(a);
    }
    return primes;
}

}  // namespace

PrimitiveDivisorVerdict has_primitive_divisor(const LucasParams& params, unsigned long n,
                                              unsigned long trial_bound) {
    if (n < 2) throw std::invalid_argument("has_primitive_divisor: n must be >= 2");
    PrimitiveDivisorVerdict out;
    mpz_class Ln = lucas_term(params, n);
    if (Ln != 0) {
        out.prime_factors = trial_factor(abs(Ln), trial_bound);
        const mpz_class D = params.discriminant();
        for (const mpz_class& q : out.prime_factors) {
            if (mpz_divisible_p(D.get_mpz_t(), q.get_mpz_t())) continue;
            // primitive iff q avoids every earlier term
            if (!rank_of_apparition(params, q, n - 1)) {
                out.has_primitive = true;
                out.witness = q;
                break;
            }
        }
    }
    if (!out.has_primitive) {
        for (const DefectiveEntry& e : defective_table(params.d, n)) {
            if (abs(params.u) == e.u && abs(params.v) == e.v) {
                out.defective_match = e;
                break;
            }
        }
    }
    return out;
}

const std::vector<DefectiveEntry>& defective_table() {
    static const std::vector<DefectiveEntry> table = {
        {7, 7, 1, 1, 7, 2, "(1 +/- sqrt(-7))/2"},
        {7, 13, 1, 1, -1, 2, "(1 +/- sqrt(-7))/2"},
        {11, 5, 1, 1, 1, 3, "(1 +/- sqrt(-11))/2"},
    };
    return table;
}

std::vector<DefectiveEntry> defective_table(int d, unsigned long n) {
    std::vector<DefectiveEntry> out;
    for (const DefectiveEntry& e : defective_table())
        if (e.d == d && e.n == n) out.push_back(e);
    return out;
}

}  // namespace xn77
