#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace xn77 {

// Half-integer coordinates broke the ring's parity rule.
struct ParityViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mixed operands from different Q(sqrt(-d)).
struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element (U + V*sqrt(-d))/2 of the maximal order of Q(sqrt(-d)),
// d in {1, 7, 11, 77}.  Doubled coordinates keep everything integral:
// for d = 7, 11 (-d = 1 mod 4) the order is Z[(1+sqrt(-d))/2], so U = V (mod 2);
// for d = 1, 77 the order is Z[sqrt(-d)], so U and V are both even.
class QuadInt {
public:
    QuadInt(mpz_class U, mpz_class V, int d);

    const mpz_class& U() const { return U_; }
    const mpz_class& V() const { return V_; }
    int d() const { return d_; }

    QuadInt conj() const;          // (U - V*sqrt(-d))/2
    mpz_class norm() const;        // (U^2 + d*V^2)/4, always a nonneg integer
    mpz_class trace() const { return U_; }

    bool operator==(const QuadInt&) const = default;

    static QuadInt one(int d) { return QuadInt(2, 0, d); }
    static bool valid_d(int d) { return d == 1 || d == 7 || d == 11 || d == 77; }

private:
    mpz_class U_, V_;
    int d_;
};

QuadInt operator*(const QuadInt& a, const QuadInt& b);
QuadInt operator+(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a, const QuadInt& b);

// Binary exponentiation, e >= 0.  e = 0 gives the ring identity.
QuadInt pow(const QuadInt& a, unsigned long e);

// Integer pairs (u, v) with v*(3*u^2 - 77*v^2) == target, where v runs over
// the eight candidates {+-1, +-49, +-121, +-5929}: when the cube of
// u + v*sqrt(-77) has its irrational part equal to a 7-11 smooth number,
// square divisibility forces v into that set.  Pairs sorted by (v, u).
std::vector<std::pair<mpz_class, mpz_class>> cube_descent_77(const mpz_class& target);

}  // namespace xn77
