#ifndef LENSTC_MODARITH_HPP
#define LENSTC_MODARITH_HPP

#include <cstdint>
#include <vector>

#include "lenstc/errors.hpp"

namespace lenstc {

/// m = prod p^e with primes strictly increasing and every e >= 1.
struct PrimePower {
    std::int64_t p = 0;
    std::int64_t e = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};
using PrimeFactorization = std::vector<PrimePower>;

/// Base-p digits of n, least significant first; {0} for n = 0, otherwise the
/// most significant digit is nonzero. sum digits[i] * p^i == n.
struct PadicDigits {
    std::int64_t base = 0;
    std::vector<std::int64_t> digits;
};

bool is_prime(std::int64_t p);

/// Trial division. Throws domain_error for m < 2.
PrimeFactorization factorize(std::int64_t m);

/// Throws domain_error unless p is prime.
PadicDigits padic_digits(std::int64_t n, std::int64_t p);

/// v_p(C(a+b, b)), computed as the number of carries when adding a and b in
/// base p (Kummer's rule). Throws domain_error unless p is prime.
std::int64_t vp_binomial(std::int64_t a, std::int64_t b, std::int64_t p);

/// v_p(C(2n, n)) read off the base-p digits of n: each position i with
/// 2*n_i >= p contributes 1 plus the length of the run of digits equal to
/// (p-1)/2 immediately above i (for p = 2 no digit matches, so each set bit
/// contributes exactly 1). Kept as a separate route from vp_binomial so the
/// two can be cross-checked; it must satisfy
/// alpha_p(n, p) == vp_binomial(n, n, p).
std::int64_t alpha_p(std::int64_t n, std::int64_t p);

/// Whether m divides C(l + l2, l2)^t, decided prime by prime: true iff
/// t * v_p(C(l+l2, l2)) >= e for every p^e in factorize(m).
/// Throws domain_error for m < 2, negative l/l2, or t < 1.
bool divides_binomial_power(std::int64_t m, std::int64_t l, std::int64_t l2,
                            std::int64_t t);

}  // namespace lenstc

#endif
