#include "lenstc/modarith.hpp"

namespace lenstc {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

PrimeFactorization factorize(std::int64_t m) {
    if (m < 2) throw domain_error("factorize: m must be at least 2");
    PrimeFactorization factors;
    auto strip = [&](std::int64_t p) {
        std::int64_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) factors.push_back({p, e});
    };
    strip(2);
    for (std::int64_t p = 3; p * p <= m; p += 2) strip(p);
    if (m > 1) factors.push_back({m, 1});
    return factors;
}

PadicDigits padic_digits(std::int64_t n, std::int64_t p) {
    if (!is_prime(p)) throw domain_error("padic_digits: p must be prime");
    if (n < 0) throw domain_error("padic_digits: n must be nonnegative");
    PadicDigits out;
    out.base = p;
    if (n == 0) {
        out.digits = {0};
        return out;
    }
    while (n > 0) {
        out.digits.push_back(n % p);
        n /= p;
    }
    return out;
}

std::int64_t vp_binomial(std::int64_t a, std::int64_t b, std::int64_t p) {
    if (!is_prime(p)) throw domain_error("vp_binomial: p must be prime");
    if (a < 0 || b < 0)
        throw domain_error("vp_binomial: arguments must be nonnegative");
    std::int64_t carries = 0, carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        std::int64_t s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
    }
    return carries;
}

std::int64_t alpha_p(std::int64_t n, std::int64_t p) {
    auto d = padic_digits(n, p);  // validates p and n
    const auto len = static_cast<std::int64_t>(d.digits.size());
    const bool odd_base = p % 2 == 1;
    const std::int64_t half = odd_base ? (p - 1) / 2 : -1;
    std::int64_t total = 0;
    for (std::int64_t i = 0; i < len; ++i) {
        if (2 * d.digits[i] < p) continue;
        std::int64_t r = 1;
        if (odd_base)
            for (std::int64_t t = i + 1; t < len && d.digits[t] == half; ++t) ++r;
        total += r;
    }
    return total;
}

bool divides_binomial_power(std::int64_t m, std::int64_t l, std::int64_t l2,
                            std::int64_t t) {
    if (l < 0 || l2 < 0)
        throw domain_error("divides_binomial_power: l, l2 must be nonnegative");
    if (t < 1) throw domain_error("divides_binomial_power: t must be positive");
    for (auto [p, e] : factorize(m))
        if (t * vp_binomial(l, l2, p) < e) return false;
    return true;
}

}  // namespace lenstc
