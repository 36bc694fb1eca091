#ifndef LENSTC_TESTS_ORACLES_HPP
#define LENSTC_TESTS_ORACLES_HPP

// Independent arithmetic oracles used only by the test suites. These compute
// binomials exactly with arbitrary-precision integers, deliberately avoiding
// the carry-count and digit routes used by the library.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace lenstc_tests {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

inline std::int64_t big_valuation(BigInt v, std::int64_t p) {
    std::int64_t count = 0;
    while (v != 0 && v % p == 0) {
        v /= p;
        ++count;
    }
    return count;
}

/// Exact test of m | C(l+l2, l2)^t.
inline bool big_divides_binomial_power(std::int64_t m, std::int64_t l,
                                       std::int64_t l2, std::int64_t t) {
    BigInt c = big_binomial(l + l2, l2);
    BigInt pow = 1;
    for (std::int64_t i = 0; i < t; ++i) pow *= c;
    return pow % m == 0;
}

}  // namespace lenstc_tests

#endif
