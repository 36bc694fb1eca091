#ifndef LENSTC_REPORT_HPP
#define LENSTC_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lenstc/bounds.hpp"
#include "lenstc/certificates.hpp"

namespace lenstc {

/// Reconciled bounds for TC_k(L^{2n+1}_m). The certificate search and the
/// closed-form exactness rules run independently; when a rule promises the
/// exact value but the search does not reach it, the report is marked
/// inconsistent instead of being patched.
struct BoundReport {
    std::int64_t n = 0, m = 0, k = 0;
    std::int64_t lower = 0;
    Certificate certificate;
    std::int64_t upper = 0;
    BoundKind upper_kind = BoundKind::LensFreeCircle;
    std::optional<std::int64_t> exact;
    std::vector<std::string> theorems_fired;
    std::vector<std::string> notes;
    bool consistent = true;
};

// Rule labels recorded in theorems_fired.
inline constexpr const char* kRuleBinomial = "Thm5.3";
inline constexpr const char* kRulePrimePower = "Thm5.4";
inline constexpr const char* kRuleSmallDigits = "Thm5.5";
inline constexpr const char* kRuleTwoPower = "Thm5.6";
inline constexpr const char* kRuleDimThree = "Cor5.8";

/// k(2n+1), through the free-circle-action bound.
std::int64_t lens_upper(std::int64_t n, std::int64_t k);

/// m does not divide C(2n, n)^{floor(k/2)}.
bool exact_by_binomial(std::int64_t n, std::int64_t m, std::int64_t k);

/// Some prime p has p^{alpha_p(n) * floor(k/2) + 1} dividing m.
bool exact_by_prime_power(std::int64_t n, std::int64_t m, std::int64_t k);

/// Every base-p digit of n is at most (p-1)/2; requires an odd prime p
/// (domain_error otherwise). k is part of the stated rule but does not
/// enter the digit condition.
bool exact_small_digits(std::int64_t n, std::int64_t p, std::int64_t k);

/// For m = 2^r: alpha_2(n) * floor(k/2) <= r - 1.
bool exact_two_power(std::int64_t n, std::int64_t r, std::int64_t k);

/// Full pipeline for one triple. Requires n >= 1, m >= 2, k >= 2.
BoundReport report(std::int64_t n, std::int64_t m, std::int64_t k,
                   VerifyMode mode = VerifyMode::Auto,
                   std::uint64_t monomial_limit = kDefaultMonomialLimit);

/// Inclusive range; lo > hi is empty.
struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    std::int64_t size() const { return hi < lo ? 0 : hi - lo + 1; }
};

inline constexpr std::int64_t kMaxTableRows = 200'000;

/// One report per triple, rows in (n, m, k) lexicographic order. Throws
/// sizing_error when the row count exceeds kMaxTableRows.
std::vector<BoundReport> table(Range n_range, Range m_range, Range k_range,
                               VerifyMode mode = VerifyMode::Auto,
                               std::uint64_t monomial_limit = kDefaultMonomialLimit);

nlohmann::json to_json(const BoundReport& rep);

std::string csv_header();
std::string csv_row(const BoundReport& rep);

}  // namespace lenstc

#endif
