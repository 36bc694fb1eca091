#include "lenstc/report.hpp"

#include <atomic>
#include <future>
#include <string>
#include <thread>

namespace lenstc {

std::int64_t lens_upper(std::int64_t n, std::int64_t k) {
    if (n < 1) throw domain_error("lens_upper: n must be at least 1");
    return group_action_upper(k, 2 * n + 1, 1);
}

bool exact_by_binomial(std::int64_t n, std::int64_t m, std::int64_t k) {
    if (n < 0) throw domain_error("exact_by_binomial: n must be nonnegative");
    if (k < 2) throw domain_error("exact_by_binomial: k must be at least 2");
    return !divides_binomial_power(m, n, n, k / 2);
}

bool exact_by_prime_power(std::int64_t n, std::int64_t m, std::int64_t k) {
    if (n < 0) throw domain_error("exact_by_prime_power: n must be nonnegative");
    if (k < 2) throw domain_error("exact_by_prime_power: k must be at least 2");
    for (auto [p, e] : factorize(m))
        if (alpha_p(n, p) * (k / 2) + 1 <= e) return true;
    return false;
}

bool exact_small_digits(std::int64_t n, std::int64_t p,
                        [[maybe_unused]] std::int64_t k) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw domain_error("exact_small_digits: p must be an odd prime");
    auto d = padic_digits(n, p);
    for (auto digit : d.digits)
        if (digit > (p - 1) / 2) return false;
    return true;
}

bool exact_two_power(std::int64_t n, std::int64_t r, std::int64_t k) {
    if (r < 1) throw domain_error("exact_two_power: r must be at least 1");
    if (k < 2) throw domain_error("exact_two_power: k must be at least 2");
    return alpha_p(n, 2) * (k / 2) <= r - 1;
}

BoundReport report(std::int64_t n, std::int64_t m, std::int64_t k,
                   VerifyMode mode, std::uint64_t monomial_limit) {
    if (n < 1) throw domain_error("report: n must be at least 1");
    if (m < 2) throw domain_error("report: m must be at least 2");
    if (k < 2) throw domain_error("report: k must be at least 2");

    auto spec = ring_new(n, m, k, monomial_limit);
    auto lb = lower_bound(spec, mode);

    BoundReport rep;
    rep.n = n;
    rep.m = m;
    rep.k = k;
    rep.lower = lb.bound;
    rep.certificate = lb.best;
    rep.upper = lens_upper(n, k);
    rep.upper_kind = BoundKind::LensFreeCircle;

    if (exact_by_binomial(n, m, k)) rep.theorems_fired.push_back(kRuleBinomial);
    if (exact_by_prime_power(n, m, k))
        rep.theorems_fired.push_back(kRulePrimePower);
    if (m >= 3 && m % 2 == 1 && is_prime(m) && exact_small_digits(n, m, k))
        rep.theorems_fired.push_back(kRuleSmallDigits);
    auto factors = factorize(m);
    if (factors.size() == 1 && factors[0].p == 2 &&
        exact_two_power(n, factors[0].e, k))
        rep.theorems_fired.push_back(kRuleTwoPower);
    if (n == 1 && m >= 3) rep.theorems_fired.push_back(kRuleDimThree);

    if (rep.lower == rep.upper) rep.exact = rep.lower;
    if (k == 2) rep.notes.push_back("Farber–Grant regime");

    // The closed-form rules and the certificate search are redundant routes
    // to the same value; a gap between them is an error state, never patched.
    if (!rep.theorems_fired.empty() && rep.lower != rep.upper) {
        rep.consistent = false;
        std::string rules;
        for (const auto& name : rep.theorems_fired) {
            if (!rules.empty()) rules += ", ";
            rules += name;
        }
        rep.notes.push_back("inconsistent: fired rules (" + rules +
                            ") promise " + std::to_string(rep.upper) +
                            " but the certificate search reaches " +
                            std::to_string(rep.lower));
    }
    return rep;
}

std::vector<BoundReport> table(Range n_range, Range m_range, Range k_range,
                               VerifyMode mode, std::uint64_t monomial_limit) {
    const std::int64_t rows = n_range.size() * m_range.size() * k_range.size();
    if (rows > kMaxTableRows)
        throw sizing_error("table: " + std::to_string(rows) +
                           " rows exceed the limit " +
                           std::to_string(kMaxTableRows));
    std::vector<BoundReport> out(static_cast<std::size_t>(rows));
    auto fill = [&](std::int64_t idx) {
        // row order is the (n, m, k) lexicographic index, whatever thread
        // computes it
        auto k = k_range.lo + idx % k_range.size();
        auto m = m_range.lo + (idx / k_range.size()) % m_range.size();
        auto n = n_range.lo + idx / (k_range.size() * m_range.size());
        out[static_cast<std::size_t>(idx)] = report(n, m, k, mode, monomial_limit);
    };

    const auto workers = std::min<std::int64_t>(
        rows, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::int64_t idx = 0; idx < rows; ++idx) fill(idx);
        return out;
    }
    std::atomic<std::int64_t> next{0};
    std::vector<std::future<void>> tasks;
    tasks.reserve(static_cast<std::size_t>(workers));
    for (std::int64_t w = 0; w < workers; ++w)
        tasks.push_back(std::async(std::launch::async, [&] {
            for (std::int64_t idx = next++; idx < rows; idx = next++) fill(idx);
        }));
    for (auto& task : tasks) task.get();
    return out;
}

nlohmann::json to_json(const BoundReport& rep) {
    nlohmann::json j = {
        {"n", rep.n},
        {"m", rep.m},
        {"k", rep.k},
        {"lower", {{"value", rep.lower}, {"certificate", to_json(rep.certificate)}}},
        {"upper", {{"value", rep.upper}, {"kind", to_string(rep.upper_kind)}}},
        {"theorems_fired", rep.theorems_fired},
        {"notes", rep.notes},
        {"consistent", rep.consistent},
    };
    if (rep.exact)
        j["exact"] = *rep.exact;
    else
        j["exact"] = nullptr;
    return j;
}

std::string csv_header() {
    return "n,m,k,lower,upper,exact,l,l_prime,verified,theorems";
}

std::string csv_row(const BoundReport& rep) {
    std::string theorems;
    for (const auto& name : rep.theorems_fired) {
        if (!theorems.empty()) theorems += ";";
        theorems += name;
    }
    std::string exact = rep.exact ? std::to_string(*rep.exact) : "";
    return std::to_string(rep.n) + "," + std::to_string(rep.m) + "," +
           std::to_string(rep.k) + "," + std::to_string(rep.lower) + "," +
           std::to_string(rep.upper) + "," + exact + "," +
           std::to_string(rep.certificate.l) + "," +
           std::to_string(rep.certificate.l_prime) + "," +
           to_string(rep.certificate.symbolic_nonzero) + "," + theorems;
}

}  // namespace lenstc
