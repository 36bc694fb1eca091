#ifndef LENSTC_CERTIFICATES_HPP
#define LENSTC_CERTIFICATES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lenstc/graded_ring.hpp"
#include "lenstc/modarith.hpp"

namespace lenstc {

/// Dense monomial count above which the automatic symbolic check of the
/// certificate product is skipped (the divisibility evidence alone is kept).
inline constexpr std::uint64_t kDefaultVerifyThreshold = 1'000'000;

enum class VerifyMode { Auto, Force, Off };
enum class VerifyStatus { Verified, Skipped, Failed };

std::string to_string(VerifyStatus s);

/// One prime of m in the divisibility check of C(l+l', l')^t: blocks means
/// t*vp < e, so p^e (hence m) does not divide the power.
struct PrimeEvidence {
    std::int64_t p = 0;
    std::int64_t e = 0;
    std::int64_t vp = 0;
    std::int64_t vp_scaled = 0;
    bool blocks = false;
};

/// Lower-bound witness for TC_k: the nonvanishing certificate product built
/// from (l, l') with its accounted weight. The claimed bound is
/// weight_total + 1.
struct Certificate {
    std::int64_t k = 0;
    bool even_branch = true;
    std::int64_t l = 0;
    std::int64_t l_prime = 0;
    std::int64_t weight_total = 0;
    std::int64_t bound = 0;
    bool divisibility_ok = false;
    std::vector<PrimeEvidence> divisibility;
    VerifyStatus symbolic_nonzero = VerifyStatus::Skipped;
    std::optional<Monomial> witness_monomial;
    std::string witness_rendered;
};

nlohmann::json to_json(const Certificate& cert);

/// p_i^*(x) - p_1^*(x) for 2 <= i <= k; degree 1, restricts to 0 on the
/// diagonal.
TensorElement xbar(const RingSpec& spec, std::int64_t i);

/// p_i^*(y) - p_{i-1}^*(y) for 2 <= i <= k; degree 2 zero divisor.
TensorElement ybar(const RingSpec& spec, std::int64_t i);

/// p_k^*(y) - p_1^*(y); requires k >= 2.
TensorElement zbar(const RingSpec& spec);

/// prod_{i=2..k} xbar_i * prod_{i=1..floor(k/2)} ybar_{2i}^{l+l'}, times
/// zbar^n when k is odd; fully expanded.
TensorElement certificate_product(const RingSpec& spec, std::int64_t l,
                                  std::int64_t l2);

/// The product term the expansion is expected to retain: y^l in factor 1,
/// then x y^{l'} / x y^l alternating, closing with x y^n when k is odd.
Monomial certificate_witness_monomial(const RingSpec& spec, std::int64_t l,
                                      std::int64_t l2);

/// k(l+l'+1) for even k, (k-1)(l+l') + k + 2n for odd k.
std::int64_t branch_bound(std::int64_t k, std::int64_t n, std::int64_t l,
                          std::int64_t l2);

/// Weight accounting: 1 per xbar factor, 2 per ybar/zbar factor, so
/// branch_bound - 1.
std::int64_t branch_weight(std::int64_t k, std::int64_t n, std::int64_t l,
                           std::int64_t l2);

/// Certificate for a fixed pair, including the divisibility evidence and,
/// depending on mode and the dense-count threshold, the symbolic check of
/// the expanded product.
Certificate make_certificate(const RingSpec& spec, std::int64_t l,
                             std::int64_t l2,
                             VerifyMode mode = VerifyMode::Auto);

struct LowerBound {
    std::int64_t bound = 0;
    Certificate best;
};

/// Maximizes the branch formula over the grid (l, l') in [0, n]^2 restricted
/// to pairs with m not dividing C(l+l', l')^{floor(k/2)}; ties resolve to the
/// lexicographically smallest pair. (0, 0) is always admissible, so the even
/// floor k and odd floor k + 2n are always attained. Requires k >= 2.
LowerBound lower_bound(const RingSpec& spec, VerifyMode mode = VerifyMode::Auto);

}  // namespace lenstc

#endif
