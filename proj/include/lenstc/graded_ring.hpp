#ifndef LENSTC_GRADED_RING_HPP
#define LENSTC_GRADED_RING_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lenstc/errors.hpp"

namespace lenstc {

inline constexpr std::uint64_t kDefaultMonomialLimit = 10'000'000;

/// One tensor factor of a basis monomial: x^eps * y^j, eps in {0,1},
/// 0 <= j <= n. Its degree is eps + 2j, which doubles as the packed
/// per-factor code.
struct FactorPower {
    std::int64_t eps = 0;
    std::int64_t j = 0;
    friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// Exponent pattern of a k-fold tensor basis monomial, factor 1 first.
using Monomial = std::vector<FactorPower>;

std::int64_t monomial_degree(const Monomial& mon);

/// Parameters of the coefficient ring Z_m[x,y] / (y^{n+1}, x^2 - a y) and of
/// its k-fold tensor power. a is forced by the parity of m: 0 when m is odd,
/// m/2 when m is even. The additive basis of one factor is
/// {x^eps y^j : eps in {0,1}, 0 <= j <= n}, so the dense monomial count of
/// the tensor power is (2(n+1))^k; element construction refuses when that
/// exceeds monomial_limit or when k packed factor codes do not fit in 64 bits.
class RingSpec {
public:
    RingSpec() = default;

    std::int64_t n() const { return n_; }
    std::int64_t m() const { return m_; }
    std::int64_t a() const { return a_; }
    std::int64_t k() const { return k_; }
    std::uint64_t monomial_limit() const { return limit_; }

    int bits_per_factor() const { return bits_; }
    bool packable() const { return packable_; }
    /// (2(n+1))^k, saturated at uint64 max.
    std::uint64_t dense_monomial_count() const { return dense_count_; }

    /// Same underlying ring; the monomial limit is operational, not algebraic.
    friend bool same_ring(const RingSpec& lhs, const RingSpec& rhs) {
        return lhs.n_ == rhs.n_ && lhs.m_ == rhs.m_ && lhs.k_ == rhs.k_;
    }

    /// Throws sizing_error when elements over this spec may not be built.
    void ensure_buildable() const;

private:
    friend RingSpec ring_new(std::int64_t, std::int64_t, std::int64_t,
                             std::uint64_t);

    std::int64_t n_ = 0, m_ = 0, a_ = 0, k_ = 0;
    std::uint64_t limit_ = kDefaultMonomialLimit;
    int bits_ = 0;
    bool packable_ = false;
    std::uint64_t dense_count_ = 0;
};

/// Throws domain_error unless n >= 1, m >= 2, k >= 1 (m capped at 2^31 so
/// coefficient products stay in 64 bits).
RingSpec ring_new(std::int64_t n, std::int64_t m, std::int64_t k,
                  std::uint64_t monomial_limit = kDefaultMonomialLimit);

std::uint64_t pack(const RingSpec& spec, const Monomial& mon);
Monomial unpack(const RingSpec& spec, std::uint64_t key);

/// Sparse Z_m-linear combination of tensor basis monomials, keyed by packed
/// per-factor codes (factor 1 in the most significant slot, so ascending key
/// order is lexicographic on factors). Stored coefficients are canonical
/// residues in [1, m).
class TensorElement {
public:
    explicit TensorElement(RingSpec spec);

    const RingSpec& spec() const { return spec_; }
    const std::map<std::uint64_t, std::int64_t>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    /// Common degree of all monomials; nullopt when zero or mixed.
    std::optional<std::int64_t> degree() const;
    /// Canonical coefficient of mon, 0 when absent.
    std::int64_t coeff(const Monomial& mon) const;

    void add_term(const Monomial& mon, std::int64_t c);
    void add_term_packed(std::uint64_t key, std::int64_t c);

    friend bool operator==(const TensorElement& lhs, const TensorElement& rhs) {
        return same_ring(lhs.spec_, rhs.spec_) && lhs.terms_ == rhs.terms_;
    }

private:
    RingSpec spec_;
    std::map<std::uint64_t, std::int64_t> terms_;
};

TensorElement zero(const RingSpec& spec);
TensorElement unit(const RingSpec& spec);

enum class Generator { X, Y };

/// 1 x ... x gen x ... x 1 with gen in factor position i (1-based).
TensorElement pullback(const RingSpec& spec, std::int64_t i, Generator gen);

/// Element from explicit terms; validates exponent ranges.
TensorElement from_terms(const RingSpec& spec,
                         const std::vector<std::pair<Monomial, std::int64_t>>& terms);

/// Bilinear product with the Koszul sign (-1)^{sum_{i<j} |a_j||b_i|} on basis
/// monomials; within a factor x^2 reduces to a*y and y^{n+1} to 0.
TensorElement mul(const TensorElement& lhs, const TensorElement& rhs);

TensorElement add(const TensorElement& lhs, const TensorElement& rhs);
TensorElement sub(const TensorElement& lhs, const TensorElement& rhs);
TensorElement neg(const TensorElement& e);
TensorElement scale(const TensorElement& e, std::int64_t c);

/// e^t by repeated squaring; t = 0 gives the unit.
TensorElement power(const TensorElement& e, std::int64_t t);

/// Restriction along the diagonal: each monomial (x^{e_1}y^{j_1}, ...,
/// x^{e_k}y^{j_k}) maps to the arity-1 product x^{sum e_i} y^{sum j_i},
/// reduced by the relations. Multiplying the factors in order transposes
/// nothing, so no Koszul sign appears.
TensorElement diagonal_pullback(const TensorElement& e);

inline bool is_zero(const TensorElement& e) { return e.is_zero(); }
inline std::optional<std::int64_t> degree(const TensorElement& e) {
    return e.degree();
}

inline TensorElement operator*(const TensorElement& lhs, const TensorElement& rhs) {
    return mul(lhs, rhs);
}
inline TensorElement operator+(const TensorElement& lhs, const TensorElement& rhs) {
    return add(lhs, rhs);
}
inline TensorElement operator-(const TensorElement& lhs, const TensorElement& rhs) {
    return sub(lhs, rhs);
}
inline TensorElement operator-(const TensorElement& e) { return neg(e); }

/// Rendering grammar (stable; terms ascend in packed-key order):
///   element := "0" | term { " + " term }
///   term    := coeff "·(" factor { "⊗" factor } ")"
///   factor  := "1" | "x" | "y" | "y^" int | "x·y" | "x·y^" int
std::string render(const TensorElement& e);
std::string render_monomial(const Monomial& mon);

}  // namespace lenstc

#endif
