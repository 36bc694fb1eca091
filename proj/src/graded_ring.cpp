#include "lenstc/graded_ring.hpp"

#include <bit>
#include <string>

namespace lenstc {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) return ~std::uint64_t{0};
    return r;
}

}  // namespace

std::int64_t monomial_degree(const Monomial& mon) {
    std::int64_t deg = 0;
    for (const auto& f : mon) deg += f.eps + 2 * f.j;
    return deg;
}

void RingSpec::ensure_buildable() const {
    if (!packable_)
        throw sizing_error("tensor ring with k=" + std::to_string(k_) +
                           ", n=" + std::to_string(n_) +
                           " does not fit the 64-bit monomial key");
    if (dense_count_ > limit_)
        throw sizing_error("predicted dense monomial count " +
                           std::to_string(dense_count_) +
                           " exceeds the limit " + std::to_string(limit_));
}

RingSpec ring_new(std::int64_t n, std::int64_t m, std::int64_t k,
                  std::uint64_t monomial_limit) {
    if (n < 1) throw domain_error("ring_new: n must be at least 1");
    if (n > 1'000'000'000) throw domain_error("ring_new: n is capped at 10^9");
    if (m < 2) throw domain_error("ring_new: m must be at least 2");
    if (m > kMaxModulus) throw domain_error("ring_new: m is too large");
    if (k < 1) throw domain_error("ring_new: k must be at least 1");
    if (k > 1'000'000'000) throw domain_error("ring_new: k is capped at 10^9");
    if (monomial_limit < 1) throw domain_error("ring_new: limit must be positive");

    RingSpec spec;
    spec.n_ = n;
    spec.m_ = m;
    spec.a_ = m % 2 == 0 ? m / 2 : 0;
    spec.k_ = k;
    spec.limit_ = monomial_limit;
    spec.bits_ = std::bit_width(static_cast<std::uint64_t>(2 * n + 1));
    spec.packable_ = k * spec.bits_ <= 64;
    std::uint64_t count = 1;
    for (std::int64_t i = 0; i < k; ++i)
        count = saturating_mul(count, static_cast<std::uint64_t>(2 * (n + 1)));
    spec.dense_count_ = count;
    return spec;
}

std::uint64_t pack(const RingSpec& spec, const Monomial& mon) {
    if (static_cast<std::int64_t>(mon.size()) != spec.k())
        throw domain_error("pack: monomial arity differs from k");
    std::uint64_t key = 0;
    for (const auto& f : mon) {
        if (f.eps < 0 || f.eps > 1)
            throw domain_error("pack: eps must be 0 or 1");
        if (f.j < 0 || f.j > spec.n())
            throw domain_error("pack: y-exponent out of range");
        key = (key << spec.bits_per_factor()) |
              static_cast<std::uint64_t>(f.eps + 2 * f.j);
    }
    return key;
}

Monomial unpack(const RingSpec& spec, std::uint64_t key) {
    Monomial mon(static_cast<std::size_t>(spec.k()));
    const std::uint64_t mask = (std::uint64_t{1} << spec.bits_per_factor()) - 1;
    for (std::int64_t i = spec.k() - 1; i >= 0; --i) {
        auto code = static_cast<std::int64_t>(key & mask);
        mon[static_cast<std::size_t>(i)] = {code & 1, code >> 1};
        key >>= spec.bits_per_factor();
    }
    return mon;
}

TensorElement::TensorElement(RingSpec spec) : spec_(std::move(spec)) {
    spec_.ensure_buildable();
}

std::optional<std::int64_t> TensorElement::degree() const {
    if (terms_.empty()) return std::nullopt;
    const std::uint64_t mask = (std::uint64_t{1} << spec_.bits_per_factor()) - 1;
    std::optional<std::int64_t> deg;
    for (const auto& [key, c] : terms_) {
        std::int64_t d = 0;
        for (auto rest = key; rest != 0; rest >>= spec_.bits_per_factor())
            d += static_cast<std::int64_t>(rest & mask);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

std::int64_t TensorElement::coeff(const Monomial& mon) const {
    auto it = terms_.find(pack(spec_, mon));
    return it == terms_.end() ? 0 : it->second;
}

void TensorElement::add_term(const Monomial& mon, std::int64_t c) {
    add_term_packed(pack(spec_, mon), c);
}

void TensorElement::add_term_packed(std::uint64_t key, std::int64_t c) {
    const std::int64_t m = spec_.m();
    c = ((c % m) + m) % m;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, 0);
    it->second = (it->second + c) % m;
    if (it->second == 0) terms_.erase(it);
}

TensorElement zero(const RingSpec& spec) { return TensorElement(spec); }

TensorElement unit(const RingSpec& spec) {
    TensorElement e(spec);
    e.add_term_packed(0, 1);
    return e;
}

TensorElement pullback(const RingSpec& spec, std::int64_t i, Generator gen) {
    if (i < 1 || i > spec.k())
        throw domain_error("pullback: factor index out of range");
    Monomial mon(static_cast<std::size_t>(spec.k()));
    auto& f = mon[static_cast<std::size_t>(i - 1)];
    if (gen == Generator::X)
        f.eps = 1;
    else
        f.j = 1;
    TensorElement e(spec);
    e.add_term(mon, 1);
    return e;
}

TensorElement from_terms(const RingSpec& spec,
                         const std::vector<std::pair<Monomial, std::int64_t>>& terms) {
    TensorElement e(spec);
    for (const auto& [mon, c] : terms) e.add_term(mon, c);
    return e;
}

TensorElement mul(const TensorElement& lhs, const TensorElement& rhs) {
    if (!same_ring(lhs.spec(), rhs.spec()))
        throw domain_error("mul: elements live in different rings");
    const auto& spec = lhs.spec();
    const auto k = static_cast<std::size_t>(spec.k());
    const std::int64_t n = spec.n(), m = spec.m(), a = spec.a();
    const int bits = spec.bits_per_factor();
    const std::uint64_t mask = (std::uint64_t{1} << bits) - 1;

    TensorElement result(spec);
    std::vector<std::int64_t> ca(k), cb(k);
    auto decode = [&](std::uint64_t key, std::vector<std::int64_t>& codes) {
        for (std::size_t i = k; i-- > 0;) {
            codes[i] = static_cast<std::int64_t>(key & mask);
            key >>= bits;
        }
    };

    for (const auto& [ka, va] : lhs.terms()) {
        decode(ka, ca);
        for (const auto& [kb, vb] : rhs.terms()) {
            decode(kb, cb);

            // Koszul exponent sum_{i<j} |a_j| |b_i| mod 2; only x carries odd
            // degree, so parities are the eps bits.
            std::int64_t par = 0, prefix_b = 0;
            for (std::size_t i = 0; i < k; ++i) {
                par += (ca[i] & 1) * prefix_b;
                prefix_b += cb[i] & 1;
            }

            std::int64_t c = (va * vb) % m;
            std::uint64_t key = 0;
            bool dead = false;
            for (std::size_t i = 0; i < k && !dead; ++i) {
                std::int64_t eps = (ca[i] & 1) + (cb[i] & 1);
                std::int64_t j = (ca[i] >> 1) + (cb[i] >> 1);
                if (eps == 2) {
                    eps = 0;
                    j += 1;
                    c = (c * a) % m;
                }
                if (j > n || c == 0) {
                    dead = true;
                    break;
                }
                key = (key << bits) | static_cast<std::uint64_t>(eps + 2 * j);
            }
            if (dead) continue;
            result.add_term_packed(key, par % 2 == 0 ? c : -c);
        }
    }
    return result;
}

TensorElement add(const TensorElement& lhs, const TensorElement& rhs) {
    if (!same_ring(lhs.spec(), rhs.spec()))
        throw domain_error("add: elements live in different rings");
    TensorElement result = lhs;
    for (const auto& [key, c] : rhs.terms()) result.add_term_packed(key, c);
    return result;
}

TensorElement sub(const TensorElement& lhs, const TensorElement& rhs) {
    if (!same_ring(lhs.spec(), rhs.spec()))
        throw domain_error("sub: elements live in different rings");
    TensorElement result = lhs;
    for (const auto& [key, c] : rhs.terms()) result.add_term_packed(key, -c);
    return result;
}

TensorElement neg(const TensorElement& e) { return scale(e, -1); }

TensorElement scale(const TensorElement& e, std::int64_t c) {
    TensorElement result(e.spec());
    const std::int64_t m = e.spec().m();
    c = ((c % m) + m) % m;
    for (const auto& [key, v] : e.terms()) result.add_term_packed(key, v * c);
    return result;
}

TensorElement power(const TensorElement& e, std::int64_t t) {
    if (t < 0) throw domain_error("power: exponent must be nonnegative");
    TensorElement result = unit(e.spec());
    TensorElement base = e;
    while (t > 0) {
        if (t & 1) result = mul(result, base);
        t >>= 1;
        if (t > 0) base = mul(base, base);
    }
    return result;
}

TensorElement diagonal_pullback(const TensorElement& e) {
    const auto& spec = e.spec();
    auto target = ring_new(spec.n(), spec.m(), 1, spec.monomial_limit());
    TensorElement result(target);
    const std::int64_t n = spec.n(), m = spec.m(), a = spec.a();
    for (const auto& [key, v] : e.terms()) {
        auto mon = unpack(spec, key);
        std::int64_t eps_sum = 0, j_sum = 0;
        for (const auto& f : mon) {
            eps_sum += f.eps;
            j_sum += f.j;
        }
        std::int64_t c = v;
        for (std::int64_t i = 0; i < eps_sum / 2; ++i) c = (c * a) % m;
        std::int64_t j = j_sum + eps_sum / 2;
        if (j > n || c == 0) continue;
        result.add_term(Monomial{{eps_sum % 2, j}}, c);
    }
    return result;
}

namespace {

std::string render_factor(const FactorPower& f) {
    std::string s;
    if (f.eps == 1) s += "x";
    if (f.j > 0) {
        if (!s.empty()) s += "·";
        s += "y";
        if (f.j > 1) s += "^" + std::to_string(f.j);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string render_monomial(const Monomial& mon) {
    std::string s;
    for (std::size_t i = 0; i < mon.size(); ++i) {
        if (i > 0) s += "⊗";
        s += render_factor(mon[i]);
    }
    return s;
}

std::string render(const TensorElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [key, c] : e.terms()) {
        if (!s.empty()) s += " + ";
        s += std::to_string(c) + "·(" + render_monomial(unpack(e.spec(), key)) + ")";
    }
    return s;
}

}  // namespace lenstc
