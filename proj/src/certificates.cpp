#include "lenstc/certificates.hpp"

namespace lenstc {

std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Verified: return "verified";
        case VerifyStatus::Failed: return "failed";
        case VerifyStatus::Skipped: break;
    }
    return "skipped";
}

TensorElement xbar(const RingSpec& spec, std::int64_t i) {
    if (i < 2 || i > spec.k())
        throw domain_error("xbar: index must satisfy 2 <= i <= k");
    return sub(pullback(spec, i, Generator::X), pullback(spec, 1, Generator::X));
}

TensorElement ybar(const RingSpec& spec, std::int64_t i) {
    if (i < 2 || i > spec.k())
        throw domain_error("ybar: index must satisfy 2 <= i <= k");
    return sub(pullback(spec, i, Generator::Y), pullback(spec, i - 1, Generator::Y));
}

TensorElement zbar(const RingSpec& spec) {
    if (spec.k() < 2) throw domain_error("zbar: k must be at least 2");
    return sub(pullback(spec, spec.k(), Generator::Y),
               pullback(spec, 1, Generator::Y));
}

namespace {

void check_pair(const RingSpec& spec, std::int64_t l, std::int64_t l2) {
    if (l < 0 || l > spec.n() || l2 < 0 || l2 > spec.n())
        throw domain_error("certificate: l and l' must lie in [0, n]");
    if (spec.k() < 2) throw domain_error("certificate: k must be at least 2");
}

}  // namespace

TensorElement certificate_product(const RingSpec& spec, std::int64_t l,
                                  std::int64_t l2) {
    check_pair(spec, l, l2);
    const std::int64_t k = spec.k();
    auto product = unit(spec);
    for (std::int64_t i = 2; i <= k; ++i) product = mul(product, xbar(spec, i));
    for (std::int64_t i = 1; i <= k / 2; ++i)
        product = mul(product, power(ybar(spec, 2 * i), l + l2));
    if (k % 2 == 1) product = mul(product, power(zbar(spec), spec.n()));
    return product;
}

Monomial certificate_witness_monomial(const RingSpec& spec, std::int64_t l,
                                      std::int64_t l2) {
    check_pair(spec, l, l2);
    const std::int64_t k = spec.k();
    Monomial mon(static_cast<std::size_t>(k));
    mon[0] = {0, l};
    const std::int64_t even_top = k % 2 == 0 ? k : k - 1;
    for (std::int64_t pos = 2; pos <= even_top; ++pos)
        mon[static_cast<std::size_t>(pos - 1)] = {1, pos % 2 == 0 ? l2 : l};
    if (k % 2 == 1) mon[static_cast<std::size_t>(k - 1)] = {1, spec.n()};
    return mon;
}

std::int64_t branch_bound(std::int64_t k, std::int64_t n, std::int64_t l,
                          std::int64_t l2) {
    return k % 2 == 0 ? k * (l + l2 + 1) : (k - 1) * (l + l2) + k + 2 * n;
}

std::int64_t branch_weight(std::int64_t k, std::int64_t n, std::int64_t l,
                           std::int64_t l2) {
    // 1 per xbar factor, 2(l+l') per ybar power, 2n for the zbar power
    std::int64_t w = (k - 1) + 2 * (k / 2) * (l + l2);
    if (k % 2 == 1) w += 2 * n;
    return w;
}

Certificate make_certificate(const RingSpec& spec, std::int64_t l,
                             std::int64_t l2, VerifyMode mode) {
    check_pair(spec, l, l2);
    Certificate cert;
    cert.k = spec.k();
    cert.even_branch = spec.k() % 2 == 0;
    cert.l = l;
    cert.l_prime = l2;
    cert.weight_total = branch_weight(spec.k(), spec.n(), l, l2);
    cert.bound = cert.weight_total + 1;

    const std::int64_t t = spec.k() / 2;
    bool divides = true;
    for (auto [p, e] : factorize(spec.m())) {
        PrimeEvidence ev;
        ev.p = p;
        ev.e = e;
        ev.vp = vp_binomial(l, l2, p);
        ev.vp_scaled = t * ev.vp;
        ev.blocks = ev.vp_scaled < e;
        if (ev.blocks) divides = false;
        cert.divisibility.push_back(ev);
    }
    cert.divisibility_ok = !divides;

    const bool expand = mode == VerifyMode::Force ||
                        (mode == VerifyMode::Auto &&
                         spec.dense_monomial_count() <= kDefaultVerifyThreshold);
    if (expand) {
        auto product = certificate_product(spec, l, l2);
        if (product.is_zero()) {
            cert.symbolic_nonzero = VerifyStatus::Failed;
        } else {
            cert.symbolic_nonzero = VerifyStatus::Verified;
            auto witness = certificate_witness_monomial(spec, l, l2);
            if (product.coeff(witness) == 0)
                witness = unpack(spec, product.terms().begin()->first);
            cert.witness_monomial = witness;
            cert.witness_rendered = render_monomial(witness);
        }
    } else {
        cert.symbolic_nonzero = VerifyStatus::Skipped;
    }
    return cert;
}

LowerBound lower_bound(const RingSpec& spec, VerifyMode mode) {
    if (spec.k() < 2) throw domain_error("lower_bound: k must be at least 2");
    const std::int64_t n = spec.n(), k = spec.k(), t = k / 2;
    std::int64_t best = -1, best_l = 0, best_l2 = 0;
    for (std::int64_t l = 0; l <= n; ++l) {
        for (std::int64_t l2 = 0; l2 <= n; ++l2) {
            if (divides_binomial_power(spec.m(), l, l2, t)) continue;
            auto b = branch_bound(k, n, l, l2);
            if (b > best) {
                best = b;
                best_l = l;
                best_l2 = l2;
            }
        }
    }
    // (0, 0) is always admissible, so the search cannot come back empty
    return {best, make_certificate(spec, best_l, best_l2, mode)};
}

nlohmann::json to_json(const Certificate& cert) {
    nlohmann::json evidence = nlohmann::json::array();
    for (const auto& ev : cert.divisibility)
        evidence.push_back({{"p", ev.p},
                            {"e", ev.e},
                            {"vp", ev.vp},
                            {"vp_scaled", ev.vp_scaled},
                            {"blocks", ev.blocks}});
    nlohmann::json j = {
        {"k", cert.k},
        {"branch", cert.even_branch ? "even" : "odd"},
        {"l", cert.l},
        {"l_prime", cert.l_prime},
        {"weight_total", cert.weight_total},
        {"bound", cert.bound},
        {"divisibility_ok", cert.divisibility_ok},
        {"divisibility", std::move(evidence)},
        {"verification", to_string(cert.symbolic_nonzero)},
    };
    if (cert.witness_monomial)
        j["witness"] = cert.witness_rendered;
    else
        j["witness"] = nullptr;
    return j;
}

}  // namespace lenstc
