#include "lenstc/bounds.hpp"

namespace lenstc {

namespace {

// keeps every product formula inside int64
constexpr std::int64_t kMaxInput = 1'000'000'000;

void require(bool ok, const char* msg) {
    if (!ok) throw domain_error(msg);
}

void require_small(std::initializer_list<std::int64_t> values) {
    for (auto v : values)
        require(v <= kMaxInput, "bound inputs are capped at 10^9");
}

}  // namespace

std::int64_t dim_upper(std::int64_t k, std::int64_t dim) {
    require(k >= 2, "dim_upper: k must be at least 2");
    require(dim >= 0, "dim_upper: dim must be nonnegative");
    require_small({k, dim});
    return k * dim + 1;
}

std::int64_t fibration_upper(std::int64_t tc_k_fiber, std::int64_t cat_base_power) {
    require(tc_k_fiber >= 1 && cat_base_power >= 1,
            "fibration_upper: inputs must be at least 1");
    require_small({tc_k_fiber, cat_base_power});
    return tc_k_fiber * cat_base_power;
}

std::int64_t subspace_fibration_upper(std::int64_t cat_y, std::int64_t tc_sub) {
    require(cat_y >= 1 && tc_sub >= 1,
            "subspace_fibration_upper: inputs must be at least 1");
    require_small({cat_y, tc_sub});
    return cat_y * tc_sub;
}

std::int64_t covering_upper(std::int64_t cat_base_power) {
    require(cat_base_power >= 1, "covering_upper: input must be at least 1");
    return cat_base_power;
}

std::int64_t group_action_upper(std::int64_t k, std::int64_t dim_x,
                                std::int64_t dim_p) {
    require(k >= 2, "group_action_upper: k must be at least 2");
    require(dim_x >= 0, "group_action_upper: dim_x must be nonnegative");
    require(dim_p >= 0, "group_action_upper: dim_p must be nonnegative");
    require_small({k, dim_x, dim_p});
    require(dim_p <= k * dim_x,
            "group_action_upper: principal orbit cannot exceed dim X^k");
    return k * dim_x - dim_p + 1;
}

std::int64_t tc_sphere(std::int64_t k, std::int64_t l) {
    require(k >= 2, "tc_sphere: k must be at least 2");
    require(l >= 1, "tc_sphere: l must be at least 1");
    return l % 2 == 1 ? k : k + 1;
}

std::int64_t cat_sphere_power(std::int64_t k) {
    require(k >= 2, "cat_sphere_power: k must be at least 2");
    return k + 1;
}

std::int64_t cat_cpn_power(std::int64_t k, std::int64_t n) {
    require(k >= 2, "cat_cpn_power: k must be at least 2");
    require(n >= 1, "cat_cpn_power: n must be at least 1");
    require_small({k, n});
    return k * n + 1;
}

bool sphere_bundle_improves(std::int64_t l1, std::int64_t l2, std::int64_t k) {
    require(l1 >= 1 && l2 >= 1, "sphere_bundle_improves: dimensions must be >= 1");
    require(k >= 2, "sphere_bundle_improves: k must be at least 2");
    // even l1: at k = l1 + l2 - 2 the two bounds coincide, (k+1)^2 on both
    // sides, so strict improvement needs k <= l1 + l2 - 3
    return l1 % 2 == 1 ? k <= l1 + l2 - 1 : k <= l1 + l2 - 3;
}

bool general_bundle_improves(std::int64_t l, std::int64_t dim_b,
                             std::int64_t cat_bk) {
    require(l >= 1, "general_bundle_improves: l must be at least 1");
    require(dim_b >= 1, "general_bundle_improves: dim B must be at least 1");
    require(cat_bk >= 1, "general_bundle_improves: cat(B^k) must be at least 1");
    return l % 2 == 1 ? cat_bk <= l + dim_b : cat_bk <= l + dim_b - 1;
}

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::Dimensional: return "dimensional";
        case BoundKind::Fibration: return "fibration";
        case BoundKind::SubspaceFibration: return "subspace_fibration";
        case BoundKind::Covering: return "covering";
        case BoundKind::GroupAction: return "group_action";
        case BoundKind::LensFreeCircle: break;
    }
    return "lens_free_circle";
}

BoundFact dimensional_fact(std::int64_t k, std::int64_t dim) {
    return {BoundKind::Dimensional,
            dim_upper(k, dim),
            {{"k", k}, {"dim", dim}},
            {"X is paracompact"}};
}

BoundFact fibration_fact(std::int64_t tc_k_fiber, std::int64_t cat_base_power) {
    return {BoundKind::Fibration,
            fibration_upper(tc_k_fiber, cat_base_power),
            {{"tc_k_fiber", tc_k_fiber}, {"cat_base_power", cat_base_power}},
            {"a fibration F -> E -> B exists with the given invariants"}};
}

BoundFact subspace_fibration_fact(std::int64_t cat_y, std::int64_t tc_sub) {
    return {BoundKind::SubspaceFibration,
            subspace_fibration_upper(cat_y, tc_sub),
            {{"cat_y", cat_y}, {"tc_sub", tc_sub}},
            {"a fibration X -> E^k -> Y exists; TC_{k,E}(X) is caller-supplied"}};
}

BoundFact covering_fact(std::int64_t cat_base_power) {
    return {BoundKind::Covering,
            covering_upper(cat_base_power),
            {{"cat_base_power", cat_base_power}},
            {"the space covers a base with the given cat(X^k)"}};
}

BoundFact group_action_fact(std::int64_t k, std::int64_t dim_x, std::int64_t dim_p) {
    return {BoundKind::GroupAction,
            group_action_upper(k, dim_x, dim_p),
            {{"k", k}, {"dim_x", dim_x}, {"dim_p", dim_p}},
            {"a compact Lie group acts locally smoothly with connected "
             "fixed-point sets of the stabiliser intersections"}};
}

BoundFact lens_free_circle_fact(std::int64_t n, std::int64_t k) {
    require(n >= 1, "lens_free_circle_fact: n must be at least 1");
    return {BoundKind::LensFreeCircle,
            group_action_upper(k, 2 * n + 1, 1),
            {{"n", n}, {"k", k}},
            {"the lens space carries its free circle action"}};
}

nlohmann::json to_json(const BoundFact& fact) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [name, value] : fact.inputs) inputs[name] = value;
    return {{"kind", to_string(fact.kind)},
            {"value", fact.value},
            {"inputs", std::move(inputs)},
            {"assumptions", fact.assumptions}};
}

}  // namespace lenstc
