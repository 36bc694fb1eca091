#ifndef LENSTC_BOUNDS_HPP
#define LENSTC_BOUNDS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lenstc/errors.hpp"

namespace lenstc {

// Closed-form upper bounds on TC_k and the predicates telling when one of
// them beats the dimensional bound. Topological hypotheses (a fibration
// exists, an action is free, ...) are not checked; they travel as assumption
// strings on the BoundFact.

/// k * dim + 1.
std::int64_t dim_upper(std::int64_t k, std::int64_t dim);

/// TC_k(fiber) * cat(base^k).
std::int64_t fibration_upper(std::int64_t tc_k_fiber, std::int64_t cat_base_power);

/// cat(Y) * TC_{k,E}(X), the subspace refinement; tc_sub is caller-supplied.
std::int64_t subspace_fibration_upper(std::int64_t cat_y, std::int64_t tc_sub);

/// Covering spaces: cat(base^k) itself.
std::int64_t covering_upper(std::int64_t cat_base_power);

/// k * dim X - dim P + 1 for an action with principal orbit of dimension
/// dim P. Throws domain_error when dim_p is negative or exceeds k * dim_x.
std::int64_t group_action_upper(std::int64_t k, std::int64_t dim_x, std::int64_t dim_p);

/// k for odd l, k + 1 for even l.
std::int64_t tc_sphere(std::int64_t k, std::int64_t l);

/// cat((S^l)^k) = k + 1.
std::int64_t cat_sphere_power(std::int64_t k);

/// cat((CP^n)^k) = k n + 1.
std::int64_t cat_cpn_power(std::int64_t k, std::int64_t n);

/// Whether the fibration bound strictly beats the dimensional bound for an
/// S^{l1} bundle over S^{l2}: k <= l1 + l2 - 1 for odd l1, k <= l1 + l2 - 3
/// for even l1 (one step earlier than odd, since the bounds tie at
/// k = l1 + l2 - 2).
bool sphere_bundle_improves(std::int64_t l1, std::int64_t l2, std::int64_t k);

/// Same question for an S^l bundle over a base B with cat(B^k) supplied:
/// cat(B^k) <= l + dim B for odd l, <= l + dim B - 1 for even l.
bool general_bundle_improves(std::int64_t l, std::int64_t dim_b, std::int64_t cat_bk);

enum class BoundKind {
    Dimensional,
    Fibration,
    SubspaceFibration,
    Covering,
    GroupAction,
    LensFreeCircle,
};

std::string to_string(BoundKind kind);

struct BoundFact {
    BoundKind kind = BoundKind::Dimensional;
    std::int64_t value = 0;
    std::vector<std::pair<std::string, std::int64_t>> inputs;
    std::vector<std::string> assumptions;
};

BoundFact dimensional_fact(std::int64_t k, std::int64_t dim);
BoundFact fibration_fact(std::int64_t tc_k_fiber, std::int64_t cat_base_power);
BoundFact subspace_fibration_fact(std::int64_t cat_y, std::int64_t tc_sub);
BoundFact covering_fact(std::int64_t cat_base_power);
BoundFact group_action_fact(std::int64_t k, std::int64_t dim_x, std::int64_t dim_p);
/// k(2n+1) for the lens space of dimension 2n+1, via its free circle action.
BoundFact lens_free_circle_fact(std::int64_t n, std::int64_t k);

nlohmann::json to_json(const BoundFact& fact);

}  // namespace lenstc

#endif
