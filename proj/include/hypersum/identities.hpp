#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypersum/errors.hpp"
#include "hypersum/quad.hpp"
#include "hypersum/series.hpp"

// Registry of closed-form identities: classical summation theorems, the new
// 6F5/7F6/8F7 summation theorems, reduction formulas, and the hyperbolic
// integral triangles. Each entry carries an executable LHS, RHS and domain
// predicate over a sampled parameter point.

namespace hypersum::identities {

struct ParamPoint {
    std::optional<double> a, b, c, d, e, v, x, z;

    static constexpr std::array<const char*, 8> field_names = {
        "a", "b", "c", "d", "e", "v", "x", "z"};

    std::optional<double>& field(std::string_view name);
    const std::optional<double>& field(std::string_view name) const;
};

struct EvalContext {
    double series_tol = 1e-12;
    long max_terms = 20000;
    double quad_tol = 1e-10;
};

struct RecipeOutput {
    double value = 0;
    long terms = 0;
    bool accelerated = false;
};

using Recipe = std::function<RecipeOutput(const ParamPoint&, const EvalContext&)>;

struct Identity {
    std::string id;
    std::string provenance;
    std::vector<std::string> variables;  // ParamPoint fields the entry reads
    std::function<bool(const ParamPoint&)> domain;
    Recipe lhs;
    Recipe rhs;
    double tolerance = 1e-8;  // relative pass tolerance for check()

    // quadrature leg for the integral-triangle entries
    std::function<quad::IntegralSpec(const ParamPoint&)> integral_spec;

    // omega of the LHS series as a function of the point; set for entries
    // whose sampler must exclude (and count) nonpositive-omega draws
    std::function<double(const ParamPoint&)> series_omega;
    bool exclude_nonpositive_omega = false;

    // classifies points that exercise the conjugate-pair parameter regime
    std::function<bool(const ParamPoint&)> pair_regime;
};

const std::vector<Identity>& registry();
const Identity& find_identity(const std::string& id);  // DomainError if absent

struct CheckOutcome {
    double lhs = 0;
    double rhs = 0;
    std::optional<double> integral;
    double abs_residual = 0;
    double rel_residual = 0;  // abs / (1 + |rhs|)
    long terms_used = 0;
    bool accelerated = false;
    bool pass = false;
};

// Evaluates both recipes (and the quadrature leg when present); residual is
// the largest pairwise disagreement. DomainError when the predicate fails;
// NonConvergedError propagates.
CheckOutcome check(const Identity& identity, const ParamPoint& p, const EvalContext& ctx);

// The four 2F1(-1) constituents of the 7F6(-1) reduction formula, each
// evaluated by series and by its definite-integral representation
// b int_0^1 t^(b-1) (1+t)^(-a) dt. Returns (series, integral) pairs.
std::vector<std::pair<double, double>> red2_legs(const ParamPoint& p, const EvalContext& ctx);

}  // namespace hypersum::identities
