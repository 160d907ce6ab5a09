#pragma once

// Registered checks S1..S16. Each suite quantifies a structural statement over
// the configured universe (or a seeded sample of its supports) and records one
// result per instance; failures carry a counterexample that can be re-checked
// from the printed module literals.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "profilium/engine.hpp"
#include "profilium/profile.hpp"

namespace profilium {

struct CheckResult {
    std::string proposition;
    std::string instance;
    bool pass = true;
    /// False when the statement does not apply to the family; such checks always pass.
    bool applicable = true;
    std::string counterexample;
    /// Extra information for passing checks (expected negative results, universe-relative notes).
    std::string detail;
};

struct VerdictReport {
    std::string suite;
    std::string ring;
    std::string universe_id;
    std::vector<CheckResult> checks;
    double seconds = 0.0;

    std::size_t failures() const;
    bool passed() const { return failures() == 0; }
};

/// "S1" .. "S16".
const std::vector<std::string>& suite_ids();
/// Throws ContractError for an unknown id.
void require_suite(std::string_view id);

/// Ring specs of the instances every suite is expected to pass on.
const std::vector<std::string>& standard_instances();

VerdictReport verify(std::string_view suite, const AnyCategory& c, const EngineOptions& opt = {});
/// All suites, merged in suite order.
std::vector<VerdictReport> verify_all(const AnyCategory& c, const EngineOptions& opt = {});

struct SubmoduleViolation {
    std::string m;
    std::string n;
    std::string submodule;
};

/// First (m, n, S) with n in the sp-domain of m, S a submodule of n and S outside that domain.
/// Searches universe members m and targets of order at most 16.
std::optional<SubmoduleViolation> find_submodule_violation(const AbelianCategory& c, const EngineOptions& opt = {});
/// Same with the quotient Q of n in place of a submodule.
std::optional<SubmoduleViolation> find_quotient_violation(const AbelianCategory& c, const EngineOptions& opt = {});

/// Isomorphism types of all subgroups of a finite module (order at most 64), smallest first.
std::vector<AbModule> submodule_types(const AbModule& n);
/// Nonzero subrepresentations of an interval module, as sums of intervals.
std::vector<QuiverModule> subrepresentations(const LineQuiver& q, const Interval& n);

/// Description of a map that fails to lift (sp) or extend (si); empty when none fails.
template <ModuleCategory C>
std::string failure_witness(const C& c, DomainKind kind, const typename C::Module& m, const typename C::Module& n) {
    if (m.is_zero() || n.is_zero()) return {};
    const ExactMatrix a = kind == DomainKind::Subprojective ? c.lift_matrix(m, n) : c.extend_matrix(m, n);
    for (std::size_t j = 0; j < a.rows(); ++j) {
        ExactMatrix e(a.coefficients(), a.rows(), 1);
        e.set(j, 0, 1);
        if (!solve(a, e)) {
            return "m=" + c.format(m) + "; n=" + c.format(n) + "; basis map " + std::to_string(j) +
                   (kind == DomainKind::Subprojective ? " of Hom(m,n) does not lift through the cover of n"
                                                       : " of Hom(n,m) does not extend over the envelope of n");
        }
    }
    return {};
}

}  // namespace profilium
