#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsavg/exactmath.hpp"
#include "rsavg/kernel.hpp"
#include "rsavg/quadfield.hpp"

namespace rsavg {

/// Right-hand side of the exact average identity, term by term:
/// value = eisenstein + main + phi with
///   eisenstein = -delta 12 h^2 sigma_N(m)/(N-1),
///   main       = u m^{k-1} r_Psi(m) h,
///   phi        = u^2 m^{k-1} sum_{n <= mD/N} sum_A Psi(A) d((n,D)) r_A(mD-nN) R_{QA}(n) P_{k-1}(1 - 2nN/(mD)).
struct AverageValue {
    i64 D = 0, N = 0, m = 0;
    int k = 0;
    std::vector<i64> character;  // exponents k_A with Psi(A) = zeta_e^{k_A}
    i64 character_order = 1;
    bool delta = false;  // (k, Psi) = (1, 1_K)
    bool stable = false;  // N > mD
    bool outside_hypotheses = false;  // odd k >= 3
    i64 phi_terms = 0;  // number of n in the Phi sum
    Rational eisenstein;
    CyclotomicValue main;
    CyclotomicValue phi;
    CyclotomicValue value;
};

AverageValue theorem1_rhs(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 m,
                          AuxiliaryPrime const & aux);

/// u^2 sum_A Psi(A) a_m(G^cusp_A).
CyclotomicValue average_via_kernel(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 m,
                                   AuxiliaryPrime const & aux, ConstantTerm convention = ConstantTerm::brandt);

struct StabilityResult {
    bool stable = false;
    /// Two-term closed form when stable; empty otherwise.
    std::optional<AverageValue> value;
};

StabilityResult stability_check(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 m);

/// h == (N-1) u / 12. Throws Error(precondition_violated) unless N is an
/// inert prime with N > D.
bool class_number_identity(i64 N, ClassGroup const & G);

/// sum over all characters of theorem1_rhs against h u^2 a_m(G^cusp_identity).
struct OrthogonalityCheck {
    CyclotomicValue character_sum;
    Rational per_class;  // h u^2 a_m(G^cusp) at the identity class
    bool equal = false;
};

OrthogonalityCheck character_orthogonality(std::shared_ptr<ClassGroup const> const & G, i64 N, int k, i64 m,
                                           AuxiliaryPrime const & aux);

struct SubconvexityReport {
    i64 D = 0, N = 0;
    int k = 0;
    double delta = 0;
    Rational exact_average;  // theorem1_rhs at Psi = 1_K, m = 1
    double normalized_average = 0;  // exact_average / u^2
    double termwise_bound = 0;  // h/u + sum_n |Phi_k(n)|
    double convexity_bound = 0;  // k sqrt(N D)
    double corollary_bound = 0;  // k sqrt(N D) (N^{-1/2} + N^{1/2} D^{-1/2})
    double ratio = 0;  // corollary_bound / convexity_bound
    bool in_window = false;  // (kD)^delta <= N <= D (kD)^{-delta}
    bool subconvex = false;  // in_window and ratio < 1
};

SubconvexityReport subconvexity_report(std::shared_ptr<ClassGroup const> const & G, i64 N, int k, double delta);

}  // namespace rsavg
