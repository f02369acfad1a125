#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsavg/exactmath.hpp"
#include "rsavg/quadfield.hpp"

namespace rsavg {

enum class CertificateKind { positivity, mod_p, mod_p_fallback, eisenstein_filter };
const char * to_string(CertificateKind k);

struct CertificateReport {
    CertificateKind kind = CertificateKind::positivity;
    i64 D = 0, N = 0, p = 0;  // p = 0 when not applicable
    int k = 0;
    std::vector<i64> character;  // exponents; empty when not applicable
    Rational value;
    std::optional<long> p_valuation;
    bool verdict = false;
    /// Primes at which the value says nothing: 2, primes dividing D, primes <= 2k+1.
    std::vector<i64> excluded_primes;
    /// key=value trace of the branches taken
    std::vector<std::string> narrative;
};

/// Stable average at m = 1, divided by u^2: (h/u)(1 - delta 12 (h/u)/(N-1)).
/// Verdict: value > 0. For (k, Psi) = (1, 1_K) the narrative also records
/// whether h < (N-1)/12. Throws Error(precondition_violated) unless N > D
/// and N is an inert prime.
CertificateReport positivity_certificate(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi);

/// The same stable value with its p-valuation; verdict: valuation 0.
/// Requires p prime, p > 2k+1, p not dividing 2uhD, N > D inert.
CertificateReport mod_p_certificate(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 p);

/// Psi = 1_K, k = 1. If p does not divide the numerator of
/// X = 1 - 12(h/u)/(N-1), the m = 1 value (h/u) X is a p-unit. Otherwise
/// use m = p: (h/u)(R(p) - 12(h/u)(p+1)/(N-1)), with R(p) = 0 (p inert) or
/// 2 (p split). Requires p odd prime, p not dividing hD, N > pD inert.
CertificateReport mod_p_fallback(ClassGroup const & G, i64 N, i64 p);

/// p does not divide N(N^2 - 1).
bool eisenstein_filter(i64 p, i64 N);

/// For each prime N in [N_lo, N_hi] inert in K with N > D passing the
/// Eisenstein filter: the (k, Psi) = (1, 1_K) mod-p certificate, replaced by
/// the m = p fallback when the m = 1 value is divisible by p and N > pD.
/// Requires p odd, p != 3, p not dividing D h.
std::vector<CertificateReport> theorem6_scan(ClassGroup const & G, i64 p, i64 N_lo, i64 N_hi);

}  // namespace rsavg
