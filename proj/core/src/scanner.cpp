#include "rsavg/scanner.hpp"

#include <algorithm>

#include "rsavg/error.hpp"
#include "rsavg/repnum.hpp"

namespace rsavg {

const char * to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::positivity: return "positivity";
    case CertificateKind::mod_p: return "mod_p";
    case CertificateKind::mod_p_fallback: return "mod_p_fallback";
    case CertificateKind::eisenstein_filter: return "eisenstein_filter";
    }
    return "?";
}

namespace {

void require_stable_level(ClassGroup const & G, i64 N)
{
    if (!is_prime(N) || G.D() % N == 0 || kronecker(-G.D(), N) != -1)
        throw Error(ErrorCode::precondition_violated, "N = " + std::to_string(N) + " is not an inert prime");
    if (N <= G.D()) throw Error(ErrorCode::precondition_violated, "N must exceed D");
}

Rational stable_value(ClassGroup const & G, i64 N, bool delta)
{
    Rational const hu = make_rational(G.h(), G.u());
    if (!delta) return hu;
    return hu * (1 - 12 * hu / make_rational(N - 1, 1));
}

std::vector<i64> excluded(ClassGroup const & G, int k)
{
    std::vector<i64> out{2};
    for (auto const & [q, e] : factorize(G.D()))
        if (q != 2) out.push_back(q);
    for (i64 q : primes_in(3, 2 * k + 1))
        if (G.D() % q != 0) out.push_back(q);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<long> valuation(Rational const & v, i64 p)
{
    if (v == 0) return std::nullopt;
    return p_valuation(v, p);
}

}  // namespace

CertificateReport positivity_certificate(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi)
{
    require_stable_level(G, N);
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "k must be >= 1");
    bool const delta = k == 1 && psi.is_trivial();
    CertificateReport r;
    r.kind = CertificateKind::positivity;
    r.D = G.D();
    r.N = N;
    r.k = k;
    r.character = psi.exponents();
    r.value = stable_value(G, N, delta);
    r.verdict = r.value > 0;
    r.excluded_primes = excluded(G, k);
    r.narrative.push_back(std::string("delta=") + (delta ? "1" : "0"));
    if (delta) {
        bool const th3 = 12 * static_cast<i64>(G.h()) < N - 1;
        r.narrative.push_back(std::string("h<(N-1)/12=") + (th3 ? "true" : "false"));
    }
    return r;
}

CertificateReport mod_p_certificate(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 p)
{
    require_stable_level(G, N);
    if (!is_prime(p) || p <= 2 * k + 1)
        throw Error(ErrorCode::precondition_violated, "p must be a prime > 2k+1");
    if (G.h() % p == 0) throw Error(ErrorCode::precondition_violated, "p divides h");
    if (G.D() % p == 0 || (2 * G.u()) % p == 0)
        throw Error(ErrorCode::precondition_violated, "p divides 2uD");
    bool const delta = k == 1 && psi.is_trivial();
    CertificateReport r;
    r.kind = CertificateKind::mod_p;
    r.D = G.D();
    r.N = N;
    r.k = k;
    r.p = p;
    r.character = psi.exponents();
    r.value = stable_value(G, N, delta);
    r.p_valuation = valuation(r.value, p);
    r.verdict = r.p_valuation && *r.p_valuation == 0;
    r.excluded_primes = excluded(G, k);
    r.narrative.push_back(std::string("delta=") + (delta ? "1" : "0"));
    r.narrative.push_back("statement=numerator of the stable average is prime to p");
    return r;
}

CertificateReport mod_p_fallback(ClassGroup const & G, i64 N, i64 p)
{
    require_stable_level(G, N);
    if (p == 2 || !is_prime(p)) throw Error(ErrorCode::precondition_violated, "p must be an odd prime");
    if (G.D() % p == 0) throw Error(ErrorCode::precondition_violated, "p divides D");
    if (G.h() % p == 0) throw Error(ErrorCode::precondition_violated, "p divides h");
    if (N <= p * G.D()) throw Error(ErrorCode::precondition_violated, "N must exceed pD");
    Rational const hu = make_rational(G.h(), G.u());
    Rational const X = 1 - 12 * hu / make_rational(N - 1, 1);
    CertificateReport r;
    r.kind = CertificateKind::mod_p_fallback;
    r.D = G.D();
    r.N = N;
    r.k = 1;
    r.p = p;
    r.character = std::vector<i64>(static_cast<std::size_t>(G.h()), 0);
    r.excluded_primes = excluded(G, 1);
    bool const m1 = X != 0 && p_valuation(X.get_num(), p) == 0;
    if (m1) {
        r.value = hu * X;
        r.narrative.push_back("branch=m1");
    } else {
        Rational const Rp = R_total(G, p);
        bool const split = splitting_type(G.discriminant(), p) == Splitting::split;
        r.value = hu * (Rp - 12 * hu * make_rational(p + 1, N - 1));
        r.narrative.push_back("branch=mp");
        r.narrative.push_back(std::string("splitting=") + (split ? "split" : "inert"));
        r.narrative.push_back("R(p)=" + to_string(Rp));
        if (Rp != (split ? 2 : 0)) throw std::logic_error("R(p) contradicts the splitting of p");
    }
    r.p_valuation = valuation(r.value, p);
    r.verdict = r.p_valuation && *r.p_valuation == 0;
    return r;
}

bool eisenstein_filter(i64 p, i64 N)
{
    if (!is_prime(N)) throw Error(ErrorCode::invalid_parameters, "N must be prime");
    return N % p != 0 && (N - 1) % p != 0 && (N + 1) % p != 0;
}

std::vector<CertificateReport> theorem6_scan(ClassGroup const & G, i64 p, i64 N_lo, i64 N_hi)
{
    if (p == 2 || !is_prime(p)) throw Error(ErrorCode::precondition_violated, "p must be an odd prime");
    if (p == 3) throw Error(ErrorCode::precondition_violated, "3 divides N(N^2-1) for every prime N");
    if (G.D() % p == 0 || G.h() % p == 0) throw Error(ErrorCode::precondition_violated, "p divides D h");
    auto const chars = std::vector<i64>(static_cast<std::size_t>(G.h()), 0);
    ClassCharacter const trivial(std::make_shared<ClassGroup const>(G), chars);
    std::vector<CertificateReport> out;
    for (i64 N : primes_in(std::max<i64>(N_lo, G.D() + 1), N_hi)) {
        if (G.D() % N == 0 || kronecker(-G.D(), N) != -1) continue;
        if (!eisenstein_filter(p, N)) continue;
        CertificateReport r = mod_p_certificate(G, N, 1, trivial, p);
        if (!r.verdict && N > p * G.D()) r = mod_p_fallback(G, N, p);
        r.narrative.push_back("eisenstein_filter=pass");
        r.narrative.push_back("eta_f=not computed");
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace rsavg
