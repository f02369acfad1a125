#include "rsavg/average.hpp"

#include <cmath>
#include <numeric>

#include "rsavg/error.hpp"
#include "rsavg/repnum.hpp"

namespace rsavg {

namespace {

Rational pow_int(i64 x, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= Rational(static_cast<long>(x));
    return r;
}

void require_average_params(ClassGroup const & G, i64 N, int k, i64 m)
{
    require_inert_level(G, N);
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "k must be >= 1");
    if (m < 1) throw Error(ErrorCode::invalid_parameters, "m must be >= 1");
}

// sum_A Psi(A) d((n,D)) r_A(mD - nN) R_{QA}(n) for one n, without P_{k-1}.
CyclotomicValue phi_inner(ClassGroup const & G, i64 N, ClassCharacter const & psi, i64 m, i64 n, int Q)
{
    i64 const D = G.D();
    CyclotomicValue acc(psi.order());
    Rational const d = Rational(static_cast<long>(num_divisors(std::gcd(n, D))));
    for (int A = 0; A < G.h(); ++A) {
        Rational const rA = r_class(G, A, m * D - n * N);
        if (rA == 0) continue;
        i64 const Rb = R_braced(G, G.op(Q, A), n);
        if (Rb == 0) continue;
        acc += psi.value(A) * (d * rA * Rational(static_cast<long>(Rb)));
    }
    return acc;
}

AverageValue two_terms(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 m)
{
    AverageValue v;
    v.D = G.D();
    v.N = N;
    v.k = k;
    v.m = m;
    v.character = psi.exponents();
    v.character_order = psi.order();
    v.delta = (k == 1 && psi.is_trivial());
    v.stable = N > m * G.D();
    v.outside_hypotheses = (k >= 3 && k % 2 == 1);
    i64 const h = G.h(), u = G.u();
    v.eisenstein = 0;
    if (v.delta) v.eisenstein = -make_rational(12 * h * h * sigma_N(N, m), N - 1);
    v.main = r_psi(G, psi, m) * (Rational(static_cast<long>(u * h)) * pow_int(m, k - 1));
    v.phi = CyclotomicValue(psi.order());
    return v;
}

}  // namespace

AverageValue theorem1_rhs(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 m,
                          AuxiliaryPrime const & aux)
{
    require_average_params(G, N, k, m);
    if (aux.D != G.D() || aux.N != N)
        throw Error(ErrorCode::inconsistent_auxiliary, "auxiliary prime was chosen for other (D, N)");
    AverageValue v = two_terms(G, N, k, psi, m);
    i64 const D = G.D();
    i64 const u = G.u();
    for (i64 n = 1; n * N <= m * D; ++n) {
        ++v.phi_terms;
        CyclotomicValue const inner = phi_inner(G, N, psi, m, n, aux.Q_class);
        if (inner.is_zero()) continue;
        v.phi += inner * legendre_eval(k - 1, 1 - make_rational(2 * n * N, m * D));
    }
    v.phi *= Rational(static_cast<long>(u * u)) * pow_int(m, k - 1);
    v.value = CyclotomicValue::embed(v.eisenstein, psi.order()) + v.main + v.phi;
    return v;
}

CyclotomicValue average_via_kernel(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 m,
                                   AuxiliaryPrime const & aux, ConstantTerm convention)
{
    require_average_params(G, N, k, m);
    CyclotomicValue acc(psi.order());
    for (int A = 0; A < G.h(); ++A) acc += psi.value(A) * g_cusp_coeff(G, N, k, A, m, aux, convention);
    i64 const u = G.u();
    return acc * Rational(static_cast<long>(u * u));
}

StabilityResult stability_check(ClassGroup const & G, i64 N, int k, ClassCharacter const & psi, i64 m)
{
    require_average_params(G, N, k, m);
    StabilityResult r;
    r.stable = N > m * G.D();
    if (!r.stable) return r;
    AverageValue v = two_terms(G, N, k, psi, m);
    v.value = CyclotomicValue::embed(v.eisenstein, psi.order()) + v.main;
    r.value = std::move(v);
    return r;
}

bool class_number_identity(i64 N, ClassGroup const & G)
{
    if (!is_prime(N) || kronecker(-G.D(), N) != -1)
        throw Error(ErrorCode::precondition_violated, "N must be a prime inert in K");
    if (N <= G.D()) throw Error(ErrorCode::precondition_violated, "N must exceed D");
    return 12 * static_cast<i64>(G.h()) == (N - 1) * G.u();
}

OrthogonalityCheck character_orthogonality(std::shared_ptr<ClassGroup const> const & G, i64 N, int k, i64 m,
                                           AuxiliaryPrime const & aux)
{
    OrthogonalityCheck c;
    auto const chars = characters(G);
    c.character_sum = CyclotomicValue(G->exponent());
    for (auto const & psi : chars) c.character_sum += theorem1_rhs(*G, N, k, psi, m, aux).value;
    i64 const u = G->u();
    c.per_class = Rational(static_cast<long>(G->h() * u * u)) * g_cusp_coeff(*G, N, k, G->identity(), m, aux);
    c.equal = c.character_sum == CyclotomicValue::embed(c.per_class, G->exponent());
    return c;
}

SubconvexityReport subconvexity_report(std::shared_ptr<ClassGroup const> const & G, i64 N, int k, double delta)
{
    require_average_params(*G, N, k, 1);
    auto const aux = auxiliary_prime(*G, N, 1);
    auto const chars = characters(G);
    ClassCharacter const & trivial = chars.front();

    SubconvexityReport r;
    r.D = G->D();
    r.N = N;
    r.k = k;
    r.delta = delta;
    auto const av = theorem1_rhs(*G, N, k, trivial, 1, aux);
    r.exact_average = *av.value.to_rational();
    double const u = G->u();
    r.normalized_average = r.exact_average.get_d() / (u * u);

    double bound = static_cast<double>(G->h()) / u;
    for (i64 n = 1; n * N <= G->D(); ++n) {
        Rational const inner = *phi_inner(*G, N, trivial, 1, n, aux.Q_class).to_rational();
        Rational const P = legendre_eval(k - 1, 1 - make_rational(2 * n * N, G->D()));
        bound += std::fabs(Rational(inner * P).get_d());
    }
    r.termwise_bound = bound;

    double const Nd = static_cast<double>(N), Dd = static_cast<double>(G->D());
    r.convexity_bound = k * std::sqrt(Nd * Dd);
    r.ratio = 1.0 / std::sqrt(Nd) + std::sqrt(Nd) / std::sqrt(Dd);
    r.corollary_bound = r.convexity_bound * r.ratio;
    double const kD = k * Dd;
    r.in_window = std::pow(kD, delta) <= Nd && Nd <= Dd * std::pow(kD, -delta);
    r.subconvex = r.in_window && r.ratio < 1.0;
    return r;
}

}  // namespace rsavg
