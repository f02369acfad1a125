#include "rsavg/kernel.hpp"

#include <numeric>
#include <stdexcept>

#include "rsavg/error.hpp"

namespace rsavg {

const char * to_string(ConstantTerm c)
{
    return c == ConstantTerm::brandt ? "brandt" : "literal";
}

void require_inert_level(ClassGroup const & G, i64 N)
{
    if (!is_prime(N)) throw Error(ErrorCode::invalid_parameters, "N = " + std::to_string(N) + " is not prime");
    if (G.D() % N == 0) throw Error(ErrorCode::invalid_parameters, "N divides D");
    if (kronecker(-G.D(), N) != -1)
        throw Error(ErrorCode::invalid_parameters,
                    "N = " + std::to_string(N) + " is not inert in Q(sqrt(-" + std::to_string(G.D()) + "))");
}

AuxiliaryPrime auxiliary_prime(ClassGroup const & G, i64 N, i64 m_max, Orientation orientation, int skip,
                               i64 search_bound)
{
    require_inert_level(G, N);
    i64 const D = G.D();
    i64 const residue = mod_floor(-N, D);
    int seen = 0;
    for (i64 q = residue; q <= search_bound; q += D) {
        if (q <= m_max || q < 3 || !is_prime(q) || q == N || D % q == 0) continue;
        if (seen++ < skip) continue;
        int Q = G.prime_ideal_class(q);
        if (orientation == Orientation::inverse) Q = G.inverse(Q);
        return {q, Q, D, N, m_max};
    }
    throw Error(ErrorCode::search_exhausted, "no auxiliary prime below " + std::to_string(search_bound));
}

i64 R_braced(ClassGroup const & G, int base_class, i64 n)
{
    if (n < 1) throw std::invalid_argument("R_braced: n must be >= 1");
    auto const counts = ideal_counts_by_class(G, n);
    auto const squares = square_classes(G);
    std::vector<bool> is_square(static_cast<std::size_t>(G.h()), false);
    for (int s : squares) is_square[static_cast<std::size_t>(s)] = true;
    Integer total = 0;
    for (int X = 0; X < G.h(); ++X)
        if (is_square[static_cast<std::size_t>(G.op(base_class, X))]) total += counts[static_cast<std::size_t>(X)];
    return total.get_si();
}

Rational eisenstein_coeff(i64 N, i64 m)
{
    if (m < 0) throw std::invalid_argument("eisenstein_coeff: m < 0");
    if (m == 0) return make_rational(N - 1, 12);
    return Rational(static_cast<long>(sigma_coprime(N, m)));
}

Rational b_zero(ClassGroup const & G, ConstantTerm convention)
{
    i64 const u = G.u();
    return make_rational(G.h(), (convention == ConstantTerm::brandt ? 1 : 2) * u * u);
}

namespace {

void check_aux(ClassGroup const & G, i64 N, i64 m, AuxiliaryPrime const & aux)
{
    if (aux.D != G.D() || aux.N != N)
        throw Error(ErrorCode::inconsistent_auxiliary, "auxiliary prime was chosen for other (D, N)");
    if (mod_floor(aux.q + N, G.D()) != 0)
        throw Error(ErrorCode::inconsistent_auxiliary, "q is not -N mod D");
    if (m % aux.q == 0) throw Error(ErrorCode::inconsistent_auxiliary, "q divides m");
    int const P = G.prime_ideal_class(aux.q);
    if (aux.Q_class != P && aux.Q_class != G.inverse(P))
        throw Error(ErrorCode::inconsistent_auxiliary, "Q_class is not the class of a prime above q");
}

Rational pow_int(Rational const & x, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

Rational b_coeff(ClassGroup const & G, i64 N, int k, int A, i64 m, AuxiliaryPrime const & aux, ConstantTerm convention)
{
    if (k < 1) throw Error(ErrorCode::invalid_parameters, "k must be >= 1");
    if (m < 0) throw Error(ErrorCode::invalid_parameters, "m must be >= 0");
    if (m == 0) return b_zero(G, convention);
    check_aux(G, N, m, aux);
    i64 const D = G.D();
    Rational acc = make_rational(G.h(), G.u()) * r_class(G, A, D * m);
    int const QA = G.op(aux.Q_class, A);
    for (i64 n = 1; n * N <= m * D; ++n) {
        Rational const rA = r_class(G, A, m * D - n * N);
        if (rA == 0) continue;
        i64 const Rb = R_braced(G, QA, n);
        if (Rb == 0) continue;
        Rational const x = 1 - make_rational(2 * n * N, m * D);
        acc += Rational(static_cast<long>(num_divisors(std::gcd(n, D)))) * rA * Rational(static_cast<long>(Rb)) *
               legendre_eval(k - 1, x);
    }
    return pow_int(Rational(static_cast<long>(m)), k - 1) * acc;
}

Rational g_cusp_coeff(ClassGroup const & G, i64 N, int k, int A, i64 m, AuxiliaryPrime const & aux,
                      ConstantTerm convention)
{
    Rational b = b_coeff(G, N, k, A, m, aux, convention);
    if (k == 1) b -= b_zero(G, convention) / eisenstein_coeff(N, 0) * eisenstein_coeff(N, m);
    return b;
}

KernelSeries::KernelSeries(std::shared_ptr<ClassGroup const> group, i64 N, int k, i64 M_max, Orientation orientation,
                           ConstantTerm convention)
    : group_(std::move(group))
    , N_(N)
    , k_(k)
    , M_max_(M_max)
    , orientation_(orientation)
    , convention_(convention)
    , aux_(auxiliary_prime(*group_, N, M_max, orientation))
{
    b_.resize(static_cast<std::size_t>(group_->h()));
    for (int A = 0; A < group_->h(); ++A)
        for (i64 m = 0; m <= M_max_; ++m) b_[static_cast<std::size_t>(A)].push_back(b_coeff(*group_, N_, k_, A, m, aux_, convention_));
}

KernelSeries::KernelSeries(std::shared_ptr<ClassGroup const> group, i64 N, int k, i64 M_max, Orientation orientation,
                           ConstantTerm convention, AuxiliaryPrime aux, std::vector<std::vector<Rational>> b)
    : group_(std::move(group))
    , N_(N)
    , k_(k)
    , M_max_(M_max)
    , orientation_(orientation)
    , convention_(convention)
    , aux_(aux)
    , b_(std::move(b))
{
    if (static_cast<int>(b_.size()) != group_->h())
        throw Error(ErrorCode::dimension_mismatch, "KernelSeries: one row per class expected");
    for (auto const & row : b_)
        if (static_cast<i64>(row.size()) != M_max_ + 1)
            throw Error(ErrorCode::dimension_mismatch, "KernelSeries: row length must be M_max + 1");
}

Rational const & KernelSeries::b(int A, i64 m) const
{
    if (m < 0 || m > M_max_) throw std::out_of_range("KernelSeries: m outside [0, M_max]");
    return b_.at(static_cast<std::size_t>(A))[static_cast<std::size_t>(m)];
}

Rational KernelSeries::cusp(int A, i64 m) const
{
    Rational c = b(A, m);
    if (k_ == 1) c -= b_zero(*group_, convention_) / eisenstein_coeff(N_, 0) * eisenstein_coeff(N_, m);
    return c;
}

}  // namespace rsavg
