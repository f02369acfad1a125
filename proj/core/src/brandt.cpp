#include "rsavg/brandt.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "rsavg/error.hpp"
#include "rsavg/repnum.hpp"

namespace rsavg {

namespace {

Rational rat(i64 n, i64 d = 1) { return make_rational(n, d); }

SmallMatrix reduced_gram(QuaternionAlgebra const & B, QLattice const & L, Rational const & scale)
{
    return to_small(lll_gram(pair_gram(B, L, scale)).gram);
}

// Lattice conj(J) I with the normalized norm form 2 nrd(x) / (nrd(I) nrd(J)).
SmallMatrix pair_lattice_gram(MaximalOrder const & O, QLattice const & I, Rational const & nI, QLattice const & J,
                              Rational const & nJ)
{
    auto const & B = O.algebra;
    return reduced_gram(B, lattice_product(B, lattice_conjugate(B, J), I), nI * nJ);
}

bool has_unit_vector(SmallMatrix const & gram)
{
    bool found = false;
    enumerate_short_vectors(gram, 2, [&](std::vector<i64> const &, i64 v) { found = found || v == 2; });
    return found;
}

void verify_order(MaximalOrder const & O)
{
    auto const & B = O.algebra;
    if (!O.lattice.contains(qelem(1))) throw std::logic_error("maximal order misses 1");
    for (auto const & x : O.lattice.basis())
        for (auto const & y : O.lattice.basis())
            if (!O.lattice.contains(B.mul(x, y))) throw std::logic_error("order basis is not closed under products");
    RationalMatrix t(4, 4);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s) t(r, s) = B.trd(B.mul(O.lattice[r], O.lattice[s]));
    if (abs(determinant(t)) != rat(O.N * O.N)) throw std::logic_error("order is not maximal");
}

}  // namespace

MaximalOrder maximal_order(i64 N)
{
    if (!is_prime(N)) throw Error(ErrorCode::invalid_parameters, std::to_string(N) + " is not prime");
    MaximalOrder O;
    O.N = N;
    std::vector<QElem> gens{qelem(1)};
    if (N == 2) {
        // Hurwitz order
        O.algebra = {-1, -1};
        gens.push_back(qelem(0, 1, 0, 0));
        gens.push_back(qelem(0, 0, 1, 0));
        gens.push_back(qelem(rat(1, 2), rat(1, 2), rat(1, 2), rat(1, 2)));
    } else if (N % 4 == 3) {
        O.algebra = {-1, -N};
        gens.push_back(qelem(rat(1, 2), 0, rat(1, 2), 0));
        gens.push_back(qelem(0, rat(1, 2), 0, rat(1, 2)));
        gens.push_back(qelem(0, 0, 1, 0));
        gens.push_back(qelem(0, 0, 0, 1));
    } else if (N % 8 == 5) {
        O.algebra = {-2, -N};
        gens.push_back(qelem(rat(1, 2), 0, rat(1, 2), rat(1, 2)));
        gens.push_back(qelem(0, rat(1, 4), rat(1, 2), rat(1, 4)));
        gens.push_back(qelem(0, 0, 1, 0));
        gens.push_back(qelem(0, 0, 0, 1));
    } else {
        i64 q = 3;
        while (!(q % 4 == 3 && is_prime(q) && kronecker(N, q) == -1)) ++q;
        i64 a = 0;
        while ((a * a % q * (N % q) + 1) % q != 0) ++a;
        O.algebra = {-N, -q};
        gens.push_back(qelem(rat(1, 2), 0, rat(1, 2), 0));
        gens.push_back(qelem(0, rat(1, 2), 0, rat(1, 2)));
        gens.push_back(qelem(0, 0, rat(1, q), rat(a, q)));
        gens.push_back(qelem(0, 0, 0, 1));
    }
    O.lattice = QLattice::from_generators(gens);
    verify_order(O);
    return O;
}

IntMatrix norm_gram(MaximalOrder const & O) { return pair_gram(O.algebra, O.lattice, 1); }

Rational ideal_norm(MaximalOrder const & O, QLattice const & I)
{
    Rational const r = I.covolume() / O.lattice.covolume();
    Integer num, den;
    mpz_sqrt(num.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), r.get_den_mpz_t());
    if (Rational(num * num, den * den) != r) throw std::logic_error("ideal index is not a square");
    return make_rational(num, den);
}

bool ideals_equivalent(MaximalOrder const & O, QLattice const & I, QLattice const & J)
{
    return has_unit_vector(pair_lattice_gram(O, J, ideal_norm(O, J), I, ideal_norm(O, I)));
}

namespace {

// Left ideals J in I with I/J of order 4: preimages of the O-stable
// 2-dimensional subspaces of I/2I.
std::vector<QLattice> two_neighbors(MaximalOrder const & O, QLattice const & I)
{
    auto const & B = O.algebra;
    // act[t][a] = coordinates mod 2 (bitmask) of o_t e_a in the basis of I
    std::array<std::array<unsigned, 4>, 4> act{};
    for (std::size_t t = 0; t < 4; ++t)
        for (std::size_t a = 0; a < 4; ++a) {
            auto const c = I.coordinates(B.mul(O.lattice[t], I[a]));
            unsigned mask = 0;
            for (std::size_t b = 0; b < 4; ++b) {
                if (c[b].get_den() != 1) throw std::logic_error("lattice is not a left ideal");
                if (mpz_odd_p(c[b].get_num_mpz_t())) mask |= 1u << b;
            }
            act[t][a] = mask;
        }
    auto apply = [&](std::size_t t, unsigned v) {
        unsigned w = 0;
        for (std::size_t a = 0; a < 4; ++a)
            if (v & (1u << a)) w ^= act[t][a];
        return w;
    };
    std::set<std::array<unsigned, 3>> seen;
    std::vector<QLattice> out;
    for (unsigned u = 1; u < 16; ++u)
        for (unsigned v = u + 1; v < 16; ++v) {
            std::array<unsigned, 3> span{u, v, u ^ v};
            std::sort(span.begin(), span.end());
            if (!seen.insert(span).second) continue;
            bool stable = true;
            for (std::size_t t = 0; t < 4 && stable; ++t)
                for (unsigned x : {u, v}) {
                    unsigned const y = apply(t, x);
                    if (y != 0 && std::find(span.begin(), span.end(), y) == span.end()) stable = false;
                }
            if (!stable) continue;
            std::vector<QElem> gens;
            for (std::size_t a = 0; a < 4; ++a) {
                QElem e = I[a];
                for (auto & c : e) c *= 2;
                gens.push_back(e);
            }
            for (unsigned x : {u, v}) {
                std::vector<i64> coeffs(4, 0);
                for (std::size_t a = 0; a < 4; ++a) coeffs[a] = (x >> a) & 1u;
                gens.push_back(I.combine(coeffs));
            }
            out.push_back(QLattice::from_generators(gens));
        }
    return out;
}

i64 unit_count(MaximalOrder const & O, QLattice const & I, Rational const & nI)
{
    auto const counts = count_by_value(pair_lattice_gram(O, I, nI, I, nI), 2);
    return counts[2];
}

}  // namespace

BrandtModule::BrandtModule(i64 N, i64 M_max, std::vector<QLattice> ideals, std::vector<i64> weights,
                           std::vector<SmallMatrix> matrices)
    : order_(maximal_order(N))
    , M_max_(M_max)
    , ideals_(std::move(ideals))
    , weights_(std::move(weights))
    , B_(std::move(matrices))
{
    std::size_t const n = ideals_.size();
    if (weights_.size() != n || static_cast<i64>(B_.size()) != M_max_)
        throw Error(ErrorCode::dimension_mismatch, "BrandtModule: inconsistent sizes");
    for (auto const & b : B_) {
        if (b.size() != n) throw Error(ErrorCode::dimension_mismatch, "BrandtModule: matrix has wrong size");
        for (auto const & row : b)
            if (row.size() != n) throw Error(ErrorCode::dimension_mismatch, "BrandtModule: matrix has wrong size");
    }
    for (auto const & I : ideals_) norms_.push_back(ideal_norm(order_, I));
}

SmallMatrix const & BrandtModule::B(i64 m) const
{
    if (m < 1 || m > M_max_) throw std::out_of_range("BrandtModule::B: m outside [1, M_max]");
    return B_[static_cast<std::size_t>(m - 1)];
}

RationalMatrix BrandtModule::hecke_matrix(i64 m) const
{
    auto const & b = B(m);
    RationalMatrix t(size(), size());
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) t(j, i) = rat(b[i][j]);
    return t;
}

RationalVector BrandtModule::hecke(i64 m, RationalVector const & x) const
{
    if (x.size() != size()) throw Error(ErrorCode::dimension_mismatch, "hecke: vector length");
    auto const & b = B(m);
    RationalVector y(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < size(); ++j) y[j] += x[i] * rat(b[i][j]);
    }
    return y;
}

Rational BrandtModule::mass() const
{
    Rational s = 0;
    for (i64 w : weights_) s += rat(1, w);
    return s;
}

RationalVector BrandtModule::eisenstein() const
{
    RationalVector e;
    for (i64 w : weights_) e.push_back(rat(1, w));
    return e;
}

QLattice BrandtModule::right_order(std::size_t j) const
{
    auto const & B = order_.algebra;
    return lattice_scale(lattice_product(B, lattice_conjugate(B, ideals_[j]), ideals_[j]), 1 / norms_[j]);
}

BrandtModule build_module(i64 N, i64 M_max, BrandtOptions const & options)
{
    if (M_max < 1) throw Error(ErrorCode::invalid_parameters, "M_max must be >= 1");
    MaximalOrder const O = maximal_order(N);
    Rational const target = make_rational(N - 1, 12);

    std::vector<QLattice> ideals{O.lattice};
    std::vector<Rational> norms{1};
    std::vector<i64> weights{unit_count(O, O.lattice, 1) / 2};
    Rational mass = rat(1, weights[0]);
    std::deque<std::size_t> queue{0};
    i64 examined = 0;
    while (mass < target) {
        if (queue.empty()) throw std::logic_error("class search exhausted the 2-neighbor graph below the mass");
        std::size_t const cur = queue.front();
        queue.pop_front();
        for (auto const & J : two_neighbors(O, ideals[cur])) {
            if (++examined > options.max_ideals)
                throw Error(ErrorCode::enumeration_bound,
                            "ideal class search for N = " + std::to_string(N) + " exceeded " +
                                std::to_string(options.max_ideals) + " candidates");
            Rational const nJ = ideal_norm(O, J);
            bool known = false;
            for (std::size_t c = 0; c < ideals.size() && !known; ++c)
                known = has_unit_vector(pair_lattice_gram(O, J, nJ, ideals[c], norms[c]));
            if (known) continue;
            ideals.push_back(J);
            norms.push_back(nJ);
            weights.push_back(unit_count(O, J, nJ) / 2);
            mass += rat(1, weights.back());
            queue.push_back(ideals.size() - 1);
            if (mass >= target) break;
        }
    }
    if (mass != target) throw std::logic_error("class search overshot the mass formula");

    std::size_t const n = ideals.size();
    std::vector<SmallMatrix> B(static_cast<std::size_t>(M_max), SmallMatrix(n, std::vector<i64>(n, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i; k < n; ++k) {
            auto const counts = count_by_value(pair_lattice_gram(O, ideals[i], norms[i], ideals[k], norms[k]), 2 * M_max);
            for (i64 m = 1; m <= M_max; ++m) {
                i64 const c = counts[static_cast<std::size_t>(2 * m)];
                auto & Bm = B[static_cast<std::size_t>(m - 1)];
                if (c % (2 * weights[k]) != 0 || c % (2 * weights[i]) != 0)
                    throw std::logic_error("Brandt entry is not integral");
                Bm[i][k] = c / (2 * weights[k]);
                Bm[k][i] = c / (2 * weights[i]);
            }
        }
    return BrandtModule(N, M_max, std::move(ideals), std::move(weights), std::move(B));
}

GrossPointVector gross_points(BrandtModule const & M, ClassGroup const & G)
{
    i64 const D = G.D();
    i64 const N = M.N();
    if (D % N == 0 || kronecker(-D, N) != -1)
        throw Error(ErrorCode::precondition_violated, "N must be inert in Q(sqrt(-D))");
    GrossPointVector out;
    out.D = D;
    i64 const target = (1 + D) / 2;  // 2 nrd(alpha)
    auto const & B = M.order().algebra;
    for (std::size_t j = 0; j < M.size(); ++j) {
        QLattice const R = M.right_order(j);
        auto const red = lll_gram(pair_gram(B, R, 1));
        auto const gram = to_small(red.gram);
        i64 roots = 0;
        enumerate_short_vectors(gram, target, [&](std::vector<i64> const & x, i64 v) {
            if (v != target) return;
            std::vector<i64> coeffs(4, 0);
            for (std::size_t a = 0; a < 4; ++a)
                for (std::size_t b = 0; b < 4; ++b) coeffs[b] += x[a] * red.transform[a][b].get_si();
            if (B.trd(R.combine(coeffs)) == 1) ++roots;
        });
        i64 const num = roots * G.u();
        i64 const den = 2 * M.weights()[j];
        if (num % den != 0) throw std::logic_error("Gross point count is not integral");
        out.roots.push_back(roots);
        out.c.push_back(num / den);
    }
    if (std::accumulate(out.c.begin(), out.c.end(), i64{0}) != G.h())
        throw std::logic_error("Gross points do not sum to the class number");
    return out;
}

Rational height_pairing(BrandtModule const & M, RationalVector const & x, RationalVector const & y)
{
    if (x.size() != M.size() || y.size() != M.size())
        throw Error(ErrorCode::dimension_mismatch, "height_pairing: vectors must have one entry per class");
    Rational s = 0;
    for (std::size_t j = 0; j < M.size(); ++j) s += rat(M.weights()[j]) * x[j] * y[j];
    return s;
}

namespace {

RationalVector to_vector(std::vector<i64> const & c)
{
    RationalVector v;
    for (i64 x : c) v.push_back(rat(x));
    return v;
}

}  // namespace

AverageComparison verify_average(BrandtModule const & M, ClassGroup const & G, GrossPointVector const & c, i64 m)
{
    i64 const N = M.N();
    if (m < 1 || m > M.M_max()) throw Error(ErrorCode::precondition_violated, "m outside the module's range");
    if (m % N == 0) throw Error(ErrorCode::precondition_violated, "m must be prime to N");
    AverageComparison r;
    r.m = m;
    RationalVector const cv = to_vector(c.c);
    r.left = height_pairing(M, cv, M.hecke(m, cv));

    i64 const D = G.D(), h = G.h(), u = G.u();
    auto const aux = auxiliary_prime(G, N, m);
    Rational nsum = 0;
    for (i64 n = 1; n * N <= m * D; ++n) {
        Rational inner = 0;
        for (int A = 0; A < h; ++A) {
            Rational const rA = r_class(G, A, m * D - n * N);
            if (rA != 0) inner += rA * rat(R_braced(G, G.op(aux.Q_class, A), n));
        }
        nsum += rat(num_divisors(std::gcd(n, D))) * inner;
    }
    r.right = rat(u * h) * R_total(G, m) + rat(u * u) * nsum;
    r.eisenstein = make_rational(12 * h * h * sigma_coprime(N, m), N - 1);
    r.cusp = r.left - r.eisenstein;
    r.equal = r.left == r.right;
    return r;
}

AverageComparison verify_average(BrandtModule const & M, ClassGroup const & G, i64 m)
{
    return verify_average(M, G, gross_points(M, G), m);
}

namespace {

std::vector<Rational> integer_roots(RationalPoly const & p, i64 bound)
{
    std::vector<Rational> roots;
    for (i64 x = -bound; x <= bound; ++x)
        if (poly_eval(p, rat(x)) == 0) roots.push_back(rat(x));
    return roots;
}

std::vector<RationalVector> lift(std::vector<RationalVector> const & basis, std::vector<RationalVector> const & coords)
{
    std::vector<RationalVector> out;
    for (auto const & c : coords) {
        RationalVector v(basis.front().size(), 0);
        for (std::size_t t = 0; t < c.size(); ++t)
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[t] * basis[t][i];
        out.push_back(std::move(v));
    }
    return out;
}

RationalVector primitive(RationalVector v)
{
    Integer L = 1, g = 0;
    for (auto const & x : v) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
    for (auto & x : v) {
        x *= Rational(L);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    Rational s = (g == 0) ? Rational(1) : Rational(1) / Rational(g);
    for (auto const & x : v)
        if (x != 0) {
            if (x < 0) s = -s;
            break;
        }
    for (auto & x : v) x *= s;
    return v;
}

}  // namespace

EigenSplit eigen_split(BrandtModule const & M)
{
    EigenSplit out;
    out.eisenstein = M.eisenstein();
    std::size_t const n = M.size();
    if (n < 2) return out;
    // cusp space: sum_j x_j = 0
    std::vector<RationalVector> cusp;
    for (std::size_t j = 1; j < n; ++j) {
        RationalVector v(n, 0);
        v[0] = 1;
        v[j] = -1;
        cusp.push_back(std::move(v));
    }
    std::vector<i64> primes;
    for (i64 p : primes_in(2, M.M_max()))
        if (p != M.N()) primes.push_back(p);

    std::vector<std::vector<RationalVector>> pending{cusp}, done;
    i64 last_p = 0;
    for (i64 p : primes) {
        RationalMatrix const T = M.hecke_matrix(p);
        std::vector<std::vector<RationalVector>> next;
        for (auto const & V : pending) {
            if (V.size() == 1) {
                done.push_back(V);
                continue;
            }
            RationalMatrix const A = restrict_to(T, V);
            RationalPoly g = characteristic_polynomial(A);
            for (auto const & lambda : integer_roots(g, sigma_coprime(M.N(), p))) {
                while (g.size() > 1 && poly_eval(g, lambda) == 0) g = poly_divide_linear(g, lambda);
                RationalMatrix shifted = A;
                for (std::size_t i = 0; i < V.size(); ++i) shifted(i, i) -= lambda;
                next.push_back(lift(V, nullspace(shifted)));
            }
            if (g.size() > 1) {
                auto const W = lift(V, nullspace(poly_eval(g, A)));
                out.residual.push_back({W, p, characteristic_polynomial(restrict_to(T, W))});
            }
        }
        pending = std::move(next);
        last_p = p;
    }
    for (auto & V : pending) {
        if (V.size() == 1) {
            done.push_back(std::move(V));
        } else {
            RationalPoly cp;
            if (last_p != 0) cp = characteristic_polynomial(restrict_to(M.hecke_matrix(last_p), V));
            out.residual.push_back({V, last_p, cp});
        }
    }
    for (auto const & V : done) {
        HeckeEigenvector f;
        f.vector = primitive(V.front());
        for (i64 p : primes) {
            auto const Tf = M.hecke(p, f.vector);
            std::size_t i = 0;
            while (f.vector[i] == 0) ++i;
            f.eigenvalues.emplace_back(p, Tf[i] / f.vector[i]);
        }
        out.cuspidal.push_back(std::move(f));
    }
    std::sort(out.cuspidal.begin(), out.cuspidal.end(),
              [](HeckeEigenvector const & a, HeckeEigenvector const & b) { return a.eigenvalues < b.eigenvalues; });
    return out;
}

Rational central_value_ratio(BrandtModule const & M, ClassGroup const & G, GrossPointVector const & c,
                             RationalVector const & f)
{
    if (f.size() != M.size()) throw Error(ErrorCode::dimension_mismatch, "central_value_ratio: vector length");
    Rational s = 0;
    for (auto const & x : f) s += x;
    if (s != 0) throw Error(ErrorCode::not_cuspidal, "vector has an Eisenstein component");
    Rational const ff = height_pairing(M, f, f);
    if (ff == 0) throw Error(ErrorCode::not_cuspidal, "zero vector");
    Rational const cf = height_pairing(M, to_vector(c.c), f);
    i64 const u = G.u();
    return cf * cf / ff / rat(u * u);
}

Rational central_value_ratio(BrandtModule const & M, ClassGroup const & G, RationalVector const & f)
{
    return central_value_ratio(M, G, gross_points(M, G), f);
}

}  // namespace rsavg
