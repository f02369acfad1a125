#include "rsavg/repnum.hpp"

#include <stdexcept>

#include "rsavg/error.hpp"

namespace rsavg {

i64 form_representations(ReducedForm const & f, i64 D, i64 m)
{
    if (m < 0) throw std::invalid_argument("form_representations: m < 0");
    if (m == 0) return 1;
    // 4 a f(x, y) = (2 a x + b y)^2 + D y^2
    i64 count = 0;
    i64 const bound = 4 * f.a * m;
    for (i64 y = 0; D * y * y <= bound; ++y) {
        i64 const disc = bound - D * y * y;  // (2 a x + b y)^2
        i64 s = 0;
        if (!is_perfect_square(disc, s)) continue;
        int const mult = (y == 0) ? 1 : 2;  // (x, y) and (-x, -y)
        for (i64 t : {s, -s}) {
            i64 const num = t - f.b * y;
            if (num % (2 * f.a) == 0) count += mult;
            if (s == 0) break;
        }
    }
    return count;
}

Rational r_class(ClassGroup const & G, int A, i64 m)
{
    if (m < 0) throw std::invalid_argument("r_class: m < 0");
    if (m == 0) return make_rational(1, 2 * G.u());
    return make_rational(form_representations(G.form(A), G.D(), m), G.w());
}

CyclotomicValue r_psi(ClassGroup const & G, ClassCharacter const & psi, i64 m)
{
    if (m == 0)
        return CyclotomicValue::embed(psi.is_trivial() ? make_rational(G.h(), 2 * G.u()) : Rational(0), psi.order());
    CyclotomicValue acc(psi.order());
    for (int A = 0; A < G.h(); ++A) acc += psi.value(A) * r_class(G, A, m);
    return acc;
}

Rational R_total(ClassGroup const & G, i64 m)
{
    if (m == 0) return make_rational(G.h(), 2 * G.u());
    Rational s = 0;
    for (int A = 0; A < G.h(); ++A) s += r_class(G, A, m);
    return s;
}

i64 sigma_N(i64 N, i64 m) { return sigma_coprime(N, m); }

CyclotomicValue theta_coefficient(ClassGroup const & G, ClassCharacter const & psi, i64 m)
{
    CyclotomicValue acc(psi.order());
    for (int A = 0; A < G.h(); ++A) acc += psi.value(A).conj() * r_class(G, A, m);
    return acc;
}

std::vector<Integer> ideal_counts_by_class(ClassGroup const & G, i64 m, Orientation orientation)
{
    if (m < 1) throw std::invalid_argument("ideal_counts_by_class: m must be >= 1");
    auto const D = G.discriminant();
    int const h = G.h();
    std::vector<Integer> dist(static_cast<std::size_t>(h), 0);
    dist[static_cast<std::size_t>(G.identity())] = 1;
    for (auto const & [p, e] : factorize(m)) {
        // class distribution of the ideals of norm p^e
        std::vector<Integer> local(static_cast<std::size_t>(h), 0);
        switch (splitting_type(D, p)) {
        case Splitting::inert:
            if (e % 2 == 1) return std::vector<Integer>(static_cast<std::size_t>(h), 0);
            local[static_cast<std::size_t>(G.identity())] = 1;
            break;
        case Splitting::ramified: {
            int const P = G.prime_ideal_class(p);
            local[static_cast<std::size_t>(G.power(P, e))] = 1;
            break;
        }
        case Splitting::split: {
            int const P = G.prime_ideal_class(p);
            // P^i Pbar^(e-i) has class P^(2i - e)
            for (int i = 0; i <= e; ++i) local[static_cast<std::size_t>(G.power(P, 2 * i - e))] += 1;
            break;
        }
        }
        std::vector<Integer> next(static_cast<std::size_t>(h), 0);
        for (int x = 0; x < h; ++x) {
            if (dist[static_cast<std::size_t>(x)] == 0) continue;
            for (int y = 0; y < h; ++y)
                next[static_cast<std::size_t>(G.op(x, y))] +=
                    dist[static_cast<std::size_t>(x)] * local[static_cast<std::size_t>(y)];
        }
        dist = std::move(next);
    }
    if (orientation == Orientation::inverse) {
        std::vector<Integer> flipped(static_cast<std::size_t>(h), 0);
        for (int x = 0; x < h; ++x) flipped[static_cast<std::size_t>(G.inverse(x))] = dist[static_cast<std::size_t>(x)];
        dist = std::move(flipped);
    }
    return dist;
}

Rational r_class_oracle(ClassGroup const & G, int A, i64 m, Orientation orientation)
{
    if (m < 0) throw std::invalid_argument("r_class_oracle: m < 0");
    if (m == 0) return make_rational(1, 2 * G.u());
    return Rational(ideal_counts_by_class(G, m, orientation)[static_cast<std::size_t>(A)]);
}

RepTable::RepTable(std::shared_ptr<ClassGroup const> group, i64 M_max)
    : group_(std::move(group))
    , M_max_(M_max)
{
    if (M_max_ < 0) throw std::invalid_argument("RepTable: M_max < 0");
    rows_.resize(static_cast<std::size_t>(group_->h()));
    for (int A = 0; A < group_->h(); ++A) {
        auto & row = rows_[static_cast<std::size_t>(A)];
        row.reserve(static_cast<std::size_t>(M_max_) + 1);
        for (i64 m = 0; m <= M_max_; ++m) row.push_back(r_class(*group_, A, m));
    }
}

RepTable::RepTable(std::shared_ptr<ClassGroup const> group, i64 M_max, std::vector<std::vector<Rational>> rows)
    : group_(std::move(group))
    , M_max_(M_max)
    , rows_(std::move(rows))
{
    if (static_cast<int>(rows_.size()) != group_->h())
        throw Error(ErrorCode::dimension_mismatch, "RepTable: one row per class expected");
    for (auto const & row : rows_)
        if (static_cast<i64>(row.size()) != M_max_ + 1)
            throw Error(ErrorCode::dimension_mismatch, "RepTable: row length must be M_max + 1");
}

Rational const & RepTable::r(int A, i64 m) const
{
    if (m < 0 || m > M_max_) throw std::out_of_range("RepTable: m outside [0, M_max]");
    return rows_.at(static_cast<std::size_t>(A))[static_cast<std::size_t>(m)];
}

Rational RepTable::R(i64 m) const
{
    if (m == 0) return make_rational(group_->h(), 2 * group_->u());
    Rational s = 0;
    for (int A = 0; A < group_->h(); ++A) s += r(A, m);
    return s;
}

CyclotomicValue RepTable::r_psi(ClassCharacter const & psi, i64 m) const
{
    if (m == 0)
        return CyclotomicValue::embed(psi.is_trivial() ? make_rational(group_->h(), 2 * group_->u()) : Rational(0),
                                      psi.order());
    CyclotomicValue acc(psi.order());
    for (int A = 0; A < group_->h(); ++A) acc += psi.value(A) * r(A, m);
    return acc;
}

}  // namespace rsavg
