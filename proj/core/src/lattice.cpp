#include "rsavg/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace rsavg {

IntMatrix hnf_basis(IntMatrix rows)
{
    if (rows.empty()) return {};
    std::size_t const ncols = rows.front().size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
        // Euclid down the column until one nonzero entry remains below pivot_row.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
                for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= q * rows[pivot_row][c];
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        if (pivot_row < rows.size() && rows[pivot_row][col] != 0) {
            if (rows[pivot_row][col] < 0)
                for (auto & x : rows[pivot_row]) x = -x;
            for (std::size_t r = 0; r < pivot_row; ++r) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[pivot_row][col].get_mpz_t());
                for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= q * rows[pivot_row][c];
            }
            ++pivot_row;
        }
    }
    rows.resize(pivot_row);
    return rows;
}

namespace {

IntMatrix congruence(IntMatrix const & T, IntMatrix const & G)
{
    std::size_t const n = G.size();
    IntMatrix TG(n, std::vector<Integer>(n, 0)), out(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (T[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) TG[i][j] += T[i][k] * G[k][j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[i][j] += TG[i][k] * T[j][k];
    return out;
}

Integer round_nearest(Rational const & x)
{
    Rational const y = x + Rational(1, 2);
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
    return r;
}

}  // namespace

LLLResult lll_gram(IntMatrix const & gram)
{
    std::size_t const n = gram.size();
    IntMatrix T(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) T[i][i] = 1;
    IntMatrix G = gram;
    std::size_t k = 1;
    std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n, 0));
    std::vector<Rational> Bs(n, 0);
    auto gso = [&]() {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                Rational s = Rational(G[i][j]);
                for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * Bs[l];
                mu[i][j] = s / Bs[j];
            }
            Rational s = Rational(G[i][i]);
            for (std::size_t l = 0; l < i; ++l) s -= mu[i][l] * mu[i][l] * Bs[l];
            Bs[i] = s;
        }
    };
    while (n > 1 && k < n) {
        gso();
        for (std::size_t jj = k; jj-- > 0;) {
            Integer const r = round_nearest(mu[k][jj]);
            if (r == 0) continue;
            for (std::size_t c = 0; c < n; ++c) T[k][c] -= r * T[jj][c];
            G = congruence(T, gram);
            gso();
        }
        if (Bs[k] < (Rational(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * Bs[k - 1]) {
            std::swap(T[k], T[k - 1]);
            G = congruence(T, gram);
            k = k > 1 ? k - 1 : 1;
        } else {
            ++k;
        }
    }
    return {congruence(T, gram), T};
}

SmallMatrix to_small(IntMatrix const & m)
{
    SmallMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto const & x : m[i]) {
            if (!x.fits_slong_p()) throw std::overflow_error("to_small: entry too large");
            out[i].push_back(x.get_si());
        }
    return out;
}

void enumerate_short_vectors(SmallMatrix const & gram, i64 bound,
                             std::function<void(std::vector<i64> const &, i64)> const & visit)
{
    std::size_t const n = gram.size();
    if (n == 0 || bound <= 0) return;
    // Q(x) = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)^2
    std::vector<std::vector<long double>> q(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q[i][j] = static_cast<long double>(gram[i][j]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
        if (q[i][i] <= 0) throw std::domain_error("enumerate_short_vectors: form is not positive definite");
    }
    long double const eps = 1e-9L * (1 + static_cast<long double>(bound));
    std::vector<i64> x(n, 0);
    auto exact_value = [&]() {
        __int128 v = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v += static_cast<__int128>(gram[i][j]) * x[i] * x[j];
        return v;
    };
    std::function<void(std::size_t, long double)> rec = [&](std::size_t i, long double remaining) {
        long double c = 0;
        for (std::size_t j = i + 1; j < n; ++j) c -= q[i][j] * static_cast<long double>(x[j]);
        long double const r = std::sqrt(std::max(remaining, 0.0L) / q[i][i]);
        auto const lo = static_cast<i64>(std::ceil(c - r - 1e-9L));
        auto const hi = static_cast<i64>(std::floor(c + r + 1e-9L));
        for (i64 xi = lo; xi <= hi; ++xi) {
            x[i] = xi;
            long double const d = static_cast<long double>(xi) - c;
            long double const t = q[i][i] * d * d;
            if (t > remaining + eps) continue;
            if (i == 0) {
                __int128 const v = exact_value();
                if (v > 0 && v <= bound) visit(x, static_cast<i64>(v));
            } else {
                rec(i - 1, remaining - t);
            }
        }
        x[i] = 0;
    };
    rec(n - 1, static_cast<long double>(bound) + eps);
}

std::vector<i64> count_by_value(SmallMatrix const & gram, i64 bound)
{
    std::vector<i64> counts(static_cast<std::size_t>(std::max<i64>(bound, 0)) + 1, 0);
    enumerate_short_vectors(gram, bound, [&](std::vector<i64> const &, i64 v) { ++counts[static_cast<std::size_t>(v)]; });
    return counts;
}

}  // namespace rsavg
