#include "rsavg/quadfield.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "rsavg/error.hpp"

namespace rsavg {

namespace {

i64 floor_div(i64 a, i64 b)
{
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

FundamentalDiscriminant FundamentalDiscriminant::validate(i64 D)
{
    if (D <= 0) throw Error(ErrorCode::not_fundamental, "D must be positive, got " + std::to_string(D));
    if (D % 2 == 0) throw Error(ErrorCode::not_fundamental, std::to_string(D) + " is even");
    if (D % 4 != 3) throw Error(ErrorCode::not_fundamental, std::to_string(D) + " is not 3 mod 4");
    if (!is_squarefree(D)) throw Error(ErrorCode::not_fundamental, std::to_string(D) + " is not squarefree");
    return FundamentalDiscriminant(D);
}

bool FundamentalDiscriminant::is_valid(i64 D)
{
    return D > 0 && D % 4 == 3 && is_squarefree(D);
}

bool ReducedForm::is_reduced() const
{
    if (a <= 0) return false;
    if (std::abs(b) > a || a > c) return false;
    if ((std::abs(b) == a || a == c) && b < 0) return false;
    return true;
}

std::string ReducedForm::to_string() const
{
    std::ostringstream os;
    os << "(" << a << "," << b << "," << c << ")";
    return os.str();
}

ReducedForm reduce_form(i64 a, i64 b, i64 c)
{
    if (a <= 0 || c <= 0 || b * b - 4 * a * c >= 0)
        throw Error(ErrorCode::invalid_parameters, "reduce_form: form is not positive definite");
    for (;;) {
        // x -> x + k y brings b into (-a, a]
        i64 const k = floor_div(a - b, 2 * a);
        c = a * k * k + b * k + c;
        b = b + 2 * a * k;
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        if (a == c && b < 0) b = -b;
        return {a, b, c};
    }
}

ReducedForm compose(ReducedForm const & f, ReducedForm const & g)
{
    i64 const disc = f.discriminant();
    if (disc != g.discriminant())
        throw Error(ErrorCode::discriminant_mismatch,
                    f.to_string() + " and " + g.to_string() + " have different discriminants");
    i64 const s = (f.b + g.b) / 2;
    auto const g1 = ext_gcd(f.a, g.a);
    auto const g2 = ext_gcd(g1.g, s);
    i64 const e = g2.g;
    i64 const v = g2.x * g1.y;
    i64 const w = g2.y;
    i64 const A = (f.a / e) * (g.a / e);
    __int128 B = static_cast<__int128>(g.b) +
                 static_cast<__int128>(2) * (g.a / e) *
                     (static_cast<__int128>(v) * (s - g.b) - static_cast<__int128>(w) * g.c);
    __int128 const twoA = 2 * static_cast<__int128>(A);
    B %= twoA;
    if (B < 0) B += twoA;
    if (B > A) B -= twoA;
    __int128 const num = B * B - disc;
    if (num % (4 * static_cast<__int128>(A)) != 0)
        throw std::logic_error("compose: non-integral third coefficient");
    i64 const C = static_cast<i64>(num / (4 * static_cast<__int128>(A)));
    return reduce_form(A, static_cast<i64>(B), C);
}

const char * to_string(Splitting s)
{
    switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::ramified: return "ramified";
    }
    return "?";
}

Splitting splitting_type(FundamentalDiscriminant D, i64 p)
{
    if (!is_prime(p)) throw Error(ErrorCode::invalid_parameters, std::to_string(p) + " is not prime");
    int const k = kronecker(-D.value(), p);
    if (k == 0) return Splitting::ramified;
    return k > 0 ? Splitting::split : Splitting::inert;
}

std::vector<ReducedForm> reduced_forms(i64 D)
{
    std::vector<ReducedForm> out;
    for (i64 a = 1; 3 * a * a <= D; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            if ((b & 1) != (D & 1)) continue;
            i64 const num = b * b + D;
            if (num % (4 * a) != 0) continue;
            ReducedForm f{a, b, num / (4 * a)};
            if (!f.is_reduced()) continue;
            if (std::gcd(std::gcd(f.a, f.b), f.c) != 1) continue;
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end(), [](ReducedForm const & x, ReducedForm const & y) {
        if (x.a != y.a) return x.a < y.a;
        if (std::abs(x.b) != std::abs(y.b)) return std::abs(x.b) < std::abs(y.b);
        return x.b > y.b;
    });
    return out;
}

ClassGroup::ClassGroup(FundamentalDiscriminant D)
    : ClassGroup(D, reduced_forms(D.value()))
{
}

ClassGroup::ClassGroup(FundamentalDiscriminant D, std::vector<ReducedForm> forms)
    : D_(D)
    , forms_(std::move(forms))
{
    if (forms_.empty() || forms_.front().a != 1)
        throw Error(ErrorCode::invalid_parameters, "class group must list the principal form first");
    for (auto const & f : forms_)
        if (!f.is_reduced() || f.discriminant() != -D_.value())
            throw Error(ErrorCode::discriminant_mismatch, "form " + f.to_string() + " is not a reduced form of disc -" +
                                                              std::to_string(D_.value()));
    build_table();
}

void ClassGroup::build_table()
{
    int const n = h();
    std::map<ReducedForm, int> index;
    for (int i = 0; i < n; ++i) index.emplace(forms_[static_cast<std::size_t>(i)], i);
    if (static_cast<int>(index.size()) != n) throw Error(ErrorCode::invalid_parameters, "duplicate forms");
    table_.assign(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            auto it = index.find(compose(form(i), form(j)));
            if (it == index.end()) throw std::logic_error("composition left the form list");
            table_[static_cast<std::size_t>(i * n + j)] = it->second;
            table_[static_cast<std::size_t>(j * n + i)] = it->second;
        }
    inverse_.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (op(i, j) == 0) inverse_[static_cast<std::size_t>(i)] = j;
    order_.assign(static_cast<std::size_t>(n), 0);
    exponent_ = 1;
    for (int i = 0; i < n; ++i) {
        int x = i, k = 1;
        while (x != 0) {
            x = op(x, i);
            ++k;
        }
        order_[static_cast<std::size_t>(i)] = k;
        exponent_ = std::lcm(exponent_, k);
    }
}

int ClassGroup::power(int i, i64 n) const
{
    i64 const o = order_of(i);
    n = mod_floor(n, o);
    int r = identity();
    for (i64 k = 0; k < n; ++k) r = op(r, i);
    return r;
}

int ClassGroup::index_of(i64 a, i64 b, i64 c) const
{
    if (b * b - 4 * a * c != -D())
        throw Error(ErrorCode::discriminant_mismatch, "form has discriminant " + std::to_string(b * b - 4 * a * c));
    ReducedForm const f = reduce_form(a, b, c);
    for (int i = 0; i < h(); ++i)
        if (forms_[static_cast<std::size_t>(i)] == f) return i;
    throw std::logic_error("reduced form missing from class group");
}

int ClassGroup::prime_ideal_class(i64 p) const
{
    if (!is_prime(p)) throw Error(ErrorCode::invalid_parameters, std::to_string(p) + " is not prime");
    i64 const D = this->D();
    if (p == 2) {
        if (mod_floor(-D, 8) != 1) throw Error(ErrorCode::invalid_parameters, "2 is not split");
        return index_of(2, 1, (1 + D) / 8);
    }
    if (D % p == 0) return index_of(p, p, (p * p + D) / (4 * p));
    i64 const target = mod_floor(-D, p);
    for (i64 r = 0; r < p; ++r) {
        if (static_cast<i64>((static_cast<__int128>(r) * r) % p) != target) continue;
        i64 const b = (r % 2 == 1) ? r : r + p;
        return index_of(p, b, (b * b + D) / (4 * p));
    }
    throw Error(ErrorCode::invalid_parameters, std::to_string(p) + " is inert");
}

ClassGroup class_group(FundamentalDiscriminant D) { return ClassGroup(D); }

ClassCharacter::ClassCharacter(std::shared_ptr<ClassGroup const> group, std::vector<i64> exponents)
    : group_(std::move(group))
    , exponents_(std::move(exponents))
{
    if (static_cast<int>(exponents_.size()) != group_->h())
        throw std::invalid_argument("character needs one exponent per class");
}

CyclotomicValue ClassCharacter::value(int A) const
{
    return CyclotomicValue::root_of_unity(order(), exponents_[static_cast<std::size_t>(A)]);
}

bool ClassCharacter::is_trivial() const
{
    return std::all_of(exponents_.begin(), exponents_.end(), [](i64 k) { return k == 0; });
}

bool ClassCharacter::is_real() const
{
    i64 const e = order();
    return std::all_of(exponents_.begin(), exponents_.end(), [e](i64 k) { return (2 * k) % e == 0; });
}

ClassCharacter ClassCharacter::conj() const
{
    std::vector<i64> ks = exponents_;
    for (auto & k : ks) k = mod_floor(-k, order());
    return ClassCharacter(group_, std::move(ks));
}

std::vector<ClassCharacter> characters(std::shared_ptr<ClassGroup const> const & G)
{
    int const n = G->h();
    i64 const e = G->exponent();

    // greedy generating set
    std::vector<int> gens;
    std::set<int> span{G->identity()};
    for (int x = 0; x < n && static_cast<int>(span.size()) < n; ++x) {
        if (span.count(x)) continue;
        gens.push_back(x);
        std::deque<int> queue(span.begin(), span.end());
        while (!queue.empty()) {
            int const y = queue.front();
            queue.pop_front();
            for (int g : gens) {
                int const z = G->op(y, g);
                if (span.insert(z).second) queue.push_back(z);
            }
        }
    }

    std::vector<ClassCharacter> out;
    std::vector<i64> choice(gens.size(), 0);
    auto try_assignment = [&]() {
        std::vector<i64> val(static_cast<std::size_t>(n), -1);
        val[0] = 0;
        std::deque<int> queue{0};
        while (!queue.empty()) {
            int const y = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                int const z = G->op(y, gens[i]);
                i64 const v = mod_floor(val[static_cast<std::size_t>(y)] + choice[i], e);
                auto & slot = val[static_cast<std::size_t>(z)];
                if (slot < 0) {
                    slot = v;
                    queue.push_back(z);
                } else if (slot != v) {
                    return;
                }
            }
        }
        out.emplace_back(G, std::move(val));
    };
    // each generator of order o takes values in (e/o) Z / e Z
    auto recurse = [&](auto && self, std::size_t i) -> void {
        if (i == gens.size()) {
            try_assignment();
            return;
        }
        i64 const step = e / G->order_of(gens[i]);
        for (i64 k = 0; k < e; k += step) {
            choice[i] = k;
            self(self, i + 1);
        }
    };
    recurse(recurse, 0);

    std::sort(out.begin(), out.end(), [](ClassCharacter const & x, ClassCharacter const & y) {
        return x.exponents() < y.exponents();
    });
    if (static_cast<int>(out.size()) != n) throw std::logic_error("character enumeration found wrong count");
    return out;
}

std::vector<int> square_classes(ClassGroup const & G)
{
    std::set<int> sq;
    for (int i = 0; i < G.h(); ++i) sq.insert(G.op(i, i));
    return {sq.begin(), sq.end()};
}

}  // namespace rsavg
