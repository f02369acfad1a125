#include "rsavg/serialize.hpp"

#include <json.hpp>

#include "rsavg/error.hpp"

namespace rsavg {

using nlohmann::json;

namespace {

json rationals(std::vector<Rational> const & v)
{
    json a = json::array();
    for (auto const & x : v) a.push_back(to_string(x));
    return a;
}

std::vector<Rational> parse_rationals(json const & a)
{
    std::vector<Rational> v;
    for (auto const & x : a) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

json rows_json(std::vector<std::vector<Rational>> const & rows)
{
    json a = json::array();
    for (auto const & r : rows) a.push_back(rationals(r));
    return a;
}

std::vector<std::vector<Rational>> parse_rows(json const & a)
{
    std::vector<std::vector<Rational>> rows;
    for (auto const & r : a) rows.push_back(parse_rationals(r));
    return rows;
}

template <class F>
auto guarded(F && f) -> decltype(f())
{
    try {
        return f();
    } catch (Error const &) {
        throw;
    } catch (std::exception const & e) {
        throw Error(ErrorCode::cache_corrupt, e.what());
    }
}

}  // namespace

const char * to_string(Orientation o) { return o == Orientation::direct ? "direct" : "inverse"; }

Orientation parse_orientation(std::string const & s)
{
    if (s == "direct") return Orientation::direct;
    if (s == "inverse") return Orientation::inverse;
    throw Error(ErrorCode::bad_input, "orientation must be 'direct' or 'inverse', got '" + s + "'");
}

std::string serialize(ClassGroup const & G)
{
    json forms = json::array();
    for (auto const & f : G.elements()) forms.push_back({f.a, f.b, f.c});
    return json{{"D", G.D()}, {"forms", forms}}.dump();
}

std::shared_ptr<ClassGroup const> deserialize_class_group(std::string const & payload)
{
    return guarded([&] {
        json const j = json::parse(payload);
        std::vector<ReducedForm> forms;
        for (auto const & f : j.at("forms")) forms.push_back({f.at(0).get<i64>(), f.at(1).get<i64>(), f.at(2).get<i64>()});
        return std::make_shared<ClassGroup const>(FundamentalDiscriminant::validate(j.at("D").get<i64>()), forms);
    });
}

std::string serialize(RepTable const & T)
{
    return json{{"D", T.group().D()}, {"M_max", T.M_max()}, {"rows", rows_json(T.rows())}}.dump();
}

RepTable deserialize_rep_table(std::string const & payload, std::shared_ptr<ClassGroup const> group)
{
    return guarded([&] {
        json const j = json::parse(payload);
        if (j.at("D").get<i64>() != group->D()) throw Error(ErrorCode::cache_corrupt, "rep table for another D");
        return RepTable(group, j.at("M_max").get<i64>(), parse_rows(j.at("rows")));
    });
}

std::string serialize(KernelSeries const & K)
{
    auto const & a = K.aux();
    return json{{"D", K.group().D()},
                {"N", K.N()},
                {"k", K.k()},
                {"M_max", K.M_max()},
                {"orientation", to_string(K.orientation())},
                {"convention", to_string(K.convention())},
                {"aux", {{"q", a.q}, {"Q_class", a.Q_class}, {"m_max", a.m_max}}},
                {"rows", rows_json(K.rows())}}
        .dump();
}

KernelSeries deserialize_kernel(std::string const & payload, std::shared_ptr<ClassGroup const> group)
{
    return guarded([&] {
        json const j = json::parse(payload);
        if (j.at("D").get<i64>() != group->D()) throw Error(ErrorCode::cache_corrupt, "kernel for another D");
        AuxiliaryPrime aux;
        aux.q = j.at("aux").at("q").get<i64>();
        aux.Q_class = j.at("aux").at("Q_class").get<int>();
        aux.m_max = j.at("aux").at("m_max").get<i64>();
        aux.D = group->D();
        aux.N = j.at("N").get<i64>();
        if (aux.Q_class < 0 || aux.Q_class >= group->h()) throw Error(ErrorCode::cache_corrupt, "class index");
        auto const conv = j.at("convention").get<std::string>();
        if (conv != "brandt" && conv != "literal") throw Error(ErrorCode::cache_corrupt, "convention");
        return KernelSeries(group, aux.N, j.at("k").get<int>(), j.at("M_max").get<i64>(),
                            parse_orientation(j.at("orientation").get<std::string>()),
                            conv == "brandt" ? ConstantTerm::brandt : ConstantTerm::literal, aux,
                            parse_rows(j.at("rows")));
    });
}

std::string serialize(BrandtModule const & M)
{
    json ideals = json::array();
    for (auto const & I : M.ideals()) {
        json basis = json::array();
        for (auto const & e : I.basis()) basis.push_back(rationals({e.begin(), e.end()}));
        ideals.push_back(basis);
    }
    json mats = json::array();
    for (auto const & B : M.matrices()) {
        json flat = json::array();
        for (auto const & row : B)
            for (i64 x : row) flat.push_back(x);
        mats.push_back(flat);
    }
    return json{{"N", M.N()},
                {"M_max", M.M_max()},
                {"dim", M.size()},
                {"ideals", ideals},
                {"weights", M.weights()},
                {"matrices", mats}}
        .dump();
}

BrandtModule deserialize_brandt(std::string const & payload)
{
    return guarded([&] {
        json const j = json::parse(payload);
        auto const n = j.at("dim").get<std::size_t>();
        std::vector<QLattice> ideals;
        for (auto const & basis : j.at("ideals")) {
            std::vector<QElem> gens;
            for (auto const & e : basis) {
                auto const v = parse_rationals(e);
                if (v.size() != 4) throw Error(ErrorCode::cache_corrupt, "quaternion needs 4 coordinates");
                gens.push_back({v[0], v[1], v[2], v[3]});
            }
            ideals.push_back(QLattice::from_generators(gens));
        }
        std::vector<SmallMatrix> mats;
        for (auto const & flat : j.at("matrices")) {
            if (flat.size() != n * n) throw Error(ErrorCode::cache_corrupt, "matrix has wrong size");
            SmallMatrix B(n, std::vector<i64>(n));
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) B[r][c] = flat.at(r * n + c).get<i64>();
            mats.push_back(std::move(B));
        }
        return BrandtModule(j.at("N").get<i64>(), j.at("M_max").get<i64>(), std::move(ideals),
                            j.at("weights").get<std::vector<i64>>(), std::move(mats));
    });
}

}  // namespace rsavg
