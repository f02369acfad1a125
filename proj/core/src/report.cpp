#include "rsavg/report.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "rsavg/error.hpp"
#include "rsavg/serialize.hpp"

namespace rsavg {

using ojson = nlohmann::ordered_json;

void RunConfig::validate() const
{
    if (brandt.max_ideals <= 0) throw Error(ErrorCode::bad_input, "Brandt search bound must be positive");
    if (aux_search_bound <= 0) throw Error(ErrorCode::bad_input, "auxiliary prime bound must be positive");
}

Record & Record::param(std::string const & k, std::string const & v)
{
    params.emplace_back(k, v);
    return *this;
}

Record & Record::param(std::string const & k, i64 v) { return param(k, std::to_string(v)); }

Record & Record::flag(std::string const & k, bool v)
{
    flags.emplace_back(k, v);
    return *this;
}

Record & Record::term(std::string const & k, Rational const & v) { return term(k, CyclotomicValue::embed(v, 1)); }

Record & Record::term(std::string const & k, CyclotomicValue const & v)
{
    terms.emplace_back(k, v);
    return *this;
}

namespace {

std::optional<i64> as_integer(std::string const & s)
{
    i64 v = 0;
    auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

ojson rational_json(Rational const & r)
{
    return ojson{{"num", to_string(Integer(r.get_num()))}, {"den", to_string(Integer(r.get_den()))}};
}

ojson value_json(CyclotomicValue const & v)
{
    if (auto r = v.to_rational()) return rational_json(*r);
    ojson coeffs = ojson::array();
    for (auto const & c : v.coefficients()) coeffs.push_back(rational_json(c));
    return ojson{{"order", v.order()}, {"coefficients", coeffs}};
}

std::string value_text(CyclotomicValue const & v)
{
    if (auto r = v.to_rational()) return to_string(*r);
    return v.to_string();
}

std::string csv_escape(std::string const & s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string double_text(double x)
{
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::vector<std::pair<std::string, std::string>> csv_cells(Record const & r)
{
    std::vector<std::pair<std::string, std::string>> cells{{"kind", r.kind}};
    for (auto const & [k, v] : r.params) cells.emplace_back(k, v);
    if (r.exact_value) cells.emplace_back("exact_value", value_text(*r.exact_value));
    for (auto const & [k, v] : r.terms) cells.emplace_back(k, value_text(v));
    for (auto const & [k, v] : r.flags) cells.emplace_back(k, v ? "true" : "false");
    if (r.approximate) {
        cells.emplace_back("approximate", "true");
        for (auto const & [k, v] : r.approx) cells.emplace_back(k, double_text(v));
    }
    std::string narrative;
    for (auto const & n : r.narrative) narrative += (narrative.empty() ? "" : ";") + n;
    cells.emplace_back("narrative", narrative);
    return cells;
}

}  // namespace

std::string to_json(Record const & r)
{
    ojson j;
    j["kind"] = r.kind;
    ojson params = ojson::object();
    for (auto const & [k, v] : r.params) {
        if (auto n = as_integer(v))
            params[k] = *n;
        else
            params[k] = v;
    }
    j["params"] = params;
    j["exact_value"] = r.exact_value ? value_json(*r.exact_value) : ojson(nullptr);
    if (!r.terms.empty()) {
        ojson terms = ojson::object();
        for (auto const & [k, v] : r.terms) terms[k] = value_json(v);
        j["terms"] = terms;
    }
    ojson flags = ojson::object();
    for (auto const & [k, v] : r.flags) flags[k] = v;
    j["flags"] = flags;
    if (r.approximate) {
        j["approximate"] = true;
        ojson approx = ojson::object();
        for (auto const & [k, v] : r.approx) approx[k] = v;
        j["approx"] = approx;
    }
    j["narrative"] = r.narrative;
    return j.dump();
}

std::string csv_header(std::vector<Record> const & records)
{
    std::vector<std::string> cols;
    for (auto const & r : records)
        for (auto const & [k, v] : csv_cells(r))
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    std::string out;
    for (auto const & c : cols) out += (out.empty() ? "" : ",") + csv_escape(c);
    return out;
}

std::string to_csv(Record const & r, std::string const & header)
{
    auto const cells = csv_cells(r);
    std::string out;
    std::stringstream hs(header);
    std::string col;
    bool first = true;
    while (std::getline(hs, col, ',')) {
        std::string v;
        for (auto const & [k, x] : cells)
            if (csv_escape(k) == col) v = x;
        out += (first ? "" : ",") + csv_escape(v);
        first = false;
    }
    return out;
}

std::string render(std::vector<Record> const & records, OutputFormat format)
{
    std::string out;
    if (format == OutputFormat::json) {
        for (auto const & r : records) out += to_json(r) + "\n";
        return out;
    }
    if (records.empty()) return out;
    auto const header = csv_header(records);
    out += header + "\n";
    for (auto const & r : records) out += to_csv(r, header) + "\n";
    return out;
}

bool record_less(Record const & a, Record const & b)
{
    if (a.kind != b.kind) return a.kind < b.kind;
    std::size_t const n = std::min(a.params.size(), b.params.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto const & [ka, va] = a.params[i];
        auto const & [kb, vb] = b.params[i];
        if (ka != kb) return ka < kb;
        auto const ia = as_integer(va), ib = as_integer(vb);
        if (ia && ib) {
            if (*ia != *ib) return *ia < *ib;
        } else if (va != vb) {
            return va < vb;
        }
    }
    if (a.params.size() != b.params.size()) return a.params.size() < b.params.size();
    return to_json(a) < to_json(b);
}

Record class_group_record(ClassGroup const & G)
{
    Record r;
    r.kind = "classgroup";
    r.param("D", G.D());
    r.exact_value = CyclotomicValue::embed(Rational(G.h()), 1);
    r.term("h", Rational(G.h()));
    r.term("u", Rational(G.u()));
    r.term("exponent", Rational(G.exponent()));
    for (auto const & f : G.elements()) r.narrative.push_back("form=" + f.to_string());
    return r;
}

Record average_record(AverageValue const & v)
{
    Record r;
    r.kind = "average";
    r.param("D", v.D).param("N", v.N).param("k", static_cast<i64>(v.k)).param("m", v.m);
    std::string chi;
    for (i64 e : v.character) chi += (chi.empty() ? "" : " ") + std::to_string(e);
    r.param("character", chi).param("character_order", v.character_order);
    r.exact_value = v.value;
    r.term("eisenstein", v.eisenstein).term("main", v.main).term("phi", v.phi);
    r.flag("stable", v.stable).flag("delta", v.delta).flag("outside_hypotheses", v.outside_hypotheses);
    r.narrative.push_back("phi_terms=" + std::to_string(v.phi_terms));
    return r;
}

Record comparison_record(AverageComparison const & c, i64 D, i64 N)
{
    Record r;
    r.kind = "brandt_verify";
    r.param("D", D).param("N", N).param("m", c.m);
    r.exact_value = CyclotomicValue::embed(c.left, 1);
    r.term("left", c.left).term("right", c.right).term("eisenstein", c.eisenstein).term("cusp", c.cusp);
    r.flag("equal", c.equal);
    return r;
}

Record eigen_record(BrandtModule const & M, ClassGroup const & G, HeckeEigenvector const & f, Rational const & ratio)
{
    Record r;
    r.kind = "central_value";
    r.param("D", G.D()).param("N", M.N());
    std::string vec;
    for (auto const & x : f.vector) vec += (vec.empty() ? "" : " ") + to_string(x);
    r.param("eigenvector", vec);
    r.exact_value = CyclotomicValue::embed(ratio, 1);
    for (auto const & [p, a] : f.eigenvalues) r.term("a_" + std::to_string(p), a);
    r.narrative.push_back("value=<c_f,c_f>/u^2");
    return r;
}

Record certificate_record(CertificateReport const & c)
{
    Record r;
    r.kind = std::string("certificate_") + to_string(c.kind);
    r.param("D", c.D).param("N", c.N).param("k", static_cast<i64>(c.k));
    if (c.p != 0) r.param("p", c.p);
    std::string chi;
    for (i64 e : c.character) chi += (chi.empty() ? "" : " ") + std::to_string(e);
    if (!chi.empty()) r.param("character", chi);
    r.exact_value = CyclotomicValue::embed(c.value, 1);
    r.flag("verdict", c.verdict);
    if (c.p_valuation) r.term("p_valuation", Rational(*c.p_valuation));
    std::string ex;
    for (i64 q : c.excluded_primes) ex += (ex.empty() ? "" : " ") + std::to_string(q);
    r.narrative.push_back("excluded_primes=" + ex);
    for (auto const & n : c.narrative) r.narrative.push_back(n);
    return r;
}

Record subconvexity_record(SubconvexityReport const & s)
{
    Record r;
    r.kind = "subconvexity";
    r.param("D", s.D).param("N", s.N).param("k", static_cast<i64>(s.k));
    r.param("delta", double_text(s.delta));
    r.exact_value = CyclotomicValue::embed(s.exact_average, 1);
    r.approximate = true;
    r.approx = {{"normalized_average", s.normalized_average},
                {"termwise_bound", s.termwise_bound},
                {"convexity_bound", s.convexity_bound},
                {"corollary_bound", s.corollary_bound},
                {"ratio", s.ratio}};
    r.flag("in_window", s.in_window).flag("subconvex", s.subconvex);
    return r;
}

}  // namespace rsavg
