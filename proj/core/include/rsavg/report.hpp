#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsavg/average.hpp"
#include "rsavg/brandt.hpp"
#include "rsavg/exactmath.hpp"
#include "rsavg/kernel.hpp"
#include "rsavg/repnum.hpp"
#include "rsavg/scanner.hpp"

namespace rsavg {

enum class OutputFormat { json, csv };

struct RunConfig {
    std::string cache_dir;  // empty: RSAVG_CACHE_DIR or no cache
    BrandtOptions brandt;
    i64 aux_search_bound = 10'000'000;
    Orientation orientation = Orientation::direct;
    OutputFormat format = OutputFormat::json;
    unsigned jobs = 1;

    void validate() const;  // throws Error(bad_input)
};

/// One output record: {kind, params, exact_value, terms, flags, narrative}.
/// Exact values are rationals or cyclotomic coefficient vectors; floating
/// fields appear only when `approximate` is set.
struct Record {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<CyclotomicValue> exact_value;
    std::vector<std::pair<std::string, CyclotomicValue>> terms;
    std::vector<std::pair<std::string, double>> approx;
    bool approximate = false;
    std::vector<std::pair<std::string, bool>> flags;
    std::vector<std::string> narrative;

    Record & param(std::string const & k, std::string const & v);
    Record & param(std::string const & k, i64 v);
    Record & flag(std::string const & k, bool v);
    Record & term(std::string const & k, Rational const & v);
    Record & term(std::string const & k, CyclotomicValue const & v);
};

std::string to_json(Record const & r);
std::string csv_header(std::vector<Record> const & records);
std::string to_csv(Record const & r, std::string const & header);
/// Records in the requested format, one line each (CSV gets a header).
std::string render(std::vector<Record> const & records, OutputFormat format);

/// Total order used to make batch output independent of scheduling.
bool record_less(Record const & a, Record const & b);

Record class_group_record(ClassGroup const & G);
Record average_record(AverageValue const & v);
Record comparison_record(AverageComparison const & c, i64 D, i64 N);
Record eigen_record(BrandtModule const & M, ClassGroup const & G, HeckeEigenvector const & f, Rational const & ratio);
Record certificate_record(CertificateReport const & c);
Record subconvexity_record(SubconvexityReport const & s);

}  // namespace rsavg
