#pragma once

#include <odesym/detsys.hpp>
#include <odesym/liealg.hpp>

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace odesym {

// Malformed corpus file (bad JSON, missing or mistyped keys).
class CorpusError : public std::runtime_error {
public:
    explicit CorpusError(const std::string& what) : std::runtime_error(what) {}
};

// One line of a JSON-Lines corpus:
//   {"name": str, "ode": str, "degree": int, "expected_dim": int?, "expected_basis": [str]?}
struct CorpusEntry {
    std::string name;
    std::string ode;
    std::uint32_t degree = 0;
    std::optional<std::uint32_t> expected_dim;
    std::optional<std::vector<std::string>> expected_basis;
};

std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus(const std::string& path);

// Solver + algebra analysis for a single equation.
struct OdeAnalysis {
    OdeInput ode;
    std::uint32_t degree = 0;
    std::vector<PointField> basis;
    AlgebraReport algebra;
};

OdeAnalysis analyze(const OdeInput& ode, std::uint32_t degree);
nlohmann::json analysis_json(const std::string& ode_text, const OdeAnalysis& a);

struct EntryResult {
    std::string name;
    std::string ode;
    std::uint32_t degree = 0;
    bool ok = false;           // computed and all expectations held
    std::string error;         // first failure, empty when ok
    int order = 0;             // 0 when the entry failed to compute
    std::size_t dimension = 0;
    std::vector<std::string> basis;
    bool closed = false;
    std::size_t killing_rank = 0;
    std::vector<std::size_t> derived_dims;
    bool expected_ok = false;
};

struct AuditReport {
    std::vector<EntryResult> entries;          // sorted by name
    std::vector<std::size_t> dims_observed;    // second-order dims, multiset ascending
    bool dims_in_theorem_set = true;           // all observed dims in {0..6, 8}
    bool all_ok = true;
};

// Entries run independently (jobs > 1 uses a thread pool); the report is
// assembled deterministically by sorting on entry name.
AuditReport run_audit(const std::vector<CorpusEntry>& corpus, unsigned jobs);

nlohmann::json report_json(const AuditReport& report);

}  // namespace odesym
