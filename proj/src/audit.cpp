#include <odesym/audit.hpp>

#include <odesym/parse.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace odesym {

namespace {

CorpusEntry entry_from_json(const nlohmann::json& j, std::size_t line_no) {
    const auto fail = [line_no](const std::string& what) {
        throw CorpusError("corpus line " + std::to_string(line_no) + ": " + what);
    };
    if (!j.is_object()) fail("entry is not an object");
    CorpusEntry e;
    if (!j.contains("name") || !j.at("name").is_string()) fail("missing string field 'name'");
    if (!j.contains("ode") || !j.at("ode").is_string()) fail("missing string field 'ode'");
    if (!j.contains("degree") || !j.at("degree").is_number_unsigned())
        fail("missing nonnegative integer field 'degree'");
    e.name = j.at("name").get<std::string>();
    e.ode = j.at("ode").get<std::string>();
    e.degree = j.at("degree").get<std::uint32_t>();
    if (j.contains("expected_dim")) {
        if (!j.at("expected_dim").is_number_unsigned()) fail("'expected_dim' must be nonnegative");
        e.expected_dim = j.at("expected_dim").get<std::uint32_t>();
    }
    if (j.contains("expected_basis")) {
        if (!j.at("expected_basis").is_array()) fail("'expected_basis' must be an array");
        std::vector<std::string> basis;
        for (const auto& item : j.at("expected_basis")) {
            if (!item.is_string()) fail("'expected_basis' entries must be strings");
            basis.push_back(item.get<std::string>());
        }
        e.expected_basis = std::move(basis);
    }
    return e;
}

EntryResult run_entry(const CorpusEntry& entry) {
    EntryResult r;
    r.name = entry.name;
    r.ode = entry.ode;
    r.degree = entry.degree;
    try {
        const OdeInput ode = parse_ode(entry.ode);
        const OdeAnalysis a = analyze(ode, entry.degree);
        r.order = ode.order;
        r.dimension = a.basis.size();
        for (const auto& f : a.basis) r.basis.push_back(to_string(f));
        r.closed = a.algebra.closed;
        r.killing_rank = a.algebra.killing_rank;
        r.derived_dims = a.algebra.derived_dims;

        r.expected_ok = true;
        if (entry.expected_dim && *entry.expected_dim != r.dimension) {
            r.expected_ok = false;
            r.error = "expected dimension " + std::to_string(*entry.expected_dim) + ", computed " +
                      std::to_string(r.dimension);
        }
        if (r.expected_ok && entry.expected_basis) {
            std::vector<PointField> expected;
            for (const auto& text : *entry.expected_basis) {
                PointField f = parse_field(text);
                if (!verify(ode, f).is_symmetry) {
                    r.expected_ok = false;
                    r.error = "expected basis field '" + text + "' is not a symmetry";
                    break;
                }
                expected.push_back(std::move(f));
            }
            if (r.expected_ok && !fields_span_equal(a.basis, expected)) {
                r.expected_ok = false;
                r.error = "computed basis span differs from expected basis";
            }
        }
        r.ok = r.expected_ok;
    } catch (const std::exception& ex) {
        r.ok = false;
        r.expected_ok = false;
        r.error = ex.what();
    }
    return r;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
    std::vector<CorpusEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& ex) {
            throw CorpusError("corpus line " + std::to_string(line_no) + ": " + ex.what());
        }
        entries.push_back(entry_from_json(j, line_no));
    }
    return entries;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorpusError("cannot open corpus file '" + path + "'");
    return parse_corpus(in);
}

OdeAnalysis analyze(const OdeInput& ode, std::uint32_t degree) {
    OdeAnalysis a;
    a.ode = ode;
    a.degree = degree;
    a.basis = solve_symmetries(ode, degree);
    a.algebra = closure(a.basis);
    return a;
}

nlohmann::json analysis_json(const std::string& ode_text, const OdeAnalysis& a) {
    nlohmann::json j;
    j["ode"] = ode_text;
    j["canonical"] = to_string(a.ode.f);
    j["order"] = a.ode.order;
    j["degree"] = a.degree;
    j["dimension"] = a.basis.size();
    auto basis = nlohmann::json::array();
    for (const auto& f : a.basis) basis.push_back(to_string(f));
    j["basis"] = std::move(basis);
    j["closed"] = a.algebra.closed;
    j["killing_rank"] = a.algebra.killing_rank;
    j["derived_dims"] = a.algebra.derived_dims;
    return j;
}

AuditReport run_audit(const std::vector<CorpusEntry>& corpus, unsigned jobs) {
    AuditReport report;
    report.entries.resize(corpus.size());

    const unsigned workers =
        std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
    if (workers <= 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) report.entries[i] = run_entry(corpus[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= corpus.size()) return;
                    report.entries[i] = run_entry(corpus[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    std::stable_sort(report.entries.begin(), report.entries.end(),
                     [](const EntryResult& a, const EntryResult& b) { return a.name < b.name; });

    static const std::set<std::size_t> theorem_set = {0, 1, 2, 3, 4, 5, 6, 8};
    for (const auto& e : report.entries) {
        report.all_ok = report.all_ok && e.ok;
        if (e.order == 2) {
            report.dims_observed.push_back(e.dimension);
            if (!theorem_set.count(e.dimension)) report.dims_in_theorem_set = false;
        }
    }
    std::sort(report.dims_observed.begin(), report.dims_observed.end());
    if (!report.dims_in_theorem_set) report.all_ok = false;
    return report;
}

nlohmann::json report_json(const AuditReport& report) {
    nlohmann::json j;
    auto entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json je;
        je["name"] = e.name;
        je["ode"] = e.ode;
        je["degree"] = e.degree;
        je["dimension"] = e.dimension;
        je["basis"] = e.basis;
        je["closed"] = e.closed;
        je["killing_rank"] = e.killing_rank;
        je["derived_dims"] = e.derived_dims;
        je["expected_ok"] = e.expected_ok;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["summary"]["dims_observed"] = report.dims_observed;
    j["summary"]["second_order_dims_in_theorem_set"] = report.dims_in_theorem_set;
    j["summary"]["note"] =
        "dimensions are those of the degree-bounded polynomial ansatz at each entry's degree; "
        "they are lower bounds for the full symmetry algebras";
    return j;
}

}  // namespace odesym
