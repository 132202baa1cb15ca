// odesym: Lie point-symmetry analysis of implicit polynomial ODEs
//   F(x, y, y', y'') = 0   (second order)
//   F(x, y, y') = 0        (first order)
//
// Subcommands: symmetries, verify, bracket, audit.
// Exit codes: 0 success, 1 assertion/verification failure, 2 input error,
// 3 degenerate equation.

#include <odesym/audit.hpp>
#include <odesym/detsys.hpp>
#include <odesym/liealg.hpp>
#include <odesym/parse.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

void warn_degenerate_locus(const odesym::OdeInput& ode) {
    const odesym::Monomial content = odesym::leading_coeff_content(ode);
    if (content.is_unit()) return;
    std::string s;
    for (const auto& [var, exp] : content.factors()) {
        if (!s.empty()) s += "*";
        s += var.name();
        if (exp > 1) s += "^" + std::to_string(exp);
    }
    std::cerr << "warning: leading coefficient of F in the top jet variable has monomial factor "
              << s << "; results describe symmetries away from its zero locus\n";
}

int cmd_symmetries(const std::string& ode_text, std::uint32_t degree, const std::string& format) {
    const odesym::OdeInput ode = odesym::parse_ode(ode_text);
    warn_degenerate_locus(ode);
    const odesym::OdeAnalysis a = odesym::analyze(ode, degree);

    if (format == "json") {
        std::cout << odesym::analysis_json(ode_text, a).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "ode: " << odesym::to_string(ode.f) << " = 0\n";
    std::cout << "order: " << ode.order << "\n";
    std::cout << "degree: " << degree << "\n";
    std::cout << "dimension: " << a.basis.size() << "\n";
    std::cout << "basis:\n";
    for (const auto& f : a.basis) std::cout << "  " << odesym::to_string(f) << "\n";
    std::cout << "closed: " << (a.algebra.closed ? "yes" : "no") << "\n";
    if (a.algebra.closed) {
        std::cout << "killing_rank: " << a.algebra.killing_rank << "\n";
        std::cout << "derived_dims:";
        for (auto d : a.algebra.derived_dims) std::cout << " " << d;
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& ode_text, const std::string& field_text) {
    const odesym::OdeInput ode = odesym::parse_ode(ode_text);
    const odesym::PointField field = odesym::parse_field(field_text);
    const odesym::VerifyResult res = odesym::verify(ode, field);
    if (res.is_symmetry) {
        std::cout << "symmetry: yes\n";
        std::cout << "power: " << res.power << "\n";
        std::cout << "cofactor: " << odesym::to_string(res.cofactor) << "\n";
        return kExitOk;
    }
    std::cout << "symmetry: no\n";
    std::cout << "defect: " << odesym::to_string(res.defect) << "\n";
    return kExitFail;
}

int cmd_bracket(const std::string& a_text, const std::string& b_text) {
    const odesym::PointField a = odesym::parse_field(a_text);
    const odesym::PointField b = odesym::parse_field(b_text);
    std::cout << odesym::to_string(odesym::bracket(a, b)) << "\n";
    return kExitOk;
}

void write_atomically(const std::string& path, const std::string& payload) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << payload;
    }
    fs::rename(tmp, target);
}

int cmd_audit(const std::string& corpus_path, unsigned jobs, const std::string& out_path) {
    const auto corpus = odesym::load_corpus(corpus_path);
    const odesym::AuditReport report = odesym::run_audit(corpus, jobs);

    for (const auto& e : report.entries) {
        if (e.ok) {
            std::cout << "PASS " << e.name << " (order " << e.order << ", dim " << e.dimension
                      << ")\n";
        } else {
            std::cout << "FAIL " << e.name << ": " << e.error << "\n";
        }
    }
    std::cout << "second-order dims observed:";
    for (auto d : report.dims_observed) std::cout << " " << d;
    std::cout << "\n";
    std::cout << "dims within {0..6, 8}: " << (report.dims_in_theorem_set ? "yes" : "NO") << "\n";
    std::cout << "note: dimensions are degree-bounded polynomial truncations (lower bounds for "
                 "the full algebras)\n";

    if (!out_path.empty())
        write_atomically(out_path, odesym::report_json(report).dump(2) + "\n");
    return report.all_ok ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point symmetry analysis of implicit polynomial ODEs"};
    app.require_subcommand(1);

    std::string ode_text;
    std::string field_text;
    std::string field_b_text;
    std::string format = "text";
    std::string corpus_path;
    std::string out_path;
    std::uint32_t degree = 4;
    unsigned jobs = 1;

    auto* symmetries = app.add_subcommand("symmetries", "Solve for the symmetry algebra");
    symmetries->add_option("ode", ode_text, "Equation, e.g. \"y*y''=2*(y')^2\"")->required();
    symmetries->add_option("--deg", degree, "Ansatz total degree bound (default 4)");
    symmetries->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "Check one field against one equation");
    verify->add_option("ode", ode_text, "Equation")->required();
    verify->add_option("--field", field_text, "Field as \"xi, eta\"")->required();

    auto* bracket = app.add_subcommand("bracket", "Commutator of two plane fields");
    bracket->add_option("a", field_text, "First field as \"xi, eta\"")->required();
    bracket->add_option("b", field_b_text, "Second field as \"xi, eta\"")->required();

    auto* audit = app.add_subcommand("audit", "Run a JSON-Lines corpus and check expectations");
    audit->add_option("corpus", corpus_path, "Corpus file, one JSON entry per line")->required();
    audit->add_option("--jobs", jobs, "Worker threads");
    audit->add_option("--out", out_path, "Write the JSON report here (atomic)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (symmetries->parsed()) return cmd_symmetries(ode_text, degree, format);
        if (verify->parsed()) return cmd_verify(ode_text, field_text);
        if (bracket->parsed()) return cmd_bracket(field_text, field_b_text);
        if (audit->parsed()) return cmd_audit(corpus_path, jobs, out_path);
    } catch (const odesym::DegenerateOdeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const odesym::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const odesym::CorpusError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
