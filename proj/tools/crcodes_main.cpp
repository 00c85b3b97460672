#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "crcodes/errors.hpp"
#include "crcodes/matrix_io.hpp"
#include "crcodes/report.hpp"

using namespace crcodes;

namespace {

struct SpecFlags {
    int q = 0, m = 0, r = 1;
    std::string family;
    std::string in_file;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags, bool with_in) {
    cmd->add_option("--q", flags.q, "field size (prime power)");
    cmd->add_option("--m", flags.m, "extension degree of the Hamming construction");
    cmd->add_option("--family", flags.family, "hamming | b | a | c");
    cmd->add_option("--r", flags.r, "family parameter r");
    if (with_in) cmd->add_option("--in", flags.in_file, "read a parity-check matrix file instead");
}

bool has_spec(const SpecFlags& f) { return f.q != 0 || f.m != 0 || !f.family.empty(); }

ConstructionSpec spec_from_flags(const SpecFlags& f) {
    if (f.q == 0 || f.m == 0 || f.family.empty())
        throw InputError("--q, --m and --family are all required");
    return ConstructionSpec{f.q, f.m, family_from_name(f.family), f.r};
}

Report run_pipeline(const SpecFlags& flags, const AnalysisOptions& opts) {
    if (!flags.in_file.empty()) {
        if (has_spec(flags)) throw InputError("give either --in or construction flags, not both");
        Matrix h = read_matrix_file(flags.in_file);
        LinearCode code = code_from_parity_check(h);
        return analyze_code(code, opts);
    }
    return analyze_construction(spec_from_flags(flags), opts);
}

void emit_report(const Report& rep, bool as_json, const std::string& out_file) {
    std::ostringstream os;
    if (as_json) os << report_to_json(rep).dump(2) << "\n";
    else render_report(os, rep);
    if (out_file.empty() || out_file == "-") {
        std::cout << os.str();
    } else {
        std::ofstream f(out_file);
        if (!f) throw InputError("cannot open for writing: " + out_file);
        f << os.str();
    }
}

int report_exit_code(const Report& rep) {
    if (rep.ct && rep.ct->verdict == "unknown") return exit_budget_unknown;
    if (rep.maut && !rep.maut->complete) return exit_budget_unknown;
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for completely regular q-ary codes built from Hamming blocks"};
    app.require_subcommand(1);

    SpecFlags c_flags, a_flags, m_flags, t_flags;
    std::string c_out, a_out, m_out, t_out, m_witness;
    bool a_json = false, m_json = false, t_json = false;
    int a_dlimit = 4;
    long long m_budget = 0, t_budget = 0;

    auto* construct = app.add_subcommand("construct", "build a parity-check matrix and write it");
    add_spec_flags(construct, c_flags, false);
    construct->add_option("--out", c_out, "output file ('-' for stdout)")->required();

    auto* analyze = app.add_subcommand("analyze", "parameters, coset structure, intersection array");
    add_spec_flags(analyze, a_flags, true);
    analyze->add_option("--dlimit", a_dlimit, "search bound for the minimum distance");
    analyze->add_flag("--json", a_json, "emit a JSON report");
    analyze->add_option("--out", a_out, "write the report to a file");

    auto* maut = app.add_subcommand("maut", "exact monomial automorphism group");
    add_spec_flags(maut, m_flags, true);
    maut->add_option("--budget", m_budget, "search node budget");
    maut->add_flag("--json", m_json, "emit a JSON report");
    maut->add_option("--out", m_out, "write the report to a file");
    maut->add_option("--witness-out", m_witness, "write generator witnesses (perm/scales lines)");

    auto* ct = app.add_subcommand("ct", "complete transitivity verdict");
    add_spec_flags(ct, t_flags, true);
    ct->add_option("--budget", t_budget, "search node budget");
    ct->add_flag("--json", t_json, "emit a JSON report");
    ct->add_option("--out", t_out, "write the report to a file");

    std::string g_config, g_out;
    int g_jobs = 1;
    auto* grid = app.add_subcommand("grid", "sweep a (q, m, family, r) grid and summarize");
    grid->add_option("--config", g_config, "grid config file")->required();
    grid->add_option("--out", g_out, "output directory for per-cell JSON reports")->required();
    grid->add_option("--jobs", g_jobs, "number of concurrent cells");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) {
            Construction con = build_construction(spec_from_flags(c_flags));
            if (c_out == "-") write_matrix(std::cout, con.h, con.provenance_comments());
            else write_matrix_file(c_out, con.h, con.provenance_comments());
            return exit_ok;
        }
        if (analyze->parsed()) {
            AnalysisOptions opts;
            opts.d_limit = a_dlimit;
            emit_report(run_pipeline(a_flags, opts), a_json, a_out);
            return exit_ok;
        }
        if (maut->parsed()) {
            AnalysisOptions opts;
            opts.with_maut = true;
            if (m_budget > 0) opts.budget.max_nodes = m_budget;
            Report rep = run_pipeline(m_flags, opts);
            emit_report(rep, m_json, m_out);
            if (!m_witness.empty() && rep.maut) {
                std::ofstream f(m_witness);
                if (!f) throw InputError("cannot open for writing: " + m_witness);
                f << write_witnesses(rep.maut->generators);
            }
            return report_exit_code(rep);
        }
        if (ct->parsed()) {
            AnalysisOptions opts;
            opts.with_ct = true;
            if (t_budget > 0) opts.budget.max_nodes = t_budget;
            Report rep = run_pipeline(t_flags, opts);
            emit_report(rep, t_json, t_out);
            return report_exit_code(rep);
        }
        if (grid->parsed()) {
            std::ifstream cfg(g_config);
            if (!cfg) throw InputError("cannot open grid config: " + g_config);
            std::vector<GridCell> cells = parse_grid_config(cfg);
            GridOutcome outcome = run_grid(cells, g_out, g_jobs);
            render_grid_summary(std::cout, outcome);
            if (outcome.any_error) return exit_input_error;
            if (outcome.any_unknown) return exit_budget_unknown;
            return exit_ok;
        }
    } catch (const InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return exit_internal_error;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return exit_budget_unknown;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_ok;
}
