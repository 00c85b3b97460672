#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crcodes/autgroup.hpp"
#include "crcodes/codes.hpp"
#include "crcodes/constructions.hpp"

namespace crcodes {

inline constexpr int report_schema_version = 1;

struct AnalysisOptions {
    int d_limit = 4;
    bool with_maut = false;
    bool with_ct = false;
    SearchBudget budget;
};

struct ConstructionEcho {
    int q = 0, m = 0;
    std::string family;
    int r = 0;
    long long n = 0;
    long long modulus_code = 0;
    bool cyclic = false;
};

struct MautSection {
    bool complete = false;
    unsigned long long order = 0;
    std::vector<MonomialMap> generators;
    int orbit_count = 0;
    std::vector<int> orbit_weights;
    std::vector<long long> orbit_sizes;
    bool ct = false;
    long long nodes_visited = 0;
};

struct CtSection {
    std::string verdict; // "true" / "false" / "unknown"
    std::string mode;
    int orbit_count = 0;
    std::optional<unsigned long long> maut_order;
    std::string note;
    long long budget_nodes = 0; // the budget that was exhausted, for unknowns
};

struct Report {
    int schema_version = report_schema_version;
    bool completed = false;
    std::optional<ConstructionEcho> echo;

    int length = 0;
    int dimension = 0;
    std::optional<int> d; // nullopt: every dependency needs more than d_limit columns
    int d_limit = 0;
    int rho = 0;

    bool cr = false;
    std::vector<LevelTriple> levels;
    std::vector<long long> ia_b, ia_c;
    std::vector<long long> level_sizes;
    std::optional<RegularityRefutation> refutation;

    std::optional<MautSection> maut;
    std::optional<CtSection> ct;

    double analyze_seconds = 0.0;
    double group_seconds = 0.0;
};

Report analyze_construction(const ConstructionSpec& spec, const AnalysisOptions& opts);
Report analyze_code(const LinearCode& code, const AnalysisOptions& opts,
                    const Construction* con = nullptr);

nlohmann::json report_to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
void render_report(std::ostream& os, const Report& r);

// ---------------------------------------------------------------------------
// grid sweeps

struct GridCell {
    ConstructionSpec spec;
    SearchBudget budget;
};

// Config file: blocks of key=value lines separated by blank lines; keys
// q, m, family, r_min, r_max and optional budget. '#' starts a comment.
std::vector<GridCell> parse_grid_config(std::istream& is);

struct GridRow {
    GridCell cell;
    std::string status; // "ok", "cached", "error: ..."
    Report report;
};

struct GridOutcome {
    std::vector<GridRow> rows;
    bool any_unknown = false;
    bool any_error = false;
};

std::string grid_cell_filename(const ConstructionSpec& spec);
GridOutcome run_grid(const std::vector<GridCell>& cells, const std::string& out_dir, int jobs);
void render_grid_summary(std::ostream& os, const GridOutcome& outcome);

} // namespace crcodes
