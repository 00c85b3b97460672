#include "crcodes/report.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "crcodes/errors.hpp"

namespace crcodes {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

Report analyze_code(const LinearCode& code, const AnalysisOptions& opts, const Construction* con) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep;
    if (con) {
        rep.echo = ConstructionEcho{con->spec.q,
                                    con->spec.m,
                                    family_name(con->spec.family),
                                    con->spec.r,
                                    con->n,
                                    con->ctx.base->modulus_code(),
                                    con->ham.cyclic};
    }
    rep.length = code.length();
    rep.dimension = code.dimension();
    rep.d_limit = opts.d_limit;
    rep.d = min_distance(code, opts.d_limit);

    CosetTable table = coset_table(code);
    rep.rho = table.rho;
    rep.level_sizes = table.level_sizes;
    IntersectionData data = intersection_data(code, table);
    rep.cr = data.regular;
    rep.levels = data.levels;
    rep.ia_b = data.ia_b;
    rep.ia_c = data.ia_c;
    rep.refutation = data.refutation;
    rep.analyze_seconds = seconds_since(t0);

    const auto t1 = std::chrono::steady_clock::now();
    if (opts.with_maut) {
        AutGroupResult res = maut_search(code, opts.budget);
        MautSection sec;
        sec.complete = res.complete;
        sec.order = res.order;
        sec.nodes_visited = res.nodes_visited;
        for (const auto& g : res.generators) sec.generators.push_back(g.map);
        if (res.complete) {
            sec.orbit_count = res.orbits.count;
            sec.orbit_weights = res.orbits.orbit_weight;
            sec.orbit_sizes = res.orbits.orbit_size;
            sec.ct = res.ct;
        }
        rep.maut = std::move(sec);
    }
    if (opts.with_ct) {
        CtResult res = con ? is_completely_transitive(*con, opts.budget)
                           : is_completely_transitive(code, {}, opts.budget);
        CtSection sec;
        sec.verdict = verdict_name(res.verdict);
        sec.mode = res.mode;
        sec.orbit_count = res.orbit_count;
        sec.note = res.note;
        if (res.verdict == Verdict::unknown) sec.budget_nodes = opts.budget.max_nodes;
        if (res.full && res.full->complete) {
            sec.maut_order = res.full->order;
            if (!rep.maut) {
                MautSection msec;
                msec.complete = true;
                msec.order = res.full->order;
                msec.nodes_visited = res.full->nodes_visited;
                for (const auto& g : res.full->generators) msec.generators.push_back(g.map);
                msec.orbit_count = res.full->orbits.count;
                msec.orbit_weights = res.full->orbits.orbit_weight;
                msec.orbit_sizes = res.full->orbits.orbit_size;
                msec.ct = res.full->ct;
                rep.maut = std::move(msec);
            }
        }
        rep.ct = std::move(sec);
    }
    rep.group_seconds = seconds_since(t1);
    rep.completed = true;
    return rep;
}

Report analyze_construction(const ConstructionSpec& spec, const AnalysisOptions& opts) {
    Construction con = build_construction(spec);
    LinearCode code = con.make_code();
    return analyze_code(code, opts, &con);
}

namespace {

nlohmann::json monomials_to_json(const std::vector<MonomialMap>& maps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : maps) arr.push_back({{"perm", m.perm}, {"scales", m.scales}});
    return arr;
}

std::vector<MonomialMap> monomials_from_json(const nlohmann::json& arr) {
    std::vector<MonomialMap> maps;
    for (const auto& j : arr) {
        MonomialMap m;
        m.perm = j.at("perm").get<std::vector<int>>();
        m.scales = j.at("scales").get<std::vector<int>>();
        maps.push_back(std::move(m));
    }
    return maps;
}

} // namespace

nlohmann::json report_to_json(const Report& r) {
    nlohmann::json j;
    j["schema_version"] = r.schema_version;
    j["completed"] = r.completed;
    if (r.echo) {
        j["construction"] = {{"q", r.echo->q},       {"m", r.echo->m},
                             {"family", r.echo->family}, {"r", r.echo->r},
                             {"n", r.echo->n},       {"modulus", r.echo->modulus_code},
                             {"cyclic", r.echo->cyclic}};
    }
    j["parameters"] = {{"length", r.length},
                       {"dimension", r.dimension},
                       {"rho", r.rho},
                       {"d_limit", r.d_limit}};
    if (r.d) j["parameters"]["d"] = *r.d;
    else j["parameters"]["d"] = nullptr;

    j["cr"] = r.cr;
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& l : r.levels) levels.push_back({{"a", l.a}, {"b", l.b}, {"c", l.c}});
    j["levels"] = levels;
    j["intersection_array"] = {{"b", r.ia_b}, {"c", r.ia_c}};
    j["level_sizes"] = r.level_sizes;
    if (r.refutation) {
        j["cr_refutation"] = {{"level", r.refutation->level},
                              {"syndrome1", r.refutation->syndrome1},
                              {"syndrome2", r.refutation->syndrome2},
                              {"counts1", {r.refutation->down1, r.refutation->up1}},
                              {"counts2", {r.refutation->down2, r.refutation->up2}}};
    }
    if (r.maut) {
        j["maut"] = {{"complete", r.maut->complete},
                     {"order", r.maut->order},
                     {"generators", monomials_to_json(r.maut->generators)},
                     {"orbit_count", r.maut->orbit_count},
                     {"orbit_weights", r.maut->orbit_weights},
                     {"orbit_sizes", r.maut->orbit_sizes},
                     {"ct", r.maut->ct},
                     {"nodes_visited", r.maut->nodes_visited}};
    }
    if (r.ct) {
        j["ct"] = {{"verdict", r.ct->verdict},
                   {"mode", r.ct->mode},
                   {"orbit_count", r.ct->orbit_count},
                   {"note", r.ct->note}};
        if (r.ct->maut_order) j["ct"]["maut_order"] = *r.ct->maut_order;
        if (r.ct->verdict == "unknown") j["ct"]["budget_nodes"] = r.ct->budget_nodes;
    }
    j["timings"] = {{"analyze_seconds", r.analyze_seconds}, {"group_seconds", r.group_seconds}};
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != report_schema_version)
        throw InputError("unsupported report schema_version");
    r.completed = j.at("completed").get<bool>();
    if (j.contains("construction")) {
        const auto& c = j.at("construction");
        r.echo = ConstructionEcho{c.at("q").get<int>(),      c.at("m").get<int>(),
                                  c.at("family").get<std::string>(), c.at("r").get<int>(),
                                  c.at("n").get<long long>(), c.at("modulus").get<long long>(),
                                  c.at("cyclic").get<bool>()};
    }
    const auto& p = j.at("parameters");
    r.length = p.at("length").get<int>();
    r.dimension = p.at("dimension").get<int>();
    r.rho = p.at("rho").get<int>();
    r.d_limit = p.at("d_limit").get<int>();
    if (!p.at("d").is_null()) r.d = p.at("d").get<int>();

    r.cr = j.at("cr").get<bool>();
    for (const auto& l : j.at("levels"))
        r.levels.push_back({l.at("a").get<long long>(), l.at("b").get<long long>(), l.at("c").get<long long>()});
    r.ia_b = j.at("intersection_array").at("b").get<std::vector<long long>>();
    r.ia_c = j.at("intersection_array").at("c").get<std::vector<long long>>();
    r.level_sizes = j.at("level_sizes").get<std::vector<long long>>();

    if (j.contains("maut")) {
        MautSection m;
        const auto& jm = j.at("maut");
        m.complete = jm.at("complete").get<bool>();
        m.order = jm.at("order").get<unsigned long long>();
        m.generators = monomials_from_json(jm.at("generators"));
        m.orbit_count = jm.at("orbit_count").get<int>();
        m.orbit_weights = jm.at("orbit_weights").get<std::vector<int>>();
        m.orbit_sizes = jm.at("orbit_sizes").get<std::vector<long long>>();
        m.ct = jm.at("ct").get<bool>();
        m.nodes_visited = jm.at("nodes_visited").get<long long>();
        r.maut = std::move(m);
    }
    if (j.contains("ct")) {
        CtSection c;
        const auto& jc = j.at("ct");
        c.verdict = jc.at("verdict").get<std::string>();
        c.mode = jc.at("mode").get<std::string>();
        c.orbit_count = jc.at("orbit_count").get<int>();
        c.note = jc.at("note").get<std::string>();
        if (jc.contains("maut_order")) c.maut_order = jc.at("maut_order").get<unsigned long long>();
        if (jc.contains("budget_nodes")) c.budget_nodes = jc.at("budget_nodes").get<long long>();
        r.ct = std::move(c);
    }
    return r;
}

namespace {

std::string ia_string(const Report& r) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < r.ia_b.size(); ++i) os << (i ? ", " : "") << r.ia_b[i];
    os << "; ";
    for (size_t i = 0; i < r.ia_c.size(); ++i) os << (i ? ", " : "") << r.ia_c[i];
    os << "}";
    return os.str();
}

} // namespace

void render_report(std::ostream& os, const Report& r) {
    if (r.echo) {
        os << "construction: family " << r.echo->family << ", q=" << r.echo->q << ", m=" << r.echo->m;
        if (r.echo->family != "hamming") os << ", r=" << r.echo->r;
        os << ", n=" << r.echo->n << ", primitive polynomial code " << r.echo->modulus_code
           << (r.echo->cyclic ? ", cyclic Hamming matrix" : ", canonical-representative Hamming matrix (non-cyclic)")
           << "\n";
    }
    os << "parameters:   [" << r.length << ", " << r.dimension << ", ";
    if (r.d) os << *r.d;
    else os << ">" << r.d_limit;
    os << "; " << r.rho << "]\n";
    os << "level sizes:  ";
    for (size_t i = 0; i < r.level_sizes.size(); ++i) os << (i ? ", " : "") << r.level_sizes[i];
    os << "\n";
    os << "completely regular: " << (r.cr ? "yes" : "no") << "\n";
    if (r.cr) os << "intersection array: " << ia_string(r) << "\n";
    if (r.refutation)
        os << "refutation: level " << r.refutation->level << " syndromes " << r.refutation->syndrome1
           << " (c=" << r.refutation->down1 << ", b=" << r.refutation->up1 << ") vs "
           << r.refutation->syndrome2 << " (c=" << r.refutation->down2 << ", b=" << r.refutation->up2
           << ")\n";
    if (r.maut) {
        os << "maut: ";
        if (r.maut->complete)
            os << "order " << r.maut->order << ", " << r.maut->generators.size() << " generators, "
               << r.maut->orbit_count << " coset orbits\n";
        else
            os << "INCOMPLETE (budget exhausted after " << r.maut->nodes_visited << " nodes)\n";
    }
    if (r.ct) {
        os << "completely transitive: " << r.ct->verdict << " (" << r.ct->mode;
        if (r.ct->orbit_count > 0) os << ", " << r.ct->orbit_count << " orbits vs rho+1=" << r.rho + 1;
        os << ")";
        if (!r.ct->note.empty()) os << "  [" << r.ct->note << "]";
        os << "\n";
    }
}

// ---------------------------------------------------------------------------

std::vector<GridCell> parse_grid_config(std::istream& is) {
    std::vector<GridCell> cells;
    std::string line;
    std::map<std::string, std::string> kv;

    auto flush_block = [&]() {
        if (kv.empty()) return;
        for (const char* req : {"q", "m", "family", "r_min", "r_max"})
            if (!kv.count(req)) throw InputError(std::string("grid config block is missing ") + req);
        ConstructionSpec spec;
        spec.q = std::stoi(kv.at("q"));
        spec.m = std::stoi(kv.at("m"));
        spec.family = family_from_name(kv.at("family"));
        SearchBudget budget;
        if (kv.count("budget")) budget.max_nodes = std::stoll(kv.at("budget"));
        const int r_min = std::stoi(kv.at("r_min"));
        const int r_max = std::stoi(kv.at("r_max"));
        if (spec.family == Family::hamming) {
            cells.push_back({spec, budget});
        } else {
            for (int r = r_min; r <= r_max; ++r) {
                spec.r = r;
                cells.push_back({spec, budget});
            }
        }
        kv.clear();
    };

    while (std::getline(is, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && std::isspace((unsigned char)line.back())) line.pop_back();
        size_t start = 0;
        while (start < line.size() && std::isspace((unsigned char)line[start])) ++start;
        line.erase(0, start);
        if (line.empty()) {
            flush_block();
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw InputError("grid config: expected key=value, got '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    flush_block();
    return cells;
}

std::string grid_cell_filename(const ConstructionSpec& spec) {
    std::ostringstream os;
    os << family_name(spec.family) << "_q" << spec.q << "_m" << spec.m;
    if (spec.family != Family::hamming) os << "_r" << spec.r;
    os << ".json";
    return os.str();
}

GridOutcome run_grid(const std::vector<GridCell>& cells, const std::string& out_dir, int jobs) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    GridOutcome outcome;
    outcome.rows.resize(cells.size());
    std::atomic<size_t> next{0};
    std::mutex mu;

    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            const GridCell& cell = cells[i];
            GridRow row;
            row.cell = cell;
            const fs::path path = fs::path(out_dir) / grid_cell_filename(cell.spec);
            try {
                bool cached = false;
                if (fs::exists(path)) {
                    std::ifstream in(path);
                    nlohmann::json j;
                    in >> j;
                    Report r = report_from_json(j);
                    if (r.completed) {
                        row.report = std::move(r);
                        row.status = "cached";
                        cached = true;
                    }
                }
                if (!cached) {
                    AnalysisOptions opts;
                    opts.with_ct = true;
                    opts.budget = cell.budget;
                    row.report = analyze_construction(cell.spec, opts);
                    const fs::path tmp = path.string() + ".tmp";
                    {
                        std::ofstream out(tmp);
                        out << report_to_json(row.report).dump(2) << "\n";
                    }
                    fs::rename(tmp, path);
                    row.status = "ok";
                }
                if (row.report.ct && row.report.ct->verdict == "unknown") {
                    std::lock_guard<std::mutex> lock(mu);
                    outcome.any_unknown = true;
                }
            } catch (const std::exception& e) {
                row.status = std::string("error: ") + e.what();
                std::lock_guard<std::mutex> lock(mu);
                outcome.any_error = true;
            }
            std::lock_guard<std::mutex> lock(mu);
            outcome.rows[i] = std::move(row);
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return outcome;
}

void render_grid_summary(std::ostream& os, const GridOutcome& outcome) {
    os << "family q m r | [N, k, d; rho] | CR | IA | |MAut| | CT\n";
    for (const auto& row : outcome.rows) {
        const ConstructionSpec& s = row.cell.spec;
        os << family_name(s.family) << " " << s.q << " " << s.m << " ";
        if (s.family == Family::hamming) os << "-";
        else os << s.r;
        os << " | ";
        if (row.status.rfind("error", 0) == 0) {
            os << row.status << "\n";
            continue;
        }
        const Report& r = row.report;
        os << "[" << r.length << ", " << r.dimension << ", ";
        if (r.d) os << *r.d;
        else os << ">" << r.d_limit;
        os << "; " << r.rho << "] | " << (r.cr ? "yes" : "NO") << " | " << ia_string(r) << " | ";
        if (r.ct && r.ct->maut_order) os << *r.ct->maut_order;
        else if (r.maut && r.maut->complete) os << r.maut->order;
        else os << "-";
        os << " | " << (r.ct ? r.ct->verdict : "-");
        if (row.status == "cached") os << "  (cached)";
        os << "\n";
    }
}

} // namespace crcodes
