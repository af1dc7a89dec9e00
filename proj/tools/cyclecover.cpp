// Command-line front door: graph generation, cover search with certificate
// output, certificate post-processing pipelines, and run-directory reports.
// Exit codes: 0 success, 1 usage/IO, 2 budget exhausted, 3 internal
// invariant violation.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclecover/certificate.hpp"
#include "cyclecover/classify.hpp"
#include "cyclecover/generators.hpp"
#include "cyclecover/graph6.hpp"
#include "cyclecover/ribbon.hpp"
#include "cyclecover/search.hpp"
#include "cyclecover/surface.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace cyclecover;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr const char* kCorpusEnv = "CYCLECOVER_CORPUS_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input resolution: literal path first, then the corpus directory
fs::path resolve_input(const std::string& spec) {
    fs::path p(spec);
    if (fs::exists(p)) return p;
    if (const char* dir = std::getenv(kCorpusEnv)) {
        fs::path q = fs::path(dir) / p;
        if (fs::exists(q)) return q;
    }
    throw UsageError("input not found: " + spec);
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path.string());
    out << text;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_manifest(const fs::path& dir, const std::string& command,
                    const json& config, const std::vector<std::string>& inputs,
                    const std::vector<std::string>& outputs, double seconds) {
    json m;
    m["tool_version"] = kVersion;
    m["command"] = command;
    m["config"] = config;
    m["inputs"] = inputs;
    m["outputs"] = outputs;
    m["wall_clock_s"] = seconds;
    write_file(dir / "manifest.json", m.dump(2) + "\n");
}

// ---- gen ----------------------------------------------------------------

int cmd_gen(const std::string& kind, int m, const std::string& out) {
    CubicGraph g = kind == "flower" ? gen_flower_snark(m) : gen_named(kind);
    std::string line = graph6_encode(g) + "\n";
    if (out.empty())
        std::cout << line;
    else
        write_file(out, line);
    return 0;
}

// ---- search -------------------------------------------------------------

struct GraphRun {
    std::string graph6;
    SearchOutcome outcome = SearchOutcome::completed;
    long long nodes = 0;
    std::vector<std::string> certificates;  // documents
    long long solution_count = 0;
};

GraphRun run_one_search(const CubicGraph& g, const SearchConfig& cfg) {
    GraphRun run;
    run.graph6 = graph6_encode(g);
    auto res = search_cycle_cover(g, cfg);
    run.outcome = res.outcome;
    run.nodes = res.nodes;
    run.solution_count = res.solution_count;
    if (cfg.oriented)
        for (const auto& oc : res.oriented)
            run.certificates.push_back(certificate_for(oc));
    else
        for (const auto& c : res.covers)
            run.certificates.push_back(certificate_for(c));
    return run;
}

int cmd_search(const std::string& input, SearchConfig cfg,
               const std::string& outdir, int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    fs::path in = resolve_input(input);
    auto graphs = read_graph6_file(in.string());
    if (graphs.empty()) throw UsageError("no graphs in " + in.string());
    fs::path dir(outdir.empty() ? "." : outdir);
    fs::create_directories(dir);

    std::vector<GraphRun> runs(graphs.size());
    std::mutex next_mu;
    size_t next = 0;
    auto worker = [&] {
        for (;;) {
            size_t i;
            {
                std::lock_guard<std::mutex> lock(next_mu);
                if (next >= graphs.size()) return;
                i = next++;
            }
            runs[i] = run_one_search(graphs[i], cfg);
        }
    };
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // canonical merge order: input order, regardless of job count
    std::string stem = in.stem().string();
    std::vector<std::string> outputs;
    bool budget_hit = false;
    for (size_t i = 0; i < runs.size(); ++i) {
        const auto& run = runs[i];
        std::string base = stem + "-" + std::to_string(i);
        if (run.outcome == SearchOutcome::budget_exhausted) budget_hit = true;
        for (size_t s = 0; s < run.certificates.size(); ++s) {
            fs::path p = dir / (base + "-sol" + std::to_string(s) + ".json");
            write_file(p, run.certificates[s]);
            outputs.push_back(p.filename().string());
        }
        if (run.certificates.empty()) {
            // nonexistence or budget marker; never conflate the two
            json marker;
            marker["graph6"] = run.graph6;
            marker["k"] = cfg.k;
            marker["m"] = cfg.m;
            marker["oriented"] = cfg.oriented;
            marker["solutions"] = run.solution_count;
            marker["nodes"] = run.nodes;
            marker["outcome"] = run.outcome == SearchOutcome::completed
                                    ? "completed"
                                    : "budget_exhausted";
            fs::path p = dir / (base + "-none.json");
            write_file(p, marker.dump(2) + "\n");
            outputs.push_back(p.filename().string());
        }
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    json config = {{"k", cfg.k},
                   {"m", cfg.m},
                   {"oriented", cfg.oriented},
                   {"mode", cfg.mode == SearchMode::first  ? "first"
                            : cfg.mode == SearchMode::all ? "all"
                                                          : "count"},
                   {"budget", cfg.node_budget},
                   {"jobs", jobs}};
    write_manifest(dir, "search", config, {in.string()}, outputs, secs);
    return budget_hit ? 2 : 0;
}

// ---- pipeline -----------------------------------------------------------

int cmd_pipeline(const std::string& certfile,
                 const std::vector<std::string>& steps,
                 const std::string& out) {
    std::string doc = read_file(resolve_input(certfile));
    for (const auto& step : steps) {
        if (step == "classify")
            doc = certificate_with_classification(doc);
        else if (step == "surface")
            doc = certificate_with_surface(doc);
        else if (step == "split")
            doc = certificate_with_split(doc);
        else if (step == "ribbon")
            doc = certificate_with_ribbon(doc);
        else if (step == "flows")
            doc = certificate_with_flows(doc);
        else if (step == "checks")
            doc = certificate_with_checks(doc);
        else
            throw UsageError("unknown pipeline step: " + step);
    }
    if (out.empty())
        std::cout << doc;
    else
        write_file(out, doc);
    return 0;
}

// ---- report -------------------------------------------------------------

std::string triple_str(const Triple& t) {
    auto two = [](const std::array<int, 2>& p) {
        return std::to_string(p[0]) + std::to_string(p[1]);
    };
    return "(" + two(t.in) + "->" + two(t.out) + ")+" + two(t.match);
}

std::string table1_text() {
    auto tc = triple_classes();
    std::ostringstream out;
    for (size_t c = 0; c < tc.representatives.size(); ++c) {
        out << "class " << c + 1 << ":";
        for (const auto& t : tc.representatives[c]) out << " " << triple_str(t);
        out << "\n";
    }
    return out.str();
}

std::string surface_dot(const SurfaceGraph& sg) {
    std::ostringstream out;
    out << "graph surface {\n  node [shape=point];\n";
    for (int c = 0; c < sg.node_class_count(); ++c)
        out << "  s" << c << ";\n";
    // one s-edge per glued side pair; boundary sides drawn dashed to a rim
    const auto& cls = sg.node_class();
    int flat = 0;
    for (size_t f = 0; f < sg.face_len.size(); ++f)
        for (int i = 0; i < sg.face_len[f]; ++i, ++flat) {
            int nf = (i + 1 == sg.face_len[f]) ? flat - sg.face_len[f] + 1
                                               : flat + 1;
            int a = cls[flat], b = cls[nf];
            int partner = sg.partner[flat];
            if (partner >= 0 && partner < flat) continue;  // glued: emit once
            out << "  s" << a << " -- s" << b << " [label=\""
                << sg.side_label[f][i] << "\""
                << (partner < 0 ? ", style=dashed" : "") << "];\n";
        }
    out << "}\n";
    return out.str();
}

int cmd_report(const std::string& rundir, bool dot, bool table1) {
    if (table1) {
        std::cout << table1_text();
        return 0;
    }
    fs::path dir = resolve_input(rundir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json" &&
            e.path().filename() != "manifest.json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::cout << "file\tgraph6\tk\tm\toriented\toutcome\tordered\trich\n";
    for (const auto& f : files) {
        json doc;
        try {
            doc = json::parse(read_file(f));
        } catch (const json::exception&) {
            continue;
        }
        std::string outcome = doc.value("outcome", std::string("solution"));
        std::string ordered = "-", rich = "-";
        if (doc.contains("cycles")) {
            try {
                auto p = parse_certificate(doc.dump());
                if (p.oriented) {
                    auto rep = classify(p.cover);
                    ordered = std::to_string(rep.ordered_count());
                    rich = std::to_string(rep.rich_count());
                    if (dot) {
                        fs::path dp = f;
                        dp.replace_extension(".surface.dot");
                        write_file(dp, surface_dot(glue_surface(p.cover, rep)));
                    }
                }
            } catch (const GraphError&) {
                outcome = "invalid";
            }
        }
        std::cout << f.filename().string() << "\t"
                  << doc.value("graph6", std::string("-")) << "\t"
                  << (doc.contains("k") ? std::to_string(doc["k"].get<int>())
                                        : "-")
                  << "\t"
                  << (doc.contains("m") ? std::to_string(doc["m"].get<int>())
                                        : "-")
                  << "\t" << (doc.value("oriented", false) ? "yes" : "no")
                  << "\t" << outcome << "\t" << ordered << "\t" << rich
                  << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oriented cycle cover search and analysis"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a generated graph as graph6");
    std::string gen_kind, gen_out;
    int gen_m = 5;
    gen->add_option("kind", gen_kind, "flower or a named fixture")->required();
    gen->add_option("--m", gen_m, "flower snark parameter (odd, >= 3)");
    gen->add_option("-o,--output", gen_out, "output file (default stdout)");

    // search
    auto* search = app.add_subcommand("search", "cover search -> certificates");
    std::string s_input, s_outdir, s_mode = "first";
    SearchConfig s_cfg;
    int s_jobs = 0;
    search->add_option("input", s_input, "graph6 file (single or corpus)")
        ->required();
    search->add_option("-k", s_cfg.k, "number of cycles");
    search->add_option("-m", s_cfg.m, "cover multiplicity");
    search->add_flag("--oriented", s_cfg.oriented, "orient the covers");
    search->add_option("--mode", s_mode, "first | all | count")
        ->check(CLI::IsMember({"first", "all", "count"}));
    search->add_option("--budget", s_cfg.node_budget, "node budget (<0 = off)");
    search->add_option("-o,--outdir", s_outdir, "certificate directory");
    search->add_option("--jobs", s_jobs, "parallel jobs (0 = cores)");

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "append certificate sections");
    std::string p_cert, p_out;
    std::vector<std::string> p_steps;
    pipe->add_option("certificate", p_cert, "certificate file")->required();
    pipe->add_option("--steps", p_steps,
                     "classify, surface, split, ribbon, flows, checks")
        ->required()
        ->delimiter(',');
    pipe->add_option("-o,--output", p_out, "output file (default stdout)");

    // report
    auto* rep = app.add_subcommand("report", "summarize a run directory");
    std::string r_dir = ".";
    bool r_dot = false, r_table1 = false;
    rep->add_option("rundir", r_dir, "directory of certificates");
    rep->add_flag("--dot", r_dot, "emit surface DOT per certificate");
    rep->add_flag("--table1", r_table1, "emit the o6cdc triple-class table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gen->parsed()) {
            if (gen_kind == "flower" && (gen_m < 3 || gen_m % 2 == 0))
                throw UsageError("flower snark needs odd m >= 3");
            return cmd_gen(gen_kind, gen_m, gen_out);
        }
        if (search->parsed()) {
            s_cfg.mode = s_mode == "first"  ? SearchMode::first
                         : s_mode == "all" ? SearchMode::all
                                           : SearchMode::count;
            return cmd_search(s_input, s_cfg, s_outdir, s_jobs);
        }
        if (pipe->parsed()) return cmd_pipeline(p_cert, p_steps, p_out);
        if (rep->parsed()) return cmd_report(r_dir, r_dot, r_table1);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const GraphError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
