#include "listpack/constructions.hpp"
#include "listpack/fractional.hpp"
#include "listpack/json_io.hpp"
#include "listpack/packing.hpp"
#include "listpack/repro.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace listpack;

namespace {

enum Exit { kHolds = 0, kFails = 1, kError = 2 };

bool pretty = false;

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

Json read_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError(path + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const Json& j)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << j.dump(2) << '\n';
}

std::vector<Witness> known_witnesses()
{
    auto all = all_witnesses();
    all.push_back(degeneracy_gap(3));
    return all;
}

struct Loaded {
    std::string label;
    Instance instance;
};

// A file path, or the name of a built-in witness.
Loaded load_instance(const std::string& source)
{
    if (std::filesystem::exists(source)) {
        return {source, instance_from_json(read_json(source))};
    }
    for (const auto& w : known_witnesses()) {
        if (w.name == source) {
            return {w.name, Instance{w.graph, w.lists, w.as_cover()}};
        }
    }
    throw std::runtime_error("'" + source + "' is neither a file nor a witness name (see list-witnesses)");
}

Graph load_graph(const std::string& source)
{
    if (std::filesystem::exists(source)) {
        const Json j = read_json(source);
        return j.contains("graph") ? graph_from_json(j["graph"]) : graph_from_json(j);
    }
    return build_standard(source);
}

std::string default_certificate(const std::string& label, const std::string& mode)
{
    std::filesystem::path p(label);
    if (p.has_extension()) {
        p.replace_extension();
    }
    return p.string() + "." + mode + ".certificate.json";
}

// ---------------------------------------------------------------- check

struct CheckArgs {
    std::string input;
    std::string mode = "packing";
    std::string certificate;
    bool column_generation = false;
};

int cmd_check(const CheckArgs& a)
{
    const auto [label, inst] = load_instance(a.input);
    const Cover& cover = inst.cover;
    Json verdict{{"schema", kVerdictSchema}, {"instance", label}, {"mode", a.mode}};
    Json cert;
    bool holds = false;
    if (a.mode == "packing") {
        const auto p = find_packing(cover);
        holds = p.has_value();
        verdict["verdict"] = holds ? "packing found" : "no packing";
        cert = holds ? to_json(*p) : Json{{"schema", kPackingSchema}, {"k", *cover.uniform_fold()}, {"colourings", nullptr},
                                          {"search", "exhaustive backtracking found no packing"}};
    } else if (a.mode == "fractional") {
        FractionalOptions options;
        options.column_generation = a.column_generation;
        options.covering_bound = a.column_generation;
        const auto r = fractional_packing(cover, options);
        holds = r.feasible;
        const bool verified = r.feasible ? verify_fractional(cover, r) : verify_dual(cover, r.dual);
        verdict["verdict"] = holds ? "feasible" : "infeasible";
        verdict["method"] = r.method;
        verdict["verified"] = verified;
        cert = to_json(cover, r);
    } else if (a.mode == "flexibility") {
        const auto table = check_flexibility(cover);
        holds = all_flexible(table);
        verdict["verdict"] = holds ? "all flexible" : "not flexible";
        Json rigid = Json::array();
        Json rows = Json::array();
        for (size_t v = 0; v < table.size(); ++v) {
            Json row = Json::array();
            for (size_t s = 0; s < table[v].size(); ++s) {
                row.push_back(static_cast<bool>(table[v][s]));
                if (!table[v][s]) {
                    rigid.push_back(Json{{"vertex", v}, {"slot", s + 1}});
                }
            }
            rows.push_back(row);
        }
        cert = Json{{"schema", "listpack.flexibility/1"}, {"table", rows}, {"unusable", rigid}};
        Json through = Json::array();
        for (size_t v = 0; v < table.size(); ++v) {
            for (size_t s = 0; s < table[v].size(); ++s) {
                if (table[v][s]) {
                    Json t = Json::array();
                    for (int x : *transversal_through(cover, static_cast<Vertex>(v), static_cast<int>(s))) {
                        t.push_back(x + 1);
                    }
                    through.push_back(Json{{"vertex", v}, {"slot", s + 1}, {"transversal", t}});
                }
            }
        }
        cert["witnesses"] = through;
    } else if (a.mode == "degree-fractional") {
        if (!inst.lists) {
            throw std::runtime_error("degree-fractional needs a list assignment");
        }
        const auto r = general_fractional_packing(inst.graph, *inst.lists);
        holds = r.feasible;
        verdict["verdict"] = holds ? "feasible" : "infeasible";
        if (!holds) {
            verdict["verified"] = verify_general_dual(inst.graph, *inst.lists, r.dual);
        }
        cert = to_json(r);
    } else {
        throw std::runtime_error("unknown mode " + a.mode);
    }
    const std::string path = a.certificate.empty() ? default_certificate(label, a.mode) : a.certificate;
    write_json(path, cert);
    verdict["holds"] = holds;
    verdict["certificate"] = path;
    if (pretty) {
        std::cout << label << " [" << a.mode << "]: " << verdict["verdict"].get<std::string>() << "\n  certificate: " << path
                  << '\n';
    } else {
        emit(verdict);
    }
    return holds ? kHolds : kFails;
}

// ---------------------------------------------------------------- number

struct NumberArgs {
    std::string graph;
    std::string mode = "correspondence";
    int k_max = 6;
    int jobs = default_jobs();
    std::string checkpoint_dir;
};

int cmd_number(const NumberArgs& a)
{
    const Graph g = load_graph(a.graph);
    SweepOptions sweep;
    sweep.jobs = a.jobs;
    sweep.checkpoint_dir = a.checkpoint_dir;
    Json out{{"schema", "listpack.number/1"}, {"graph", to_json(g)}, {"mode", a.mode}, {"k_max", a.k_max}};
    int value = 0;
    bool exact = false;
    if (a.mode == "correspondence" || a.mode == "list") {
        const auto r = packing_number(g, a.mode == "list" ? PackingMode::List : PackingMode::Correspondence, a.k_max, sweep);
        value = r.value;
        exact = r.exact;
        out["instances_checked"] = r.instances_checked;
        if (r.witness_cover) {
            out["witness"] = to_json(*r.witness_cover);
        } else if (r.witness_lists) {
            out["witness"] = to_json(g, *r.witness_lists);
        }
    } else if (a.mode == "fractional-correspondence" || a.mode == "fractional-list") {
        const auto mode = a.mode == "fractional-list" ? FractionalMode::List : FractionalMode::Correspondence;
        const auto r = fractional_packing_number(g, mode, a.k_max, sweep);
        value = r.value;
        exact = r.exact;
        out["instances_checked"] = r.instances_checked;
        if (r.witness_cover) {
            out["witness"] = to_json(*r.witness_cover);
            if (r.witness_certificate) {
                out["witness_certificate"] = to_json(*r.witness_cover, *r.witness_certificate);
            }
        } else if (r.witness_lists) {
            out["witness"] = to_json(g, *r.witness_lists);
        }
    } else {
        throw std::runtime_error("unknown mode " + a.mode);
    }
    out["value"] = value;
    out["exact"] = exact;
    if (pretty) {
        std::cout << a.graph << " [" << a.mode << "]: " << (exact ? "" : ">= ") << value << '\n';
    } else {
        emit(out);
    }
    return exact ? kHolds : kFails;
}

// ---------------------------------------------------------------- reproduce

struct ReproduceArgs {
    std::vector<std::string> only;
    std::string out_dir = "repro-out";
    ReproOptions options;
    int jobs = default_jobs();
    std::string checkpoint_dir;
};

int cmd_reproduce(ReproduceArgs a)
{
    a.options.sweep.jobs = a.jobs;
    a.options.sweep.checkpoint_dir = a.checkpoint_dir;
    a.options.out_dir = a.out_dir;
    std::vector<CheckResult> results;
    for (const auto& spec : repro_checks()) {
        if (!a.only.empty() && std::find(a.only.begin(), a.only.end(), spec.name) == a.only.end()) {
            continue;
        }
        results.push_back(run_check(spec, a.options));
        if (pretty) {
            const auto& r = results.back();
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.seconds << " s): " << r.claim << '\n';
            for (const auto& line : r.observed) {
                std::cout << "    " << line << '\n';
            }
            for (const auto& line : r.skipped) {
                std::cout << "    skipped: " << line << '\n';
            }
        }
    }
    if (results.empty()) {
        throw std::runtime_error("--only matched no check");
    }
    const Json manifest = manifest_json(results, a.options);
    write_json(std::filesystem::path(a.out_dir) / "manifest.json", manifest);
    if (!pretty) {
        emit(manifest);
    }
    return manifest["green"].get<bool>() ? kHolds : kFails;
}

// ---------------------------------------------------------------- search-f7

struct SearchArgs {
    int palette_max = 6;
    std::uint64_t budget = 1'000'000;
    std::string out = "f7-witness.json";
};

int cmd_search_f7(const SearchArgs& a)
{
    const Graph g = fan7_graph();
    const auto r = search_unpackable_lists(g, 3, a.palette_max, a.budget);
    Json out{{"schema", "listpack.search/1"}, {"palette_max", a.palette_max}, {"budget", a.budget}, {"examined", r.examined}};
    switch (r.status) {
    case ListSearchResult::Status::Found:
        out["status"] = "found";
        out["witness"] = to_json(g, *r.witness);
        out["file"] = a.out;
        write_json(a.out, out["witness"]);
        break;
    case ListSearchResult::Status::None:
        out["status"] = "none";
        break;
    case ListSearchResult::Status::Budget:
        out["status"] = "not-found-within-budget";
        break;
    }
    if (pretty) {
        std::cout << out["status"].get<std::string>() << " after " << r.examined << " assignments\n";
        if (r.witness) {
            for (int v = 0; v < g.n(); ++v) {
                std::cout << "  " << v << ':';
                for (int c : r.witness->list(v)) {
                    std::cout << ' ' << c;
                }
                std::cout << '\n';
            }
        }
    } else {
        emit(out);
    }
    return r.status == ListSearchResult::Status::Found ? kHolds : kFails;
}

// ---------------------------------------------------------------- export-dimacs, list-witnesses

int cmd_export_dimacs(const std::string& input, const std::string& out)
{
    const auto [label, inst] = load_instance(input);
    const std::string text = to_dimacs(expand(inst.cover), "cover graph of " + label);
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        std::ofstream(out) << text;
    }
    return kHolds;
}

int cmd_list_witnesses(const std::string& name)
{
    const auto all = known_witnesses();
    if (!name.empty()) {
        for (const auto& w : all) {
            if (w.name == name) {
                emit(to_json(w));
                return kHolds;
            }
        }
        throw std::runtime_error("no witness named " + name);
    }
    if (pretty) {
        for (const auto& w : all) {
            std::cout << w.name << "  [" << to_string(w.expected) << "]  " << w.description << '\n';
        }
        return kHolds;
    }
    Json out = Json::array();
    for (const auto& w : all) {
        out.push_back(Json{{"name", w.name},
                           {"expected", to_string(w.expected)},
                           {"vertices", w.graph.n()},
                           {"edges", w.graph.m()},
                           {"description", w.description}});
    }
    emit(out);
    return kHolds;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact list and correspondence packing of graphs"};
    app.require_subcommand(1);
    app.add_flag("--pretty", pretty, "Human-readable output instead of JSON");

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Decide one instance and persist a certificate");
    c->add_option("input", check.input, "Lists or cover JSON file, or a witness name")->required();
    c->add_option("--mode", check.mode, "packing | fractional | flexibility | degree-fractional")
        ->check(CLI::IsMember({"packing", "fractional", "flexibility", "degree-fractional"}));
    c->add_option("--certificate", check.certificate, "Certificate path (default: next to the input)");
    c->add_flag("--column-generation", check.column_generation, "Price transversals instead of enumerating them");

    NumberArgs number;
    auto* n = app.add_subcommand("number", "Packing number of a small graph by exhaustive cover enumeration");
    n->add_option("graph", number.graph, "Graph key (e.g. cycle:5, fan7) or graph JSON file")->required();
    n->add_option("--mode", number.mode, "correspondence | list | fractional-correspondence | fractional-list")
        ->check(CLI::IsMember({"correspondence", "list", "fractional-correspondence", "fractional-list"}));
    n->add_option("--k-max", number.k_max, "Largest k tried")->check(CLI::Range(1, 12));
    n->add_option("--jobs", number.jobs, "Worker threads (default: LISTPACK_JOBS or 1)")->check(CLI::PositiveNumber);
    n->add_option("--checkpoint-dir", number.checkpoint_dir, "Resume finished shards from this directory");

    ReproduceArgs repro;
    auto* r = app.add_subcommand("reproduce", "Run the acceptance checks and write a manifest with certificates");
    r->add_option("--only", repro.only, "Restrict to these checks")->delimiter(',');
    r->add_option("--out-dir", repro.out_dir, "Manifest and certificate directory");
    r->add_option("--seed", repro.options.seed, "Seed for the randomised checks");
    r->add_option("--hall-trials", repro.options.hall_trials, "Random instances per Hall structure and m");
    r->add_flag("--skip-slow", repro.options.skip_slow, "Skip the generic LP solve of the d=3 degeneracy-gap graph");
    r->add_option("--jobs", repro.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    r->add_option("--checkpoint-dir", repro.checkpoint_dir, "Sweep checkpoints");

    SearchArgs search;
    auto* s = app.add_subcommand("search-f7", "Search 3-list assignments of F7 for one without a packing");
    s->add_option("--palette-max", search.palette_max, "Colours 1..palette-max")->check(CLI::Range(3, 21));
    s->add_option("--budget", search.budget, "Assignments examined at most");
    s->add_option("--out", search.out, "Where the witness is written");

    std::string dimacs_input;
    std::string dimacs_out;
    auto* d = app.add_subcommand("export-dimacs", "Write the cover graph of an instance in DIMACS format");
    d->add_option("input", dimacs_input, "Lists or cover JSON file, or a witness name")->required();
    d->add_option("--out", dimacs_out, "Output file (default: stdout)");

    std::string witness_name;
    auto* w = app.add_subcommand("list-witnesses", "List the built-in witnesses, or print one as JSON");
    w->add_option("--name", witness_name, "Print this witness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*c) {
            return cmd_check(check);
        }
        if (*n) {
            return cmd_number(number);
        }
        if (*r) {
            return cmd_reproduce(repro);
        }
        if (*s) {
            return cmd_search_f7(search);
        }
        if (*d) {
            return cmd_export_dimacs(dimacs_input, dimacs_out);
        }
        if (*w) {
            return cmd_list_witnesses(witness_name);
        }
    } catch (const std::exception& e) {
        if (pretty) {
            std::cerr << "error: " << e.what() << '\n';
        } else {
            std::cout << Json{{"schema", kVerdictSchema}, {"error", e.what()}}.dump(2) << '\n';
        }
        return kError;
    }
    return kError;
}
