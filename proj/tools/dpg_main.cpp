#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dpg/emit.hpp"
#include "dpg/pipeline.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::string family = "C";
    long q0 = 0;
    bool formal = false;
    int D = 3;
    std::string what = "report";
    std::string format;
    std::string out;
    unsigned jobs = 1;
    std::size_t max_vertices = 10000;
    std::string instances;
    std::string preset = "formal";
    bool timing = false;
    std::uint64_t seed = 0;
    bool seeded = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

dpg::Instance instance_of(const RunConfig& cfg) {
    if (cfg.formal && cfg.q0 != 0) throw UsageError("--formal and --q exclude each other");
    dpg::Instance inst;
    try {
        inst.params.family = dpg::parse_family(cfg.family);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    inst.params.D = cfg.D;
    inst.q0 = cfg.formal ? 0 : cfg.q0;
    dpg::validate_instance(inst);
    return inst;
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
    if (!f) throw UsageError("cannot write " + cfg.out);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int cmd_verify(const RunConfig& cfg) {
    auto inst = instance_of(cfg);
    dpg::PipelineOptions opts;
    opts.max_vertices = cfg.max_vertices;
    if (cfg.seeded) opts.base_seed = cfg.seed;
    auto report = dpg::run_pipeline(inst, opts);
    if (!cfg.out.empty()) write_output(cfg, dump(report.to_json(cfg.timing)));
    if (cfg.out.empty()) {
        std::cerr << report.summary();
    } else {
        for (const auto& c : report.checks())
            if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.locus << "\n";
    }
    std::cerr << report.instance() << ": " << (report.passed() ? "pass" : "FAIL") << " (" << report.checks().size()
              << " checks, " << report.failures() << " failed)\n";
    return report.passed() ? kPass : kCheckFailed;
}

int cmd_emit(const RunConfig& cfg) {
    auto inst = instance_of(cfg);
    const auto e = inst.params.e();
    const int D = inst.params.D;
    std::string format = cfg.format;
    if (format.empty()) format = cfg.what == "graph" ? "edge-list" : (cfg.what == "ell-polys" || cfg.what == "param-arrays") ? "csv" : "json";
    auto bad = [&] { return UsageError("--what " + cfg.what + " does not support --format " + format); };

    std::string text;
    if (cfg.what == "ell-polys") {
        auto fam = dpg::build_family(e, D);
        if (format == "csv") {
            text = dpg::ell_polys_csv(fam, inst.q0);
        } else if (format == "json") {
            text = dump(dpg::ell_polys_json(fam, inst.q0));
        } else {
            throw bad();
        }
    } else if (cfg.what == "param-arrays") {
        if (format == "csv") {
            text = dpg::param_arrays_csv(e, D, inst.q0);
        } else if (format == "json") {
            text = dump(dpg::param_arrays_json(e, D, inst.q0));
        } else {
            throw bad();
        }
    } else if (cfg.what == "graph") {
        if (format != "edge-list") throw bad();
        if (inst.formal()) throw UsageError("--what graph needs --q");
        text = dpg::edge_list(dpg::build_graph(inst, cfg.max_vertices));
    } else if (cfg.what == "orthogonality") {
        if (format != "json") throw bad();
        text = dump(dpg::orthogonality_json(inst));
    } else if (cfg.what == "report") {
        if (format != "json") throw bad();
        dpg::PipelineOptions opts;
        opts.max_vertices = cfg.max_vertices;
        auto report = dpg::run_pipeline(inst, opts);
        write_output(cfg, dump(report.to_json(cfg.timing)));
        return report.passed() ? kPass : kCheckFailed;
    } else {
        throw UsageError("unknown --what " + cfg.what);
    }
    write_output(cfg, text);
    return kPass;
}

std::vector<dpg::Instance> preset_instances(const std::string& preset) {
    using dpg::Family;
    std::vector<dpg::Instance> out;
    if (preset == "formal") {
        for (Family f : {Family::D, Family::TwoAOdd, Family::C, Family::TwoAEven, Family::TwoD}) {
            for (int D = 3; D <= 5; ++D) out.push_back({{f, D}, 0});
        }
    } else if (preset == "concrete") {
        out = {{{Family::C, 3}, 2},  {{Family::C, 3}, 3},       {{Family::B, 3}, 2},   {{Family::D, 3}, 2},
               {{Family::D, 4}, 2}, {{Family::TwoAOdd, 3}, 4}, {{Family::TwoD, 3}, 2}};
    } else {
        throw UsageError("unknown --preset " + preset);
    }
    return out;
}

/// "C:2:3" (family, q, D) or "C:3" (formal).
std::vector<dpg::Instance> parse_instances(const std::string& list) {
    std::vector<dpg::Instance> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::vector<std::string> parts;
        std::stringstream is(item);
        std::string p;
        while (std::getline(is, p, ':')) parts.push_back(p);
        if (parts.size() != 2 && parts.size() != 3) throw UsageError("bad instance '" + item + "'");
        dpg::Instance inst;
        try {
            inst.params.family = dpg::parse_family(parts[0]);
            inst.params.D = std::stoi(parts.back());
            inst.q0 = parts.size() == 3 ? std::stol(parts[1]) : 0;
        } catch (const std::exception&) {
            throw UsageError("bad instance '" + item + "'");
        }
        out.push_back(inst);
    }
    return out;
}

struct SweepRow {
    std::string label;
    int code = kPass;
    std::size_t checks = 0, failures = 0;
    double seconds = 0;
    std::string note;
};

int cmd_sweep(const RunConfig& cfg, bool explicit_list) {
    auto list = explicit_list ? parse_instances(cfg.instances) : preset_instances(cfg.preset);
    if (list.empty()) throw UsageError("empty instance list");

    std::vector<SweepRow> rows(list.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < list.size(); k = next++) {
            SweepRow& row = rows[k];
            row.label = list[k].label();
            auto start = std::chrono::steady_clock::now();
            try {
                dpg::PipelineOptions opts;
                opts.max_vertices = cfg.max_vertices;
                auto report = dpg::run_pipeline(list[k], opts);
                row.checks = report.checks().size();
                row.failures = report.failures();
                row.code = report.passed() ? kPass : kCheckFailed;
                for (const auto& c : report.checks()) {
                    if (!c.pass) {
                        row.note = c.name + (c.locus.empty() ? "" : ": " + c.locus);
                        break;
                    }
                }
            } catch (const std::exception& ex) {
                row.code = kUsage;
                row.note = std::string("skipped: ") + ex.what();
            }
            row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    };
    unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(list.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    int code = kPass;
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& r : rows) {
        if (r.code == kCheckFailed) code = kCheckFailed;
        const char* status = r.code == kPass ? "pass" : r.code == kCheckFailed ? "fail" : "skip";
        std::cout << r.label << "\t" << status << "\t" << r.checks << " checks\t" << r.failures << " failed";
        if (cfg.timing) std::cout << "\t" << r.seconds << " s";
        if (!r.note.empty()) std::cout << "\t" << r.note;
        std::cout << "\n";
        nlohmann::json j{{"instance", r.label}, {"status", status}, {"checks", r.checks}, {"failures", r.failures}};
        if (!r.note.empty()) j["note"] = r.note;
        if (cfg.timing) j["seconds"] = r.seconds;
        summary.push_back(std::move(j));
    }
    if (!cfg.out.empty()) write_output(cfg, dump({{"instances", summary}, {"status", code == kPass ? "pass" : "fail"}}));
    return code;
}

void add_instance_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--family", cfg.family, "C, B, D, 2D, 2A-even or 2A-odd")->envname("DPG_FAMILY");
    sub->add_option("--q", cfg.q0, "prime power; omit for formal q")->envname("DPG_Q");
    sub->add_flag("--formal", cfg.formal, "formal q (the default when --q is absent)")->envname("DPG_FORMAL");
    sub->add_option("--D", cfg.D, "diameter, at least 3")->envname("DPG_D");
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--out", cfg.out, "output path")->envname("DPG_OUT");
    sub->add_option("--max-vertices", cfg.max_vertices, "enumeration cap")->envname("DPG_MAX_VERTICES");
    sub->add_flag("--timing", cfg.timing, "include wall times")->envname("DPG_TIMING");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dual polar graphs, the module W, the nil-DAHA and non-symmetric dual q-Krawtchouk polynomials"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* verify = app.add_subcommand("verify", "run every verification stage on one instance");
    add_instance_options(verify, cfg);
    add_common_options(verify, cfg);
    verify->add_option("--seed", cfg.seed, "choose the base vertex and clique at random")->envname("DPG_SEED");

    auto* emit = app.add_subcommand("emit", "write a table, graph or report");
    add_instance_options(emit, cfg);
    add_common_options(emit, cfg);
    emit->add_option("--what", cfg.what)
        ->check(CLI::IsMember({"ell-polys", "param-arrays", "graph", "orthogonality", "report"}))
        ->envname("DPG_WHAT");
    emit->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "edge-list"}))->envname("DPG_FORMAT");

    auto* graph = app.add_subcommand("export-graph", "write the edge list of a concrete instance");
    add_instance_options(graph, cfg);
    add_common_options(graph, cfg);

    auto* sweep = app.add_subcommand("sweep", "verify a list of instances");
    add_common_options(sweep, cfg);
    auto* inst_opt =
        sweep->add_option("--instances", cfg.instances, "comma list of FAMILY:q:D or FAMILY:D (formal)")
            ->envname("DPG_INSTANCES");
    sweep->add_option("--preset", cfg.preset, "formal or concrete")->envname("DPG_PRESET");
    sweep->add_option("--jobs", cfg.jobs, "instances run in parallel")->envname("DPG_JOBS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    cfg.seeded = verify->count("--seed") > 0;
    try {
        if (*verify) return cmd_verify(cfg);
        if (*emit) return cmd_emit(cfg);
        if (*graph) {
            cfg.what = "graph";
            cfg.format = "edge-list";
            return cmd_emit(cfg);
        }
        if (*sweep) return cmd_sweep(cfg, inst_opt->count() > 0 || !cfg.instances.empty());
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
