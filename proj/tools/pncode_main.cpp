#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include <CLI11.hpp>

#include "pncode/report.hpp"

namespace {

using namespace pncode;

std::uint64_t env_budget(std::uint64_t fallback) {
    const char* v = std::getenv("PNCODE_BUDGET");
    if (!v) return fallback;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        std::cerr << "warning: ignoring malformed PNCODE_BUDGET\n";
        return fallback;
    }
}

void write_out(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << payload;
}

struct RunArgs {
    std::string config_path;
    std::vector<std::string> overrides;  // key=value
    std::vector<std::string> params;     // k=0 etc
    std::vector<std::string> checks;
    std::string out_path;
};

ExperimentConfig assemble(const RunArgs& a) {
    ExperimentConfig cfg;
    cfg.budget = env_budget(cfg.budget);
    if (!a.config_path.empty()) {
        cfg = load_config_file(a.config_path);
        cfg.budget = env_budget(cfg.budget);
    }
    for (const std::string& ov : a.overrides) {
        std::size_t eq = ov.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("override must be key=value: " + ov);
        apply_override(cfg, ov.substr(0, eq), ov.substr(eq + 1));
    }
    for (const std::string& pv : a.params) {
        std::size_t eq = pv.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--param must be key=value: " + pv);
        cfg.params[pv.substr(0, eq)] = pv.substr(eq + 1);
    }
    if (!a.checks.empty()) {
        std::string joined;
        for (const std::string& c : a.checks) {
            if (!joined.empty()) joined += ",";
            joined += c;
        }
        apply_override(cfg, "checks", joined);
    }
    return cfg;
}

int cmd_run(const RunArgs& a) {
    ExperimentConfig cfg;
    try {
        cfg = assemble(a);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    Report rep = run_experiment(cfg);
    write_out(emit_report(rep, cfg.emit), a.out_path);
    return report_exit_code(rep);
}

int cmd_batch(const std::string& dir, unsigned jobs, const std::string& out_path) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".cfg")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) {
        std::cerr << "no .cfg files in " << dir << "\n";
        return 2;
    }
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());

    std::vector<Report> reports(files.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= files.size()) return;
            try {
                ExperimentConfig cfg = load_config_file(files[i].string());
                cfg.budget = env_budget(cfg.budget);
                if (cfg.name.empty()) cfg.name = files[i].filename().string();
                reports[i] = run_experiment(cfg);
            } catch (const std::exception& e) {
                reports[i].complete = false;
                reports[i].failed_stage = "config";
                reports[i].error = e.what();
                reports[i].config.name = files[i].filename().string();
            }
        }
    };
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, files.size()); ++t)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();

    std::ostringstream os;
    int exit = 0;
    for (std::size_t i = 0; i < files.size(); ++i) {
        int code = report_exit_code(reports[i]);
        exit = std::max(exit, code);
        os << (code == 0 ? "PASS" : "FAIL") << " (" << code << ") " << files[i].filename().string()
           << ": " << reports[i].family_label;
        if (reports[i].enum_params) os << " " << reports[i].enum_params->str();
        if (!reports[i].error.empty()) os << " [" << reports[i].error << "]";
        os << "\n";
    }
    write_out(os.str(), out_path);
    return exit;
}

int cmd_predict_only(std::uint32_t p, std::uint32_t m, const std::string& kind, int epsilon,
                     bool punctured, const std::string& emit, const std::string& out_path) {
    try {
        Prediction pred;
        if (punctured) {
            pred = predict_punctured(p, m, kind == "cm" ? PuncturedKind::Cm : PuncturedKind::PnDo);
        } else if (kind == "cm") {
            if (p != 3) throw std::invalid_argument("cm predictions require p = 3");
            pred = predict_cm(m);
        } else {
            std::optional<int> eps;
            if (epsilon != 0) eps = epsilon;
            pred = predict_pn_do(p, m, eps);
        }
        if (emit == "json") {
            nlohmann::ordered_json j;
            j["source"] = prediction_source_name(pred.source);
            j["distribution"] = pred.distribution.to_json();
            if (pred.epsilon) j["epsilon"] = *pred.epsilon;
            if (pred.dual_params) j["dual_params"] = pred.dual_params->str();
            if (pred.dual_a4) j["dual_a4"] = pred.dual_a4->str();
            if (pred.dual_degenerate) j["dual_degenerate"] = true;
            write_out(j.dump(2) + "\n", out_path);
        } else {
            std::ostringstream os;
            os << prediction_source_name(pred.source) << " "
               << code_params(pred.distribution).str() << ": "
               << pred.distribution.enumerator_string() << "\n";
            if (pred.dual_params) os << "dual: " << pred.dual_params->str() << "\n";
            if (pred.dual_a4) os << "dual A4: " << pred.dual_a4->str() << "\n";
            if (pred.dual_degenerate) os << "dual: degenerate (zero code)\n";
            write_out(os.str(), out_path);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

int cmd_bounds(const std::string& bound, std::uint32_t n, std::uint32_t k, std::uint32_t d,
               std::uint32_t q) {
    try {
        if (bound == "sp") {
            BoundReport br = sphere_packing_check(n, k, d, q);
            std::cout << "SpherePacking [" << n << "," << k << "," << d << "]_" << q << ": "
                      << verdict_name(br.verdict) << "\n"
                      << "q^k*ball = " << br.packed.str() << "\n"
                      << "q^n      = " << br.space.str() << "\n"
                      << "largest passing d = " << br.best_d << "\n";
            return 0;
        }
        if (bound == "graph") {
            Rat b = graph_bound(q, n, d);
            bool ruled = graph_bound_rules_out(q, n, k, d);
            std::cout << "graph-theory bound on A_" << q << "(" << n << "," << d << ") = " << b.str()
                      << "\n"
                      << "q^k = " << ipow(q, k).str() << " => [" << n << "," << k << "," << d
                      << "]_" << q << " is " << (ruled ? "ruled out" : "not ruled out") << "\n";
            return 0;
        }
        std::cerr << "unknown bound '" << bound << "' (use sp or graph)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subfield codes from planar functions: exact enumeration vs closed forms"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "run one experiment");
    run->add_option("--config", run_args.config_path, "flat key=value config file");
    std::uint32_t opt_p = 0, opt_m = 0;
    std::string opt_family, opt_emit, opt_name;
    std::uint64_t opt_budget = 0, opt_ceiling = 0;
    run->add_option("--p", opt_p, "field characteristic (odd prime)");
    run->add_option("--m", opt_m, "extension degree");
    run->add_option("--family", opt_family, "f1|cm|f3|f4|f5|f6|f7|f8|raw");
    run->add_option("--param", run_args.params, "family parameter key=value (repeatable)");
    run->add_option("--check", run_args.checks,
                    "check to run (repeatable; 'all' for everything applicable)");
    run->add_option("--emit", opt_emit, "text|json|csv");
    run->add_option("--budget", opt_budget,
                    "codeword-symbol operation budget (default 1e8, or PNCODE_BUDGET)");
    run->add_option("--ceiling", opt_ceiling, "field size ceiling");
    run->add_option("--name", opt_name, "experiment tag");
    run->add_option("--out", run_args.out_path, "write the report to a file");

    std::string batch_dir, batch_out;
    unsigned batch_jobs = 0;
    auto* batch = app.add_subcommand("batch", "run every .cfg experiment in a directory");
    batch->add_option("--dir", batch_dir, "directory of .cfg files")->required();
    batch->add_option("--jobs", batch_jobs, "parallel experiments (default: hardware)");
    batch->add_option("--out", batch_out, "write the summary to a file");

    std::uint32_t po_p = 3, po_m = 2;
    std::string po_kind = "pn_do", po_emit = "text", po_out;
    int po_eps = 0;
    bool po_punct = false;
    auto* po = app.add_subcommand("predict-only", "closed-form distribution without enumeration");
    po->add_option("--p", po_p, "field characteristic");
    po->add_option("--m", po_m, "extension degree");
    po->add_option("--kind", po_kind, "pn_do|cm");
    po->add_option("--epsilon", po_eps, "epsilon for even m (pn_do)");
    po->add_flag("--punctured", po_punct, "punctured code tables");
    po->add_option("--emit", po_emit, "text|json");
    po->add_option("--out", po_out, "write to a file");

    std::string b_bound = "sp";
    std::uint32_t b_n = 0, b_k = 0, b_d = 0, b_q = 0;
    auto* bd = app.add_subcommand("bounds", "evaluate a bound on [n,k,d]_q");
    bd->add_option("--bound", b_bound, "sp|graph");
    bd->add_option("--n", b_n)->required();
    bd->add_option("--k", b_k)->required();
    bd->add_option("--d", b_d)->required();
    bd->add_option("--q", b_q)->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        if (opt_p) run_args.overrides.push_back("p=" + std::to_string(opt_p));
        if (opt_m) run_args.overrides.push_back("m=" + std::to_string(opt_m));
        if (!opt_family.empty()) run_args.overrides.push_back("family=" + opt_family);
        if (!opt_emit.empty()) run_args.overrides.push_back("emit=" + opt_emit);
        if (opt_budget) run_args.overrides.push_back("budget=" + std::to_string(opt_budget));
        if (opt_ceiling) run_args.overrides.push_back("ceiling=" + std::to_string(opt_ceiling));
        if (!opt_name.empty()) run_args.overrides.push_back("name=" + opt_name);
        return cmd_run(run_args);
    }
    if (batch->parsed()) return cmd_batch(batch_dir, batch_jobs, batch_out);
    if (po->parsed()) return cmd_predict_only(po_p, po_m, po_kind, po_eps, po_punct, po_emit, po_out);
    if (bd->parsed()) return cmd_bounds(b_bound, b_n, b_k, b_d, b_q);
    return 2;
}
