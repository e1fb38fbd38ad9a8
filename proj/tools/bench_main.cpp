#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "wcdag/bench.hpp"
#include "wcdag/gen.hpp"
#include "wcdag/graph.hpp"
#include "wcdag/rng.hpp"
#include "wcdag/verify.hpp"

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark harness for adaptive search on weighted causal DAGs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate an instance file");
    std::string gen_class = "er", gen_weights = "type1", gen_out = "instance.wcdag";
    int gen_n = 20, gen_degree = 4, gen_emin = 2, gen_emax = 5;
    double gen_rho = 0.1, gen_p = 0.1, gen_heavy = 1e9;
    std::uint64_t gen_seed = 1;
    gen->add_option("--class", gen_class, "er|tree|star|path")->default_val("er");
    gen->add_option("--n", gen_n);
    gen->add_option("--rho", gen_rho);
    gen->add_option("--degree", gen_degree);
    gen->add_option("--emin", gen_emin);
    gen->add_option("--emax", gen_emax);
    gen->add_option("--weights", gen_weights, "type1|type2|unit");
    gen->add_option("--p", gen_p);
    gen->add_option("--heavy", gen_heavy);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--out", gen_out);

    // run
    auto* run = app.add_subcommand("run", "Run an experiment matrix");
    wcdag::ExperimentConfig cfg;
    std::string run_out = "out";
    run->add_option("--experiment", cfg.experiment, "1..5");
    run->add_option("--weights", cfg.weight_type, "type1|type2|unit");
    run->add_option("--alpha", cfg.alpha);
    run->add_option("--beta", cfg.beta);
    run->add_option("--k", cfg.ks, "size bounds, repeatable");
    run->add_option("--seeds", cfg.num_seeds, "number of seeds (0 = default)");
    run->add_option("--base-seed", cfg.base_seed);
    run->add_option("--n", cfg.ns, "sizes, repeatable (empty = default)");
    run->add_option("--algorithms", cfg.algorithms, "roster subset");
    run->add_option("--p", cfg.p, "heavy fraction for type2 weights");
    run->add_option("--out", run_out, "output directory");

    // verify
    auto* ver = app.add_subcommand("verify", "Verification numbers of an instance");
    std::string ver_in;
    double ver_alpha = 1, ver_beta = 0;
    int ver_k = 1;
    long long ver_budget = 4096;
    ver->add_option("--in", ver_in)->required();
    ver->add_option("--alpha", ver_alpha);
    ver->add_option("--beta", ver_beta);
    ver->add_option("--k", ver_k);
    ver->add_option("--budget", ver_budget);

    // lb
    auto* lb = app.add_subcommand("lb", "Lower bound on the optimal cost");
    std::string lb_in;
    double lb_alpha = 1, lb_beta = 0;
    int lb_k = 1;
    long long lb_budget = 4096;
    lb->add_option("--in", lb_in)->required();
    lb->add_option("--alpha", lb_alpha);
    lb->add_option("--beta", lb_beta);
    lb->add_option("--k", lb_k);
    lb->add_option("--budget", lb_budget);

    // plot
    auto* plot = app.add_subcommand("plot", "Render an SVG chart from a CSV");
    std::string plot_csv, plot_out = "plot.svg", plot_value = "generalized_cost";
    bool plot_log = false;
    plot->add_option("--csv", plot_csv)->required();
    plot->add_option("--value", plot_value, "generalized_cost|total_weight|wall_time_ms");
    plot->add_flag("--log", plot_log, "log10 y axis");
    plot->add_option("--out", plot_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            wcdag::WeightedInstance inst;
            if (gen_class == "star") {
                inst = wcdag::star_instance(gen_n, gen_heavy);
            } else if (gen_class == "path") {
                inst = wcdag::path_instance(gen_n);
            } else {
                wcdag::Dag d = gen_class == "tree"
                                   ? wcdag::gen_tree_like(gen_n, gen_degree, gen_emin, gen_emax,
                                                          gen_seed)
                                   : wcdag::gen_er_moral(gen_n, gen_rho, gen_seed);
                std::vector<double> w;
                if (gen_weights == "type1")
                    w = wcdag::weights_type1(gen_n, wcdag::mix_seed(gen_seed, 1));
                else if (gen_weights == "type2")
                    w = wcdag::weights_type2(gen_n, gen_p, wcdag::mix_seed(gen_seed, 1));
                else
                    w.assign(gen_n, 1.0);
                inst = wcdag::WeightedInstance(std::move(d), std::move(w));
            }
            wcdag::save_instance(gen_out, inst);
            std::cout << "wrote " << gen_out << " (n=" << inst.dag.n()
                      << ", arcs=" << inst.dag.num_arcs() << ")\n";
        } else if (*run) {
            auto rows = wcdag::run_experiment(cfg);
            std::filesystem::create_directories(run_out);
            write_file(run_out + "/results.csv", wcdag::to_csv(rows));
            write_file(run_out + "/metadata.json", wcdag::run_metadata_json(cfg));
            wcdag::PlotSpec cost_spec;
            cost_spec.log_scale = true;
            write_file(run_out + "/cost.svg", wcdag::render_plot_svg(rows, cost_spec));
            wcdag::PlotSpec time_spec;
            time_spec.value = "wall_time_ms";
            time_spec.log_scale = true;
            write_file(run_out + "/runtime.svg", wcdag::render_plot_svg(rows, time_spec));
            std::cout << "wrote " << rows.size() << " rows to " << run_out << "/results.csv\n";
        } else if (*ver) {
            auto inst = wcdag::load_instance(ver_in);
            auto nums = wcdag::atomic_verification_numbers(inst);
            std::cout << "nu1 = " << nums.nu1 << "\n";
            std::cout << "nubar1 = " << nums.nubar1 << "\n";
            try {
                // Worst case over the class needs enumeration; only small
                // classes are feasible.
                auto bm = wcdag::benchmark_max(inst);
                std::cout << "nu1_max = " << bm.nu1_max << "\n";
                std::cout << "nubar1_max = " << bm.nubar1_max << "\n";
            } catch (const std::runtime_error&) {
                std::cout << "nu1_max = n/a (class too large to enumerate)\n";
                std::cout << "nubar1_max = n/a (class too large to enumerate)\n";
            }
            std::cout << "lower_bound = "
                      << wcdag::lower_bound(inst.dag, inst.weights, ver_alpha, ver_beta, ver_k,
                                            ver_budget)
                      << "\n";
        } else if (*lb) {
            auto inst = wcdag::load_instance(lb_in);
            std::cout << wcdag::lower_bound(inst.dag, inst.weights, lb_alpha, lb_beta, lb_k,
                                            lb_budget)
                      << "\n";
        } else if (*plot) {
            auto rows = wcdag::parse_csv(read_file(plot_csv));
            wcdag::PlotSpec spec;
            spec.value = plot_value;
            spec.log_scale = plot_log;
            write_file(plot_out, wcdag::render_plot_svg(rows, spec));
            std::cout << "wrote " << plot_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
