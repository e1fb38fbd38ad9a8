#include "wcdag/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <tuple>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "wcdag/gen.hpp"
#include "wcdag/mec.hpp"
#include "wcdag/oracle.hpp"
#include "wcdag/rng.hpp"
#include "wcdag/search.hpp"
#include "wcdag/verify.hpp"

namespace wcdag {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::uint64_t cell_seed(const ExperimentConfig& cfg, int n, int seed_index) {
    std::uint64_t stream = static_cast<std::uint64_t>(cfg.experiment) * 1000003ULL +
                           static_cast<std::uint64_t>(n) * 1009ULL +
                           static_cast<std::uint64_t>(seed_index);
    return mix_seed(cfg.base_seed, stream);
}

bool atomic_only(const std::string& algorithm) {
    return algorithm == "naive" || algorithm == "random" || algorithm == "blackbox";
}

}  // namespace

ExperimentConfig resolve_config(ExperimentConfig cfg) {
    if (cfg.experiment < 1 || cfg.experiment > 5)
        throw std::invalid_argument("experiment id must be 1..5");
    if (cfg.ns.empty()) {
        switch (cfg.experiment) {
            case 1:
            case 4: cfg.ns = {10, 15, 20, 25}; break;
            case 2: cfg.ns = {8, 10, 12, 14}; break;
            default: cfg.ns = {100, 200}; break;  // desk-scale cap for 3 and 5
        }
    }
    if (cfg.num_seeds == 0) cfg.num_seeds = (cfg.experiment == 3 || cfg.experiment == 5) ? 20 : 100;
    for (const auto& a : cfg.algorithms)
        if (a != "weighted_separator" && a != "separator" && a != "naive" && a != "random" &&
            a != "blackbox")
            throw std::invalid_argument("unknown algorithm: " + a);
    return cfg;
}

WeightedInstance make_instance(const ExperimentConfig& cfg, int n, int seed_index) {
    std::uint64_t s = cell_seed(cfg, n, seed_index);
    Dag d = (cfg.experiment == 3)   ? gen_tree_like(n, 4, 2, 5, mix_seed(s, 0))
            : (cfg.experiment == 5) ? gen_tree_like(n, 40, 20, 50, mix_seed(s, 0))
                                    : gen_er_moral(n, 0.1, mix_seed(s, 0));
    std::vector<double> w;
    if (cfg.weight_type == "type1")
        w = weights_type1(n, mix_seed(s, 1));
    else if (cfg.weight_type == "type2")
        w = weights_type2(n, cfg.p, mix_seed(s, 1));
    else if (cfg.weight_type == "unit")
        w.assign(n, 1.0);
    else
        throw std::invalid_argument("unknown weight type: " + cfg.weight_type);
    return WeightedInstance(std::move(d), std::move(w));
}

namespace {

RunRecord run_cell(const ExperimentConfig& cfg, int n, int seed_index, int k,
                   const std::string& algorithm) {
    WeightedInstance inst = make_instance(cfg, n, seed_index);
    RunRecord rec;
    rec.experiment = cfg.experiment;
    rec.graph_class = (cfg.experiment == 3 || cfg.experiment == 5) ? "tree" : "er";
    rec.n = n;
    rec.seed = seed_index;
    rec.weight_type = cfg.weight_type;
    rec.alpha = cfg.alpha;
    rec.beta = cfg.beta;
    rec.k = k;
    rec.algorithm = algorithm;

    auto t0 = std::chrono::steady_clock::now();
    InterventionSet ledger;
    int phases = 0;
    if (algorithm == "blackbox") {
        ledger = blackbox_combine(inst, cfg.alpha, cfg.beta,
                                  [](SearchInterface& s) { weighted_search(s); });
        phases = static_cast<int>(ledger.size());
    } else {
        Simulator sim(inst, cfg.alpha, cfg.beta, k);
        SearchResult res;
        if (algorithm == "weighted_separator") {
            res = generalized_search(sim);
        } else if (algorithm == "separator") {
            res = separator_baseline(sim);
        } else if (algorithm == "naive") {
            res = naive_search(sim);
        } else if (algorithm == "random") {
            Rng rng(mix_seed(cell_seed(cfg, n, seed_index), 7));
            res = random_baseline(sim, rng);
        } else {
            throw std::invalid_argument("unknown algorithm: " + algorithm);
        }
        if (!sim.is_fully_oriented() || !(sim.view() == inst.dag.to_pgraph()))
            throw std::logic_error("run did not recover the hidden graph: " + algorithm);
        ledger = res.ledger;
        phases = res.phases;
    }
    auto t1 = std::chrono::steady_clock::now();
    if (!is_verifying_set(inst.dag, ledger))
        throw std::logic_error("ledger is not a verifying set: " + algorithm);

    rec.num_interventions = static_cast<int>(ledger.size());
    rec.total_weight = ledger.total_weight(inst.weights);
    rec.generalized_cost = ledger.generalized_cost(inst.weights, cfg.alpha, cfg.beta);
    rec.phases = phases;
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

}  // namespace

std::vector<RunRecord> run_experiment(const ExperimentConfig& raw) {
    ExperimentConfig cfg = resolve_config(raw);
    struct Cell {
        int n, seed_index, k;
        std::string algorithm;
    };
    std::vector<Cell> cells;
    for (int n : cfg.ns)
        for (int seed_index = 0; seed_index < cfg.num_seeds; ++seed_index)
            for (int k : cfg.ks)
                for (const auto& a : cfg.algorithms) {
                    if (k != 1 && atomic_only(a)) continue;
                    cells.push_back({n, seed_index, k, a});
                }
    std::vector<RunRecord> rows(cells.size());

    int threads = 0;
    if (const char* env = std::getenv("BENCH_THREADS")) threads = std::atoi(env);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(cells.size()));
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cells.size() || failed.load()) return;
            try {
                rows[i] = run_cell(cfg, cells[i].n, cells[i].seed_index, cells[i].k,
                                   cells[i].algorithm);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mu);
                failed.store(true);
                if (error.empty()) error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failed.load()) throw std::runtime_error("run_experiment: " + error);

    std::sort(rows.begin(), rows.end(), [](const RunRecord& a, const RunRecord& b) {
        auto key = [](const RunRecord& r) {
            return std::tuple(r.experiment, r.n, r.seed, r.algorithm, r.k, r.weight_type,
                              r.alpha, r.beta);
        };
        return key(a) < key(b);
    });
    return rows;
}

std::string to_csv(const std::vector<RunRecord>& rows) {
    std::ostringstream os;
    os << "experiment,graph_class,n,seed,weight_type,alpha,beta,k,algorithm,"
          "num_interventions,total_weight,generalized_cost,phases,wall_time_ms\n";
    for (const auto& r : rows)
        os << r.experiment << ',' << r.graph_class << ',' << r.n << ',' << r.seed << ','
           << r.weight_type << ',' << fmt(r.alpha) << ',' << fmt(r.beta) << ',' << r.k << ','
           << r.algorithm << ',' << r.num_interventions << ',' << fmt(r.total_weight) << ','
           << fmt(r.generalized_cost) << ',' << r.phases << ',' << fmt(r.wall_time_ms) << '\n';
    return os.str();
}

std::vector<RunRecord> parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
    std::vector<RunRecord> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::istringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) f.push_back(tok);
        if (f.size() != 14) throw std::invalid_argument("bad CSV row: " + line);
        RunRecord r;
        r.experiment = std::stoi(f[0]);
        r.graph_class = f[1];
        r.n = std::stoi(f[2]);
        r.seed = std::stoull(f[3]);
        r.weight_type = f[4];
        r.alpha = std::stod(f[5]);
        r.beta = std::stod(f[6]);
        r.k = std::stoi(f[7]);
        r.algorithm = f[8];
        r.num_interventions = std::stoi(f[9]);
        r.total_weight = std::stod(f[10]);
        r.generalized_cost = std::stod(f[11]);
        r.phases = std::stoi(f[12]);
        r.wall_time_ms = std::stod(f[13]);
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string run_metadata_json(const ExperimentConfig& raw) {
    ExperimentConfig cfg = resolve_config(raw);
    nlohmann::json j;
    j["version"] = "1.0.0";
    j["experiment"] = cfg.experiment;
    j["ns"] = cfg.ns;
    j["num_seeds"] = cfg.num_seeds;
    j["base_seed"] = cfg.base_seed;
    j["weight_type"] = cfg.weight_type;
    j["p"] = cfg.p;
    j["alpha"] = cfg.alpha;
    j["beta"] = cfg.beta;
    j["ks"] = cfg.ks;
    j["algorithms"] = cfg.algorithms;
    j["rng"] = "splitmix64";
    j["exponential_parameterization"] = "rate n^2, mean 1/n^2";
    j["tie_break"] = "lowest vertex id";
    j["phase_threshold"] = "2*ceil(log2(n)) + 2";
    j["plot_log_epsilon"] = 1e-3;
    j["lower_bound_family"] =
        "empty, singletons, pairs (n<=10), all subsets (n<=10, within budget); "
        "heuristic under-approximation of the full maximization";
    return j.dump(2) + "\n";
}

std::string render_plot_svg(const std::vector<RunRecord>& rows, const PlotSpec& spec) {
    if (rows.empty()) throw std::invalid_argument("render_plot_svg: no rows selected");
    int experiment = rows.front().experiment;
    for (const auto& r : rows)
        if (r.experiment != experiment)
            throw std::invalid_argument("render_plot_svg: rows span multiple experiments");

    auto value_of = [&](const RunRecord& r) {
        if (spec.value == "generalized_cost") return r.generalized_cost;
        if (spec.value == "total_weight") return r.total_weight;
        if (spec.value == "wall_time_ms") return r.wall_time_ms;
        if (spec.value == "num_interventions") return static_cast<double>(r.num_interventions);
        throw std::invalid_argument("render_plot_svg: unknown value field " + spec.value);
    };

    // (algorithm, k) -> n -> samples
    std::map<std::pair<std::string, int>, std::map<int, std::vector<double>>> series;
    std::set<int> ns;
    for (const auto& r : rows) {
        series[{r.algorithm, r.k}][r.n].push_back(value_of(r));
        ns.insert(r.n);
    }
    const double eps = 1e-3;
    bool clamped = false;
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        std::size_t m = v.size() / 2;
        return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
    };
    std::map<std::pair<std::string, int>, std::map<int, double>> med;
    double lo = 1e300, hi = -1e300;
    for (auto& [key, by_n] : series)
        for (auto& [n, vals] : by_n) {
            double m = median(vals);
            if (spec.log_scale) {
                if (m < eps) {
                    m = eps;
                    clamped = true;
                }
                m = std::log10(m);
            }
            med[key][n] = m;
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
    if (hi <= lo) hi = lo + 1;
    double x_lo = *ns.begin(), x_hi = *ns.rbegin();
    if (x_hi <= x_lo) x_hi = x_lo + 1;

    const int width = 720, height = 460, ml = 70, mr = 170, mt = 40, mb = 50;
    auto px = [&](double n) { return ml + (n - x_lo) / (x_hi - x_lo) * (width - ml - mr); };
    auto py = [&](double v) { return height - mb - (v - lo) / (hi - lo) * (height - mt - mb); };
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::string title = spec.title.empty()
                            ? ("experiment " + std::to_string(experiment) + ": " + spec.value)
                            : spec.title;
    os << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"15\">"
       << title << "</text>\n";
    // axes
    os << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
       << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
       << height - mb << "\" stroke=\"black\"/>\n";
    for (int n : ns) {
        os << "<text x=\"" << px(n) << "\" y=\"" << height - mb + 18
           << "\" text-anchor=\"middle\">" << n << "</text>\n";
        os << "<line x1=\"" << px(n) << "\" y1=\"" << height - mb << "\" x2=\"" << px(n)
           << "\" y2=\"" << height - mb + 4 << "\" stroke=\"black\"/>\n";
    }
    for (int t = 0; t <= 4; ++t) {
        double v = lo + (hi - lo) * t / 4;
        os << "<line x1=\"" << ml - 4 << "\" y1=\"" << py(v) << "\" x2=\"" << ml << "\" y2=\""
           << py(v) << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << ml - 8 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\">"
           << fmt(v) << "</text>\n";
    }
    os << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 10
       << "\" text-anchor=\"middle\">n</text>\n";
    os << "<text x=\"18\" y=\"" << (mt + height - mb) / 2 << "\" text-anchor=\"middle\" "
       << "transform=\"rotate(-90 18 " << (mt + height - mb) / 2 << ")\">"
       << (spec.log_scale ? "log10 median " : "median ") << spec.value << "</text>\n";
    if (clamped)
        os << "<text x=\"" << ml << "\" y=\"" << mt - 6
           << "\" fill=\"#666\">values below 1e-3 clamped for log scale</text>\n";

    int idx = 0;
    for (const auto& [key, by_n] : med) {
        const char* color = colors[idx % 8];
        std::ostringstream pts;
        for (const auto& [n, v] : by_n) pts << px(n) << ',' << py(v) << ' ';
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\""
           << pts.str() << "\"/>\n";
        for (const auto& [n, v] : by_n)
            os << "<circle cx=\"" << px(n) << "\" cy=\"" << py(v) << "\" r=\"3\" fill=\""
               << color << "\"/>\n";
        int ly = mt + 16 * idx;
        os << "<rect x=\"" << width - mr + 10 << "\" y=\"" << ly - 9
           << "\" width=\"12\" height=\"12\" fill=\"" << color << "\"/>\n";
        os << "<text x=\"" << width - mr + 28 << "\" y=\"" << ly << "\">" << key.first
           << " (k=" << key.second << ")</text>\n";
        ++idx;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace wcdag
