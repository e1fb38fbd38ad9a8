#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "wcdag/bench.hpp"
#include "wcdag/mec.hpp"

using namespace wcdag;

namespace {

// CSV with the wall_time_ms column dropped, for determinism comparisons.
std::string strip_time(const std::string& csv) {
    std::istringstream is(csv);
    std::ostringstream os;
    std::string line;
    while (std::getline(is, line)) {
        auto pos = line.rfind(',');
        os << line.substr(0, pos) << '\n';
    }
    return os.str();
}

ExperimentConfig tiny_config() {
    ExperimentConfig cfg;
    cfg.experiment = 1;
    cfg.ns = {8, 10};
    cfg.num_seeds = 2;
    cfg.weight_type = "type2";
    cfg.alpha = 1;
    cfg.beta = 1;
    cfg.ks = {1, 2};
    cfg.algorithms = {"weighted_separator", "separator", "naive", "random", "blackbox"};
    return cfg;
}

}  // namespace

TEST_CASE("config defaults") {
    ExperimentConfig cfg;
    cfg.experiment = 1;
    auto r1 = resolve_config(cfg);
    CHECK(r1.ns == std::vector<int>{10, 15, 20, 25});
    CHECK(r1.num_seeds == 100);
    cfg.experiment = 2;
    CHECK(resolve_config(cfg).ns == std::vector<int>{8, 10, 12, 14});
    cfg.experiment = 3;
    auto r3 = resolve_config(cfg);
    CHECK(r3.ns == std::vector<int>{100, 200});
    CHECK(r3.num_seeds == 20);
    cfg.experiment = 4;
    CHECK(resolve_config(cfg).ns == std::vector<int>{10, 15, 20, 25});
    cfg.experiment = 5;
    CHECK(resolve_config(cfg).num_seeds == 20);

    cfg.ns = {6};
    cfg.num_seeds = 3;
    CHECK(resolve_config(cfg).ns == std::vector<int>{6});
    CHECK(resolve_config(cfg).num_seeds == 3);

    cfg.experiment = 0;
    CHECK_THROWS_AS(resolve_config(cfg), std::invalid_argument);
    cfg.experiment = 6;
    CHECK_THROWS_AS(resolve_config(cfg), std::invalid_argument);
    cfg.experiment = 1;
    cfg.algorithms = {"gradient_descent"};
    CHECK_THROWS_AS(resolve_config(cfg), std::invalid_argument);
}

TEST_CASE("instances per cell are deterministic and class appropriate") {
    ExperimentConfig cfg;
    cfg.experiment = 1;
    WeightedInstance a = make_instance(cfg, 12, 3);
    WeightedInstance b = make_instance(cfg, 12, 3);
    CHECK(a.dag == b.dag);
    CHECK(a.weights == b.weights);
    CHECK_FALSE(make_instance(cfg, 12, 4).dag == a.dag);
    cfg.base_seed = 2;
    CHECK_FALSE(make_instance(cfg, 12, 3).dag == a.dag);
    CHECK(v_structures(a.dag).empty());

    ExperimentConfig tree;
    tree.experiment = 3;
    WeightedInstance t = make_instance(tree, 60, 0);
    CHECK(v_structures(t.dag).empty());
    CHECK(t.dag.num_arcs() >= 59);

    cfg.base_seed = 1;
    cfg.weight_type = "type2";
    auto w2 = make_instance(cfg, 10, 0).weights;
    CHECK(std::count(w2.begin(), w2.end(), 100.0) == 1);  // ceil(0.1 * 10)
    cfg.weight_type = "unit";
    CHECK(make_instance(cfg, 10, 0).weights == std::vector<double>(10, 1.0));
    cfg.weight_type = "bogus";
    CHECK_THROWS_AS(make_instance(cfg, 10, 0), std::invalid_argument);
}

TEST_CASE("experiment matrix shape and ordering") {
    auto rows = run_experiment(tiny_config());
    // Per (n, seed): five algorithms at k = 1 plus the two size-capable
    // ones at k = 2.
    CHECK(rows.size() == 2 * 2 * (5 + 2));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        auto key = [](const RunRecord& r) {
            return std::tuple(r.experiment, r.n, r.seed, r.algorithm, r.k);
        };
        CHECK(key(rows[i - 1]) < key(rows[i]));
    }
    for (const auto& r : rows) {
        CHECK(r.graph_class == "er");
        CHECK(r.num_interventions > 0);
        CHECK(r.total_weight > 0);
        CHECK(r.generalized_cost ==
              doctest::Approx(r.total_weight * r.alpha + r.num_interventions * r.beta));
        CHECK(r.phases > 0);
        if (r.algorithm == "naive" || r.algorithm == "random" || r.algorithm == "blackbox")
            CHECK(r.k == 1);
    }
}

TEST_CASE("runs are reproducible regardless of thread count") {
    auto cfg = tiny_config();
    cfg.ns = {8};
    setenv("BENCH_THREADS", "1", 1);
    std::string a = strip_time(to_csv(run_experiment(cfg)));
    setenv("BENCH_THREADS", "3", 1);
    std::string b = strip_time(to_csv(run_experiment(cfg)));
    unsetenv("BENCH_THREADS");
    std::string c = strip_time(to_csv(run_experiment(cfg)));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("CSV round trip") {
    RunRecord r;
    r.experiment = 2;
    r.graph_class = "er";
    r.n = 14;
    r.seed = 9;
    r.weight_type = "type1";
    r.alpha = 0.5;
    r.beta = 1;
    r.k = 3;
    r.algorithm = "weighted_separator";
    r.num_interventions = 7;
    r.total_weight = 0.0123456;
    r.generalized_cost = 7.00617;
    r.phases = 4;
    r.wall_time_ms = 1.25;
    std::string csv = to_csv({r});
    CHECK(csv ==
          "experiment,graph_class,n,seed,weight_type,alpha,beta,k,algorithm,"
          "num_interventions,total_weight,generalized_cost,phases,wall_time_ms\n"
          "2,er,14,9,type1,0.5,1,3,weighted_separator,7,0.0123456,7.00617,4,1.25\n");
    auto back = parse_csv(csv);
    REQUIRE(back.size() == 1);
    CHECK(back[0].algorithm == r.algorithm);
    CHECK(back[0].total_weight == doctest::Approx(r.total_weight));
    CHECK(back[0].seed == r.seed);
    CHECK(back[0].k == r.k);

    CHECK_THROWS_AS(parse_csv(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_csv("header\n1,2,3\n"), std::invalid_argument);
}

TEST_CASE("run metadata records every knob") {
    auto j = nlohmann::json::parse(run_metadata_json(tiny_config()));
    CHECK(j["experiment"] == 1);
    CHECK(j["ns"] == std::vector<int>{8, 10});
    CHECK(j["num_seeds"] == 2);
    CHECK(j["base_seed"] == 1);
    CHECK(j["weight_type"] == "type2");
    CHECK(j["alpha"] == 1);
    CHECK(j["ks"] == std::vector<int>{1, 2});
    CHECK(j["rng"] == "splitmix64");
    CHECK(j.contains("exponential_parameterization"));
    CHECK(j.contains("tie_break"));
    CHECK(j.contains("phase_threshold"));
    CHECK(j.contains("plot_log_epsilon"));
    CHECK(j.contains("lower_bound_family"));
    CHECK(j["algorithms"].size() == 5);
}

TEST_CASE("SVG rendering") {
    auto cfg = tiny_config();
    cfg.ns = {8};
    cfg.ks = {1};
    cfg.algorithms = {"weighted_separator", "naive"};
    auto rows = run_experiment(cfg);
    PlotSpec spec;
    std::string svg = render_plot_svg(rows, spec);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("weighted_separator (k=1)") != std::string::npos);
    CHECK(svg.find("naive (k=1)") != std::string::npos);
    CHECK(svg.find("generalized_cost") != std::string::npos);

    PlotSpec titled;
    titled.title = "custom title";
    CHECK(render_plot_svg(rows, titled).find("custom title") != std::string::npos);

    CHECK_THROWS_AS(render_plot_svg({}, spec), std::invalid_argument);
    PlotSpec bad;
    bad.value = "nonsense";
    CHECK_THROWS_AS(render_plot_svg(rows, bad), std::invalid_argument);

    auto mixed = rows;
    mixed.push_back(rows.front());
    mixed.back().experiment = 4;
    CHECK_THROWS_AS(render_plot_svg(mixed, spec), std::invalid_argument);

    // Zero values on a log axis get clamped with a note.
    auto zero = rows;
    for (auto& r : zero) r.generalized_cost = 0;
    PlotSpec log_spec;
    log_spec.log_scale = true;
    CHECK(render_plot_svg(zero, log_spec).find("clamped") != std::string::npos);
    CHECK(render_plot_svg(rows, log_spec).find("log10 median") != std::string::npos);
}
