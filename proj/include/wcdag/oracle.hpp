#pragma once

#include <iosfwd>
#include <vector>

#include "wcdag/graph.hpp"

namespace wcdag {

/// Everything a search algorithm is allowed to see: the current partially
/// oriented view, the cost model, and the intervene action. The hidden DAG
/// stays behind this boundary.
class SearchInterface {
public:
    virtual ~SearchInterface() = default;

    virtual const PGraph& view() const = 0;
    virtual const std::vector<double>& weights() const = 0;
    virtual int k() const = 0;
    virtual double alpha() const = 0;
    virtual double beta() const = 0;

    /// Performs the intervention and returns the arcs it newly oriented.
    virtual std::vector<Arc> intervene(const std::vector<int>& s) = 0;

    virtual bool is_fully_oriented() const = 0;
};

/// Holds the hidden weighted DAG, answers interventions by orienting the cut
/// edges and closing under the orientation rules, and accumulates
/// alpha * w(ledger) + beta * |ledger|.
class Simulator : public SearchInterface {
public:
    Simulator(WeightedInstance inst, double alpha, double beta, int k);

    const PGraph& view() const override { return view_; }
    const std::vector<double>& weights() const override { return inst_.weights; }
    int k() const override { return k_; }
    double alpha() const override { return alpha_; }
    double beta() const override { return beta_; }

    std::vector<Arc> intervene(const std::vector<int>& s) override;

    bool is_fully_oriented() const override { return view_.fully_oriented(); }
    double total_cost() const { return cost_; }
    int num_interventions() const { return static_cast<int>(ledger_.size()); }
    const InterventionSet& ledger() const { return ledger_; }

    /// For harness-side validation only; never handed to algorithms.
    const Dag& ground_truth() const { return inst_.dag; }

    /// Recompute the view from scratch after every call and compare.
    void set_debug_check(bool on) { debug_check_ = on; }
    /// Line-per-intervention trace: "step, S, cost_delta, arcs_revealed".
    void set_replay_log(std::ostream* os) { log_ = os; }

private:
    WeightedInstance inst_;
    PGraph view_;
    InterventionSet ledger_;
    double alpha_, beta_;
    int k_;
    double cost_ = 0;
    bool debug_check_ = false;
    std::ostream* log_ = nullptr;
};

}  // namespace wcdag
