#include "wcdag/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

#include "wcdag/mec.hpp"

namespace wcdag {

Simulator::Simulator(WeightedInstance inst, double alpha, double beta, int k)
    : inst_(std::move(inst)), alpha_(alpha), beta_(beta), k_(k) {
    if (alpha < 0 || beta < 0) throw std::invalid_argument("Simulator: negative cost parameter");
    if (k < 1) throw std::invalid_argument("Simulator: k must be at least 1");
    ledger_.k = k;
    view_ = essential_graph(inst_.dag);
}

std::vector<Arc> Simulator::intervene(const std::vector<int>& s_in) {
    if (s_in.empty()) throw std::invalid_argument("intervene: empty set");
    std::vector<int> s(s_in);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (static_cast<int>(s.size()) > k_)
        throw std::invalid_argument("intervene: set larger than the size bound k");
    for (int v : s)
        if (v < 0 || v >= inst_.dag.n()) throw std::invalid_argument("intervene: vertex id out of range");

    std::vector<Arc> before = view_.arc_list();
    std::set<int> in_s(s.begin(), s.end());
    for (int u : s) {
        std::vector<int> nb(view_.neighbors(u).begin(), view_.neighbors(u).end());
        for (int v : nb) {
            if (in_s.count(v)) continue;
            if (inst_.dag.has_arc(u, v))
                view_.orient(u, v);
            else
                view_.orient(v, u);
        }
    }
    view_ = meek_closure(std::move(view_));

    ledger_.add(s);
    double delta = beta_;
    for (int v : s) delta += alpha_ * inst_.weights[v];
    cost_ += delta;

    std::vector<Arc> after = view_.arc_list();
    std::vector<Arc> revealed;
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(revealed));

    if (debug_check_) {
        PGraph fresh = interventional_essential_graph(inst_.dag, ledger_);
        if (!(fresh == view_))
            throw std::logic_error("Simulator: incremental view diverged from recomputation");
    }
    if (log_) {
        *log_ << ledger_.size() << ", {";
        for (std::size_t i = 0; i < s.size(); ++i) *log_ << (i ? " " : "") << s[i];
        *log_ << "}, " << delta << ", {";
        for (std::size_t i = 0; i < revealed.size(); ++i)
            *log_ << (i ? " " : "") << '(' << revealed[i].first << ',' << revealed[i].second << ')';
        *log_ << "}\n";
    }
    return revealed;
}

}  // namespace wcdag
