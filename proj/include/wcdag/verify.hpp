#pragma once

#include <vector>

#include "wcdag/graph.hpp"

namespace wcdag {

/// True iff performing I pins down every orientation of d.
bool is_verifying_set(const Dag& d, const InterventionSet& I);

struct VerificationNumbers {
    int nu1 = 0;            // fewest atomic interventions that verify
    double nubar1 = 0;      // cheapest total weight that verifies
    std::vector<int> min_size_witness;
    std::vector<int> min_weight_witness;
};

/// Exact minimum-size and minimum-weight vertex covers of the covered edges.
VerificationNumbers atomic_verification_numbers(const WeightedInstance& inst);

struct BenchmarkMax {
    int nu1_max = 0;
    double nubar1_max = 0;
};

/// Worst case of atomic_verification_numbers over every DAG in the Markov
/// equivalence class. Brute force; inherits the 25-undirected-edge guard.
BenchmarkMax benchmark_max(const WeightedInstance& inst);

/// (ceil(nu1_max / k), nubar1_max): valid lower bounds for size-k sets.
std::pair<int, double> relate_k_bounds(int nu1_max, double nubar1_max, int k);

struct ZetaRecord {
    std::vector<int> component;  // original vertex ids, always >= 2 of them
    double zeta1 = 0, zeta2 = 0, zeta3 = 0, zeta4 = 0, zeta5 = 0, zeta6 = 0;
};

/// Per chain component H of the interventional essential graph under atomic I:
///   zeta1 = 1/2 max over cliques C of (w(C) - max vertex weight in C)
///   zeta2 = 1/2 max over v of min{w(v), sum over components of H - v of the
///           best clique weight inside that component's intersection with N(v)}
///   zeta3/zeta4: same shapes with per-vertex cost alpha*w + beta
///   zeta5/zeta6: same with alpha*w + beta/k
std::vector<ZetaRecord> zeta_terms(const Dag& d, const std::vector<double>& w,
                                   const InterventionSet& I, double alpha, double beta, int k);

/// Certified lower bound on the optimal verification cost: maximizes the
/// summed per-component zeta bound over a restricted family of atomic I
/// (empty set, singletons, pairs for n <= 10, all subsets for n <= 10 when
/// the candidate budget allows). Never overshoots; not necessarily tight.
double lower_bound(const Dag& d, const std::vector<double>& w, double alpha, double beta,
                   int k, long long budget);

}  // namespace wcdag
