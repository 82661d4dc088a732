#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "aj/rng.hpp"

namespace aj {

// Row-stochastic jammer dynamics. State i is labelled with channel i
// (labels are a bijection, which is what makes the chain unifilar), and
// every entry is strictly positive so every state is reachable in one step.
struct TransitionMatrix {
    int n = 0;
    std::vector<double> p;     // row-major n*n
    std::vector<int> label;    // state -> channel, identity unless permuted

    double operator()(int i, int j) const { return p[static_cast<std::size_t>(i) * n + j]; }
    std::span<const double> row(int i) const {
        return {p.data() + static_cast<std::size_t>(i) * n, static_cast<std::size_t>(n)};
    }

    // Validates row sums (within 1e-12), strict positivity, and label
    // distinctness; throws InvalidMatrix otherwise.
    static TransitionMatrix validated(int n, std::vector<double> rows,
                                      std::vector<int> labels = {});
};

// Parameters of the circulant family with exponential decay: row i carries
// kappa*theta^d + epsilon at circular distance d, with kappa solved from the
// row-sum constraint kappa*(1 + 2*sum_{d=1..rho} theta^d) = 1 - n*epsilon.
struct ChainSpec {
    int n = 5;
    double theta = 0.5;              // decay, in [0, 1)
    double epsilon = 1e-3;           // floor keeping every entry positive
    std::optional<std::vector<int>> permutation; // bijection on {0..n-1}, applied to rows
    std::uint64_t seed = 0;          // seed used when drawing the permutation

    void validate() const;           // throws InvalidSpec
};

struct UncertaintyReport {
    std::vector<double> state_entropies; // H_i, bits
    std::vector<double> stationary;      // psi_i
    double chain_entropy = 0.0;          // H{X} = sum psi_i H_i, bits
    double lambda_max = 0.0;             // spectral radius of the connection matrix
    double normalized = 0.0;             // H{X} / log2(lambda_max)
};

// Exact dynamic-programming solution of the prediction MDP where the
// one-step reward for (s, a) is the hit probability p_{s,a}. Transitions do
// not depend on the action, so the Q argmax/argmin per row must coincide
// with the row argmax/argmin of the transition matrix itself.
struct PolicyOracle {
    std::vector<int> pi_star;                 // per-state argmax action
    std::vector<int> pi_lara;                 // canonical argmin (lowest index)
    std::vector<std::vector<int>> pi_lara_set; // all argmin actions per state
    std::vector<double> q_star;               // row-major n*n
    double gamma = 0.0;

    double q(int s, int a) const {
        return q_star[static_cast<std::size_t>(s) * pi_star.size() + a];
    }
};

TransitionMatrix build_circulant(const ChainSpec& spec);

UncertaintyReport uncertainty(const TransitionMatrix& P);

// Solves uncertainty(build_circulant({n, theta, epsilon})).normalized == target_h
// for theta by bisection; throws InvalidSpec when the target lies outside the
// achievable range, reporting that range.
double calibrate_theta(int n, double epsilon, double target_h, double tol = 1e-6,
                       int max_iter = 200);

int sample_next(const TransitionMatrix& P, int state, Rng& rng);

PolicyOracle exact_oracle(const TransitionMatrix& P, double gamma);

std::vector<int> random_permutation(int n, Rng& rng);

// Row permutation: row i of the result is row sigma[i] of P. Labels stay put.
TransitionMatrix permute_rows(const TransitionMatrix& P, const std::vector<int>& sigma);

} // namespace aj
