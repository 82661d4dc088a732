#include "aj/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "aj/error.hpp"

namespace aj {

namespace {

bool is_bijection(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

// Order-invariant sum: accumulating in sorted order makes the result depend
// only on the multiset of addends, so permuting states cannot change it.
double sorted_sum(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    double acc = 0.0;
    for (double x : xs) acc += x;
    return acc;
}

std::vector<double> state_entropies(const TransitionMatrix& P) {
    std::vector<double> h(P.n);
    for (int i = 0; i < P.n; ++i) {
        double hi = 0.0;
        for (int j = 0; j < P.n; ++j) hi -= P(i, j) * std::log2(P(i, j));
        h[i] = hi;
    }
    return h;
}

bool doubly_stochastic(const TransitionMatrix& P, double tol = 1e-9) {
    for (int j = 0; j < P.n; ++j) {
        double col = 0.0;
        for (int i = 0; i < P.n; ++i) col += P(i, j);
        if (std::abs(col - 1.0) > tol) return false;
    }
    return true;
}

std::vector<double> stationary_distribution(const TransitionMatrix& P) {
    const int n = P.n;
    // A doubly stochastic ergodic chain has the uniform distribution as its
    // unique fixed point; return it exactly rather than iterating into it.
    if (doubly_stochastic(P)) return std::vector<double>(n, 1.0 / n);

    std::vector<double> x(n, 1.0 / n), next(n);
    for (int iter = 0; iter < 100000; ++iter) {
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += x[i] * P(i, j);
            next[j] = s;
        }
        double change = 0.0;
        for (int j = 0; j < n; ++j) change += std::abs(next[j] - x[j]);
        x.swap(next);
        if (change < 1e-12) return x;
    }
    throw InvalidMatrix("stationary distribution did not converge");
}

} // namespace

TransitionMatrix TransitionMatrix::validated(int n, std::vector<double> rows,
                                             std::vector<int> labels) {
    if (n < 1 || rows.size() != static_cast<std::size_t>(n) * n)
        throw InvalidMatrix("transition matrix must be n*n with n >= 1");
    for (int i = 0; i < n; ++i) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) {
            double v = rows[static_cast<std::size_t>(i) * n + j];
            if (!(v > 0.0) || !std::isfinite(v))
                throw InvalidMatrix("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") must be strictly positive");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw InvalidMatrix("row " + std::to_string(i) + " sums to " + std::to_string(sum));
    }
    if (labels.empty()) {
        labels.resize(n);
        std::iota(labels.begin(), labels.end(), 0);
    }
    if (!is_bijection(labels, n))
        throw InvalidMatrix("state labels must be distinct channels");
    return TransitionMatrix{n, std::move(rows), std::move(labels)};
}

void ChainSpec::validate() const {
    if (n < 3 || n % 2 == 0)
        throw InvalidSpec("chain.n must be odd and >= 3, got " + std::to_string(n));
    if (!(theta >= 0.0 && theta < 1.0))
        throw InvalidSpec("chain.theta must lie in [0, 1)");
    if (!(epsilon > 0.0) || n * epsilon >= 1.0)
        throw InvalidSpec("chain.epsilon must satisfy 0 < n*epsilon < 1");
    if (permutation && !is_bijection(*permutation, n))
        throw InvalidSpec("chain permutation must be a bijection on {0..n-1}");
}

TransitionMatrix build_circulant(const ChainSpec& spec) {
    spec.validate();
    const int n = spec.n;
    const int rho = (n - 1) / 2;

    double decay_sum = 0.0;
    for (int d = 1; d <= rho; ++d) decay_sum += std::pow(spec.theta, d);
    const double kappa = (1.0 - n * spec.epsilon) / (1.0 + 2.0 * decay_sum);

    std::vector<double> rows(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int fwd = (j - i + n) % n;
            int d = std::min(fwd, n - fwd);
            rows[static_cast<std::size_t>(i) * n + j] =
                (d == 0 ? kappa : kappa * std::pow(spec.theta, d)) + spec.epsilon;
        }
    }
    TransitionMatrix P = TransitionMatrix::validated(n, std::move(rows));
    if (spec.permutation) P = permute_rows(P, *spec.permutation);
    return P;
}

UncertaintyReport uncertainty(const TransitionMatrix& P) {
    // Re-validate: this entry point also accepts user-supplied matrices.
    TransitionMatrix checked = TransitionMatrix::validated(P.n, P.p, P.label);

    UncertaintyReport r;
    r.state_entropies = state_entropies(checked);
    r.stationary = stationary_distribution(checked);

    std::vector<double> weighted(checked.n);
    for (int i = 0; i < checked.n; ++i) weighted[i] = r.stationary[i] * r.state_entropies[i];
    r.chain_entropy = sorted_sum(std::move(weighted));

    // Every entry is positive, so the connection matrix is all-ones and its
    // spectral radius is exactly n.
    r.lambda_max = static_cast<double>(checked.n);
    r.normalized = r.chain_entropy / std::log2(r.lambda_max);
    return r;
}

double calibrate_theta(int n, double epsilon, double target_h, double tol, int max_iter) {
    if (!(tol > 0.0)) throw InvalidSpec("calibration tolerance must be positive");
    auto h_of = [&](double theta) {
        return uncertainty(build_circulant({.n = n, .theta = theta, .epsilon = epsilon}))
            .normalized;
    };
    double lo = 0.0, hi = 1.0 - 1e-12;
    double h_lo = h_of(lo), h_hi = h_of(hi);
    if (target_h < h_lo || target_h > h_hi)
        throw InvalidSpec("target normalized uncertainty " + std::to_string(target_h) +
                          " outside achievable range [" + std::to_string(h_lo) + ", " +
                          std::to_string(h_hi) + "] for n=" + std::to_string(n));

    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        mid = 0.5 * (lo + hi);
        double h = h_of(mid);
        if (std::abs(h - target_h) <= tol) return mid;
        (h < target_h ? lo : hi) = mid;
    }
    return mid;
}

int sample_next(const TransitionMatrix& P, int state, Rng& rng) {
    return rng.categorical(P.row(state));
}

PolicyOracle exact_oracle(const TransitionMatrix& P, double gamma) {
    if (!(gamma > 0.0 && gamma < 1.0)) throw InvalidSpec("gamma must lie in (0, 1)");
    const int n = P.n;

    // reward(s, a) = p_{s,a} and next-state law is row s regardless of a, so
    // V(s) = max_a p_{s,a} + gamma * sum_{s'} p_{s,s'} V(s').
    std::vector<double> row_max(n);
    for (int s = 0; s < n; ++s)
        row_max[s] = *std::max_element(P.row(s).begin(), P.row(s).end());

    std::vector<double> v(n, 0.0), ev(n, 0.0);
    for (int iter = 0; iter < 1000000; ++iter) {
        double change = 0.0;
        for (int s = 0; s < n; ++s) {
            double e = 0.0;
            for (int t = 0; t < n; ++t) e += P(s, t) * v[t];
            ev[s] = e;
        }
        for (int s = 0; s < n; ++s) {
            double nv = row_max[s] + gamma * ev[s];
            change = std::max(change, std::abs(nv - v[s]));
            v[s] = nv;
        }
        if (change < 1e-14) break;
    }
    for (int s = 0; s < n; ++s) {
        double e = 0.0;
        for (int t = 0; t < n; ++t) e += P(s, t) * v[t];
        ev[s] = e;
    }

    PolicyOracle o;
    o.gamma = gamma;
    o.q_star.resize(static_cast<std::size_t>(n) * n);
    o.pi_star.resize(n);
    o.pi_lara.resize(n);
    o.pi_lara_set.resize(n);
    for (int s = 0; s < n; ++s) {
        double best = -1.0, worst = 2.0 / (1.0 - gamma);
        for (int a = 0; a < n; ++a) {
            double q = P(s, a) + gamma * ev[s];
            o.q_star[static_cast<std::size_t>(s) * n + a] = q;
            if (q > best) {
                best = q;
                o.pi_star[s] = a;
            }
            worst = std::min(worst, q);
        }
        for (int a = 0; a < n; ++a)
            if (o.q(s, a) <= worst * (1.0 + 1e-12)) o.pi_lara_set[s].push_back(a);
        o.pi_lara[s] = o.pi_lara_set[s].front();
    }
    return o;
}

std::vector<int> random_permutation(int n, Rng& rng) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(i) + 1));
        std::swap(sigma[i], sigma[j]);
    }
    return sigma;
}

TransitionMatrix permute_rows(const TransitionMatrix& P, const std::vector<int>& sigma) {
    if (!is_bijection(sigma, P.n)) throw InvalidSpec("row permutation must be a bijection");
    std::vector<double> rows(P.p.size());
    for (int i = 0; i < P.n; ++i)
        std::copy_n(P.p.begin() + static_cast<std::size_t>(sigma[i]) * P.n, P.n,
                    rows.begin() + static_cast<std::size_t>(i) * P.n);
    return TransitionMatrix::validated(P.n, std::move(rows), P.label);
}

} // namespace aj
