#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "aj/rng.hpp"

namespace aj {

// Adam moment accumulators, shaped like the parameter block they update.
struct AdamState {
    std::vector<double> m, v;
    std::int64_t step = 0;
    double beta1 = 0.9, beta2 = 0.999, stabilizer = 1e-8;

    explicit AdamState(std::size_t n) : m(n, 0.0), v(n, 0.0) {}
};

// Bias-corrected Adam update. Throws Divergence on a non-finite gradient.
void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state,
               double alpha);

enum class Activation { Relu, Identity };

// Fully connected Q-network, 64-bit floats throughout. Hidden layers use the
// rectifier by default; the output layer is always linear.
class Mlp {
  public:
    explicit Mlp(std::vector<int> sizes, Activation hidden = Activation::Relu);

    // The article architecture: one-hot channel input, three hidden layers of
    // 32 units, one Q value per channel.
    static Mlp q_network(int channels) { return Mlp({channels, 32, 32, 32, channels}); }

    void init(Rng& rng); // uniform +-sqrt(6/(fan_in+fan_out)) weights, zero biases

    int input_size() const { return sizes_.front(); }
    int output_size() const { return sizes_.back(); }
    const std::vector<int>& sizes() const { return sizes_; }
    Activation hidden_activation() const { return hidden_; }

    std::size_t param_count() const { return params_.size(); }
    std::span<double> params() { return params_; }
    std::span<const double> params() const { return params_; }

    std::vector<double> forward(std::span<const double> input) const;

    struct Cache {
        std::vector<std::vector<double>> layer_in; // input to each layer
        std::vector<std::vector<double>> pre;      // pre-activation of each layer
        bool valid = false;
    };
    std::vector<double> forward(std::span<const double> input, Cache& cache) const;

    // Accumulates dLoss/dparams into `grads` given dLoss/doutput. Requires a
    // cache filled by the caching forward; throws ContractViolation otherwise.
    void backward(const Cache& cache, std::span<const double> dout,
                  std::span<double> grads) const;

  private:
    std::vector<int> sizes_;
    Activation hidden_;
    std::vector<double> params_;
    std::vector<std::size_t> w_off_, b_off_;
};

// Single-cell gated recurrent Q-network: input/forget/output gates plus a
// tanh candidate, one linear output head. Cell and head form separate
// parameter blocks so they can run at different learning rates.
class Lstm {
  public:
    Lstm(int n_in, int hidden, int n_out);

    static Lstm q_network(int channels) { return Lstm(channels, 32, channels); }

    void init(Rng& rng); // forget-gate bias starts at 1

    int input_size() const { return n_in_; }
    int hidden_size() const { return hidden_; }
    int output_size() const { return n_out_; }

    std::size_t param_count() const { return params_.size(); }
    std::size_t cell_param_count() const { return head_off_; }
    std::size_t head_param_count() const { return params_.size() - head_off_; }
    std::span<double> params() { return params_; }
    std::span<const double> params() const { return params_; }
    std::span<double> cell_params() { return {params_.data(), head_off_}; }
    std::span<double> head_params() {
        return {params_.data() + head_off_, head_param_count()};
    }

    struct State {
        std::vector<double> h, c;
    };
    State zero_state() const { return {std::vector<double>(hidden_, 0.0),
                                       std::vector<double>(hidden_, 0.0)}; }

    // One recurrence step; returns head outputs for the new hidden state.
    std::vector<double> step(std::span<const double> x, State& state) const;

    struct Cache {
        struct Step {
            std::vector<double> x, h_prev, c_prev, i, f, o, g, c, tanh_c, h;
        };
        std::vector<Step> steps;
        bool valid = false;
    };

    // Unrolls over the sequence from a zero state; returns head outputs at
    // every position.
    std::vector<std::vector<double>> forward(const std::vector<std::vector<double>>& xs,
                                             Cache& cache) const;

    // Backpropagation through time over the cached unroll. dq[t] is
    // dLoss/d(head output at position t); an empty vector means no loss
    // there. Accumulates into `grads` (cell block then head block).
    void backward(const Cache& cache, const std::vector<std::vector<double>>& dq,
                  std::span<double> grads) const;

  private:
    std::vector<double> head(std::span<const double> h) const;

    int n_in_, hidden_, n_out_;
    std::vector<double> params_;
    std::size_t gate_w_[4], gate_b_[4]; // i, f, o, g blocks
    std::size_t head_off_, head_w_, head_b_;
};

// Flat text checkpoint: kind + dimensions header, then one value per line
// with full double precision, in parameter-block order.
void save_params(const std::filesystem::path& path, const std::string& kind,
                 const std::vector<int>& dims, std::span<const double> params);

struct LoadedParams {
    std::string kind;
    std::vector<int> dims;
    std::vector<double> params;
};
LoadedParams load_params(const std::filesystem::path& path);

// Finite-difference verification of both architectures at parameter scales
// {0.1, 1, 3}. `corrupt_one` flips one computed gradient entry so the
// negative-control path can be exercised.
struct GradCheckReport {
    double max_rel_error = 0.0;
    bool pass = false;
    std::vector<std::string> lines;
};
GradCheckReport run_gradient_checks(std::uint64_t seed, bool corrupt_one = false);

} // namespace aj
