#pragma once

#include <cstdint>
#include <vector>

#include "selfevoc/matrix.hpp"
#include "selfevoc/rng.hpp"

namespace selfevoc {

enum class Activation { Identity, Relu };

struct DenseLayer {
    Matrix w;               // out x in
    std::vector<double> b;  // out
    Activation act = Activation::Identity;
};

struct LayerGrads {
    Matrix w;
    std::vector<double> b;
};

// Plain fully-connected stack used by both the feature extractor and the
// classifier. Batches are row-major (one sample per row).
class Mlp {
public:
    Mlp() = default;
    // Glorot-uniform init, deterministic in rng.
    Mlp(const std::vector<std::size_t>& dims, const std::vector<Activation>& acts, Rng& rng);

    Matrix forward(const Matrix& x) const;

    // Forward pass that keeps post-activation outputs for backprop.
    // acts[0] = x, acts[l+1] = output of layer l.
    std::vector<Matrix> forward_cached(const Matrix& x) const;

    // Backprop of d_out (gradient w.r.t. the last post-activation output).
    // Fills per-layer weight/bias gradients summed over the batch and
    // returns the gradient w.r.t. the input.
    Matrix backward(const std::vector<Matrix>& acts, Matrix d_out,
                    std::vector<LayerGrads>& grads) const;

    std::vector<std::size_t> dims() const;
    std::size_t input_dim() const { return layers.empty() ? 0 : layers.front().w.cols(); }
    std::size_t output_dim() const { return layers.empty() ? 0 : layers.back().w.rows(); }
    bool all_finite() const;

    std::vector<DenseLayer> layers;
};

std::vector<LayerGrads> zero_grads_like(const Mlp& net);

// v = momentum*v - lr*g; w += v
struct SgdMomentum {
    double lr = 0.01;
    double momentum = 0.9;
    std::vector<LayerGrads> velocity;

    explicit SgdMomentum(const Mlp& net, double lr_, double momentum_)
        : lr(lr_), momentum(momentum_), velocity(zero_grads_like(net)) {}
    void step(Mlp& net, const std::vector<LayerGrads>& grads);
};

}  // namespace selfevoc
