#include "selfevoc/nn.hpp"

#include <cmath>
#include <stdexcept>

namespace selfevoc {

Mlp::Mlp(const std::vector<std::size_t>& dims, const std::vector<Activation>& acts, Rng& rng) {
    if (dims.size() < 2) throw std::invalid_argument("Mlp: need at least input and output dims");
    if (acts.size() != dims.size() - 1)
        throw std::invalid_argument("Mlp: one activation per layer required");
    layers.resize(dims.size() - 1);
    for (std::size_t l = 0; l < layers.size(); ++l) {
        const std::size_t fan_in = dims[l], fan_out = dims[l + 1];
        const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
        layers[l].w = Matrix(fan_out, fan_in);
        for (double& v : layers[l].w.data()) v = rng.uniform(-bound, bound);
        layers[l].b.assign(fan_out, 0.0);
        layers[l].act = acts[l];
    }
}

namespace {

Matrix layer_forward(const DenseLayer& layer, const Matrix& in) {
    Matrix out = matmul_nt(in, layer.w);  // n x out
    for (std::size_t i = 0; i < out.rows(); ++i) {
        double* row = out.row(i);
        for (std::size_t j = 0; j < out.cols(); ++j) {
            row[j] += layer.b[j];
            if (layer.act == Activation::Relu && row[j] < 0.0) row[j] = 0.0;
        }
    }
    return out;
}

}  // namespace

Matrix Mlp::forward(const Matrix& x) const {
    if (x.cols() != input_dim()) throw std::invalid_argument("Mlp::forward: input width mismatch");
    Matrix cur = x;
    for (const auto& layer : layers) cur = layer_forward(layer, cur);
    return cur;
}

std::vector<Matrix> Mlp::forward_cached(const Matrix& x) const {
    if (x.cols() != input_dim()) throw std::invalid_argument("Mlp::forward_cached: input width mismatch");
    std::vector<Matrix> acts;
    acts.reserve(layers.size() + 1);
    acts.push_back(x);
    for (const auto& layer : layers) acts.push_back(layer_forward(layer, acts.back()));
    return acts;
}

Matrix Mlp::backward(const std::vector<Matrix>& acts, Matrix d_out,
                     std::vector<LayerGrads>& grads) const {
    if (acts.size() != layers.size() + 1)
        throw std::invalid_argument("Mlp::backward: activation cache size mismatch");
    if (grads.size() != layers.size()) grads = zero_grads_like(*this);

    for (std::size_t l = layers.size(); l-- > 0;) {
        const Matrix& out = acts[l + 1];
        // ReLU mask on the post-activation output (out > 0 iff pre > 0).
        if (layers[l].act == Activation::Relu) {
            for (std::size_t i = 0; i < d_out.rows(); ++i) {
                double* dr = d_out.row(i);
                const double* o = out.row(i);
                for (std::size_t j = 0; j < d_out.cols(); ++j)
                    if (o[j] <= 0.0) dr[j] = 0.0;
            }
        }
        grads[l].w = matmul_tn(d_out, acts[l]);
        grads[l].b.assign(layers[l].b.size(), 0.0);
        for (std::size_t i = 0; i < d_out.rows(); ++i) {
            const double* dr = d_out.row(i);
            for (std::size_t j = 0; j < d_out.cols(); ++j) grads[l].b[j] += dr[j];
        }
        if (l > 0) d_out = matmul(d_out, layers[l].w);
    }
    return matmul(d_out, layers[0].w);
}

std::vector<std::size_t> Mlp::dims() const {
    std::vector<std::size_t> d;
    if (layers.empty()) return d;
    d.push_back(layers.front().w.cols());
    for (const auto& layer : layers) d.push_back(layer.w.rows());
    return d;
}

bool Mlp::all_finite() const {
    for (const auto& layer : layers) {
        if (!layer.w.all_finite()) return false;
        for (double v : layer.b)
            if (!std::isfinite(v)) return false;
    }
    return true;
}

std::vector<LayerGrads> zero_grads_like(const Mlp& net) {
    std::vector<LayerGrads> g(net.layers.size());
    for (std::size_t l = 0; l < g.size(); ++l) {
        g[l].w = Matrix(net.layers[l].w.rows(), net.layers[l].w.cols());
        g[l].b.assign(net.layers[l].b.size(), 0.0);
    }
    return g;
}

void SgdMomentum::step(Mlp& net, const std::vector<LayerGrads>& grads) {
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        auto& vw = velocity[l].w.data();
        auto& w = net.layers[l].w.data();
        const auto& gw = grads[l].w.data();
        for (std::size_t i = 0; i < w.size(); ++i) {
            vw[i] = momentum * vw[i] - lr * gw[i];
            w[i] += vw[i];
        }
        auto& vb = velocity[l].b;
        auto& b = net.layers[l].b;
        const auto& gb = grads[l].b;
        for (std::size_t i = 0; i < b.size(); ++i) {
            vb[i] = momentum * vb[i] - lr * gb[i];
            b[i] += vb[i];
        }
    }
}

}  // namespace selfevoc
