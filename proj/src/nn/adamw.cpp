#include "solslab/nn/adamw.hpp"

#include <cmath>

namespace solslab::nn {

void AdamwState::step(ParamStore& store) {
    if (!store.grads_finite()) {
        throw DivergenceError("adamw_step: non-finite gradient");
    }
    store.step += 1;
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(store.step));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(store.step));

    for (const auto& name : store.names()) {
        Matrix& p = store.param(name);
        const Matrix& g = store.grad(name);
        if (m_.count(name) == 0) {
            m_[name] = Matrix::Zero(p.rows(), p.cols());
            v_[name] = Matrix::Zero(p.rows(), p.cols());
        }
        Matrix& m = m_[name];
        Matrix& v = v_[name];
        m = cfg.beta1 * m + (1.0 - cfg.beta1) * g;
        v = cfg.beta2 * v + (1.0 - cfg.beta2) * g.cwiseProduct(g);

        // Decoupled weight decay, then the bias-corrected Adam update.
        if (cfg.weight_decay != 0.0) {
            p -= cfg.lr * cfg.weight_decay * p;
        }
        const Matrix m_hat = m / bc1;
        const Matrix v_hat = v / bc2;
        p.array() -= cfg.lr * m_hat.array() / (v_hat.array().sqrt() + cfg.eps);
    }
}

void adamw_step(ParamStore& params, AdamwState& opt) {
    opt.step(params);
}

}  // namespace solslab::nn
