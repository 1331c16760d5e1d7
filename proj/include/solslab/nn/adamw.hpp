#pragma once

#include <string>
#include <unordered_map>

#include "solslab/nn/param_store.hpp"

namespace solslab::nn {

struct AdamwConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    double weight_decay = 0.0;
};

// Decoupled weight decay Adam. Moments are allocated lazily to match the
// store; gradients are left untouched (caller zeroes them explicitly).
class AdamwState {
public:
    explicit AdamwState(AdamwConfig cfg = {}) : cfg(cfg) {}

    AdamwConfig cfg;

    void step(ParamStore& store);

    const Matrix& first_moment(const std::string& name) const { return m_.at(name); }
    const Matrix& second_moment(const std::string& name) const { return v_.at(name); }
    bool has_moments(const std::string& name) const { return m_.count(name) != 0; }
    Matrix& mutable_first_moment(const std::string& name) { return m_[name]; }
    Matrix& mutable_second_moment(const std::string& name) { return v_[name]; }

private:
    std::unordered_map<std::string, Matrix> m_;
    std::unordered_map<std::string, Matrix> v_;
};

// Applies one AdamW update from the accumulated gradients.
// Throws DivergenceError on non-finite gradients.
void adamw_step(ParamStore& params, AdamwState& opt);

}  // namespace solslab::nn
