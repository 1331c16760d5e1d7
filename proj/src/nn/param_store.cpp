#include "solslab/nn/param_store.hpp"

namespace solslab::nn {

Matrix& ParamStore::add(const std::string& name, Matrix init) {
    if (params_.count(name) != 0) {
        throw ContractError("ParamStore: duplicate parameter '" + name + "'");
    }
    names_.push_back(name);
    grads_[name] = Matrix::Zero(init.rows(), init.cols());
    return params_[name] = std::move(init);
}

Matrix& ParamStore::param(std::string_view name) {
    auto it = params_.find(std::string(name));
    if (it == params_.end()) {
        throw LookupError("ParamStore: unknown parameter '" + std::string(name) + "'");
    }
    return it->second;
}

const Matrix& ParamStore::param(std::string_view name) const {
    auto it = params_.find(std::string(name));
    if (it == params_.end()) {
        throw LookupError("ParamStore: unknown parameter '" + std::string(name) + "'");
    }
    return it->second;
}

Matrix& ParamStore::grad(std::string_view name) {
    auto it = grads_.find(std::string(name));
    if (it == grads_.end()) {
        throw LookupError("ParamStore: unknown gradient '" + std::string(name) + "'");
    }
    return it->second;
}

const Matrix& ParamStore::grad(std::string_view name) const {
    auto it = grads_.find(std::string(name));
    if (it == grads_.end()) {
        throw LookupError("ParamStore: unknown gradient '" + std::string(name) + "'");
    }
    return it->second;
}

bool ParamStore::has(std::string_view name) const {
    return params_.count(std::string(name)) != 0;
}

std::size_t ParamStore::coefficient_count() const {
    std::size_t n = 0;
    for (const auto& name : names_) n += params_.at(name).size();
    return n;
}

void ParamStore::zero_grads() {
    for (auto& [name, g] : grads_) g.setZero();
}

bool ParamStore::grads_finite() const {
    for (const auto& [name, g] : grads_) {
        if (!g.allFinite()) return false;
    }
    return true;
}

}  // namespace solslab::nn
