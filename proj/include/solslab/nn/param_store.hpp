#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "solslab/common.hpp"

namespace solslab::nn {

// Named parameter arrays with matching gradient accumulators.
// Gradient accumulation is explicit: backward passes add into grad();
// nothing is zeroed implicitly.
class ParamStore {
public:
    Matrix& add(const std::string& name, Matrix init);

    Matrix& param(std::string_view name);
    const Matrix& param(std::string_view name) const;
    Matrix& grad(std::string_view name);
    const Matrix& grad(std::string_view name) const;

    bool has(std::string_view name) const;
    const std::vector<std::string>& names() const { return names_; }
    std::size_t coefficient_count() const;

    void zero_grads();
    bool grads_finite() const;

    // Optimizer step counter (incremented by adamw_step).
    long long step = 0;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Matrix> params_;
    std::unordered_map<std::string, Matrix> grads_;
};

}  // namespace solslab::nn
