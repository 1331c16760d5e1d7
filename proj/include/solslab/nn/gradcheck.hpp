#pragma once

#include <functional>
#include <string>

#include "solslab/nn/param_store.hpp"

namespace solslab::nn {

struct FdReport {
    double max_rel_err = 0.0;
    std::string worst_param;
    Eigen::Index worst_index = -1;
};

// Compares the analytic gradients currently held in `store` against central
// finite differences of `loss_fn` (which must evaluate the loss at the
// current parameters without touching gradients). Parameters are restored
// after probing. Relative error uses an absolute floor so that near-zero
// coordinate pairs compare as equal.
FdReport finite_difference_check(const std::function<double()>& loss_fn,
                                 ParamStore& store, double h = 1e-5);

}  // namespace solslab::nn
