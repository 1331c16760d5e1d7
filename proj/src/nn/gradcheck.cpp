#include "solslab/nn/gradcheck.hpp"

#include <cmath>

namespace solslab::nn {

namespace {

double rel_err(double analytic, double fd) {
    const double diff = std::abs(analytic - fd);
    if (diff <= 1e-8) return 0.0;
    return diff / std::max(std::abs(analytic), std::abs(fd));
}

}  // namespace

FdReport finite_difference_check(const std::function<double()>& loss_fn,
                                 ParamStore& store, double h) {
    FdReport report;
    for (const auto& name : store.names()) {
        Matrix& p = store.param(name);
        const Matrix& g = store.grad(name);
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            const double saved = p(i);
            p(i) = saved + h;
            const double up = loss_fn();
            p(i) = saved - h;
            const double down = loss_fn();
            p(i) = saved;
            const double fd = (up - down) / (2.0 * h);
            const double err = rel_err(g(i), fd);
            if (err > report.max_rel_err) {
                report.max_rel_err = err;
                report.worst_param = name;
                report.worst_index = i;
            }
        }
    }
    return report;
}

}  // namespace solslab::nn
