#include "solslab/nn/nn.hpp"

#include <algorithm>
#include <cmath>

namespace solslab::nn {

namespace {

void check_inner(const Matrix& x, const Matrix& w, const Vector& b) {
    if (x.cols() != w.rows()) {
        throw ShapeError("affine: input cols " + std::to_string(x.cols()) +
                         " != weight rows " + std::to_string(w.rows()));
    }
    if (b.size() != w.cols()) {
        throw ShapeError("affine: bias size " + std::to_string(b.size()) +
                         " != weight cols " + std::to_string(w.cols()));
    }
}

}  // namespace

Matrix affine(const Matrix& x, const Matrix& w, const Vector& b) {
    check_inner(x, w, b);
    Matrix y = x * w;
    y.rowwise() += b.transpose();
    return y;
}

AffineGrads affine_backward(const Matrix& x, const Matrix& w, const Matrix& dy) {
    if (dy.rows() != x.rows() || dy.cols() != w.cols()) {
        throw ShapeError("affine_backward: upstream shape mismatch");
    }
    AffineGrads g;
    g.dx = dy * w.transpose();
    g.dw = x.transpose() * dy;
    g.db = dy.colwise().sum().transpose();
    return g;
}

Matrix softmax_rows(const Matrix& logits) {
    Matrix p(logits.rows(), logits.cols());
    for (Eigen::Index i = 0; i < logits.rows(); ++i) {
        const double m = logits.row(i).maxCoeff();
        Eigen::RowVectorXd e = (logits.row(i).array() - m).exp();
        p.row(i) = e / e.sum();
    }
    return p;
}

Matrix softmax_rows_backward(const Matrix& probs, const Matrix& dprobs) {
    if (probs.rows() != dprobs.rows() || probs.cols() != dprobs.cols()) {
        throw ShapeError("softmax_rows_backward: shape mismatch");
    }
    Matrix dlogits(probs.rows(), probs.cols());
    for (Eigen::Index i = 0; i < probs.rows(); ++i) {
        const double dot = probs.row(i).dot(dprobs.row(i));
        dlogits.row(i) = probs.row(i).cwiseProduct((dprobs.row(i).array() - dot).matrix());
    }
    return dlogits;
}

Vector log_softmax(const Vector& logits) {
    const double m = logits.maxCoeff();
    const double lse = std::log((logits.array() - m).exp().sum()) + m;
    return logits.array() - lse;
}

Matrix tanh_forward(const Matrix& x) {
    return x.array().tanh();
}

Matrix tanh_backward(const Matrix& y, const Matrix& dy) {
    return dy.cwiseProduct((1.0 - y.array().square()).matrix());
}

double sigmoid(double x) {
    const double c = std::clamp(x, -kSigmoidClamp, kSigmoidClamp);
    return 1.0 / (1.0 + std::exp(-c));
}

double sigmoid_backward(double y, double dy) {
    return y * (1.0 - y) * dy;
}

}  // namespace solslab::nn
