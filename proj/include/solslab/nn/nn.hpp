#pragma once

#include "solslab/common.hpp"

namespace solslab::nn {

// Dense layers and activations with hand-derived backward passes.
// Conventions: rows are batch entries, columns are feature dimensions.

// y = x * w, plus b broadcast over rows. x: [n,din], w: [din,dout], b: [dout].
Matrix affine(const Matrix& x, const Matrix& w, const Vector& b);

struct AffineGrads {
    Matrix dx;
    Matrix dw;
    Vector db;
};
AffineGrads affine_backward(const Matrix& x, const Matrix& w, const Matrix& dy);

// Row-wise softmax, stabilized by max subtraction.
Matrix softmax_rows(const Matrix& logits);
// dlogits from dprobs given the forward output probs.
Matrix softmax_rows_backward(const Matrix& probs, const Matrix& dprobs);

// Stable log softmax of a single logit vector.
Vector log_softmax(const Vector& logits);

Matrix tanh_forward(const Matrix& x);
// dx given the forward output y = tanh(x).
Matrix tanh_backward(const Matrix& y, const Matrix& dy);

// Input clamped to [-30, 30] before exponentiation; output strictly in (0,1).
double sigmoid(double x);
// dx given the forward output y = sigmoid(x).
double sigmoid_backward(double y, double dy);

constexpr double kSigmoidClamp = 30.0;

}  // namespace solslab::nn
