#pragma once

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "cfclip/error.hpp"

namespace cfclip::ad {

using Matrix = Eigen::MatrixXd;

class Tape;

// Handle to a node on a Tape. Cheap to copy; valid as long as the tape lives.
class Var {
public:
    Var() = default;

    const Matrix& value() const;
    const Matrix& grad() const;
    Eigen::Index rows() const { return value().rows(); }
    Eigen::Index cols() const { return value().cols(); }
    bool valid() const { return tape_ != nullptr; }
    Tape* tape() const { return tape_; }
    int index() const { return index_; }

private:
    friend class Tape;
    Var(Tape* tape, int index) : tape_(tape), index_(index) {}

    Tape* tape_ = nullptr;
    int index_ = -1;
};

// Reverse-mode tape over dense matrices. Build a graph with the free
// functions below, then call backward() on a 1x1 result. Gradients
// accumulate into every tracked leaf reachable from the root.
class Tape {
public:
    // Node whose gradient is never requested (frozen weights, cached inputs).
    Var constant(Matrix v);

    // Gradient-tracked input (trainable parameter or probe point).
    Var leaf(Matrix v);

    void backward(const Var& root);

    // --- op-implementation surface ---
    using Backprop = std::function<void(Tape&, const Matrix& upstream)>;
    Var emit(Matrix value, bool track, Backprop backprop);
    void accumulate(int index, const Matrix& g);
    bool tracked(int index) const { return nodes_[static_cast<size_t>(index)].track; }
    const Matrix& value_at(int index) const { return nodes_[static_cast<size_t>(index)].value; }
    const Matrix& grad_at(int index) const;
    std::size_t size() const { return nodes_.size(); }

private:
    struct Node {
        Matrix value;
        Matrix grad;      // empty until touched by backward
        bool track = false;
        Backprop backprop; // empty for leaves and constants
    };
    std::vector<Node> nodes_;
};

inline const Matrix& Var::value() const { return tape_->value_at(index_); }
inline const Matrix& Var::grad() const { return tape_->grad_at(index_); }

inline double scalar(const Var& v) {
    if (v.rows() != 1 || v.cols() != 1)
        fail(ErrorCode::dimension_mismatch, "scalar() on a non 1x1 node");
    return v.value()(0, 0);
}

// Elementwise / algebraic ops. All throw DimensionMismatch on shape errors.
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var cmul(const Var& a, const Var& b);
Var scale(const Var& a, double s);
Var add_scalar(const Var& a, double s);
Var matmul(const Var& a, const Var& b);
Var transpose(const Var& a);
Var vcat(const std::vector<Var>& parts);
Var hcat(const Var& a, const Var& b);
Var rows(const Var& a, int first, int count);
Var leaky_relu(const Var& a, double slope);
Var sigmoid(const Var& a);
Var abs(const Var& a);

// Reductions to 1x1.
Var sum(const Var& a);
Var mean(const Var& a);
Var dot(const Var& a, const Var& b);      // Frobenius inner product
Var norm(const Var& a);                   // Frobenius norm
Var logsumexp(const Var& a);              // max-subtracted, over all entries

// Whole-matrix L2 normalization; throws ZeroVector below `floor`.
Var l2_normalize(const Var& a, double floor = 1e-12);

// Per-row normalization x / sqrt(mean(x^2) + eps).
Var pixelnorm_rows(const Var& a, double eps = 1e-8);

// y = x * w^T + 1 * b^T for row-stacked inputs; x:(n,in) w:(out,in) b:(out,1).
Var linear_rows(const Var& x, const Var& w, const Var& b);

// Fixed linear gather: out[i] = constant[i] + sum_j taps[i][j].weight * a[taps[i][j].src].
// Input and output are column vectors. Used for warps, upsampling and frozen convolutions.
struct Tap {
    int src;
    double weight;
};
struct GatherPlan {
    int input_size = 0;
    std::vector<std::vector<Tap>> taps;   // one entry per output element
    std::vector<double> constant;         // same length as taps; 0 when unused

    // exact copy rows bypass arithmetic so identity plans stay bitwise
    std::vector<int> copy_from;           // per output: src index for verbatim copy, or -1
};
Var sparse_gather(const Var& a, const GatherPlan& plan);

} // namespace cfclip::ad
