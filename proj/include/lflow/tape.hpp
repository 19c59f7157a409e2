#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lflow/lattice.hpp"
#include "lflow/tensor.hpp"

namespace lflow::ad {

class Tape;

/// Handle to a value recorded on a tape.
struct Var {
    Tape* tape = nullptr;
    int id = -1;

    const Tensor& val() const;
};

/// Named parameter tensors with stable iteration order and one gradient
/// accumulator per parameter.
class ParamStore {
  public:
    int add(std::string name, Tensor init);
    int find(std::string_view name) const; // -1 if absent
    int size() const { return static_cast<int>(entries_.size()); }

    const std::string& name(int i) const { return entries_[i].name; }
    Tensor& value(int i) { return entries_[i].value; }
    const Tensor& value(int i) const { return entries_[i].value; }
    Tensor& grad(int i) { return entries_[i].grad; }
    const Tensor& grad(int i) const { return entries_[i].grad; }

    void zero_grad();
    double grad_sq_norm() const;
    void scale_grads(double factor);
    long n_scalars() const;

  private:
    struct Entry {
        std::string name;
        Tensor value;
        Tensor grad;
    };
    std::vector<Entry> entries_;
};

/// Define-by-run reverse-mode tape over Tensors. Rebuilt per forward pass;
/// one backward pass per forward pass. When grad recording is disabled the
/// same ops run eagerly without closures, which is the no-grad fast path
/// used for sampling and measurement.
class Tape {
  public:
    explicit Tape(bool grad_enabled = true) : grad_enabled_(grad_enabled) {}

    Var leaf(Tensor value, const char* op = "leaf");
    /// Leaf bound to a ParamStore slot; backward adds into the store's
    /// gradient accumulator.
    Var param(ParamStore& store, int index);

    bool grad_enabled() const { return grad_enabled_; }
    int n_nodes() const { return static_cast<int>(nodes_.size()); }

    const Tensor& value(Var v) const { return nodes_[v.id].value; }
    /// Gradient of the last backward pass w.r.t. a node (zeros if untouched).
    Tensor grad(Var v) const;

    /// Reverse sweep from a scalar loss. `seed` scales the whole gradient.
    /// Throws NumericError on non-finite values, naming the op; throws on a
    /// second call without a new forward and on non-scalar losses.
    void backward(Var loss, double seed = 1.0);

    void clear();

    // --- internals used by the op implementations ---
    struct Node {
        Tensor value;
        Tensor grad;
        std::function<void(Tape&, const Tensor&)> back;
        const char* op = "leaf";
    };
    Node& node(int id) { return nodes_[id]; }
    Var push(Tensor value, const char* op);
    void set_back(Var v, std::function<void(Tape&, const Tensor&)> fn);
    Tensor& grad_buf(int id);

  private:
    std::vector<Node> nodes_;
    bool grad_enabled_ = true;
    bool backward_done_ = false;
};

// Elementwise primitives (same-shape unless noted).
Var add(Var a, Var b);
Var sub(Var a, Var b);
Var mul(Var a, Var b);
Var div(Var a, Var b);
Var neg(Var a);
Var add_scalar(Var a, double c);
Var mul_scalar(Var a, double c);
Var rsub_scalar(double c, Var a); // c - a
Var exp(Var a);
Var expm1(Var a);
Var log(Var a);
Var log1p(Var a);
Var sin(Var a);
Var cos(Var a);
Var tan(Var a);
Var atan(Var a);
Var tanh(Var a);
Var square(Var a);
/// Elementwise wrap to (-pi, pi]; gradient passes through unchanged.
Var wrap(Var a);

// Reductions and shape ops.
Var sum(Var a);
Var mean(Var a);
/// Stack equal-shaped tensors along a new leading axis.
Var stack0(std::span<const Var> parts);
/// Concatenate along the existing leading axis.
Var concat0(std::span<const Var> parts);
/// Narrow along the leading axis.
Var slice0(Var a, int start, int len);
/// Broadcast with trailing-dimension alignment: a's shape must equal the
/// trailing dims of `shape`; backward sums over the added leading dims.
Var broadcast_to(Var a, const std::vector<int>& shape);

/// y = W x + b with x:[in], W:[out,in], b:[out].
Var linear(Var x, Var w, Var b);

/// Circular 2D cross-correlation: in:[Ci,H,W], w:[Co,Ci,k,k] (k odd),
/// b:[Co] -> [Co,H,W]. Spatial size is preserved, which is what makes conv
/// weights reusable across lattice volumes.
Var conv2d_periodic(Var in, Var w, Var b);

/// out[i] = a[flat_idx[i]].
Var gather(Var a, std::shared_ptr<const std::vector<int>> idx);
/// out = base; out[flat_idx[i]] += upd[i]. Indices must be distinct.
Var scatter_add(Var base, Var upd, std::shared_ptr<const std::vector<int>> idx);

/// Unwrapped plaquette angles of a [2,lx,ly] link tensor (bitwise the same
/// arithmetic as lattice::plaquette_field).
Var plaquette(Var links, const LatticeGeometry& geom);

/// Max relative deviation between tape gradients and central finite
/// differences of f at `point`. Reports whatever it measures; tiny h
/// degrades the estimate through cancellation and is reported, not hidden.
double gradient_check(const std::function<Var(Tape&, Var)>& f, const Tensor& point, double h);

} // namespace lflow::ad
