#pragma once

#include "fev/tensor.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <span>
#include <unordered_map>
#include <vector>

namespace fev {

using NodeId = std::uint32_t;

enum class OpKind : std::uint8_t {
  Leaf,
  Conv2d,
  Dense,
  Relu,
  LeakyRelu,
  Sigmoid,
  Add,
  Sub,
  ScalarMul,
  Mul,
  AvgPool2d,
  Upsample2x,
  GlobalAvgPool,
  Sum,
  PNorm,
  Clamp,
  BlockDct8,
  BlockIdct8,
  ScaleChannels,
  Overlay,
  LogAbs,
  BceWithLogits,
  Reshape,
};

const char* op_name(OpKind kind);

struct ConvSpec {
  int stride = 1;
  int pad = 0;
};

template <typename T>
struct Node {
  OpKind kind = OpKind::Leaf;
  std::vector<NodeId> inputs;
  BasicTensor<T> value;
  // Op attributes: conv stride/pad, overlay offsets, slopes, bounds, norm order.
  std::array<int, 2> ints{};
  std::array<double, 2> reals{};
};

template <typename T>
class BasicGraph;

/// Handle to a node of a live graph. Cheap to copy; valid while the graph lives.
template <typename T>
struct BasicVar {
  BasicGraph<T>* graph = nullptr;
  NodeId id = 0;

  const BasicTensor<T>& value() const { return graph->node(id).value; }
  const Shape& shape() const { return value().shape(); }
};

/// Append-only record of a define-by-run computation. Node ids are assigned
/// in creation order, so inputs always precede the nodes that consume them.
template <typename T>
class BasicGraph {
 public:
  BasicGraph() = default;
  BasicGraph(const BasicGraph&) = delete;
  BasicGraph& operator=(const BasicGraph&) = delete;

  BasicVar<T> input(BasicTensor<T> value) {
    Node<T> n;
    n.value = std::move(value);
    return record(std::move(n));
  }

  BasicVar<T> record(Node<T> node) {
    nodes_.push_back(std::move(node));
    return {this, static_cast<NodeId>(nodes_.size() - 1)};
  }

  const Node<T>& node(NodeId id) const { return nodes_.at(id); }
  std::size_t size() const { return nodes_.size(); }
  bool contains(NodeId id) const { return id < nodes_.size(); }

 private:
  std::deque<Node<T>> nodes_;
};

using Graph = BasicGraph<float>;
using Var = BasicVar<float>;

template <typename T>
using GradMap = std::unordered_map<NodeId, BasicTensor<T>>;

// Forward operations. Each records one node and returns its handle.
template <typename T>
BasicVar<T> conv2d(BasicVar<T> x, BasicVar<T> weight, BasicVar<T> bias, ConvSpec spec = {});
template <typename T>
BasicVar<T> dense(BasicVar<T> x, BasicVar<T> weight, BasicVar<T> bias);
template <typename T>
BasicVar<T> relu(BasicVar<T> x);
template <typename T>
BasicVar<T> leaky_relu(BasicVar<T> x, double slope);
template <typename T>
BasicVar<T> sigmoid(BasicVar<T> x);
template <typename T>
BasicVar<T> add(BasicVar<T> a, BasicVar<T> b);
template <typename T>
BasicVar<T> sub(BasicVar<T> a, BasicVar<T> b);
template <typename T>
BasicVar<T> mul(BasicVar<T> a, BasicVar<T> b);
template <typename T>
BasicVar<T> scalar_mul(BasicVar<T> x, double s);
template <typename T>
BasicVar<T> avg_pool2d(BasicVar<T> x);
template <typename T>
BasicVar<T> upsample2x(BasicVar<T> x);
template <typename T>
BasicVar<T> global_avg_pool(BasicVar<T> x);
template <typename T>
BasicVar<T> sum(BasicVar<T> x);
template <typename T>
BasicVar<T> pnorm(BasicVar<T> x, double p);
template <typename T>
BasicVar<T> clamp(BasicVar<T> x, double lo, double hi);
template <typename T>
BasicVar<T> block_dct8(BasicVar<T> x);
template <typename T>
BasicVar<T> block_idct8(BasicVar<T> x);
/// x is N x C x H x W, scale is N x C.
template <typename T>
BasicVar<T> scale_channels(BasicVar<T> x, BasicVar<T> scale);
/// Overwrites a C x h x w window of every image in x with patch, upper-left corner at (row, col).
template <typename T>
BasicVar<T> overlay(BasicVar<T> x, BasicVar<T> patch, int row, int col);
/// log(|x| + eps)
template <typename T>
BasicVar<T> log_abs(BasicVar<T> x, double eps);
/// Mean binary cross-entropy of logits against 0/1 labels of the same element count.
template <typename T>
BasicVar<T> bce_with_logits(BasicVar<T> logits, BasicVar<T> labels);
template <typename T>
BasicVar<T> reshape(BasicVar<T> x, Shape shape);

template <typename T>
BasicVar<T> operator+(BasicVar<T> a, BasicVar<T> b) { return add(a, b); }
template <typename T>
BasicVar<T> operator-(BasicVar<T> a, BasicVar<T> b) { return sub(a, b); }
template <typename T>
BasicVar<T> operator*(BasicVar<T> a, BasicVar<T> b) { return mul(a, b); }
template <typename T>
BasicVar<T> operator*(double s, BasicVar<T> x) { return scalar_mul(x, s); }

/// Reverse-mode gradients of a [1]-shaped output with respect to each node in wrt.
/// Only nodes on a path from wrt to output are visited; the graph is not modified.
template <typename T>
GradMap<T> grad(const BasicGraph<T>& graph, BasicVar<T> output, std::span<const BasicVar<T>> wrt);

template <typename T>
std::vector<BasicTensor<T>> gradients(BasicVar<T> output, std::span<const BasicVar<T>> wrt) {
  auto map = grad(*output.graph, output, wrt);
  std::vector<BasicTensor<T>> out;
  out.reserve(wrt.size());
  for (const auto& v : wrt) out.push_back(map.at(v.id));
  return out;
}

template <typename T>
std::vector<BasicTensor<T>> gradients(BasicVar<T> output, const std::vector<BasicVar<T>>& wrt) {
  return gradients(output, std::span<const BasicVar<T>>(wrt));
}

template <typename T>
std::vector<BasicTensor<T>> gradients(BasicVar<T> output, std::initializer_list<BasicVar<T>> wrt) {
  std::vector<BasicVar<T>> list(wrt);
  return gradients(output, std::span<const BasicVar<T>>(list));
}

}  // namespace fev
