#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "vqoe/errors.hpp"

namespace vqoe {

inline constexpr int kNumFeatures = 4;

struct TreeNode {
    int feature_idx = -1;     // -1 marks a leaf
    double split_value = 0.0; // go left when x[feature_idx] <= split_value
    int left = -1;
    int right = -1;
    double leaf_value = 0.0;
};

/// CART-style regression tree: exhaustive variance-reduction splits,
/// depth-limited, leaves predict the training mean. Splits scan features in
/// index order and thresholds ascending, keeping the first strict
/// improvement, so fitting is deterministic.
class RegressionTree {
public:
    using Row = std::array<double, kNumFeatures>;

    void fit(const std::vector<Row>& x, const std::vector<double>& y, int max_depth) {
        if (x.empty() || x.size() != y.size()) throw Error("tree fit needs matching non-empty data");
        nodes_.clear();
        importances_.fill(0.0);
        std::vector<std::uint32_t> index(x.size());
        std::iota(index.begin(), index.end(), 0u);
        build(x, y, index, max_depth);
        const double total =
            std::accumulate(importances_.begin(), importances_.end(), 0.0);
        if (total > 0.0)
            for (double& v : importances_) v /= total;
    }

    double predict(const Row& row) const {
        if (nodes_.empty()) throw UntrainedModel("tree has not been fitted");
        int node = 0;
        for (;;) {
            const TreeNode& n = nodes_[static_cast<std::size_t>(node)];
            if (n.feature_idx < 0) return n.leaf_value;
            node = row[static_cast<std::size_t>(n.feature_idx)] <= n.split_value ? n.left
                                                                                 : n.right;
        }
    }

    /// Per-feature share of the total variance reduction, summing to 1
    /// (all zero for a single-leaf tree).
    const std::array<double, kNumFeatures>& importances() const { return importances_; }

    const std::vector<TreeNode>& nodes() const { return nodes_; }

    /// Reassembles a tree from serialized nodes and importances.
    static RegressionTree from_parts(std::vector<TreeNode> nodes,
                                     std::array<double, kNumFeatures> importances) {
        RegressionTree t;
        t.nodes_ = std::move(nodes);
        t.importances_ = importances;
        return t;
    }

private:
    struct Split {
        bool found = false;
        int feature = -1;
        double threshold = 0.0;
        double sse_gain = 0.0;
        std::size_t left_count = 0;
    };

    int build(const std::vector<Row>& x, const std::vector<double>& y,
              std::vector<std::uint32_t>& index, int depth_left) {
        const int id = static_cast<int>(nodes_.size());
        nodes_.emplace_back();

        double sum = 0.0, sq = 0.0;
        for (const std::uint32_t i : index) {
            sum += y[i];
            sq += y[i] * y[i];
        }
        const double n = static_cast<double>(index.size());
        const double mean = sum / n;
        const double node_sse = sq - sum * sum / n;

        Split best;
        if (depth_left > 0 && index.size() >= 2 && node_sse > 0.0)
            best = find_split(x, y, index, sum);

        if (!best.found) {
            nodes_[static_cast<std::size_t>(id)].leaf_value = mean;
            return id;
        }

        importances_[static_cast<std::size_t>(best.feature)] += best.sse_gain;

        std::vector<std::uint32_t> left_index, right_index;
        left_index.reserve(best.left_count);
        right_index.reserve(index.size() - best.left_count);
        for (const std::uint32_t i : index)
            (x[i][static_cast<std::size_t>(best.feature)] <= best.threshold ? left_index
                                                                            : right_index)
                .push_back(i);
        index.clear();
        index.shrink_to_fit();

        const int left = build(x, y, left_index, depth_left - 1);
        const int right = build(x, y, right_index, depth_left - 1);
        TreeNode& node = nodes_[static_cast<std::size_t>(id)];
        node.feature_idx = best.feature;
        node.split_value = best.threshold;
        node.left = left;
        node.right = right;
        return id;
    }

    Split find_split(const std::vector<Row>& x, const std::vector<double>& y,
                     const std::vector<std::uint32_t>& index, double total_sum) {
        Split best;  // sse_gain starts at 0, so only gainful splits are taken
        const std::size_t n = index.size();
        std::vector<std::uint32_t> order(index);
        for (int f = 0; f < kNumFeatures; ++f) {
            const auto feat = [&](std::uint32_t i) { return x[i][static_cast<std::size_t>(f)]; };
            std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
                return feat(a) < feat(b) || (feat(a) == feat(b) && a < b);
            });
            double left_sum = 0.0;
            for (std::size_t k = 0; k + 1 < n; ++k) {
                left_sum += y[order[k]];
                if (feat(order[k]) == feat(order[k + 1])) continue;  // not a boundary
                const double nl = static_cast<double>(k + 1);
                const double nr = static_cast<double>(n - k - 1);
                const double right_sum = total_sum - left_sum;
                // gain = node SSE - (left SSE + right SSE); the per-sample
                // square term cancels, leaving the between-group part.
                const double children =
                    left_sum * left_sum / nl + right_sum * right_sum / nr;
                const double gain = children - total_sum * total_sum / static_cast<double>(n);
                if (gain > best.sse_gain) {
                    best.found = true;
                    best.feature = f;
                    best.threshold = (feat(order[k]) + feat(order[k + 1])) / 2.0;
                    best.sse_gain = gain;
                    best.left_count = k + 1;
                }
            }
        }
        return best;
    }

    std::vector<TreeNode> nodes_;
    std::array<double, kNumFeatures> importances_{};
};

}  // namespace vqoe
