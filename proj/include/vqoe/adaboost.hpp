#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "vqoe/errors.hpp"
#include "vqoe/features.hpp"
#include "vqoe/labeling.hpp"
#include "vqoe/rng.hpp"
#include "vqoe/tree.hpp"

namespace vqoe {

enum class AdaLoss : int { linear = 0, square = 1, exponential = 2 };

inline const char* to_string(AdaLoss l) {
    switch (l) {
        case AdaLoss::linear: return "linear";
        case AdaLoss::square: return "square";
        default: return "exponential";
    }
}

inline AdaLoss ada_loss_from_string(const std::string& s) {
    if (s == "linear") return AdaLoss::linear;
    if (s == "square") return AdaLoss::square;
    if (s == "exponential") return AdaLoss::exponential;
    throw Error("unknown loss: " + s);
}

/// Boosted-tree hyperparameters; defaults match the reference setup
/// (n_estimators = 10, learning_rate = 0.1, linear loss).
struct AdtConfig {
    int n_estimators = 10;
    double learning_rate = 0.1;
    AdaLoss loss = AdaLoss::linear;
    int max_tree_depth = 3;
    std::uint64_t rng_seed = 0;
};

inline void check_config(const AdtConfig& cfg) {
    if (cfg.n_estimators < 1) throw Error("n_estimators must be >= 1");
    if (!(cfg.learning_rate > 0.0)) throw Error("learning_rate must be > 0");
    if (cfg.max_tree_depth < 1) throw Error("max_tree_depth must be >= 1");
}

/// AdaBoost.R2 ensemble. Prediction is the weighted median of the estimator
/// outputs under estimator_log_weights (ln(1/beta) scaled by the learning
/// rate), clamped to the MOS range.
struct TrainedModel {
    std::vector<RegressionTree> estimators;
    std::vector<double> estimator_log_weights;
    std::optional<ClassThresholds> thresholds;
    AdtConfig config;
    std::array<std::string, 4> feature_names = {kFeatureNames[0], kFeatureNames[1],
                                                kFeatureNames[2], kFeatureNames[3]};

    bool trained() const {
        return !estimators.empty() && estimators.size() == estimator_log_weights.size();
    }
};

namespace detail {

/// Weighted median: smallest value whose cumulative weight reaches half of
/// the total, over values sorted ascending.
inline double weighted_median(const std::vector<double>& values,
                              const std::vector<double>& weights) {
    std::vector<std::uint32_t> order(values.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return values[a] < values[b] || (values[a] == values[b] && a < b);
    });
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    double cum = 0.0;
    for (const std::uint32_t i : order) {
        cum += weights[i];
        if (cum >= 0.5 * total) return values[i];
    }
    return values[order.back()];
}

inline double loss_of(double normalized_error, AdaLoss loss) {
    switch (loss) {
        case AdaLoss::linear: return normalized_error;
        case AdaLoss::square: return normalized_error * normalized_error;
        default: return 1.0 - std::exp(-normalized_error);
    }
}

}  // namespace detail

/// Drucker's AdaBoost.R2 with depth-limited regression trees as weak
/// learners. Each round fits a tree on a weighted bootstrap resample,
/// computes relative absolute losses on the full set, stops when the
/// weighted average loss reaches 0.5, and reweights samples by
/// beta^(lr * (1 - L_i)). Seeded and fully deterministic.
inline TrainedModel train_adaboost_r2(const std::vector<MosSample>& samples,
                                      const AdtConfig& config = {}) {
    check_config(config);
    const std::size_t n = samples.size();
    if (n < 2) throw TooFewSamples("training needs at least 2 samples");

    std::vector<RegressionTree::Row> x(n);
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = samples[i].features.as_array();
        y[i] = samples[i].mos;
        check_mos(y[i], samples[i].clip_id);
    }
    if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y[0]; }))
        throw DegenerateTargets("all MOS targets are identical");

    TrainedModel model;
    model.config = config;
    Rng rng(config.rng_seed);

    std::vector<double> weights(n, 1.0 / static_cast<double>(n));
    std::vector<double> cdf(n);
    std::vector<RegressionTree::Row> bx(n);
    std::vector<double> by(n);
    std::vector<double> errors(n);

    for (int round = 0; round < config.n_estimators; ++round) {
        // weighted bootstrap resample via inverse-CDF sampling
        double acc = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += weights[i];
            cdf[i] = acc;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double r = rng.uniform_double() * acc;
            const std::size_t pick = static_cast<std::size_t>(
                std::upper_bound(cdf.begin(), cdf.end(), r) - cdf.begin());
            const std::size_t idx = std::min(pick, n - 1);
            bx[i] = x[idx];
            by[i] = y[idx];
        }

        RegressionTree tree;
        tree.fit(bx, by, config.max_tree_depth);

        double error_max = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            errors[i] = std::abs(y[i] - tree.predict(x[i]));
            error_max = std::max(error_max, errors[i]);
        }
        if (error_max == 0.0) {
            // perfect fit; keep it and stop boosting
            model.estimators.push_back(std::move(tree));
            model.estimator_log_weights.push_back(1.0);
            break;
        }

        const double weight_sum = std::accumulate(weights.begin(), weights.end(), 0.0);
        double avg_loss = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            avg_loss += (weights[i] / weight_sum) * detail::loss_of(errors[i] / error_max,
                                                                    config.loss);
        if (avg_loss >= 0.5) {
            // weak learner no better than chance; a first-round stop keeps
            // the single tree with weight 1 so the model stays usable
            if (model.estimators.empty()) {
                model.estimators.push_back(std::move(tree));
                model.estimator_log_weights.push_back(1.0);
            }
            break;
        }

        const double beta = avg_loss / (1.0 - avg_loss);
        for (std::size_t i = 0; i < n; ++i) {
            const double li = detail::loss_of(errors[i] / error_max, config.loss);
            weights[i] *= std::pow(beta, config.learning_rate * (1.0 - li));
        }
        const double renorm = std::accumulate(weights.begin(), weights.end(), 0.0);
        for (double& w : weights) w /= renorm;

        model.estimators.push_back(std::move(tree));
        model.estimator_log_weights.push_back(config.learning_rate * std::log(1.0 / beta));
    }
    return model;
}

/// Weighted-median combination of the per-tree predictions, clamped to the
/// MOS range [1, 5].
inline double predict_mos(const TrainedModel& model, const QoeFeatures& features) {
    if (!model.trained()) throw UntrainedModel("model has no estimators");
    const RegressionTree::Row row = features.as_array();
    std::vector<double> preds(model.estimators.size());
    for (std::size_t i = 0; i < preds.size(); ++i) preds[i] = model.estimators[i].predict(row);
    const double raw = detail::weighted_median(preds, model.estimator_log_weights);
    return std::clamp(raw, 1.0, 5.0);
}

}  // namespace vqoe
