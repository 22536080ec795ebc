#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "vqoe/adaboost.hpp"
#include "vqoe/errors.hpp"
#include "vqoe/labeling.hpp"
#include "vqoe/rng.hpp"

namespace vqoe {

using ConfusionMatrix = std::array<std::array<std::uint64_t, 3>, 3>;  // [true][pred]

/// Pooled classification metrics plus regression error, in the shape of the
/// model-comparison tables (precision/accuracy/recall as percentages, MSE in
/// squared MOS).
struct EvalReport {
    double micro_precision = 0.0;
    double micro_accuracy = 0.0;
    double micro_recall = 0.0;
    double mse = 0.0;
    ConfusionMatrix confusion{};
    std::array<double, 4> feature_importance{};
    std::uint64_t n_samples = 0;
    int folds = 0;
};

/// Micro-averaged metrics from pooled per-class counts. For single-label
/// data, pooled FP == pooled FN, so precision, recall and accuracy coincide.
inline void fill_micro_metrics(EvalReport& report) {
    std::uint64_t tp = 0, fp = 0, fn = 0, total = 0;
    for (int c = 0; c < 3; ++c) {
        std::uint64_t col = 0, row = 0;
        for (int k = 0; k < 3; ++k) {
            col += report.confusion[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
            row += report.confusion[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
            total += report.confusion[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
        }
        const std::uint64_t diag =
            report.confusion[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        tp += diag;
        fp += col - diag;
        fn += row - diag;
    }
    if (total == 0) throw EmptyInput("no samples to evaluate");
    report.micro_precision = 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fp);
    report.micro_recall = 100.0 * static_cast<double>(tp) / static_cast<double>(tp + fn);
    report.micro_accuracy = 100.0 * static_cast<double>(tp) / static_cast<double>(total);
    report.n_samples = total;
}

/// Ensemble feature importance: per-tree variance-reduction shares combined
/// with the estimator log-weights, renormalized to sum 1.
inline std::array<double, 4> feature_importance(const TrainedModel& model) {
    if (!model.trained()) throw UntrainedModel("model has no estimators");
    std::array<double, 4> total{};
    for (std::size_t t = 0; t < model.estimators.size(); ++t) {
        const auto& imp = model.estimators[t].importances();
        for (std::size_t f = 0; f < 4; ++f)
            total[f] += model.estimator_log_weights[t] * imp[f];
    }
    const double sum = std::accumulate(total.begin(), total.end(), 0.0);
    if (sum > 0.0)
        for (double& v : total) v /= sum;
    return total;
}

/// 10-fold (by default) cross-validation of the full pipeline: per fold,
/// train on the remainder, search thresholds on the training-fold
/// predictions, then label and score the held-out fold. Counts and squared
/// errors are pooled before computing micro metrics. The fold shuffle is
/// seeded by config.rng_seed.
inline EvalReport kfold_cv(const std::vector<MosSample>& samples, const AdtConfig& config = {},
                           int k = 10) {
    const std::size_t n = samples.size();
    if (k < 2) throw Error("cross-validation needs k >= 2");
    if (n < static_cast<std::size_t>(k))
        throw TooFewSamples("need at least k samples for k-fold CV");

    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    Rng rng(Rng::derive(config.rng_seed, 0x6b666f6c64ULL));  // fold-shuffle stream
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(order[i], order[j]);
    }

    EvalReport report;
    report.folds = k;
    double squared_error = 0.0;
    std::array<double, 4> importance_sum{};

    const std::size_t base = n / static_cast<std::size_t>(k);
    const std::size_t extra = n % static_cast<std::size_t>(k);
    std::size_t offset = 0;
    for (int fold = 0; fold < k; ++fold) {
        const std::size_t fold_size = base + (static_cast<std::size_t>(fold) < extra ? 1 : 0);
        const std::size_t fold_begin = offset;
        const std::size_t fold_end = offset + fold_size;
        offset = fold_end;

        std::vector<MosSample> train;
        train.reserve(n - fold_size);
        std::vector<const MosSample*> held;
        held.reserve(fold_size);
        for (std::size_t pos = 0; pos < n; ++pos) {
            const MosSample& s = samples[order[pos]];
            if (pos >= fold_begin && pos < fold_end)
                held.push_back(&s);
            else
                train.push_back(s);
        }

        const TrainedModel model = train_adaboost_r2(train, config);
        std::vector<double> train_true(train.size()), train_pred(train.size());
        for (std::size_t i = 0; i < train.size(); ++i) {
            train_true[i] = train[i].mos;
            train_pred[i] = predict_mos(model, train[i].features);
        }
        const ClassThresholds th = search_thresholds(train_true, train_pred);

        for (const MosSample* s : held) {
            const double pred = predict_mos(model, s->features);
            squared_error += (pred - s->mos) * (pred - s->mos);
            const auto t = static_cast<std::size_t>(label_for_mos(s->mos, th));
            const auto p = static_cast<std::size_t>(label_for_mos(pred, th));
            ++report.confusion[t][p];
        }
        const auto imp = feature_importance(model);
        for (std::size_t f = 0; f < 4; ++f) importance_sum[f] += imp[f];
    }

    fill_micro_metrics(report);
    report.mse = squared_error / static_cast<double>(n);
    const double imp_total =
        std::accumulate(importance_sum.begin(), importance_sum.end(), 0.0);
    if (imp_total > 0.0)
        for (std::size_t f = 0; f < 4; ++f)
            report.feature_importance[f] = importance_sum[f] / imp_total;
    return report;
}

/// Labels predictions against truths with fixed thresholds and reports the
/// pooled metrics; used when evaluating a saved model on a fresh manifest.
inline EvalReport evaluate_with_thresholds(const std::vector<double>& true_mos,
                                           const std::vector<double>& predicted_mos,
                                           const ClassThresholds& thresholds) {
    if (true_mos.size() != predicted_mos.size())
        throw LengthMismatch("evaluation needs equal-length score lists");
    if (true_mos.empty()) throw EmptyInput("nothing to evaluate");
    EvalReport report;
    double squared_error = 0.0;
    for (std::size_t i = 0; i < true_mos.size(); ++i) {
        squared_error += (predicted_mos[i] - true_mos[i]) * (predicted_mos[i] - true_mos[i]);
        const auto t = static_cast<std::size_t>(label_for_mos(true_mos[i], thresholds));
        const auto p = static_cast<std::size_t>(label_for_mos(predicted_mos[i], thresholds));
        ++report.confusion[t][p];
    }
    fill_micro_metrics(report);
    report.mse = squared_error / static_cast<double>(true_mos.size());
    return report;
}

}  // namespace vqoe
