#pragma once

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "vqoe/adaboost.hpp"
#include "vqoe/errors.hpp"
#include "vqoe/util.hpp"
#include "vqoe/version.hpp"

namespace vqoe {

/// Model file layout (schema_version 1):
/// {schema_version, config, feature_names,
///  trees: [{nodes: [{feature_idx, split_value, left, right, leaf_value}],
///           importances}],
///  log_weights, thresholds}
/// Doubles round-trip losslessly, so a reloaded model predicts bit-for-bit
/// the same values.
inline nlohmann::json model_to_json(const TrainedModel& model) {
    if (!model.trained()) throw UntrainedModel("cannot serialize an untrained model");
    nlohmann::json j;
    j["schema_version"] = kModelSchemaVersion;
    j["config"] = {{"n_estimators", model.config.n_estimators},
                   {"learning_rate", model.config.learning_rate},
                   {"loss", to_string(model.config.loss)},
                   {"max_tree_depth", model.config.max_tree_depth},
                   {"rng_seed", model.config.rng_seed}};
    j["feature_names"] = model.feature_names;
    nlohmann::json trees = nlohmann::json::array();
    for (const RegressionTree& tree : model.estimators) {
        nlohmann::json nodes = nlohmann::json::array();
        for (const TreeNode& n : tree.nodes())
            nodes.push_back({{"feature_idx", n.feature_idx},
                             {"split_value", n.split_value},
                             {"left", n.left},
                             {"right", n.right},
                             {"leaf_value", n.leaf_value}});
        trees.push_back({{"nodes", std::move(nodes)}, {"importances", tree.importances()}});
    }
    j["trees"] = std::move(trees);
    j["log_weights"] = model.estimator_log_weights;
    if (model.thresholds)
        j["thresholds"] = {{"m1", model.thresholds->m1}, {"m2", model.thresholds->m2}};
    else
        j["thresholds"] = nullptr;
    return j;
}

inline TrainedModel model_from_json(const nlohmann::json& j) {
    try {
        const int version = j.at("schema_version").get<int>();
        if (version != kModelSchemaVersion)
            throw SchemaVersionMismatch("model schema_version " + std::to_string(version) +
                                        " is not supported");
        TrainedModel model;
        const nlohmann::json& cfg = j.at("config");
        model.config.n_estimators = cfg.at("n_estimators").get<int>();
        model.config.learning_rate = cfg.at("learning_rate").get<double>();
        model.config.loss = ada_loss_from_string(cfg.at("loss").get<std::string>());
        model.config.max_tree_depth = cfg.at("max_tree_depth").get<int>();
        model.config.rng_seed = cfg.at("rng_seed").get<std::uint64_t>();
        const auto names = j.at("feature_names").get<std::vector<std::string>>();
        if (names.size() != 4) throw CorruptModel("model must carry 4 feature names");
        for (std::size_t i = 0; i < 4; ++i) model.feature_names[i] = names[i];
        for (const nlohmann::json& tj : j.at("trees")) {
            std::vector<TreeNode> nodes;
            for (const nlohmann::json& nj : tj.at("nodes")) {
                TreeNode n;
                n.feature_idx = nj.at("feature_idx").get<int>();
                n.split_value = nj.at("split_value").get<double>();
                n.left = nj.at("left").get<int>();
                n.right = nj.at("right").get<int>();
                n.leaf_value = nj.at("leaf_value").get<double>();
                nodes.push_back(n);
            }
            if (nodes.empty()) throw CorruptModel("tree without nodes");
            const auto imp = tj.at("importances").get<std::array<double, 4>>();
            model.estimators.push_back(RegressionTree::from_parts(std::move(nodes), imp));
        }
        model.estimator_log_weights = j.at("log_weights").get<std::vector<double>>();
        if (!model.trained()) throw CorruptModel("tree and weight counts disagree");
        if (!j.at("thresholds").is_null()) {
            ClassThresholds th;
            th.m1 = j.at("thresholds").at("m1").get<double>();
            th.m2 = j.at("thresholds").at("m2").get<double>();
            model.thresholds = th;
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw CorruptModel(std::string("malformed model JSON: ") + e.what());
    }
}

inline void save_model(const std::filesystem::path& path, const TrainedModel& model) {
    atomic_write_file(path, model_to_json(model).dump(2) + "\n");
}

inline TrainedModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFile("cannot open model file: " + path.string());
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw CorruptModel(std::string("model file is not valid JSON: ") + e.what());
    }
    return model_from_json(j);
}

}  // namespace vqoe
