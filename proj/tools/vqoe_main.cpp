// vqoe: no-reference video QoE annotation toolkit.
//
// Subcommands: analyze (metrics for one clip), synth (synthetic corpus),
// train (boosted-tree MOS model + CV report), eval (saved model vs manifest).
// Exit codes: 0 success, 2 input/usage error, 3 model error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vqoe/adaboost.hpp"
#include "vqoe/eval.hpp"
#include "vqoe/features.hpp"
#include "vqoe/labeling.hpp"
#include "vqoe/model_json.hpp"
#include "vqoe/spatial.hpp"
#include "vqoe/synth.hpp"
#include "vqoe/temporal.hpp"
#include "vqoe/util.hpp"
#include "vqoe/version.hpp"
#include "vqoe/y4m.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitModel = 3;

nlohmann::json report_to_json(const vqoe::EvalReport& report) {
    nlohmann::json j;
    j["schema_version"] = vqoe::kReportSchemaVersion;
    j["micro_precision"] = report.micro_precision;
    j["micro_accuracy"] = report.micro_accuracy;
    j["micro_recall"] = report.micro_recall;
    j["mse"] = report.mse;
    j["confusion"] = report.confusion;
    j["feature_importance"] = report.feature_importance;
    j["n_samples"] = report.n_samples;
    j["folds"] = report.folds;
    return j;
}

void print_pretty_report(const vqoe::EvalReport& report) {
    std::printf("%-6s %14s %13s %11s %6s\n", "Model", "Precision (%)", "Accuracy (%)",
                "Recall (%)", "MSE");
    std::printf("%-6s %14.2f %13.2f %11.2f %6.2f\n", "ADT", report.micro_precision,
                report.micro_accuracy, report.micro_recall, report.mse);
    std::printf("\nFeature importance:\n");
    for (std::size_t f = 0; f < 4; ++f)
        std::printf("  %-22s %.4f\n", vqoe::kFeatureNames[f], report.feature_importance[f]);
}

void require_matching_features(const vqoe::TrainedModel& model) {
    for (std::size_t i = 0; i < 4; ++i)
        if (model.feature_names[i] != vqoe::kFeatureNames[i])
            throw vqoe::SchemaVersionMismatch(
                "model feature_names do not match this extractor: " + model.feature_names[i]);
}

int cmd_analyze(const std::filesystem::path& input, std::uint64_t recorded_bitrate,
                const std::optional<std::filesystem::path>& model_path, int qp,
                const vqoe::DecimateThresholds& thresholds, bool baseline_dct,
                const std::filesystem::path& out, bool pretty) {
    vqoe::LoadedClip clip = vqoe::load_y4m(input);
    clip.meta = vqoe::attach_recorded_bitrate(clip.meta, recorded_bitrate);
    vqoe::IntraCoderConfig coder;
    coder.qp = qp;

    const vqoe::PbrResult pbr = vqoe::compute_pbr(clip.frames, clip.meta, coder);
    const vqoe::TemporalResult temporal =
        vqoe::detect_freezes(clip.frames, clip.meta, thresholds);

    vqoe::QoeFeatures features;
    features.pbr_percent = pbr.pbr_percent;
    features.freeze_ratio = temporal.freeze_ratio;
    features.num_freezes = static_cast<double>(temporal.num_freezes);
    features.total_freeze_seconds = temporal.total_freeze_seconds;

    nlohmann::json j;
    j["schema_version"] = vqoe::kReportSchemaVersion;
    j["clip_id"] = clip.meta.clip_id;
    j["features"] = features;
    nlohmann::json warnings = nlohmann::json::array();
    if (temporal.still_clip_warning)
        warnings.push_back("still_clip: every frame duplicates its predecessor; "
                           "freeze metrics are unreliable for all-still content");
    j["warnings"] = std::move(warnings);
    if (baseline_dct) j["dct_baseline_score"] = vqoe::dct_blur_baseline(clip.frames);

    if (model_path) {
        const vqoe::TrainedModel model = vqoe::load_model(*model_path);
        require_matching_features(model);
        if (!model.thresholds)
            throw vqoe::CorruptModel("model carries no class thresholds; re-train");
        const double mos = vqoe::predict_mos(model, features);
        j["predicted_mos"] = mos;
        j["label"] = vqoe::to_string(vqoe::label_for_mos(mos, *model.thresholds));
    }

    vqoe::atomic_write_file(out, j.dump(2) + "\n");
    if (pretty) {
        std::printf("clip %s: pbr=%.2f%% freeze_ratio=%.4f freezes=%u frozen=%.2fs\n",
                    clip.meta.clip_id.c_str(), features.pbr_percent, features.freeze_ratio,
                    temporal.num_freezes, features.total_freeze_seconds);
        if (j.contains("label"))
            std::printf("predicted MOS %.3f -> %s\n", j["predicted_mos"].get<double>(),
                        j["label"].get<std::string>().c_str());
    }
    return kExitOk;
}

int cmd_synth(std::size_t n, std::uint64_t seed, const std::filesystem::path& out_dir,
              std::uint32_t width, std::uint32_t height, std::uint32_t frames,
              std::uint32_t fps_num) {
    vqoe::BuildCorpusOptions opts;
    opts.n_clips = n;
    opts.seed = seed;
    opts.out_dir = out_dir;
    opts.width = width;
    opts.height = height;
    opts.frame_count = frames;
    opts.fps = {fps_num, 1};
    opts.threads = vqoe::env_threads();
    const vqoe::CorpusResult corpus = vqoe::build_corpus(opts);
    std::printf("wrote %zu clips and %s\n", corpus.clips.size(),
                corpus.manifest_path.string().c_str());
    return kExitOk;
}

int cmd_train(const std::filesystem::path& manifest, int folds, std::uint64_t seed,
              const std::filesystem::path& out_model, const std::filesystem::path& report_path,
              bool pretty) {
    vqoe::DatasetOptions dopts;
    dopts.threads = vqoe::env_threads();
    const std::vector<vqoe::MosSample> samples = vqoe::load_dataset(manifest, dopts);

    vqoe::AdtConfig config;
    config.rng_seed = seed;
    const vqoe::EvalReport report = vqoe::kfold_cv(samples, config, folds);

    vqoe::TrainedModel model = vqoe::train_adaboost_r2(samples, config);
    std::vector<double> truths(samples.size()), preds(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        truths[i] = samples[i].mos;
        preds[i] = vqoe::predict_mos(model, samples[i].features);
    }
    model.thresholds = vqoe::search_thresholds(truths, preds);
    vqoe::save_model(out_model, model);

    nlohmann::json j = report_to_json(report);
    j["model_path"] = out_model.string();
    j["thresholds"] = {{"m1", model.thresholds->m1}, {"m2", model.thresholds->m2}};
    vqoe::atomic_write_file(report_path, j.dump(2) + "\n");
    if (pretty) {
        print_pretty_report(report);
        std::printf("\nthresholds: m1=%.2f m2=%.2f\n", model.thresholds->m1,
                    model.thresholds->m2);
    }
    return kExitOk;
}

int cmd_eval(const std::filesystem::path& manifest, const std::filesystem::path& model_path,
             const std::filesystem::path& report_path, bool pretty) {
    const vqoe::TrainedModel model = vqoe::load_model(model_path);
    require_matching_features(model);
    if (!model.thresholds)
        throw vqoe::CorruptModel("model carries no class thresholds; re-train");

    vqoe::DatasetOptions dopts;
    dopts.threads = vqoe::env_threads();
    const std::vector<vqoe::MosSample> samples = vqoe::load_dataset(manifest, dopts);
    std::vector<double> truths(samples.size()), preds(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        truths[i] = samples[i].mos;
        preds[i] = vqoe::predict_mos(model, samples[i].features);
    }
    vqoe::EvalReport report = vqoe::evaluate_with_thresholds(truths, preds, *model.thresholds);
    report.feature_importance = vqoe::feature_importance(model);

    nlohmann::json j = report_to_json(report);
    j["model_path"] = model_path.string();
    j["thresholds"] = {{"m1", model.thresholds->m1}, {"m2", model.thresholds->m2}};
    vqoe::atomic_write_file(report_path, j.dump(2) + "\n");
    if (pretty) print_pretty_report(report);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"no-reference video QoE annotation toolkit"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "also print a human-readable table");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "compute QoE metrics for one Y4M clip");
    std::filesystem::path an_input, an_out;
    std::uint64_t an_bitrate = 0;
    std::optional<std::filesystem::path> an_model;
    int an_qp = 30;
    vqoe::DecimateThresholds an_th;
    bool an_baseline = false;
    analyze->add_option("--input", an_input, "input .y4m file")->required();
    analyze->add_option("--recorded-bitrate", an_bitrate, "recorded bitrate B_rec in bits/s")
        ->required()
        ->check(CLI::PositiveNumber);
    analyze->add_option("--model", an_model, "trained model file; adds predicted_mos and label");
    analyze->add_option("--qp", an_qp, "intra coder QP")->check(CLI::Range(0, 51));
    analyze->add_option("--hi", an_th.hi, "duplicate test: max per-block SAD");
    analyze->add_option("--lo", an_th.lo, "duplicate test: changed-block SAD");
    analyze->add_option("--frac", an_th.frac, "duplicate test: changed-block fraction")
        ->check(CLI::Range(0.0, 1.0));
    analyze->add_flag("--baseline-dct", an_baseline, "also compute the DCT blur baseline");
    analyze->add_option("--out", an_out, "output report JSON")->required();

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic degraded corpus");
    std::size_t sy_n = 300;
    std::uint64_t sy_seed = 7;
    std::filesystem::path sy_dir;
    std::uint32_t sy_w = 64, sy_h = 64, sy_frames = 240, sy_fps = 30;
    synth->add_option("--n", sy_n, "number of clips")->required()->check(CLI::Range(10, 1000000));
    synth->add_option("--seed", sy_seed, "corpus seed");
    synth->add_option("--out-dir", sy_dir, "output directory")->required();
    synth->add_option("--width", sy_w, "clip width")->check(CLI::Range(8u, 4096u));
    synth->add_option("--height", sy_h, "clip height")->check(CLI::Range(8u, 4096u));
    synth->add_option("--frames", sy_frames, "frames per clip")->check(CLI::Range(2u, 100000u));
    synth->add_option("--fps", sy_fps, "frames per second")->check(CLI::Range(1u, 240u));

    // train
    auto* train = app.add_subcommand("train", "train the MOS model and report CV metrics");
    std::filesystem::path tr_manifest, tr_model, tr_report;
    int tr_folds = 10;
    std::uint64_t tr_seed = 0;
    train->add_option("--manifest", tr_manifest, "dataset manifest CSV")->required();
    train->add_option("--folds", tr_folds, "cross-validation folds")->check(CLI::Range(2, 1000));
    train->add_option("--seed", tr_seed, "training seed");
    train->add_option("--out-model", tr_model, "output model JSON")->required();
    train->add_option("--report", tr_report, "output report JSON")->required();

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a saved model against a manifest");
    std::filesystem::path ev_manifest, ev_model, ev_report;
    eval->add_option("--manifest", ev_manifest, "dataset manifest CSV")->required();
    eval->add_option("--model", ev_model, "trained model JSON")->required();
    eval->add_option("--report", ev_report, "output report JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (analyze->parsed())
            return cmd_analyze(an_input, an_bitrate, an_model, an_qp, an_th, an_baseline,
                               an_out, pretty);
        if (synth->parsed()) return cmd_synth(sy_n, sy_seed, sy_dir, sy_w, sy_h, sy_frames, sy_fps);
        if (train->parsed())
            return cmd_train(tr_manifest, tr_folds, tr_seed, tr_model, tr_report, pretty);
        if (eval->parsed()) return cmd_eval(ev_manifest, ev_model, ev_report, pretty);
    } catch (const vqoe::SchemaVersionMismatch& e) {
        std::cerr << "vqoe: model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const vqoe::CorruptModel& e) {
        std::cerr << "vqoe: model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const vqoe::UntrainedModel& e) {
        std::cerr << "vqoe: model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const std::exception& e) {
        std::cerr << "vqoe: error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
