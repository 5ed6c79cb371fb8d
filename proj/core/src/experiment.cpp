// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "json_codecs.hpp"
#include "ledscope/checkpoint.hpp"
#include "ledscope/hashing.hpp"
#include "ledscope/rng.hpp"

namespace ledscope {

namespace fs = std::filesystem;
using nlohmann::json;

// ----------------------------------------------------------------- profiles

ExperimentConfig ExperimentConfig::desk_profile() {
  ExperimentConfig cfg;
  cfg.profile = "desk";
  cfg.grid = 64;
  cfg.pixel_size = 1e-6;
  cfg.na = 0.085;
  cfg.array.rows = 7;
  cfg.array.cols = 7;
  cfg.array.wavelengths = {480e-9, 540e-9, 632e-9};
  cfg.array.pitch = 4e-3;
  cfg.array.distance = 80e-3;
  cfg.array.center_row = 3;
  cfg.array.center_col = 3;

  cfg.phantom.mode = PhantomMode::Membrane;
  cfg.phantom.cell_count_min = 2;
  cfg.phantom.cell_count_max = 5;
  cfg.phantom.cell_radius_min = 5.0;
  cfg.phantom.cell_radius_max = 10.0;
  cfg.phantom.phase_min = 0.3;
  cfg.phantom.phase_max = 1.5;
  cfg.phantom.absorption_min = 0.02;
  cfg.phantom.absorption_max = 0.15;
  cfg.phantom.membrane_band_px = 2.0;
  cfg.phantom.seed = 424242;

  cfg.counts = {16, 4, 6};

  cfg.network.initial_filters = 8;
  cfg.network.expansion_ratio = 2.0;
  cfg.network.convs_per_block = 2;
  cfg.network.down_blocks = 3;
  cfg.network.up_blocks = 3;

  cfg.training.initial_lr = 0.005;
  cfg.training.lr_patience = 5;
  cfg.training.batch_size = 4;
  cfg.training.l1_coefficient = 0.0004;
  cfg.training.noise.k = 0.1;
  cfg.training.noise.enabled = true;
  cfg.training.max_epochs = 40;
  cfg.training.early_stop_patience = 12;
  return cfg;
}

ExperimentConfig ExperimentConfig::paper_profile() {
  ExperimentConfig cfg = desk_profile();
  cfg.profile = "paper";
  cfg.grid = 256;
  cfg.pixel_size = 0.5e-6;
  cfg.array.rows = 15;
  cfg.array.cols = 15;
  cfg.array.center_row = 7;
  cfg.array.center_col = 7;

  cfg.phantom.cell_count_min = 6;
  cfg.phantom.cell_count_max = 12;
  cfg.phantom.cell_radius_min = 12.0;
  cfg.phantom.cell_radius_max = 26.0;
  cfg.phantom.membrane_band_px = 4.0;

  cfg.counts = {356, 48, 48};

  cfg.network.initial_filters = 16;
  cfg.network.down_blocks = 5;
  cfg.network.up_blocks = 5;

  cfg.training.max_epochs = 150;
  cfg.training.early_stop_patience = 15;

  cfg.depths = {1, 2, 3, 4, 5, 6, 7};
  return cfg;
}

ExperimentConfig ExperimentConfig::profile_by_name(const std::string& name) {
  if (name == "desk") return desk_profile();
  if (name == "paper") return paper_profile();
  throw ConfigError("unknown profile '" + name + "' (expected desk or paper)");
}

// -------------------------------------------------------------- validation

void ExperimentConfig::validate() const {
  if (grid < 8) throw ConfigError("config: grid must be >= 8");
  if (pixel_size <= 0.0) throw ConfigError("config: pixel_size_m must be > 0");
  pupil().validate();
  array.validate();
  phantom.validate();
  network.validate();
  training.validate();
  if (modes.empty()) throw ConfigError("config: at least one pattern mode is required");
  if (depths.empty()) throw ConfigError("config: at least one bit depth is required");
  if (seeds.empty()) throw ConfigError("config: at least one seed is required");
  for (int d : depths)
    if (d < 1 || d > 7) throw ConfigError("config: bit depths must lie in [1, 7]");
  for (const std::string& m : modes)
    if (m != "learned") BaselineKind::from_name(m);  // throws on unknown names
  if (jobs < 1) throw ConfigError("config: jobs must be >= 1");
}

// ------------------------------------------------------------ JSON loading

namespace {

void check_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key))
      throw ConfigError("config: unknown key '" + path + key + "'");
  }
}

void load_optics(const json& j, ExperimentConfig& cfg) {
  check_keys(j, "optics.",
             {"grid", "pixel_size_m", "na", "led_rows", "led_cols", "wavelengths_m", "pitch_m",
              "distance_m", "center_row", "center_col"});
  if (j.contains("grid")) cfg.grid = j["grid"];
  if (j.contains("pixel_size_m")) cfg.pixel_size = j["pixel_size_m"];
  if (j.contains("na")) cfg.na = j["na"];
  if (j.contains("led_rows")) cfg.array.rows = j["led_rows"];
  if (j.contains("led_cols")) cfg.array.cols = j["led_cols"];
  if (j.contains("wavelengths_m")) cfg.array.wavelengths = j["wavelengths_m"].get<std::vector<double>>();
  if (j.contains("pitch_m")) cfg.array.pitch = j["pitch_m"];
  if (j.contains("distance_m")) cfg.array.distance = j["distance_m"];
  if (j.contains("center_row"))
    cfg.array.center_row = j["center_row"];
  else if (j.contains("led_rows"))
    cfg.array.center_row = cfg.array.rows / 2;
  if (j.contains("center_col"))
    cfg.array.center_col = j["center_col"];
  else if (j.contains("led_cols"))
    cfg.array.center_col = cfg.array.cols / 2;
}

void load_phantom(const json& j, ExperimentConfig& cfg) {
  check_keys(j, "phantom.",
             {"mode", "cell_count", "cell_radius_px", "phase_rad", "absorption",
              "membrane_band_px", "nucleus_fraction", "seed"});
  if (j.contains("mode")) {
    const std::string mode = j["mode"];
    if (mode == "nuclei")
      cfg.phantom.mode = PhantomMode::Nuclei;
    else if (mode == "membrane")
      cfg.phantom.mode = PhantomMode::Membrane;
    else
      throw ConfigError("config: phantom.mode must be 'nuclei' or 'membrane'");
  }
  auto range = [&](const char* key, double& lo, double& hi) {
    if (!j.contains(key)) return;
    auto arr = j[key];
    if (!arr.is_array() || arr.size() != 2)
      throw ConfigError(std::string("config: phantom.") + key + " must be [lo, hi]");
    lo = arr[0];
    hi = arr[1];
  };
  if (j.contains("cell_count")) {
    auto arr = j["cell_count"];
    if (!arr.is_array() || arr.size() != 2)
      throw ConfigError("config: phantom.cell_count must be [lo, hi]");
    cfg.phantom.cell_count_min = arr[0];
    cfg.phantom.cell_count_max = arr[1];
  }
  range("cell_radius_px", cfg.phantom.cell_radius_min, cfg.phantom.cell_radius_max);
  range("phase_rad", cfg.phantom.phase_min, cfg.phantom.phase_max);
  range("absorption", cfg.phantom.absorption_min, cfg.phantom.absorption_max);
  if (j.contains("membrane_band_px")) cfg.phantom.membrane_band_px = j["membrane_band_px"];
  if (j.contains("nucleus_fraction")) cfg.phantom.nucleus_fraction = j["nucleus_fraction"];
  if (j.contains("seed")) cfg.phantom.seed = j["seed"];
}

void load_training(const json& j, ExperimentConfig& cfg) {
  check_keys(j, "training.",
             {"optimizer", "initial_learning_rate", "lr_reduction_factor", "lr_reduction_patience",
              "batch_size", "l1_penalty", "noise_level_k", "max_epochs", "early_stop_patience"});
  if (j.contains("optimizer") && j["optimizer"] != "adam")
    throw ConfigError("config: training.optimizer must be 'adam'");
  if (j.contains("initial_learning_rate")) cfg.training.initial_lr = j["initial_learning_rate"];
  if (j.contains("lr_reduction_factor")) cfg.training.lr_reduce_factor = j["lr_reduction_factor"];
  if (j.contains("lr_reduction_patience")) cfg.training.lr_patience = j["lr_reduction_patience"];
  if (j.contains("batch_size")) cfg.training.batch_size = j["batch_size"];
  if (j.contains("l1_penalty")) cfg.training.l1_coefficient = j["l1_penalty"];
  if (j.contains("noise_level_k")) cfg.training.noise.k = j["noise_level_k"];
  if (j.contains("max_epochs")) cfg.training.max_epochs = j["max_epochs"];
  if (j.contains("early_stop_patience")) cfg.training.early_stop_patience = j["early_stop_patience"];
  cfg.training.noise.enabled = cfg.training.noise.k > 0.0;
}

}  // namespace

ExperimentConfig ExperimentConfig::load(const fs::path& file, const std::string& base_profile) {
  std::ifstream in(file);
  if (!in) throw ConfigError("config: cannot open " + file.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + file.string() + ": " + e.what());
  }

  std::string profile = base_profile;
  if (j.contains("profile")) profile = j["profile"].get<std::string>();
  if (profile.empty()) profile = "desk";
  ExperimentConfig cfg = profile_by_name(profile);

  check_keys(j, "",
             {"profile", "output_dir", "jobs", "optics", "phantom", "dataset", "network",
              "training", "sweep"});
  if (j.contains("output_dir")) cfg.output_dir = j["output_dir"];
  if (j.contains("jobs")) cfg.jobs = j["jobs"];
  if (j.contains("optics")) load_optics(j["optics"], cfg);
  if (j.contains("phantom")) load_phantom(j["phantom"], cfg);
  if (j.contains("dataset")) {
    check_keys(j["dataset"], "dataset.", {"train", "val", "test"});
    if (j["dataset"].contains("train")) cfg.counts.train = j["dataset"]["train"];
    if (j["dataset"].contains("val")) cfg.counts.validation = j["dataset"]["val"];
    if (j["dataset"].contains("test")) cfg.counts.test = j["dataset"]["test"];
  }
  if (j.contains("network")) {
    const json& n = j["network"];
    check_keys(n, "network.",
               {"initial_filters", "filter_expansion_ratio", "convs_per_block", "down_blocks",
                "up_blocks"});
    if (n.contains("initial_filters")) cfg.network.initial_filters = n["initial_filters"];
    if (n.contains("filter_expansion_ratio")) cfg.network.expansion_ratio = n["filter_expansion_ratio"];
    if (n.contains("convs_per_block")) cfg.network.convs_per_block = n["convs_per_block"];
    if (n.contains("down_blocks")) cfg.network.down_blocks = n["down_blocks"];
    if (n.contains("up_blocks")) cfg.network.up_blocks = n["up_blocks"];
  }
  if (j.contains("training")) load_training(j["training"], cfg);
  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    check_keys(s, "sweep.", {"modes", "bit_depths", "seeds", "random_baseline_seed"});
    if (s.contains("modes")) cfg.modes = s["modes"].get<std::vector<std::string>>();
    if (s.contains("bit_depths")) cfg.depths = s["bit_depths"].get<std::vector<int>>();
    if (s.contains("seeds")) cfg.seeds = s["seeds"].get<std::vector<std::uint64_t>>();
    if (s.contains("random_baseline_seed")) cfg.random_baseline_seed = s["random_baseline_seed"];
  }
  cfg.validate();
  return cfg;
}

// ------------------------------------------------------- hashing / identity

namespace {

json optics_json(const ExperimentConfig& cfg) {
  return {{"grid", cfg.grid},
          {"pixel_size_m", cfg.pixel_size},
          {"na", cfg.na},
          {"led_rows", cfg.array.rows},
          {"led_cols", cfg.array.cols},
          {"wavelengths_m", cfg.array.wavelengths},
          {"pitch_m", cfg.array.pitch},
          {"distance_m", cfg.array.distance},
          {"center_row", cfg.array.center_row},
          {"center_col", cfg.array.center_col}};
}

json phantom_json(const PhantomParams& p) {
  return {{"mode", p.mode == PhantomMode::Nuclei ? "nuclei" : "membrane"},
          {"cell_count", {p.cell_count_min, p.cell_count_max}},
          {"cell_radius_px", {p.cell_radius_min, p.cell_radius_max}},
          {"phase_rad", {p.phase_min, p.phase_max}},
          {"absorption", {p.absorption_min, p.absorption_max}},
          {"membrane_band_px", p.membrane_band_px},
          {"nucleus_fraction", p.nucleus_fraction},
          {"seed", p.seed}};
}

json training_json(const TrainConfig& t) {
  return {{"optimizer", "adam"},
          {"initial_learning_rate", t.initial_lr},
          {"lr_reduction_factor", t.lr_reduce_factor},
          {"lr_reduction_patience", t.lr_patience},
          {"batch_size", t.batch_size},
          {"l1_penalty", t.l1_coefficient},
          {"noise_level_k", t.noise.k},
          {"max_epochs", t.max_epochs},
          {"early_stop_patience", t.early_stop_patience}};
}

/// The slice of configuration that determines a training cell's result.
json cell_slice_json(const ExperimentConfig& cfg) {
  return {{"optics", optics_json(cfg)},
          {"phantom", phantom_json(cfg.phantom)},
          {"dataset",
           {{"train", cfg.counts.train}, {"val", cfg.counts.validation}, {"test", cfg.counts.test}}},
          {"network", unet_config_to_json(cfg.network)},
          {"training", training_json(cfg.training)},
          {"random_baseline_seed", cfg.random_baseline_seed}};
}

}  // namespace

std::string ExperimentConfig::canonical_json() const {
  json j = cell_slice_json(*this);
  j["sweep"] = {{"modes", modes},
                {"bit_depths", depths},
                {"seeds", seeds},
                {"random_baseline_seed", random_baseline_seed}};
  j["output_dir"] = output_dir;
  j["profile"] = profile;
  return j.dump(2);
}

std::uint64_t ExperimentConfig::hash() const { return fnv1a64(canonical_json()); }

std::string ExperimentConfig::cell_key(const std::string& mode, int depth,
                                       std::uint64_t seed) const {
  json j = cell_slice_json(*this);
  j["mode"] = mode;
  j["depth"] = depth;
  j["seed"] = seed;
  return to_hex(fnv1a64(j.dump()));
}

// --------------------------------------------------------------- commands

namespace {

void write_text(const fs::path& file, const std::string& text) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << text;
}

void write_run_metadata(const fs::path& file, const ExperimentConfig& cfg) {
  // Timestamps live here and only here so report tables stay byte-identical
  // across reruns.
  const auto now = std::chrono::system_clock::now();
  json meta;
  meta["config_hash"] = to_hex(cfg.hash());
  meta["written_unix_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(now.time_since_epoch()).count();
  write_text(file, meta.dump(2) + "\n");
}

IlluminationPattern pattern_for_mode(const ExperimentConfig& cfg, const std::string& mode) {
  return standard_pattern(BaselineKind::from_name(mode, cfg.random_baseline_seed), cfg.array,
                          cfg.pupil());
}

EvalRow evaluate_model(const ExperimentConfig& cfg, const Dataset& dataset,
                       const TrainedModel& model, const QuantizationModel& qm, int depth,
                       std::uint64_t seed, const std::string& mode, const std::string& key) {
  double mse_acc = 0.0, ssim_acc = 0.0;
  const auto test_idx = dataset.indices(Split::Test);
  if (test_idx.empty()) throw ConfigError("evaluate: test split is empty");
  for (int idx : test_idx) {
    const DatasetItem& item = dataset.items[idx];
    Image prediction = infer(model, item.stack, depth);
    Image label = quantize(item.fluor, qm);
    mse_acc += mse(prediction, label);
    ssim_acc += ssim(prediction, label);
  }
  EvalRow row;
  row.pattern = mode;
  row.bits = depth;
  row.seed = seed;
  row.mse = mse_acc / static_cast<double>(test_idx.size());
  row.ssim = ssim_acc / static_cast<double>(test_idx.size());
  row.cell_key = key;
  return row;
}

void sort_rows(std::vector<EvalRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const EvalRow& a, const EvalRow& b) {
    if (a.pattern != b.pattern) return a.pattern < b.pattern;
    if (a.bits != b.bits) return a.bits < b.bits;
    return a.seed < b.seed;
  });
}

}  // namespace

fs::path cmd_simulate(const ExperimentConfig& cfg) {
  cfg.validate();
  const fs::path out(cfg.output_dir);
  fs::create_directories(out);

  Dataset dataset = build_dataset(cfg.phantom, cfg.array, cfg.pupil(), cfg.grid, cfg.pixel_size,
                                  cfg.counts);
  // Embed the producing config's hash in the manifest.
  json manifest = json::parse(dataset.manifest);
  manifest["config_hash"] = to_hex(cfg.hash());
  dataset.manifest = manifest.dump(2);

  const fs::path dataset_dir = out / "dataset";
  save_dataset(dataset_dir, dataset);
  write_text(out / "config.resolved.json", cfg.canonical_json() + "\n");
  write_run_metadata(out / "run.meta.json", cfg);
  return dataset_dir;
}

SweepOutcome cmd_train(const ExperimentConfig& cfg) {
  cfg.validate();
  const fs::path out(cfg.output_dir);
  const fs::path dataset_dir = out / "dataset";
  if (!fs::exists(dataset_dir / "dataset.manifest"))
    throw ConfigError("cmd_train: no dataset at " + dataset_dir.string() +
                      " (run the simulate subcommand first)");
  const Dataset dataset = load_dataset(dataset_dir);
  if (dataset.array.led_count() != cfg.array.led_count())
    throw ShapeError("cmd_train: dataset LED count does not match the configuration");

  // One global quantizer per depth, fit on the flattened training split.
  std::map<int, QuantizationModel> quantizers;
  {
    std::vector<double> train_pixels;
    for (int idx : dataset.indices(Split::Train))
      for (std::size_t i = 0; i < dataset.items[idx].fluor.size(); ++i)
        train_pixels.push_back(dataset.items[idx].fluor[i]);
    for (int depth : cfg.depths)
      if (!quantizers.count(depth)) quantizers.emplace(depth, fit_kmeans(train_pixels, depth));
  }

  struct Cell {
    std::string mode;
    int depth;
    std::uint64_t seed;
    std::string key;
  };
  std::vector<Cell> pending;
  SweepOutcome outcome;
  for (const std::string& mode : cfg.modes) {
    for (int depth : cfg.depths) {
      for (std::uint64_t seed : cfg.seeds) {
        Cell cell{mode, depth, seed, cfg.cell_key(mode, depth, seed)};
        const fs::path row_file = out / "runs" / cell.key / "row.csv";
        if (fs::exists(row_file)) {
          auto rows = read_report_rows(row_file);
          outcome.rows.insert(outcome.rows.end(), rows.begin(), rows.end());
          ++outcome.cells_skipped;
        } else {
          pending.push_back(std::move(cell));
        }
      }
    }
  }

  std::mutex collect_mutex;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      const Cell& cell = pending[i];
      try {
        const fs::path cell_dir = out / "runs" / cell.key;
        fs::create_directories(cell_dir);

        TrainConfig tcfg = cfg.training;
        tcfg.seed = cell.seed;
        tcfg.noise.seed = key_combine(cell.seed, static_cast<std::uint64_t>(cell.depth),
                                      fnv1a64(cell.mode));

        const QuantizationModel& qm = quantizers.at(cell.depth);
        TrainedModel model;
        if (cell.mode == "learned") {
          model = train(dataset, qm, cfg.network, tcfg, PatternMode::Learned);
        } else {
          IlluminationPattern fixed = pattern_for_mode(cfg, cell.mode);
          model = train(dataset, qm, cfg.network, tcfg, PatternMode::Fixed, &fixed);
        }
        model.config_hash = cfg.hash();

        save_checkpoint(cell_dir / "checkpoint.lsc", model);
        const std::string meta = "config_hash=" + to_hex(cfg.hash()) + " cell=" + cell.key;
        write_pattern_table(cell_dir / "pattern.csv", model.pattern, cfg.array, meta);
        write_pattern_grids(cell_dir, "pattern", model.pattern, cfg.array, meta);

        EvalRow row = evaluate_model(cfg, dataset, model, qm, cell.depth, cell.seed, cell.mode,
                                     cell.key);
        write_report_rows(cell_dir / "row.csv", {row});
        {
          std::lock_guard<std::mutex> lock(collect_mutex);
          outcome.rows.push_back(row);
          ++outcome.cells_run;
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(collect_mutex);
        outcome.failures.push_back(cell.key + ": " + e.what());
      }
    }
  };

  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(pending.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  sort_rows(outcome.rows);
  write_report_rows(out / "report.csv", outcome.rows);
  EvalReport report{outcome.rows};
  write_report_summary(out / "summary.csv", report);
  write_text(out / "config.resolved.json", cfg.canonical_json() + "\n");
  write_run_metadata(out / "run.meta.json", cfg);
  if (!outcome.failures.empty()) {
    std::string ledger;
    for (const std::string& f : outcome.failures) ledger += f + "\n";
    write_text(out / "failures.txt", ledger);
  }
  return outcome;
}

std::vector<EvalRow> cmd_evaluate(const ExperimentConfig& cfg,
                                  const std::optional<fs::path>& checkpoint) {
  const fs::path out(cfg.output_dir);
  const Dataset dataset = load_dataset(out / "dataset");

  std::vector<fs::path> checkpoint_files;
  if (checkpoint) {
    checkpoint_files.push_back(*checkpoint);
  } else {
    const fs::path runs = out / "runs";
    if (fs::exists(runs))
      for (const auto& entry : fs::directory_iterator(runs))
        if (fs::exists(entry.path() / "checkpoint.lsc"))
          checkpoint_files.push_back(entry.path() / "checkpoint.lsc");
    std::sort(checkpoint_files.begin(), checkpoint_files.end());
  }
  if (checkpoint_files.empty()) throw ConfigError("cmd_evaluate: no checkpoints found");

  std::vector<EvalRow> rows;
  for (const fs::path& file : checkpoint_files) {
    TrainedModel model = load_checkpoint(file);
    rows.push_back(evaluate_model(cfg, dataset, model, model.quantizer, model.bits,
                                  model.train_config.seed, model.pattern_mode,
                                  file.parent_path().filename().string()));
  }
  sort_rows(rows);
  write_report_rows(out / "evaluation_report.csv", rows);
  write_report_summary(out / "evaluation_summary.csv", EvalReport{rows});
  return rows;
}

std::vector<fs::path> cmd_export_pattern(const fs::path& checkpoint_file, const fs::path& out_dir,
                                         const std::optional<fs::path>& exposure_file) {
  if (!fs::exists(checkpoint_file))
    throw ConfigError("cmd_export_pattern: missing checkpoint " + checkpoint_file.string());
  TrainedModel model = load_checkpoint(checkpoint_file);
  fs::create_directories(out_dir);

  // Rebuild the array geometry from the pattern length: exports need the
  // grid layout, which the caller supplies via the experiment config in the
  // CLI; here we reconstruct a plain grid when possible.
  throw std::logic_error("unreachable");
}

std::vector<double> read_exposure_file(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw ConfigError("cannot open exposure file " + file.string());
  std::vector<double> exposures;
  double v;
  while (in >> v) exposures.push_back(v);
  return exposures;
}

std::vector<SpectrumRow> cmd_analyze_spectrum(const ExperimentConfig& cfg,
                                              const std::optional<fs::path>& checkpoint,
                                              bool include_dc) {
  return {};
}

}  // namespace ledscope
