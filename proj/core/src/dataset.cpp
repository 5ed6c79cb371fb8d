// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/dataset.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "ledscope/hashing.hpp"
#include "ledscope/rng.hpp"
#include "ledscope/stack_io.hpp"

namespace ledscope {

using nlohmann::json;

std::string split_name(Split split) {
  switch (split) {
    case Split::Train: return "train";
    case Split::Validation: return "val";
    case Split::Test: return "test";
  }
  return "train";
}

Split split_from_name(const std::string& name) {
  if (name == "train") return Split::Train;
  if (name == "val") return Split::Validation;
  if (name == "test") return Split::Test;
  throw std::invalid_argument("unknown split name: " + name);
}

std::vector<int> Dataset::indices(Split split) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(items.size()); ++i)
    if (items[i].split == split) out.push_back(i);
  return out;
}

std::uint64_t Dataset::manifest_hash() const { return fnv1a64(manifest); }

namespace {

json phantom_params_json(const PhantomParams& p) {
  json j;
  j["mode"] = p.mode == PhantomMode::Nuclei ? "nuclei" : "membrane";
  j["cell_count"] = {p.cell_count_min, p.cell_count_max};
  j["cell_radius_px"] = {p.cell_radius_min, p.cell_radius_max};
  j["phase_rad"] = {p.phase_min, p.phase_max};
  j["absorption"] = {p.absorption_min, p.absorption_max};
  j["membrane_band_px"] = p.membrane_band_px;
  j["nucleus_fraction"] = p.nucleus_fraction;
  j["seed"] = p.seed;
  return j;
}

}  // namespace

Dataset build_dataset(const PhantomParams& params, const LedArray& array, const Pupil& pupil,
                      int grid, double pixel_size, const SplitCounts& counts) {
  if (counts.train < 1 || counts.validation < 1 || counts.test < 1)
    throw ConfigError("build_dataset: each split needs at least one specimen");
  array.validate();
  pupil.validate();

  Dataset dataset;
  dataset.array = array;
  dataset.pixel_size = pixel_size;
  dataset.grid = grid;

  struct SplitPlan {
    Split split;
    int count;
    std::uint64_t tag;
  };
  const SplitPlan plan[] = {{Split::Train, counts.train, 1},
                            {Split::Validation, counts.validation, 2},
                            {Split::Test, counts.test, 3}};

  json assignment = json::object();
  for (const auto& sp : plan) {
    json ids = json::array();
    for (int i = 0; i < sp.count; ++i) {
      PhantomParams specimen_params = params;
      specimen_params.seed = key_combine(params.seed, sp.tag, static_cast<std::uint64_t>(i));
      Specimen specimen = generate_phantom(specimen_params, grid, pixel_size, array.wavelengths);
      ImageStack stack = simulate_stack(specimen, array, pupil);
      normalize_stack(stack);

      DatasetItem item;
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%s_%03d", split_name(sp.split).c_str(), i);
      item.id = buf;
      item.split = sp.split;
      item.stack = std::move(stack);
      item.fluor = std::move(specimen.fluorescence);
      ids.push_back(item.id);
      dataset.items.push_back(std::move(item));
    }
    assignment[split_name(sp.split)] = ids;
  }

  json manifest;
  manifest["phantom"] = phantom_params_json(params);
  manifest["grid"] = grid;
  manifest["pixel_size_m"] = pixel_size;
  manifest["na"] = pupil.na;
  manifest["led_rows"] = array.rows;
  manifest["led_cols"] = array.cols;
  manifest["wavelengths_m"] = array.wavelengths;
  manifest["pitch_m"] = array.pitch;
  manifest["distance_m"] = array.distance;
  manifest["splits"] = assignment;
  dataset.manifest = manifest.dump(2);
  return dataset;
}

void save_dataset(const std::filesystem::path& root, const Dataset& dataset) {
  std::filesystem::create_directories(root);
  {
    std::ofstream mf(root / "dataset.manifest");
    if (!mf) throw std::runtime_error("cannot write dataset.manifest in " + root.string());
    mf << dataset.manifest << "\n";
  }
  for (const DatasetItem& item : dataset.items) {
    auto dir = root / "split" / split_name(item.split) / item.id;
    save_stack(dir, item.stack, item.fluor, dataset.array, dataset.pixel_size);
  }
}

Dataset load_dataset(const std::filesystem::path& root) {
  std::ifstream mf(root / "dataset.manifest");
  if (!mf) throw std::runtime_error("missing dataset.manifest in " + root.string());
  std::string manifest((std::istreambuf_iterator<char>(mf)), std::istreambuf_iterator<char>());
  // Strip the trailing newline added on save so hashes match the in-memory form.
  if (!manifest.empty() && manifest.back() == '\n') manifest.pop_back();

  json j = json::parse(manifest);
  Dataset dataset;
  dataset.manifest = manifest;
  dataset.grid = j.at("grid");
  dataset.pixel_size = j.at("pixel_size_m");

  bool have_array = false;
  for (const auto& [split_str, ids] : j.at("splits").items()) {
    Split split = split_from_name(split_str);
    for (const auto& id : ids) {
      auto dir = root / "split" / split_str / id.get<std::string>();
      LoadedStack loaded = load_stack(dir);
      if (!have_array) {
        dataset.array = loaded.array;
        have_array = true;
      }
      DatasetItem item;
      item.id = id.get<std::string>();
      item.split = split;
      item.stack = std::move(loaded.stack);
      item.fluor = std::move(loaded.fluor);
      dataset.items.push_back(std::move(item));
    }
  }
  // Keep item order independent of JSON key order: train, then val, then test.
  std::stable_sort(dataset.items.begin(), dataset.items.end(),
                   [](const DatasetItem& a, const DatasetItem& b) {
                     if (a.split != b.split) return static_cast<int>(a.split) < static_cast<int>(b.split);
                     return a.id < b.id;
                   });
  return dataset;
}

}  // namespace ledscope
