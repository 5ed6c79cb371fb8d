// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/checkpoint.hpp"

#include <bit>
#include <fstream>

#include "json_codecs.hpp"
#include "ledscope/hashing.hpp"
#include "ledscope/rng.hpp"

namespace ledscope {

namespace {

constexpr const char* kMagic = "LEDSCOPECKPT1";

static_assert(std::endian::native == std::endian::little,
              "checkpoint tensors are little-endian; big-endian hosts are unsupported");

}  // namespace

void save_checkpoint(const std::filesystem::path& file, const TrainedModel& model) {
  std::vector<nn::ParamRef> params;
  model.network->collect_params(params);

  nlohmann::json header;
  header["format"] = kMagic;
  header["net_config"] = unet_config_to_json(model.net_config);
  header["train_config"] = train_config_to_json(model.train_config);
  header["bits"] = model.bits;
  header["pattern_mode"] = model.pattern_mode;
  header["pattern"] = {{"weights", model.pattern.weights},
                       {"name", model.pattern.name},
                       {"seed", model.pattern.seed},
                       {"bits", model.pattern.bits}};
  header["quantizer"] = model.quantizer.serialize();
  header["array"] = {{"rows", model.array.rows},
                     {"cols", model.array.cols},
                     {"wavelengths_m", model.array.wavelengths},
                     {"pitch_m", model.array.pitch},
                     {"distance_m", model.array.distance},
                     {"center_row", model.array.center_row},
                     {"center_col", model.array.center_col}};
  header["history"] = history_to_json(model.history);
  header["dataset_manifest_hash"] = to_hex(model.dataset_hash);
  header["config_hash"] = to_hex(model.config_hash);

  nlohmann::json tensors = nlohmann::json::array();
  std::size_t offset = 0;
  for (const auto& p : params) {
    tensors.push_back({{"name", p.name},
                       {"shape", p.shape},
                       {"offset", offset},
                       {"count", p.value->size()}});
    offset += p.value->size();
  }
  header["tensors"] = tensors;

  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write checkpoint " + file.string());
  const std::string header_text = header.dump();
  out << kMagic << "\n" << header_text.size() << "\n" << header_text;
  for (const auto& p : params) {
    std::vector<float> buf(p.value->size());
    for (std::size_t i = 0; i < buf.size(); ++i) buf[i] = static_cast<float>((*p.value)[i]);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(float)));
  }
  if (!out) throw std::runtime_error("short write on checkpoint " + file.string());
}

TrainedModel load_checkpoint(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read checkpoint " + file.string());
  std::string magic;
  std::getline(in, magic);
  if (magic != kMagic) throw std::runtime_error("not a checkpoint file: " + file.string());
  std::string length_line;
  std::getline(in, length_line);
  const std::size_t header_len = std::stoull(length_line);
  std::string header_text(header_len, '\0');
  in.read(header_text.data(), static_cast<std::streamsize>(header_len));
  if (in.gcount() != static_cast<std::streamsize>(header_len))
    throw std::runtime_error("truncated checkpoint header: " + file.string());
  nlohmann::json header = nlohmann::json::parse(header_text);
  if (header.at("format") != kMagic)
    throw std::runtime_error("unsupported checkpoint format in " + file.string());

  TrainedModel model;
  model.net_config = unet_config_from_json(header.at("net_config"));
  model.train_config = train_config_from_json(header.at("train_config"));
  model.bits = header.at("bits");
  model.pattern_mode = header.at("pattern_mode");
  model.pattern.weights = header.at("pattern").at("weights").get<std::vector<double>>();
  model.pattern.name = header.at("pattern").at("name");
  model.pattern.seed = header.at("pattern").at("seed");
  model.pattern.bits = header.at("pattern").at("bits");
  model.quantizer = QuantizationModel::deserialize(header.at("quantizer"));
  const auto& arr = header.at("array");
  model.array.rows = arr.at("rows");
  model.array.cols = arr.at("cols");
  model.array.wavelengths = arr.at("wavelengths_m").get<std::vector<double>>();
  model.array.pitch = arr.at("pitch_m");
  model.array.distance = arr.at("distance_m");
  model.array.center_row = arr.at("center_row");
  model.array.center_col = arr.at("center_col");
  model.history = history_from_json(header.at("history"));
  model.dataset_hash = std::stoull(header.at("dataset_manifest_hash").get<std::string>(), nullptr, 16);
  model.config_hash = std::stoull(header.at("config_hash").get<std::string>(), nullptr, 16);

  model.network = std::make_unique<nn::UNet>(model.net_config, 1, /*init_seed=*/0);
  std::vector<nn::ParamRef> params;
  model.network->collect_params(params);
  const auto& tensors = header.at("tensors");
  if (tensors.size() != params.size())
    throw std::runtime_error("checkpoint tensor directory does not match architecture");

  // Tensors were written back to back in directory order.
  for (std::size_t t = 0; t < params.size(); ++t) {
    const auto& entry = tensors[t];
    if (entry.at("name") != params[t].name)
      throw std::runtime_error("checkpoint tensor order mismatch at " +
                               entry.at("name").get<std::string>());
    const std::size_t count = entry.at("count");
    if (count != params[t].value->size())
      throw std::runtime_error("checkpoint tensor size mismatch at " + params[t].name);
    std::vector<float> buf(count);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(count * sizeof(float)));
    if (in.gcount() != static_cast<std::streamsize>(count * sizeof(float)))
      throw std::runtime_error("truncated checkpoint tensor " + params[t].name);
    for (std::size_t i = 0; i < count; ++i) (*params[t].value)[i] = buf[i];
  }
  return model;
}

}  // namespace ledscope
