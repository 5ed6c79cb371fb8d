// Copyright (c) 2026 The ledscope Authors.
// SPDX-License-Identifier: Apache-2.0

#include "ledscope/stack_io.hpp"

#include <bit>
#include <fstream>

#include <nlohmann/json.hpp>

namespace ledscope {

static_assert(std::endian::native == std::endian::little,
              "raw image files are little-endian; big-endian hosts are unsupported");

using nlohmann::json;

void write_raw_f32(const std::filesystem::path& file, const Image& image) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  std::vector<float> buf(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) buf[i] = static_cast<float>(image[i]);
  out.write(reinterpret_cast<const char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (!out) throw std::runtime_error("short write: " + file.string());
}

Image read_raw_f32(const std::filesystem::path& file, int rows, int cols) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + file.string());
  std::vector<float> buf(static_cast<std::size_t>(rows) * cols);
  in.read(reinterpret_cast<char*>(buf.data()),
          static_cast<std::streamsize>(buf.size() * sizeof(float)));
  if (in.gcount() != static_cast<std::streamsize>(buf.size() * sizeof(float)))
    throw std::runtime_error("short read: " + file.string());
  Image image(rows, cols);
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = buf[i];
  return image;
}

void save_stack(const std::filesystem::path& dir, const ImageStack& stack, const Image& fluor,
                const LedArray& array, double pixel_size) {
  std::filesystem::create_directories(dir);
  json manifest;
  manifest["grid_rows"] = fluor.rows();
  manifest["grid_cols"] = fluor.cols();
  manifest["led_rows"] = array.rows;
  manifest["led_cols"] = array.cols;
  manifest["wavelengths_m"] = array.wavelengths;
  manifest["pitch_m"] = array.pitch;
  manifest["distance_m"] = array.distance;
  manifest["center_row"] = array.center_row;
  manifest["center_col"] = array.center_col;
  manifest["pixel_size_m"] = pixel_size;
  manifest["led_count"] = stack.count();
  manifest["exposures"] = stack.exposures;
  manifest["data_type"] = "float32";
  manifest["byte_order"] = "little";
  std::ofstream mf(dir / "manifest");
  if (!mf) throw std::runtime_error("cannot write manifest in " + dir.string());
  mf << manifest.dump(2) << "\n";

  for (int i = 0; i < stack.count(); ++i)
    write_raw_f32(dir / ("led_" + std::to_string(i) + ".raw"), stack.images[i]);
  write_raw_f32(dir / "fluor.raw", fluor);
}

LoadedStack load_stack(const std::filesystem::path& dir) {
  std::ifstream mf(dir / "manifest");
  if (!mf) throw std::runtime_error("missing manifest in " + dir.string());
  json manifest = json::parse(mf);
  if (manifest.at("data_type") != "float32" || manifest.at("byte_order") != "little")
    throw std::runtime_error("unsupported stack encoding in " + dir.string());

  LoadedStack loaded;
  loaded.array.rows = manifest.at("led_rows");
  loaded.array.cols = manifest.at("led_cols");
  loaded.array.wavelengths = manifest.at("wavelengths_m").get<std::vector<double>>();
  loaded.array.pitch = manifest.at("pitch_m");
  loaded.array.distance = manifest.at("distance_m");
  loaded.array.center_row = manifest.at("center_row");
  loaded.array.center_col = manifest.at("center_col");
  loaded.pixel_size = manifest.at("pixel_size_m");

  const int rows = manifest.at("grid_rows");
  const int cols = manifest.at("grid_cols");
  const int count = manifest.at("led_count");
  loaded.stack.exposures = manifest.at("exposures").get<std::vector<double>>();
  loaded.stack.images.reserve(count);
  for (int i = 0; i < count; ++i)
    loaded.stack.images.push_back(read_raw_f32(dir / ("led_" + std::to_string(i) + ".raw"), rows, cols));
  loaded.fluor = read_raw_f32(dir / "fluor.raw", rows, cols);
  return loaded;
}

}  // namespace ledscope
