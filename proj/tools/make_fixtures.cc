// Copyright 2026 The DFML Reader Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Writes the synthetic corpus data files into a directory:
//   points_0.shp, points_3.shp, points_100.shp
//   subcatchments_0.inp, subcatchments_2.inp, subcatchments_50.inp

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dfml/fixtures.h"

namespace {

bool WriteFile(const std::filesystem::path& path, const char* data,
               std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(data, static_cast<std::streamsize>(size));
  out.close();
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  std::cout << path.string() << " (" << size << " bytes)\n";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Writes synthetic shapefile and SWMM fixtures.",
               "make_fixtures");
  std::string dir = ".";
  std::uint64_t seed = 1;
  app.add_option("dir", dir, "output directory");
  app.add_option("--seed", seed, "seed for point coordinates");
  CLI11_PARSE(app, argc, argv);

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::filesystem::path root(dir);
  for (int n : {0, 3, 100}) {
    const dfml::Bytes shp =
        dfml::BuildPointShapefile(dfml::SamplePoints(n, seed));
    if (!WriteFile(root / ("points_" + std::to_string(n) + ".shp"),
                   reinterpret_cast<const char*>(shp.data()), shp.size())) {
      return 1;
    }
  }
  for (int n : {0, 2, 50}) {
    absl::StatusOr<std::string> inp =
        dfml::BuildSwmmSubcatchments(dfml::SampleSwmmRows(n));
    if (!inp.ok()) {
      std::cerr << "error: " << inp.status().message() << "\n";
      return 1;
    }
    if (!WriteFile(root / ("subcatchments_" + std::to_string(n) + ".inp"),
                   inp->data(), inp->size())) {
      return 1;
    }
  }
  return 0;
}
