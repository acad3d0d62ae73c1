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

#ifndef DFML_TESTS_TEST_UTIL_H_
#define DFML_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dfml/linearizer.h"
#include "dfml/model.h"
#include "dfml/value.h"

namespace dfml::testing {

inline constexpr char kShapefileDoc[] = "shapefile_point.dfml";
inline constexpr char kSwmmDoc[] = "swmm_subcatchments.dfml";

std::string CorpusPath(const std::string& name);
std::string ReadFileOrDie(const std::string& path);
void WriteFileOrDie(const std::filesystem::path& path,
                    const std::string& contents);
void WriteFileOrDie(const std::filesystem::path& path, const Bytes& contents);

DfmlDocument LoadCorpusDocument(const std::string& name);
LinearSequence LoadCorpusSequence(const std::string& name);
DfmlDocument ParseOrDie(const std::string& xml);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

struct ProcessResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs an argv through the shell with stdout and stderr captured.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::filesystem::path& scratch);

// Compiles C++ source with the compiler the tests were configured with.
// Returns the binary path, or an empty path with `log` set on failure.
std::filesystem::path CompileProgram(const std::string& source,
                                     const std::filesystem::path& dir,
                                     const std::string& name,
                                     std::string* log);

}  // namespace dfml::testing

#endif  // DFML_TESTS_TEST_UTIL_H_
