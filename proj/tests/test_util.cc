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

#include "test_util.h"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef DFML_CORPUS_DIR
#error "DFML_CORPUS_DIR must be defined"
#endif
#ifndef DFML_TEST_CXX
#error "DFML_TEST_CXX must be defined"
#endif

namespace dfml::testing {
namespace {

std::string ShellQuote(const std::string& arg) {
  std::string out = "'";
  for (char c : arg) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  out += "'";
  return out;
}

[[noreturn]] void Die(const std::string& message) {
  throw std::runtime_error(message);
}

}  // namespace

std::string CorpusPath(const std::string& name) {
  return std::string(DFML_CORPUS_DIR) + "/" + name;
}

std::string ReadFileOrDie(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Die("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFileOrDie(const std::filesystem::path& path,
                    const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << contents;
  out.close();
  if (!out) Die("cannot write " + path.string());
}

void WriteFileOrDie(const std::filesystem::path& path, const Bytes& contents) {
  WriteFileOrDie(path, std::string(contents.begin(), contents.end()));
}

DfmlDocument ParseOrDie(const std::string& xml) {
  absl::StatusOr<DfmlDocument> document = ParseDocument(xml);
  if (!document.ok()) Die(std::string(document.status().message()));
  return *std::move(document);
}

DfmlDocument LoadCorpusDocument(const std::string& name) {
  return ParseOrDie(ReadFileOrDie(CorpusPath(name)));
}

LinearSequence LoadCorpusSequence(const std::string& name) {
  absl::StatusOr<LinearSequence> sequence =
      Linearize(LoadCorpusDocument(name));
  if (!sequence.ok()) Die(std::string(sequence.status().message()));
  return *std::move(sequence);
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  const auto base = std::filesystem::temp_directory_path();
  path_ = base / ("dfml_test_" + std::to_string(::getpid()) + "_" +
                  std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::filesystem::path& scratch) {
  static std::atomic<int> counter{0};
  const int id = counter++;
  const auto out_path = scratch / ("stdout_" + std::to_string(id));
  const auto err_path = scratch / ("stderr_" + std::to_string(id));
  std::string command;
  for (const std::string& arg : argv) command += ShellQuote(arg) + " ";
  command += ">" + ShellQuote(out_path.string()) + " 2>" +
             ShellQuote(err_path.string());
  const int status = std::system(command.c_str());
  ProcessResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = ReadFileOrDie(out_path.string());
  result.err = ReadFileOrDie(err_path.string());
  return result;
}

std::filesystem::path CompileProgram(const std::string& source,
                                     const std::filesystem::path& dir,
                                     const std::string& name,
                                     std::string* log) {
  const auto source_path = dir / (name + ".cc");
  const auto binary_path = dir / name;
  WriteFileOrDie(source_path, source);
  ProcessResult result =
      RunProcess({DFML_TEST_CXX, "-std=c++17", "-O1", "-Wall", "-Wextra",
                  "-o", binary_path.string(), source_path.string()},
                 dir);
  if (log != nullptr) *log = result.out + result.err;
  if (result.exit_code != 0) return {};
  return binary_path;
}

}  // namespace dfml::testing
