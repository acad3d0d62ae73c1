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

// Emits standalone reader programs from a linear sequence. A program takes
// the data file path as its only argument, prints the canonical text form on
// stdout and exits 0; on a read failure it prints "error: <message>" on
// stderr and exits 1; on bad usage it exits 2.

#ifndef DFML_CODEGEN_H_
#define DFML_CODEGEN_H_

#include <memory>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dfml/linearizer.h"
#include "dfml/read_engine.h"

namespace dfml {

enum class SectionKind {
  kImports,
  kContainerDecl,
  kEntryPoint,
  kReaderRoutine,
  kOutputRoutine,
};

absl::string_view SectionKindName(SectionKind kind);

struct ScaffoldSection {
  SectionKind kind;
  std::string content;

  friend bool operator==(const ScaffoldSection&,
                         const ScaffoldSection&) = default;
};

struct ScaffoldPlan {
  std::vector<ScaffoldSection> sections;

  friend bool operator==(const ScaffoldPlan&, const ScaffoldPlan&) = default;
};

struct GeneratedProgram {
  std::string target_id;
  std::string source_text;
  std::string entry_contract;
};

class EmissionTarget {
 public:
  virtual ~EmissionTarget() = default;

  virtual std::string id() const = 0;
  // The fixed skeleton. Exactly one section carries the body marker where
  // per-item read code is spliced in.
  virtual ScaffoldPlan Plan() const = 0;
  // Read code for the whole sequence, or for one selection when `selection`
  // is non-null.
  virtual absl::StatusOr<std::string> EmitBody(
      const LinearSequence& sequence, const Selection* selection) const = 0;
  virtual std::string EntryContract() const = 0;
};

inline constexpr absl::string_view kDefaultTarget = "cpp";
inline constexpr absl::string_view kBodyMarker = "// @read-body\n";

// Fails with AlreadyExists when the id is taken.
absl::Status RegisterEmissionTarget(std::unique_ptr<EmissionTarget> target);
std::vector<std::string> RegisteredTargets();

absl::StatusOr<ScaffoldPlan> PlanScaffold(absl::string_view target_id);

absl::StatusOr<GeneratedProgram> GenerateSequential(
    const LinearSequence& sequence,
    absl::string_view target_id = kDefaultTarget);

absl::StatusOr<GeneratedProgram> GenerateRandom(
    const LinearSequence& sequence, const Selection& selection,
    absl::string_view target_id = kDefaultTarget);

}  // namespace dfml

#endif  // DFML_CODEGEN_H_
