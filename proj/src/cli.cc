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

#include "dfml/cli.h"

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dfml/byte_source.h"
#include "dfml/codegen.h"
#include "dfml/linearizer.h"
#include "dfml/model.h"
#include "dfml/output.h"
#include "dfml/read_engine.h"
#include "dfml/validate.h"

namespace dfml {
namespace {

enum class ReadMode { kSequential, kRandom };
enum class OutputFormat { kText, kJson, kCsv };

struct Options {
  std::string dfml_path;
  std::string data_path;
  ReadMode mode = ReadMode::kSequential;
  std::string selection;
  OutputFormat format = OutputFormat::kText;
  std::string target = std::string(kDefaultTarget);
  std::string out_path;
};

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
  return kExitFailure;
}

void PrintIssues(const std::vector<Issue>& issues, std::ostream& err) {
  for (const Issue& issue : issues) err << FormatIssue(issue) << "\n";
}

// Parses, validates and linearizes. Issues go to `err`.
std::optional<LinearSequence> LoadSequence(const std::string& path,
                                           std::ostream& err) {
  absl::StatusOr<std::string> text = ReadTextFile(path);
  if (!text.ok()) {
    Fail(err, text.status());
    return std::nullopt;
  }
  absl::StatusOr<DfmlDocument> document = ParseDocument(*text);
  if (!document.ok()) {
    Fail(err, document.status());
    return std::nullopt;
  }
  ValidationReport report = ValidateDocument(*document);
  if (!report.ok()) {
    PrintIssues(report.issues, err);
    return std::nullopt;
  }
  absl::StatusOr<LinearSequence> sequence = Linearize(*document);
  if (!sequence.ok()) {
    Fail(err, sequence.status());
    return std::nullopt;
  }
  return *std::move(sequence);
}

int RunValidate(const Options& options, std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::string> text = ReadTextFile(options.dfml_path);
  if (!text.ok()) return Fail(err, text.status());
  absl::StatusOr<DfmlDocument> document = ParseDocument(*text);
  if (!document.ok()) return Fail(err, document.status());
  ValidationReport report = ValidateDocument(*document);
  PrintIssues(report.issues, out);
  out << report.error_count() << " error(s), " << report.warning_count()
      << " warning(s)\n";
  return report.ok() ? kExitOk : kExitFailure;
}

int RunInspect(const Options& options, std::ostream& out, std::ostream& err) {
  std::optional<LinearSequence> sequence = LoadSequence(options.dfml_path, err);
  if (!sequence) return kExitFailure;
  out << SequenceSummary(*sequence);
  return kExitOk;
}

void WriteRecords(const RecordSet& set, OutputFormat format,
                  std::ostream& out) {
  switch (format) {
    case OutputFormat::kText:
      out << FormatCanonicalText(set.values);
      break;
    case OutputFormat::kJson:
      out << FormatJson(set);
      break;
    case OutputFormat::kCsv:
      out << FormatCsv(set);
      break;
  }
}

int RunRead(const Options& options, std::ostream& out, std::ostream& err) {
  std::optional<LinearSequence> sequence = LoadSequence(options.dfml_path, err);
  if (!sequence) return kExitFailure;
  absl::StatusOr<std::unique_ptr<FileByteSource>> source =
      FileByteSource::Open(options.data_path);
  if (!source.ok()) return Fail(err, source.status());

  if (options.mode == ReadMode::kRandom) {
    absl::StatusOr<Selection> selection = ParseSelection(options.selection);
    if (!selection.ok()) return Fail(err, selection.status());
    absl::StatusOr<std::vector<Value>> values =
        ReadRandom(**source, *sequence, *selection);
    if (!values.ok()) return Fail(err, values.status());
    WriteRecords(GroupValues(*std::move(values), *sequence), options.format,
                 out);
    return kExitOk;
  }

  absl::StatusOr<RecordSet> set = ReadSequential(**source, *sequence);
  if (!set.ok()) return Fail(err, set.status());
  WriteRecords(*set, options.format, out);
  PrintIssues(set->issues, err);
  return set->error_count() == 0 ? kExitOk : kExitFailure;
}

int RunGen(const Options& options, std::ostream& out, std::ostream& err) {
  std::optional<LinearSequence> sequence = LoadSequence(options.dfml_path, err);
  if (!sequence) return kExitFailure;
  absl::StatusOr<GeneratedProgram> program;
  if (options.mode == ReadMode::kRandom) {
    absl::StatusOr<Selection> selection = ParseSelection(options.selection);
    if (!selection.ok()) return Fail(err, selection.status());
    program = GenerateRandom(*sequence, *selection, options.target);
  } else {
    program = GenerateSequential(*sequence, options.target);
  }
  if (!program.ok()) return Fail(err, program.status());
  if (options.out_path == "-") {
    out << program->source_text;
    return kExitOk;
  }
  std::ofstream file(options.out_path, std::ios::binary | std::ios::trunc);
  file << program->source_text;
  file.close();
  if (!file) {
    return Fail(err, absl::InternalError("cannot write " + options.out_path));
  }
  out << "wrote " << options.out_path << " (target " << program->target_id
      << ")\n";
  return kExitOk;
}

void AddDfmlArgument(CLI::App* command, Options& options) {
  auto* flag = command->add_option("--dfml", options.dfml_path,
                                   "DFML description file");
  auto* positional =
      command->add_option("file", options.dfml_path, "DFML description file");
  flag->excludes(positional);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options options;
  CLI::App app("Reads data files described by DFML documents.", "dfml");
  app.require_subcommand(1);

  const std::map<std::string, ReadMode> modes = {
      {"sequential", ReadMode::kSequential}, {"random", ReadMode::kRandom}};
  const std::map<std::string, OutputFormat> formats = {
      {"text", OutputFormat::kText},
      {"json", OutputFormat::kJson},
      {"csv", OutputFormat::kCsv}};

  CLI::App* validate = app.add_subcommand("validate", "check a DFML document");
  AddDfmlArgument(validate, options);

  CLI::App* inspect =
      app.add_subcommand("inspect", "print the linear read sequence");
  AddDfmlArgument(inspect, options);

  CLI::App* read = app.add_subcommand("read", "read a data file");
  read->add_option("--dfml", options.dfml_path, "DFML description file")
      ->required();
  read->add_option("--data", options.data_path, "data file")->required();
  read->add_option("--mode", options.mode, "sequential or random")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  read->add_option("--select", options.selection,
                   "item selection PATH#N or PATH#all");
  read->add_option("--format", options.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  CLI::App* gen = app.add_subcommand("gen", "generate a reader program");
  gen->add_option("--dfml", options.dfml_path, "DFML description file")
      ->required();
  gen->add_option("--mode", options.mode, "sequential or random")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  gen->add_option("--select", options.selection,
                  "item selection PATH#N or PATH#all");
  gen->add_option("--target", options.target, "emission target");
  gen->add_option("--out", options.out_path, "output file, or - for stdout")
      ->required();

  std::vector<const char*> argv;
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    const std::vector<CLI::App*> chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& error) {
    err << "usage error: " << error.what() << "\n"
        << "run 'dfml --help' for usage\n";
    return kExitUsage;
  }

  if ((validate->parsed() || inspect->parsed()) && options.dfml_path.empty()) {
    err << "usage error: a DFML file is required\n";
    return kExitUsage;
  }
  if ((read->parsed() || gen->parsed()) &&
      options.mode == ReadMode::kRandom && options.selection.empty()) {
    err << "usage error: --mode random requires --select\n";
    return kExitUsage;
  }

  if (validate->parsed()) return RunValidate(options, out, err);
  if (inspect->parsed()) return RunInspect(options, out, err);
  if (read->parsed()) return RunRead(options, out, err);
  return RunGen(options, out, err);
}

}  // namespace dfml
