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

#ifndef DFML_BYTE_SOURCE_H_
#define DFML_BYTE_SOURCE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dfml/value.h"

namespace dfml {

// Random-access view of an immutable data file.
class ByteSource {
 public:
  virtual ~ByteSource() = default;

  virtual std::int64_t size() const = 0;
  // Fills `out` from `offset`. Fails with OutOfRange when the range is not
  // entirely inside the data.
  virtual absl::Status ReadAt(std::int64_t offset,
                              std::span<std::uint8_t> out) const = 0;
};

class MemoryByteSource : public ByteSource {
 public:
  explicit MemoryByteSource(Bytes data) : data_(std::move(data)) {}
  explicit MemoryByteSource(absl::string_view text)
      : data_(text.begin(), text.end()) {}

  std::int64_t size() const override {
    return static_cast<std::int64_t>(data_.size());
  }
  absl::Status ReadAt(std::int64_t offset,
                      std::span<std::uint8_t> out) const override;

 private:
  Bytes data_;
};

class FileByteSource : public ByteSource {
 public:
  static absl::StatusOr<std::unique_ptr<FileByteSource>> Open(
      const std::string& path);
  ~FileByteSource() override;

  FileByteSource(const FileByteSource&) = delete;
  FileByteSource& operator=(const FileByteSource&) = delete;

  std::int64_t size() const override { return size_; }
  absl::Status ReadAt(std::int64_t offset,
                      std::span<std::uint8_t> out) const override;

 private:
  FileByteSource(int fd, std::int64_t size) : fd_(fd), size_(size) {}

  int fd_;
  std::int64_t size_;
};

// Whole contents as text.
absl::StatusOr<std::string> ReadAllText(const ByteSource& source);

}  // namespace dfml

#endif  // DFML_BYTE_SOURCE_H_
