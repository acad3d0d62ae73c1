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

#include "dfml/byte_source.h"

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "absl/strings/str_cat.h"

namespace dfml {
namespace {

absl::Status CheckRange(std::int64_t offset, std::size_t count,
                        std::int64_t size) {
  const auto n = static_cast<std::int64_t>(count);
  if (offset < 0 || offset > size || n > size - offset) {
    return absl::OutOfRangeError(absl::StrCat("range [", offset, ", ",
                                              offset + n, ") is outside ",
                                              size, " bytes of data"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::Status MemoryByteSource::ReadAt(std::int64_t offset,
                                      std::span<std::uint8_t> out) const {
  absl::Status status = CheckRange(offset, out.size(), size());
  if (!status.ok()) return status;
  if (!out.empty()) std::memcpy(out.data(), data_.data() + offset, out.size());
  return absl::OkStatus();
}

absl::StatusOr<std::unique_ptr<FileByteSource>> FileByteSource::Open(
    const std::string& path) {
  const int fd = ::open(path.c_str(), O_RDONLY | O_CLOEXEC);
  if (fd < 0) {
    return absl::NotFoundError(
        absl::StrCat("cannot open ", path, ": ", std::strerror(errno)));
  }
  struct stat info;
  if (::fstat(fd, &info) != 0 || !S_ISREG(info.st_mode)) {
    ::close(fd);
    return absl::InvalidArgumentError(
        absl::StrCat(path, " is not a regular file"));
  }
  return std::unique_ptr<FileByteSource>(
      new FileByteSource(fd, static_cast<std::int64_t>(info.st_size)));
}

FileByteSource::~FileByteSource() { ::close(fd_); }

absl::Status FileByteSource::ReadAt(std::int64_t offset,
                                    std::span<std::uint8_t> out) const {
  absl::Status status = CheckRange(offset, out.size(), size_);
  if (!status.ok()) return status;
  std::size_t done = 0;
  while (done < out.size()) {
    const ssize_t got = ::pread(fd_, out.data() + done, out.size() - done,
                                static_cast<off_t>(offset + done));
    if (got < 0 && errno == EINTR) continue;
    if (got <= 0) {
      return absl::DataLossError(absl::StrCat(
          "read failed at byte ", offset + done, ": ",
          got == 0 ? "unexpected end of file" : std::strerror(errno)));
    }
    done += static_cast<std::size_t>(got);
  }
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadAllText(const ByteSource& source) {
  std::string text(static_cast<std::size_t>(source.size()), '\0');
  absl::Status status = source.ReadAt(
      0, std::span<std::uint8_t>(reinterpret_cast<std::uint8_t*>(text.data()),
                                 text.size()));
  if (!status.ok()) return status;
  return text;
}

}  // namespace dfml
