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

#include "dfml/decode.h"

#include <bit>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace dfml {
namespace {

std::uint64_t Assemble(std::span<const std::uint8_t> bytes, ByteOrder order) {
  std::uint64_t raw = 0;
  const std::size_t n = bytes.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t index = order == ByteOrder::kBigEndian ? i : n - 1 - i;
    raw = (raw << 8) | bytes[index];
  }
  return raw;
}

std::int64_t SignExtend(std::uint64_t raw, std::size_t width) {
  if (width >= 8) return static_cast<std::int64_t>(raw);
  const unsigned shift = static_cast<unsigned>(64 - 8 * width);
  return static_cast<std::int64_t>(raw << shift) >> shift;
}

Bytes Split(std::uint64_t raw, int width, ByteOrder order) {
  Bytes out(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) {
    const auto byte = static_cast<std::uint8_t>(raw >> (8 * i));
    const int index = order == ByteOrder::kLittleEndian ? i : width - 1 - i;
    out[static_cast<std::size_t>(index)] = byte;
  }
  return out;
}

}  // namespace

absl::StatusOr<Scalar> DecodePrimitive(std::span<const std::uint8_t> bytes,
                                       PrimitiveType type, ByteOrder order) {
  if (type == PrimitiveType::kString) {
    return std::string(bytes.begin(), bytes.end());
  }
  const auto width = static_cast<std::size_t>(*IntrinsicLength(type));
  if (bytes.size() != width) {
    return absl::InvalidArgumentError(absl::StrCat(
        PrimitiveTypeName(type), " needs ", width, " bytes, got ",
        bytes.size()));
  }
  const std::uint64_t raw = Assemble(bytes, order);
  switch (type) {
    case PrimitiveType::kByte:
    case PrimitiveType::kShort:
    case PrimitiveType::kInteger:
    case PrimitiveType::kLong:
      return SignExtend(raw, width);
    case PrimitiveType::kFloat:
      return static_cast<double>(
          std::bit_cast<float>(static_cast<std::uint32_t>(raw)));
    case PrimitiveType::kDouble:
      return std::bit_cast<double>(raw);
    case PrimitiveType::kChar:
      return std::string(1, static_cast<char>(bytes[0]));
    case PrimitiveType::kString:
      break;
  }
  return absl::InternalError("unhandled primitive type");
}

Bytes EncodeInteger(std::int64_t value, int width, ByteOrder order) {
  return Split(static_cast<std::uint64_t>(value), width, order);
}

Bytes EncodeFloat32(float value, ByteOrder order) {
  return Split(std::bit_cast<std::uint32_t>(value), 4, order);
}

Bytes EncodeFloat64(double value, ByteOrder order) {
  return Split(std::bit_cast<std::uint64_t>(value), 8, order);
}

}  // namespace dfml
