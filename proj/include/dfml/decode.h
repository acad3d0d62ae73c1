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

#ifndef DFML_DECODE_H_
#define DFML_DECODE_H_

#include <cstdint>
#include <span>

#include "absl/status/statusor.h"
#include "dfml/model.h"
#include "dfml/value.h"

namespace dfml {

// Decodes one binary value. Integers are two's complement at their declared
// width, reals IEEE 754 binary32/binary64; `byte` is signed. Strings take any
// length; every other type requires exactly its intrinsic length.
absl::StatusOr<Scalar> DecodePrimitive(std::span<const std::uint8_t> bytes,
                                       PrimitiveType type, ByteOrder order);

// Low `width` bytes of `value` in the given order. Values outside the width
// are truncated.
Bytes EncodeInteger(std::int64_t value, int width, ByteOrder order);
Bytes EncodeFloat32(float value, ByteOrder order);
Bytes EncodeFloat64(double value, ByteOrder order);

}  // namespace dfml

#endif  // DFML_DECODE_H_
