/* Copyright 2026 The aqchain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cstdint>
#include <string>

namespace aqchain {

/// Parses an RFC 3339 timestamp ("2024-01-01T00:00:00Z", fractional seconds
/// and numeric offsets allowed) into milliseconds since the Unix epoch.
/// Throws CodecError on malformed input or out-of-range fields.
std::uint64_t parse_rfc3339_ms(const std::string& text);

/// Formats milliseconds since the Unix epoch as UTC RFC 3339 with
/// millisecond precision, e.g. "2024-06-15T13:45:30.250Z".
std::string format_rfc3339_ms(std::uint64_t ms);

}  // namespace aqchain
