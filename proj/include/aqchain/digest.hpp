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

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "aqchain/bytes.hpp"

namespace aqchain {

/// 32-byte SHA-256 digest. The hash standard is fixed project-wide.
struct Digest {
    static constexpr std::size_t kSize = 32;

    std::array<std::uint8_t, kSize> bytes{};

    static Digest zero() { return {}; }
    static Digest parse_hex(const std::string& hex);

    bool is_zero() const;
    std::string hex() const { return to_hex(span()); }
    /// First 12 hex characters, for logs and summaries.
    std::string short_hex() const { return hex().substr(0, 12); }
    ByteSpan span() const { return ByteSpan(bytes.data(), kSize); }

    auto operator<=>(const Digest&) const = default;
};

/// SHA-256 over a byte span.
Digest sha256(ByteSpan data);

/// SHA-256 over the concatenation of two spans (no copy).
Digest sha256(ByteSpan a, ByteSpan b);

}  // namespace aqchain
