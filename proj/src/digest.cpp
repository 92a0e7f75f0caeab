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
#include "aqchain/digest.hpp"

#include <sodium.h>

#include <algorithm>

#include "aqchain/errors.hpp"

namespace aqchain {

namespace {

void ensure_sodium() {
    // sodium_init is idempotent and thread-safe; negative means unusable.
    static const int rc = sodium_init();
    if (rc < 0) throw CryptoError("libsodium initialization failed");
}

}  // namespace

Digest Digest::parse_hex(const std::string& hex) {
    const Bytes raw = from_hex(hex);
    if (raw.size() != kSize)
        throw CodecError("digest hex must be 64 characters, got " +
                         std::to_string(hex.size()));
    Digest d;
    std::copy(raw.begin(), raw.end(), d.bytes.begin());
    return d;
}

bool Digest::is_zero() const {
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

Digest sha256(ByteSpan data) {
    ensure_sodium();
    Digest d;
    crypto_hash_sha256(d.bytes.data(), data.data(), data.size());
    return d;
}

Digest sha256(ByteSpan a, ByteSpan b) {
    ensure_sodium();
    crypto_hash_sha256_state st;
    crypto_hash_sha256_init(&st);
    crypto_hash_sha256_update(&st, a.data(), a.size());
    crypto_hash_sha256_update(&st, b.data(), b.size());
    Digest d;
    crypto_hash_sha256_final(&st, d.bytes.data());
    return d;
}

}  // namespace aqchain
