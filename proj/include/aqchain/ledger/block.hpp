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
#include <vector>

#include "aqchain/digest.hpp"
#include "aqchain/ledger/tx.hpp"

namespace aqchain::ledger {

/// Header layout is fixed for hashing:
/// height(u64) ‖ prev_hash(32B) ‖ tx_root(32B) ‖ timestamp(u64), big-endian.
struct BlockHeader {
    std::uint64_t height = 0;
    Digest prev_hash;  // all-zero for genesis
    Digest tx_root;    // digest over the per-transaction digests, in order
    std::uint64_t timestamp_ms = 0;

    void encode(wire::Writer& w) const;
    static BlockHeader decode(wire::Reader& r);
    Bytes encoded() const;
    bool operator==(const BlockHeader&) const = default;
};

/// SHA-256 of the canonical header bytes. Pure and deterministic.
Digest compute_header_hash(const BlockHeader& header);

/// Commit-time verdict per transaction, recorded as block metadata.
enum class TxValidity : std::uint8_t {
    kValid = 0,
    kPolicyUnsatisfied = 1,
    kResultDigestMismatch = 2,
    kVersionConflict = 3,
};

const char* to_string(TxValidity v);

struct Block {
    BlockHeader header;
    std::vector<Transaction> transactions;
    /// Empty while in flight from the orderer; one entry per transaction
    /// once committed. Not covered by tx_root (it is per-replica metadata,
    /// though honest replicas compute identical values).
    std::vector<TxValidity> validity;

    void encode(wire::Writer& w) const;
    static Block decode(wire::Reader& r);
    Bytes encoded() const;
    bool operator==(const Block&) const = default;

    std::size_t valid_count() const;
    std::size_t invalid_count() const;
};

/// Flat hash list: digest of the concatenated per-transaction digests.
Digest compute_tx_root(const std::vector<Transaction>& transactions);

}  // namespace aqchain::ledger
