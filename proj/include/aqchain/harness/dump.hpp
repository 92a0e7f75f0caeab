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
#include <vector>

#include "aqchain/config.hpp"
#include "aqchain/digest.hpp"
#include "aqchain/ledger/ledger.hpp"

// Per-peer ledger dump written at the end of a run, named by the peer's
// volume label. Layout ("AQL1"):
//
//   magic "AQL1"
//   u32 header length + header bytes    (format version, peer uid, org,
//                                        channel, chaincode name, policy)
//   32 B  sha256 over the header bytes
//   u32 block count
//   per block: u32 length + canonical block bytes
//              + 32 B commit digest recorded when the block was appended
//
// The commit digests anchor the verification: a recomputed header hash
// that disagrees with its recorded digest exposes mutations that pure
// recomputation cannot see (e.g. an edited tip-header timestamp), so any
// single-byte change to the file is detectable offline.

namespace aqchain::harness {

struct DumpHeader {
    std::uint32_t format_version = 1;
    std::string peer_uid;
    std::string org_id;
    std::string channel;
    std::string chaincode;      // empty if nothing was instantiated
    EndorsementPolicy policy;   // policy the peer committed under

    void encode(wire::Writer& w) const;
    static DumpHeader decode(wire::Reader& r);
    bool operator==(const DumpHeader&) const = default;
};

struct LedgerDump {
    DumpHeader header;
    std::vector<ledger::Block> blocks;
    std::vector<Digest> commit_digests;  // parallel to blocks
};

/// Serializes a dump to `path`. Throws IoError on filesystem failure.
void write_ledger_dump(const std::string& path, const LedgerDump& dump);

/// Loads and structurally checks a dump (magic, header anchor, lengths,
/// block decodability). Throws IoError when unreadable and
/// CorruptionError when the file is damaged at the container level.
LedgerDump load_ledger_dump(const std::string& path);

/// Full offline integrity check of a loaded dump (linkage, tx roots,
/// commit digests, validity flags). Corrupt content becomes report
/// entries, not exceptions.
ledger::VerificationReport verify_dump(const LedgerDump& dump);

/// Fields cmd_tamper knows how to mutate. The pollutant fields edit the
/// first emission transaction in the block; header fields work anywhere.
/// Throws RangeError for heights beyond the chain or unknown fields, and
/// Error for a pollutant edit on a block with no emission transaction.
/// The rewritten file keeps the original commit digests, so verification
/// afterwards reports the mutation instead of absorbing it.
void tamper_dump_field(const std::string& path, std::uint64_t height,
                       const std::string& field);

/// The mutation names tamper_dump_field accepts.
std::vector<std::string> tamperable_fields();

}  // namespace aqchain::harness
