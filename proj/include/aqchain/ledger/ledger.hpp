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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aqchain/config.hpp"
#include "aqchain/ledger/block.hpp"
#include "aqchain/ledger/state.hpp"

namespace aqchain::ledger {

struct VerificationReport {
    enum class Kind {
        kHeaderDigest,   // recomputed header hash != recorded commit digest
        kLinkage,        // prev_hash or height out of sequence
        kTxRoot,         // recomputed tx_root != header.tx_root
        kValidityFlags,  // recomputed commit verdicts != stored metadata
        kStateDiverged,  // replayed state != stored state
        kDecode,         // block bytes no longer decode (dump verification)
    };
    struct Mismatch {
        std::uint64_t height = 0;
        Kind kind = Kind::kHeaderDigest;
        std::string detail;
    };

    bool valid = true;
    std::vector<Mismatch> mismatches;
    std::uint64_t blocks_checked = 0;

    static const char* kind_name(Kind k);
};

/// Recomputes the per-transaction verdicts for a block against `state`
/// (policy presence, result-digest agreement, read-version conflicts) and
/// applies the valid writes. Shared by commit and verification so flags
/// never drift between them.
std::vector<TxValidity> validate_and_apply(const Block& block, WorldState& state,
                                           const EndorsementPolicy& policy);

/// Integrity check over a stored chain: recomputed header hashes against
/// the commit digests recorded when each block was appended, prev_hash
/// linkage, tx roots, and re-derived validity flags. Works on any chain
/// snapshot (a live ledger's storage or a loaded dump file), never throws
/// on corrupt content — corruption becomes report entries.
VerificationReport verify_chain(const std::vector<Block>& chain,
                                const std::vector<Digest>& commit_digests,
                                const EndorsementPolicy& policy);

/// World state derived by replaying `chain` from empty with recomputed
/// verdicts (stored flags are untrusted). This is what query-on-dump uses.
WorldState replay_state(const std::vector<Block>& chain, const EndorsementPolicy& policy);

/// Hash-chained block store plus the world state derived from it.
/// Single-writer: one committing peer owns and mutates a Ledger.
class Ledger {
public:
    /// Throws ConfigError unless `genesis` is a well-formed height-0 block
    /// carrying a single config transaction. The embedded NetworkConfig
    /// supplies the default endorsement policy (every endorsing peer).
    explicit Ledger(Block genesis);

    /// Appends the next block. Preconditions: height == chain length,
    /// prev_hash == hash of the current tip header, tx_root matches the
    /// body. Violations throw LinkageError and leave the ledger unchanged.
    /// Commit verdicts are recomputed here; invalid transactions are
    /// recorded in block metadata and skipped in state application.
    void append(Block block);

    /// Full integrity check: recomputed header hashes against the commit
    /// digests recorded at append time, linkage, tx roots, re-derived
    /// validity flags, and a state replay from empty. Verification of a
    /// corrupt chain succeeds and reports invalid.
    VerificationReport verify() const;

    /// Latest committed value for `key`, or nullopt. Read-only.
    std::optional<WorldState::Entry> query_state(const std::string& key) const;

    std::uint64_t height() const { return static_cast<std::uint64_t>(chain_.size()) - 1; }
    std::size_t block_count() const { return chain_.size(); }
    const Block& block_at(std::uint64_t height) const;
    const std::vector<Block>& chain() const { return chain_; }
    const WorldState& state() const { return state_; }
    const NetworkConfig& config() const { return config_; }

    /// Digest of the tip header as recorded at commit time.
    const Digest& tip_digest() const { return digests_.back(); }
    /// Commit digest recorded for a given height.
    const Digest& digest_at(std::uint64_t height) const;
    /// All commit digests, parallel to chain().
    const std::vector<Digest>& commit_digests() const { return digests_; }

    /// Fingerprint over the full canonical chain bytes, recomputed from
    /// current storage: any post-commit mutation anywhere diverges it.
    Digest chain_digest() const;

    /// Active endorsement policy used for commit verdicts. Defaults to the
    /// config's endorsing peers; chaincode instantiation may narrow it.
    const EndorsementPolicy& policy() const { return policy_; }
    void set_policy(EndorsementPolicy policy);

    /// Test-only backdoor: mutates a stored block in place, leaving the
    /// recorded digests and world state stale, exactly like an attacker
    /// editing history. Throws RangeError for heights beyond the chain.
    void tamper_block(std::uint64_t height, const std::function<void(Block&)>& mutation);

private:
    std::vector<Block> chain_;
    std::vector<Digest> digests_;  // commit digest per block
    WorldState state_;
    NetworkConfig config_;
    EndorsementPolicy policy_;
};

}  // namespace aqchain::ledger
