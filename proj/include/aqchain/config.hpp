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

#include "aqchain/bytes.hpp"
#include "aqchain/wire.hpp"

namespace aqchain {

/// One peer row of the topology table. `volume` doubles as the unique node
/// id and as the ledger dump file name.
struct PeerConfig {
    std::string peer_id;   // "peer0"
    bool endorsing = false;
    std::string service_uri;
    std::string volume;    // "peer0.iiitkottayam.com"
    std::string role_label;  // display only, e.g. "Control Agency"
    bool operator==(const PeerConfig&) const = default;
};

struct OrgConfig {
    std::string org_id;  // "org1"
    std::vector<PeerConfig> peers;
    bool operator==(const OrgConfig&) const = default;
};

struct OrdererConfig {
    std::string id;
    std::string service_uri;
    std::string volume;
    bool operator==(const OrdererConfig&) const = default;
};

struct BlockCutConfig {
    std::uint32_t max_tx = 4;        // cut when this many transactions accumulate
    std::uint32_t max_wait_ms = 500;  // or when this long has passed since the first
    bool operator==(const BlockCutConfig&) const = default;
};

/// Channel topology. Serialized canonically into the genesis block, which
/// makes it the on-chain anchor every replica agrees on.
struct NetworkConfig {
    std::string channel;
    std::vector<OrgConfig> orgs;
    OrdererConfig orderer;
    BlockCutConfig block_cut;

    void encode(wire::Writer& w) const;
    static NetworkConfig decode(wire::Reader& r);
    Bytes encoded() const;
    bool operator==(const NetworkConfig&) const = default;

    const PeerConfig* find_peer(const std::string& org_id, const std::string& peer_id) const;
    const PeerConfig* find_peer_by_volume(const std::string& volume) const;
    std::vector<const PeerConfig*> all_peers() const;
};

/// Signatures a transaction must carry: all listed (org, peer) pairs.
struct EndorsementPolicy {
    struct Entry {
        std::string org_id;
        std::string peer_id;
        auto operator<=>(const Entry&) const = default;
    };
    std::vector<Entry> required;

    void encode(wire::Writer& w) const;
    static EndorsementPolicy decode(wire::Reader& r);
    bool operator==(const EndorsementPolicy&) const = default;

    std::string describe() const;  // "org1/peer0 + org2/peer0"
};

/// The channel default policy: every peer flagged `endorsing`.
EndorsementPolicy endorsing_peers_of(const NetworkConfig& config);

/// Throws ConfigError naming the violated constraint: at least one org,
/// at least one endorsing peer per org, exactly one orderer (by
/// construction), non-empty channel name, unique service URIs and volumes.
void validate_config(const NetworkConfig& config);

/// Policy must be non-empty and every entry must name an endorsing peer
/// present in the config.
void validate_policy(const NetworkConfig& config, const EndorsementPolicy& policy);

}  // namespace aqchain
