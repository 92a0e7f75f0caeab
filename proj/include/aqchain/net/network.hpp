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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aqchain/chaincode/contract.hpp"
#include "aqchain/config.hpp"
#include "aqchain/identity/identity.hpp"
#include "aqchain/ledger/genesis.hpp"
#include "aqchain/net/actor.hpp"
#include "aqchain/net/bus.hpp"
#include "aqchain/net/orderer.hpp"
#include "aqchain/net/peer.hpp"

namespace aqchain::net {

struct NetworkOptions {
    BusOptions bus;
    /// Seeds CA roots, node keys, and actor nonces when deterministic_keys
    /// is set; otherwise keys come from the OS entropy pool.
    std::uint64_t seed = 1;
    bool deterministic_keys = true;
    /// When non-empty, generate_certificates() writes each node's
    /// certificate (canonical bytes) into this directory.
    std::string cert_dir;
};

class Controller;  // admin client node; defined with the implementation

/// Owns one simulated deployment: the bus, the certificate authorities,
/// the orderer, the peers, and any actors. The establishment sub-steps are
/// exposed separately (instead of one establish() call) because the
/// harness times each of them as its own phase; call them in declaration
/// order.
class Network {
public:
    /// Validates the config (throws ConfigError on duplicate URIs/volumes,
    /// a missing endorser, etc.) but starts nothing yet.
    Network(NetworkConfig config, NetworkOptions options);
    ~Network();

    Network(const Network&) = delete;
    Network& operator=(const Network&) = delete;

    /// Creates one CA per organization and issues every node's
    /// certificate. Seeded mode is fully deterministic.
    void generate_certificates();

    /// Builds the genesis block from the config and spawns the orderer,
    /// the peers, and the admin client on the bus.
    void establish_channel();

    /// JOIN round trip to every peer: each receives the genesis block and
    /// the trust roots, initializes its ledger replica, and acks. Throws
    /// Error if any peer fails to join.
    void join_peers();

    /// Delivers the chaincode to every peer and waits for the acks.
    void install_chaincode(const std::string& name, const std::string& version,
                           std::shared_ptr<const chaincode::Contract> contract);

    /// Activates the chaincode on the channel through the lead policy
    /// peer, which first confirms its fellow policy peers are ready (the
    /// neighbor handshake). Throws LifecycleError naming any policy peer
    /// that lacks the installation.
    void instantiate_chaincode(const std::string& name, const std::string& version,
                               const EndorsementPolicy& policy);

    /// Issues a certificate for a new client actor and attaches it.
    Actor& create_actor(const std::string& actor_id, const std::string& org_id,
                        const std::string& chaincode, const EndorsementPolicy& policy);

    /// One read through a live peer (sent from the admin client).
    /// Returns nullopt when the key is absent on that peer.
    std::optional<chaincode::EmissionRecord> query(const std::string& peer_uid,
                                                   const std::string& chaincode,
                                                   const std::string& key);

    void run_until_idle() { bus_.run_until_idle(); }

    Bus& bus() { return bus_; }
    const NetworkConfig& config() const { return config_; }
    const ledger::Block& genesis() const;
    const identity::TrustStore& trust_roots() const { return roots_; }

    Peer& peer(const std::string& uid);
    std::vector<Peer*> peers();
    Orderer& orderer();

    /// Applies a byte-level mutation to one replica's stored history.
    void tamper_block(const std::string& peer_uid, std::uint64_t height,
                      const std::function<void(ledger::Block&)>& mutation);

private:
    Bytes derive_seed(const std::string& label) const;
    identity::Ca& ca_of(const std::string& org_id);

    NetworkConfig config_;
    NetworkOptions options_;
    Bus bus_;

    std::map<std::string, identity::Ca> cas_;  // by org id
    identity::TrustStore roots_;
    struct Issued {
        identity::Certificate certificate;
        identity::SigningKey key;
    };
    std::map<std::string, Issued> issued_;  // by subject

    std::optional<ledger::Block> genesis_;
    std::unique_ptr<Orderer> orderer_;
    std::vector<std::unique_ptr<Peer>> peers_;
    std::vector<std::unique_ptr<Actor>> actors_;
    std::unique_ptr<Controller> controller_;
    bool certificates_ready_ = false;
    bool channel_ready_ = false;
    bool joined_ = false;
};

}  // namespace aqchain::net
