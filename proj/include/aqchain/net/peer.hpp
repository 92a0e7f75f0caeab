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
#include <set>
#include <string>
#include <vector>

#include "aqchain/chaincode/lifecycle.hpp"
#include "aqchain/identity/identity.hpp"
#include "aqchain/ledger/ledger.hpp"
#include "aqchain/net/bus.hpp"
#include "aqchain/net/message.hpp"

namespace aqchain::net {

/// A peer node: joins a channel, installs chaincode, endorses proposals
/// (when flagged endorsing), commits ordered blocks, answers queries.
/// The handle_* methods are the real logic; on_message only routes to
/// them, so unit tests can call them directly without a bus.
class Peer : public Node {
public:
    Peer(const PeerConfig& config, std::string org_id, identity::Certificate certificate,
         identity::SigningKey key);

    const std::string& uid() const override { return uid_; }
    const std::string& peer_id() const { return peer_id_; }
    const std::string& org_id() const { return org_id_; }
    bool endorsing() const { return endorsing_; }
    const identity::Certificate& certificate() const { return certificate_; }

    /// Makes a contract implementation available for installation,
    /// keyed by its type id (the in-process stand-in for shipping code).
    void register_contract(std::shared_ptr<const chaincode::Contract> contract);

    void on_message(const Message& msg) override;

    // --- channel / lifecycle state -------------------------------------
    bool joined() const { return ledger_.has_value(); }
    /// Throws LifecycleError before a successful join.
    const ledger::Ledger& ledger() const;
    const chaincode::ChaincodeRegistry& registry() const { return registry_; }
    bool instantiated(const std::string& name) const;
    const chaincode::InstantiationRecord* instantiation(const std::string& name) const;

    // --- direct entry points (same code paths the bus handlers use) ----
    JoinAckMsg handle_join(const JoinMsg& msg);
    InstallAckMsg handle_install(const InstallMsg& msg);
    EndorseReplyMsg handle_proposal(const ledger::Proposal& proposal);
    /// Commits in height order; blocks arriving early are buffered until
    /// their predecessor lands. Duplicate heights are ignored.
    void handle_block(const ledger::Block& block);
    QueryResultMsg handle_query(const QueryMsg& msg);

    std::size_t buffered_blocks() const { return pending_blocks_.size(); }
    std::uint64_t endorsements_granted() const { return granted_; }
    std::uint64_t endorsements_rejected() const { return rejected_; }

    /// Test-only backdoor mimicking an attacker editing stored history;
    /// see Ledger::tamper_block.
    void tamper_block(std::uint64_t height, const std::function<void(ledger::Block&)>& mutation);

private:
    void handle_instantiate(const std::string& from, const InstantiateMsg& msg);
    void handle_ready_probe(const std::string& from, const ReadyProbeMsg& msg);
    void handle_ready_ack(const ReadyAckMsg& msg);
    void handle_activate(const std::string& from, const ActivateMsg& msg);
    void handle_activate_ack(const ActivateAckMsg& msg);
    void activate(const chaincode::InstantiationRecord& record);
    void finish_instantiate_probe();
    std::vector<std::string> policy_peer_uids(const EndorsementPolicy& policy) const;
    std::vector<std::string> all_peer_uids() const;

    std::string uid_;  // volume label; doubles as the dump file name
    std::string peer_id_;
    std::string org_id_;
    bool endorsing_ = false;
    identity::Certificate certificate_;
    identity::SigningKey key_;

    std::map<std::string, std::shared_ptr<const chaincode::Contract>> known_contracts_;
    std::optional<ledger::Ledger> ledger_;
    identity::TrustStore roots_;
    chaincode::ChaincodeRegistry registry_;
    std::map<std::string, chaincode::InstantiationRecord> active_;  // by chaincode name
    std::map<std::uint64_t, ledger::Block> pending_blocks_;

    /// Lead-peer state while coordinating one instantiation.
    struct InstantiateFlow {
        chaincode::InstantiationRecord record;
        std::string requester;
        std::uint64_t probe_id = 0;
        std::set<std::string> awaiting_ready;
        std::set<std::string> awaiting_activate;
        std::vector<std::string> missing;
    };
    std::optional<InstantiateFlow> flow_;
    std::uint64_t next_probe_id_ = 1;

    std::uint64_t granted_ = 0;
    std::uint64_t rejected_ = 0;
};

}  // namespace aqchain::net
