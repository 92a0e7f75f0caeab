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
#include <deque>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "aqchain/chaincode/emission.hpp"
#include "aqchain/config.hpp"
#include "aqchain/identity/identity.hpp"
#include "aqchain/ledger/tx.hpp"
#include "aqchain/net/bus.hpp"
#include "aqchain/net/message.hpp"

namespace aqchain::net {

/// Client node standing in for a sensor gateway: signs proposals, collects
/// endorsements, assembles transactions, and forwards them to the orderer
/// strictly in submission order — a later record never overtakes an
/// earlier one even when its endorsements return first.
class Actor : public Node {
public:
    Actor(std::string actor_id, std::string org_id, identity::Certificate certificate,
          identity::SigningKey key, std::string channel, std::string chaincode,
          EndorsementPolicy policy, std::vector<std::string> endorser_uids,
          std::string orderer_uid, std::uint64_t nonce_seed);

    const std::string& uid() const override { return actor_id_; }
    void on_message(const Message& msg) override;

    /// Signs a proposal for `record` and broadcasts it to every policy
    /// endorser. Returns the proposal digest (the submission's identity).
    Digest submit(const chaincode::EmissionRecord& record);

    /// Fire-and-collect query; the result lands in query_results() once
    /// the bus quiesces.
    std::uint64_t send_query(const std::string& peer_uid, const std::string& key);
    const std::map<std::uint64_t, QueryResultMsg>& query_results() const { return results_; }

    enum class Status : std::uint8_t { kPending, kForwarded, kRejected };
    struct Submission {
        Digest proposal_digest;
        std::string key;  // world-state key the record targets
        Status status = Status::kPending;
        std::vector<std::string> reasons;  // rejection detail
    };

    /// Submission log in submission order (the FIFO reference sequence).
    const std::vector<Submission>& submissions() const { return log_; }
    std::size_t forwarded_count() const { return forwarded_; }
    std::size_t rejected_count() const { return rejected_; }
    const identity::Certificate& certificate() const { return certificate_; }

private:
    struct PendingProposal {
        ledger::Proposal proposal;
        std::size_t log_index = 0;
        ledger::RwSet rw_set;
        bool have_rw_set = false;
        std::vector<ledger::Endorsement> endorsements;
        bool decided = false;
        bool assembled = false;
        ledger::Transaction transaction;  // valid once assembled
    };

    void handle_endorse_reply(const EndorseReplyMsg& reply);
    void decide(PendingProposal& p);
    void flush_in_order();

    std::string actor_id_;
    std::string org_id_;
    identity::Certificate certificate_;
    identity::SigningKey key_;
    std::string channel_;
    std::string chaincode_;
    EndorsementPolicy policy_;
    std::vector<std::string> endorser_uids_;
    std::string orderer_uid_;
    std::mt19937_64 nonce_rng_;

    /// In-flight proposals in submission order; the front gates forwarding.
    std::deque<PendingProposal> window_;
    std::vector<Submission> log_;
    std::map<std::uint64_t, QueryResultMsg> results_;
    std::uint64_t next_query_id_ = 1;
    std::size_t forwarded_ = 0;
    std::size_t rejected_ = 0;
};

}  // namespace aqchain::net
