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
#include <cstdint>
#include <string>
#include <vector>

#include "aqchain/chaincode/emission.hpp"
#include "aqchain/config.hpp"
#include "aqchain/digest.hpp"
#include "aqchain/identity/identity.hpp"
#include "aqchain/ledger/state.hpp"

namespace aqchain::ledger {

using Nonce = std::array<std::uint8_t, 16>;

/// Signed request from an actor (sensor gateway) to record one emission.
/// The certificate travels with the proposal so endorsers can verify the
/// submitter without shared state.
struct Proposal {
    std::string actor_id;
    std::string channel;
    std::string chaincode;
    chaincode::EmissionRecord record;
    Nonce nonce{};
    identity::Certificate actor_certificate;
    identity::Signature actor_signature;

    /// The bytes the actor signs: everything except certificate and
    /// signature.
    Bytes signed_payload() const;
    Digest digest() const;  // over the full canonical proposal bytes

    void encode(wire::Writer& w) const;
    static Proposal decode(wire::Reader& r);
    Bytes encoded() const;
    bool operator==(const Proposal&) const = default;
};

/// One endorsing peer's signed verdict: "executing this proposal produced
/// the write set with this digest".
struct Endorsement {
    std::string peer_id;
    std::string org_id;
    Digest result_digest;
    identity::Certificate peer_certificate;
    identity::Signature signature;

    /// Signed bytes bind the endorsement to a specific proposal:
    /// (peer_id ‖ org_id ‖ proposal_digest ‖ result_digest).
    static Bytes signed_payload(const std::string& peer_id, const std::string& org_id,
                                const Digest& proposal_digest, const Digest& result_digest);

    void encode(wire::Writer& w) const;
    static Endorsement decode(wire::Reader& r);
    bool operator==(const Endorsement&) const = default;
};

/// Ledger transaction. Genesis blocks carry a single Config transaction
/// (the canonical NetworkConfig bytes); every other transaction is an
/// endorsed emission.
struct Transaction {
    enum class Kind : std::uint8_t { kConfig = 0, kEmission = 1 };

    Kind kind = Kind::kEmission;
    Bytes config_payload;  // kConfig only
    Proposal proposal;     // kEmission only
    RwSet rw_set;
    std::vector<Endorsement> endorsements;

    static Transaction config(Bytes payload);
    static Transaction emission(Proposal proposal, RwSet rw_set,
                                std::vector<Endorsement> endorsements);

    void encode(wire::Writer& w) const;
    static Transaction decode(wire::Reader& r);
    Bytes encoded() const;
    Digest digest() const;
    bool operator==(const Transaction&) const = default;
};

/// Missing (org, peer) pairs, empty when the policy is satisfied.
std::vector<EndorsementPolicy::Entry> check_policy(const EndorsementPolicy& policy,
                                                   const std::vector<Endorsement>& endorsements);

/// Builds a transaction iff the endorsements satisfy the policy, agree on
/// one result digest, and that digest matches the write set. Throws
/// PolicyError or DigestMismatchError otherwise. Pure.
Transaction assemble_transaction(const Proposal& proposal,
                                 const std::vector<Endorsement>& endorsements,
                                 const RwSet& rw_set, const EndorsementPolicy& policy);

}  // namespace aqchain::ledger
