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
#include <optional>
#include <string>
#include <vector>

#include "aqchain/bytes.hpp"
#include "aqchain/chaincode/lifecycle.hpp"
#include "aqchain/identity/identity.hpp"
#include "aqchain/ledger/block.hpp"
#include "aqchain/ledger/tx.hpp"

// Frames on the simulated bus: a u8 message-type tag followed by the
// canonical encoding of the body. Every struct below is one frame body.

namespace aqchain::net {

enum class MsgType : std::uint8_t {
    kProposal = 1,        // actor -> endorsing peer
    kEndorseReply = 2,    // endorsing peer -> actor
    kTransaction = 3,     // actor -> orderer
    kBlock = 4,           // orderer -> committing peers
    kJoin = 5,            // admin -> peer (genesis + trust roots)
    kJoinAck = 6,         // peer -> admin
    kInstall = 7,         // admin -> peer
    kInstallAck = 8,      // peer -> admin
    kInstantiate = 9,     // admin -> lead endorsing peer
    kReadyProbe = 10,     // lead peer -> other policy peers
    kReadyAck = 11,       // policy peer -> lead peer
    kActivate = 12,       // lead peer -> every other peer
    kActivateAck = 13,    // peer -> lead peer
    kInstantiateAck = 14, // lead peer -> admin
    kQuery = 15,          // client -> peer
    kQueryResult = 16,    // peer -> client
};

const char* to_string(MsgType t);

/// One delivery on the bus. `frame` = tag byte + canonical body.
struct Message {
    std::string from;
    std::string to;
    Bytes frame;
};

MsgType frame_type(ByteSpan frame);  // throws CodecError on empty/unknown tag

/// Encodes `body` (tag from Body::kType) into a full frame.
template <typename Body>
Bytes encode_frame(const Body& body) {
    wire::Writer w;
    w.u8(static_cast<std::uint8_t>(Body::kType));
    body.encode(w);
    return w.take();
}

/// Decodes a frame whose tag has already been checked against Body::kType.
template <typename Body>
Body decode_frame(ByteSpan frame) {
    if (frame_type(frame) != Body::kType)
        throw CodecError("frame tag does not match expected message type");
    return wire::decode_exact(frame.subspan(1), [](wire::Reader& r) { return Body::decode(r); });
}

struct ProposalMsg {
    static constexpr MsgType kType = MsgType::kProposal;
    ledger::Proposal proposal;

    void encode(wire::Writer& w) const;
    static ProposalMsg decode(wire::Reader& r);
};

/// Endorsement grant or rejection. On success `endorsement` is set; on
/// failure `reasons` carries the violation list (or the auth failure).
struct EndorseReplyMsg {
    static constexpr MsgType kType = MsgType::kEndorseReply;
    std::string peer_uid;
    Digest proposal_digest;
    bool ok = false;
    std::optional<ledger::Endorsement> endorsement;
    ledger::RwSet rw_set;  // populated on success
    std::vector<std::string> reasons;

    void encode(wire::Writer& w) const;
    static EndorseReplyMsg decode(wire::Reader& r);
};

struct TransactionMsg {
    static constexpr MsgType kType = MsgType::kTransaction;
    ledger::Transaction transaction;

    void encode(wire::Writer& w) const;
    static TransactionMsg decode(wire::Reader& r);
};

struct BlockMsg {
    static constexpr MsgType kType = MsgType::kBlock;
    ledger::Block block;

    void encode(wire::Writer& w) const;
    static BlockMsg decode(wire::Reader& r);
};

/// Channel join: the genesis block plus the CA roots the peer must trust.
struct JoinMsg {
    static constexpr MsgType kType = MsgType::kJoin;
    std::string channel;
    ledger::Block genesis;
    identity::TrustStore roots;

    void encode(wire::Writer& w) const;
    static JoinMsg decode(wire::Reader& r);
};

struct JoinAckMsg {
    static constexpr MsgType kType = MsgType::kJoinAck;
    std::string peer_uid;
    bool ok = false;
    std::uint64_t height = 0;
    std::string detail;

    void encode(wire::Writer& w) const;
    static JoinAckMsg decode(wire::Reader& r);
};

/// Chaincode delivery. The contract binary itself cannot cross an
/// in-process bus, so the frame carries its stable type id and peers
/// construct the implementation from their registered factories.
struct InstallMsg {
    static constexpr MsgType kType = MsgType::kInstall;
    std::string name;
    std::string version;
    std::string type_id;

    void encode(wire::Writer& w) const;
    static InstallMsg decode(wire::Reader& r);
};

struct InstallAckMsg {
    static constexpr MsgType kType = MsgType::kInstallAck;
    std::string peer_uid;
    bool ok = false;
    std::string detail;

    void encode(wire::Writer& w) const;
    static InstallAckMsg decode(wire::Reader& r);
};

struct InstantiateMsg {
    static constexpr MsgType kType = MsgType::kInstantiate;
    chaincode::InstantiationRecord record;

    void encode(wire::Writer& w) const;
    static InstantiateMsg decode(wire::Reader& r);
};

/// Lead peer asking a fellow policy peer whether it holds the chaincode.
struct ReadyProbeMsg {
    static constexpr MsgType kType = MsgType::kReadyProbe;
    std::uint64_t probe_id = 0;
    std::string name;
    std::string version;

    void encode(wire::Writer& w) const;
    static ReadyProbeMsg decode(wire::Reader& r);
};

struct ReadyAckMsg {
    static constexpr MsgType kType = MsgType::kReadyAck;
    std::uint64_t probe_id = 0;
    std::string peer_uid;
    bool ok = false;

    void encode(wire::Writer& w) const;
    static ReadyAckMsg decode(wire::Reader& r);
};

/// Activation broadcast once the lead peer confirmed readiness.
struct ActivateMsg {
    static constexpr MsgType kType = MsgType::kActivate;
    chaincode::InstantiationRecord record;

    void encode(wire::Writer& w) const;
    static ActivateMsg decode(wire::Reader& r);
};

struct ActivateAckMsg {
    static constexpr MsgType kType = MsgType::kActivateAck;
    std::string peer_uid;
    bool ok = false;

    void encode(wire::Writer& w) const;
    static ActivateAckMsg decode(wire::Reader& r);
};

struct InstantiateAckMsg {
    static constexpr MsgType kType = MsgType::kInstantiateAck;
    std::string peer_uid;
    bool ok = false;
    std::vector<std::string> missing_peers;  // policy peers lacking the install
    std::string detail;

    void encode(wire::Writer& w) const;
    static InstantiateAckMsg decode(wire::Reader& r);
};

struct QueryMsg {
    static constexpr MsgType kType = MsgType::kQuery;
    std::uint64_t query_id = 0;
    std::string chaincode;
    std::string key;

    void encode(wire::Writer& w) const;
    static QueryMsg decode(wire::Reader& r);
};

struct QueryResultMsg {
    static constexpr MsgType kType = MsgType::kQueryResult;
    std::uint64_t query_id = 0;
    std::string peer_uid;
    bool found = false;
    Bytes record_bytes;  // canonical EmissionRecord when found

    void encode(wire::Writer& w) const;
    static QueryResultMsg decode(wire::Reader& r);
};

}  // namespace aqchain::net
