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
#include "aqchain/ledger/tx.hpp"

#include <algorithm>

#include "aqchain/errors.hpp"

namespace aqchain::ledger {

Bytes Proposal::signed_payload() const {
    wire::Writer w;
    w.str(actor_id);
    w.str(channel);
    w.str(chaincode);
    record.encode(w);
    w.raw(ByteSpan(nonce.data(), nonce.size()));
    return w.take();
}

void Proposal::encode(wire::Writer& w) const {
    w.str(actor_id);
    w.str(channel);
    w.str(chaincode);
    record.encode(w);
    w.raw(ByteSpan(nonce.data(), nonce.size()));
    actor_certificate.encode(w);
    w.raw(actor_signature.span());
}

Proposal Proposal::decode(wire::Reader& r) {
    Proposal p;
    p.actor_id = r.str();
    p.channel = r.str();
    p.chaincode = r.str();
    p.record = chaincode::EmissionRecord::decode(r);
    r.raw(p.nonce.data(), p.nonce.size());
    p.actor_certificate = identity::Certificate::decode(r);
    r.raw(p.actor_signature.bytes.data(), identity::Signature::kSize);
    return p;
}

Bytes Proposal::encoded() const {
    wire::Writer w;
    encode(w);
    return w.take();
}

Digest Proposal::digest() const {
    const Bytes b = encoded();
    return sha256(ByteSpan(b.data(), b.size()));
}

Bytes Endorsement::signed_payload(const std::string& peer_id, const std::string& org_id,
                                  const Digest& proposal_digest, const Digest& result_digest) {
    wire::Writer w;
    w.str(peer_id);
    w.str(org_id);
    w.raw(proposal_digest.span());
    w.raw(result_digest.span());
    return w.take();
}

void Endorsement::encode(wire::Writer& w) const {
    w.str(peer_id);
    w.str(org_id);
    w.raw(result_digest.span());
    peer_certificate.encode(w);
    w.raw(signature.span());
}

Endorsement Endorsement::decode(wire::Reader& r) {
    Endorsement e;
    e.peer_id = r.str();
    e.org_id = r.str();
    r.raw(e.result_digest.bytes.data(), Digest::kSize);
    e.peer_certificate = identity::Certificate::decode(r);
    r.raw(e.signature.bytes.data(), identity::Signature::kSize);
    return e;
}

Transaction Transaction::config(Bytes payload) {
    Transaction tx;
    tx.kind = Kind::kConfig;
    tx.config_payload = std::move(payload);
    return tx;
}

Transaction Transaction::emission(Proposal proposal, RwSet rw_set,
                                  std::vector<Endorsement> endorsements) {
    Transaction tx;
    tx.kind = Kind::kEmission;
    tx.proposal = std::move(proposal);
    tx.rw_set = std::move(rw_set);
    tx.endorsements = std::move(endorsements);
    return tx;
}

void Transaction::encode(wire::Writer& w) const {
    w.u8(static_cast<std::uint8_t>(kind));
    if (kind == Kind::kConfig) {
        w.bytes(ByteSpan(config_payload.data(), config_payload.size()));
        return;
    }
    proposal.encode(w);
    rw_set.encode(w);
    w.list(endorsements, [](wire::Writer& ww, const Endorsement& e) { e.encode(ww); });
}

Transaction Transaction::decode(wire::Reader& r) {
    const std::uint8_t kind = r.u8();
    if (kind > static_cast<std::uint8_t>(Kind::kEmission))
        throw CodecError("transaction kind tag out of range: " + std::to_string(kind));
    Transaction tx;
    tx.kind = static_cast<Kind>(kind);
    if (tx.kind == Kind::kConfig) {
        tx.config_payload = r.bytes();
        return tx;
    }
    tx.proposal = Proposal::decode(r);
    tx.rw_set = RwSet::decode(r);
    r.list([&tx](wire::Reader& rr) { tx.endorsements.push_back(Endorsement::decode(rr)); });
    return tx;
}

Bytes Transaction::encoded() const {
    wire::Writer w;
    encode(w);
    return w.take();
}

Digest Transaction::digest() const {
    const Bytes b = encoded();
    return sha256(ByteSpan(b.data(), b.size()));
}

std::vector<EndorsementPolicy::Entry> check_policy(const EndorsementPolicy& policy,
                                                   const std::vector<Endorsement>& endorsements) {
    std::vector<EndorsementPolicy::Entry> missing;
    for (const EndorsementPolicy::Entry& req : policy.required) {
        const bool present = std::any_of(
            endorsements.begin(), endorsements.end(), [&req](const Endorsement& e) {
                return e.org_id == req.org_id && e.peer_id == req.peer_id;
            });
        if (!present) missing.push_back(req);
    }
    return missing;
}

Transaction assemble_transaction(const Proposal& proposal,
                                 const std::vector<Endorsement>& endorsements,
                                 const RwSet& rw_set, const EndorsementPolicy& policy) {
    const std::vector<EndorsementPolicy::Entry> missing = check_policy(policy, endorsements);
    if (!missing.empty()) {
        std::vector<std::string> names;
        std::string what = "endorsement policy unsatisfied; missing";
        for (const auto& e : missing) {
            names.push_back(e.org_id + "/" + e.peer_id);
            what += " " + names.back();
        }
        throw PolicyError(what, std::move(names));
    }

    for (const Endorsement& e : endorsements) {
        if (e.result_digest != endorsements.front().result_digest)
            throw DigestMismatchError(
                "endorsements disagree on the execution result (" + e.org_id + "/" +
                e.peer_id + " diverges): nondeterministic or divergent chaincode");
    }
    const Bytes rw_bytes = rw_set.encoded();
    if (sha256(ByteSpan(rw_bytes.data(), rw_bytes.size())) !=
        endorsements.front().result_digest)
        throw DigestMismatchError("write set does not match the endorsed result digest");

    const Digest proposal_digest = proposal.digest();
    for (const Endorsement& e : endorsements) {
        const Bytes payload =
            Endorsement::signed_payload(e.peer_id, e.org_id, proposal_digest, e.result_digest);
        if (!identity::verify(e.peer_certificate, ByteSpan(payload.data(), payload.size()),
                              e.signature))
            throw AuthError("endorsement signature from " + e.org_id + "/" + e.peer_id +
                            " does not verify");
    }

    return Transaction::emission(proposal, rw_set, endorsements);
}

}  // namespace aqchain::ledger
