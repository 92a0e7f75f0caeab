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
#include "aqchain/config.hpp"

#include <set>

#include "aqchain/errors.hpp"

namespace aqchain {

namespace {

void encode_peer(wire::Writer& w, const PeerConfig& p) {
    w.str(p.peer_id);
    w.boolean(p.endorsing);
    w.str(p.service_uri);
    w.str(p.volume);
    w.str(p.role_label);
}

PeerConfig decode_peer(wire::Reader& r) {
    PeerConfig p;
    p.peer_id = r.str();
    p.endorsing = r.boolean();
    p.service_uri = r.str();
    p.volume = r.str();
    p.role_label = r.str();
    return p;
}

}  // namespace

void NetworkConfig::encode(wire::Writer& w) const {
    w.str(channel);
    w.list(orgs, [](wire::Writer& ww, const OrgConfig& org) {
        ww.str(org.org_id);
        ww.list(org.peers, encode_peer);
    });
    w.str(orderer.id);
    w.str(orderer.service_uri);
    w.str(orderer.volume);
    w.u32(block_cut.max_tx);
    w.u32(block_cut.max_wait_ms);
}

NetworkConfig NetworkConfig::decode(wire::Reader& r) {
    NetworkConfig c;
    c.channel = r.str();
    r.list([&c](wire::Reader& rr) {
        OrgConfig org;
        org.org_id = rr.str();
        rr.list([&org](wire::Reader& rrr) { org.peers.push_back(decode_peer(rrr)); });
        c.orgs.push_back(std::move(org));
    });
    c.orderer.id = r.str();
    c.orderer.service_uri = r.str();
    c.orderer.volume = r.str();
    c.block_cut.max_tx = r.u32();
    c.block_cut.max_wait_ms = r.u32();
    return c;
}

Bytes NetworkConfig::encoded() const {
    wire::Writer w;
    encode(w);
    return w.take();
}

const PeerConfig* NetworkConfig::find_peer(const std::string& org_id,
                                           const std::string& peer_id) const {
    for (const OrgConfig& org : orgs) {
        if (org.org_id != org_id) continue;
        for (const PeerConfig& p : org.peers)
            if (p.peer_id == peer_id) return &p;
    }
    return nullptr;
}

const PeerConfig* NetworkConfig::find_peer_by_volume(const std::string& volume) const {
    for (const OrgConfig& org : orgs)
        for (const PeerConfig& p : org.peers)
            if (p.volume == volume) return &p;
    return nullptr;
}

std::vector<const PeerConfig*> NetworkConfig::all_peers() const {
    std::vector<const PeerConfig*> out;
    for (const OrgConfig& org : orgs)
        for (const PeerConfig& p : org.peers) out.push_back(&p);
    return out;
}

void EndorsementPolicy::encode(wire::Writer& w) const {
    w.list(required, [](wire::Writer& ww, const Entry& e) {
        ww.str(e.org_id);
        ww.str(e.peer_id);
    });
}

EndorsementPolicy EndorsementPolicy::decode(wire::Reader& r) {
    EndorsementPolicy p;
    r.list([&p](wire::Reader& rr) {
        Entry e;
        e.org_id = rr.str();
        e.peer_id = rr.str();
        p.required.push_back(std::move(e));
    });
    return p;
}

std::string EndorsementPolicy::describe() const {
    std::string out;
    for (const Entry& e : required) {
        if (!out.empty()) out += " + ";
        out += e.org_id + "/" + e.peer_id;
    }
    return out.empty() ? "(empty)" : out;
}

EndorsementPolicy endorsing_peers_of(const NetworkConfig& config) {
    EndorsementPolicy policy;
    for (const OrgConfig& org : config.orgs)
        for (const PeerConfig& p : org.peers)
            if (p.endorsing) policy.required.push_back({org.org_id, p.peer_id});
    return policy;
}

void validate_config(const NetworkConfig& config) {
    if (config.channel.empty()) throw ConfigError("channel name must be non-empty");
    if (config.orgs.empty()) throw ConfigError("config defines no organizations");
    if (config.orderer.id.empty()) throw ConfigError("orderer id must be non-empty");
    if (config.block_cut.max_tx == 0) throw ConfigError("block_cut.max_tx must be positive");

    std::set<std::string> org_ids;
    std::set<std::string> uris;
    std::set<std::string> volumes;
    const auto claim_uri = [&uris](const std::string& uri, const std::string& who) {
        if (uri.empty()) throw ConfigError("service URI of " + who + " must be non-empty");
        if (!uris.insert(uri).second)
            throw ConfigError("duplicate service URI " + uri);
    };
    const auto claim_volume = [&volumes](const std::string& vol, const std::string& who) {
        if (vol.empty()) throw ConfigError("volume label of " + who + " must be non-empty");
        if (!volumes.insert(vol).second)
            throw ConfigError("duplicate volume label " + vol);
    };

    for (const OrgConfig& org : config.orgs) {
        if (org.org_id.empty()) throw ConfigError("organization id must be non-empty");
        if (!org_ids.insert(org.org_id).second)
            throw ConfigError("duplicate organization id " + org.org_id);
        if (org.peers.empty())
            throw ConfigError("organization " + org.org_id + " has no peers");
        bool has_endorser = false;
        std::set<std::string> peer_ids;
        for (const PeerConfig& p : org.peers) {
            if (p.peer_id.empty())
                throw ConfigError("peer id in " + org.org_id + " must be non-empty");
            if (!peer_ids.insert(p.peer_id).second)
                throw ConfigError("duplicate peer id " + p.peer_id + " in " + org.org_id);
            claim_uri(p.service_uri, org.org_id + "/" + p.peer_id);
            claim_volume(p.volume, org.org_id + "/" + p.peer_id);
            has_endorser = has_endorser || p.endorsing;
        }
        if (!has_endorser)
            throw ConfigError("organization " + org.org_id + " has no endorsing peer");
    }
    claim_uri(config.orderer.service_uri, "the orderer");
    claim_volume(config.orderer.volume, "the orderer");
}

void validate_policy(const NetworkConfig& config, const EndorsementPolicy& policy) {
    if (policy.required.empty())
        throw ConfigError("endorsement policy must name at least one peer");
    for (const EndorsementPolicy::Entry& e : policy.required) {
        const PeerConfig* p = config.find_peer(e.org_id, e.peer_id);
        if (p == nullptr)
            throw ConfigError("endorsement policy names unknown peer " + e.org_id + "/" +
                              e.peer_id);
        if (!p->endorsing)
            throw ConfigError("endorsement policy names non-endorsing peer " + e.org_id +
                              "/" + e.peer_id);
    }
}

}  // namespace aqchain
