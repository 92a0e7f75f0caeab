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
#include "aqchain/ledger/state.hpp"

#include "aqchain/errors.hpp"

namespace aqchain::ledger {

void Version::encode(wire::Writer& w) const {
    w.u64(height);
    w.u32(tx_index);
}

Version Version::decode(wire::Reader& r) {
    Version v;
    v.height = r.u64();
    v.tx_index = r.u32();
    return v;
}

void RwSet::encode(wire::Writer& w) const {
    w.list(reads, [](wire::Writer& ww, const Read& rd) {
        ww.str(rd.key);
        ww.opt(rd.version, [](wire::Writer& www, const Version& v) { v.encode(www); });
    });
    w.list(writes, [](wire::Writer& ww, const Write& wr) {
        ww.str(wr.key);
        ww.bytes(ByteSpan(wr.value.data(), wr.value.size()));
    });
}

RwSet RwSet::decode(wire::Reader& r) {
    RwSet rw;
    r.list([&rw](wire::Reader& rr) {
        Read rd;
        rd.key = rr.str();
        rd.version = rr.opt([](wire::Reader& rrr) { return Version::decode(rrr); });
        rw.reads.push_back(std::move(rd));
    });
    r.list([&rw](wire::Reader& rr) {
        Write wr;
        wr.key = rr.str();
        wr.value = rr.bytes();
        rw.writes.push_back(std::move(wr));
    });
    return rw;
}

Bytes RwSet::encoded() const {
    wire::Writer w;
    encode(w);
    return w.take();
}

const WorldState::Entry* WorldState::get(const std::string& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

std::optional<Version> WorldState::version_of(const std::string& key) const {
    const Entry* e = get(key);
    if (e == nullptr) return std::nullopt;
    return e->version;
}

void WorldState::put(const std::string& key, Bytes value, Version version) {
    const auto it = entries_.find(key);
    if (it != entries_.end() && version < it->second.version)
        throw Error("world-state version regression for key \"" + key + "\"");
    entries_[key] = Entry{std::move(value), version};
}

}  // namespace aqchain::ledger
