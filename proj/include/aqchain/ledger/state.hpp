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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aqchain/bytes.hpp"
#include "aqchain/wire.hpp"

namespace aqchain::ledger {

/// Position of a write in the chain: (block height, tx index within block).
struct Version {
    std::uint64_t height = 0;
    std::uint32_t tx_index = 0;

    auto operator<=>(const Version&) const = default;

    void encode(wire::Writer& w) const;
    static Version decode(wire::Reader& r);
};

/// Read/write footprint produced by simulating a chaincode invocation.
/// Reads record the version observed at simulation time (nullopt = key was
/// absent); the committer re-checks them for conflicts.
struct RwSet {
    struct Read {
        std::string key;
        std::optional<Version> version;
        bool operator==(const Read&) const = default;
    };
    struct Write {
        std::string key;
        Bytes value;
        bool operator==(const Write&) const = default;
    };

    std::vector<Read> reads;
    std::vector<Write> writes;

    void encode(wire::Writer& w) const;
    static RwSet decode(wire::Reader& r);
    Bytes encoded() const;
    bool operator==(const RwSet&) const = default;
};

/// Versioned key-value view derived by replaying committed transactions.
class WorldState {
public:
    struct Entry {
        Bytes value;
        Version version;
        bool operator==(const Entry&) const = default;
    };

    const Entry* get(const std::string& key) const;
    std::optional<Version> version_of(const std::string& key) const;

    /// A key's version only moves forward; regressions throw Error.
    void put(const std::string& key, Bytes value, Version version);

    std::size_t size() const { return entries_.size(); }
    const std::map<std::string, Entry>& entries() const { return entries_; }

    bool operator==(const WorldState&) const = default;

private:
    std::map<std::string, Entry> entries_;
};

}  // namespace aqchain::ledger
