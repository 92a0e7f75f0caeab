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

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "aqchain/bytes.hpp"
#include "aqchain/chaincode/emission.hpp"
#include "aqchain/digest.hpp"
#include "aqchain/ledger/state.hpp"

namespace aqchain::chaincode {

/// Read/write recorder handed to a contract during simulation. Reads go
/// through the committed world state and are logged with the version they
/// observed; writes are buffered, never applied. Reads of a key written
/// earlier in the same simulation return the buffered value without logging
/// a read (the dependency is already captured by the write).
class ExecutionContext {
public:
    explicit ExecutionContext(const ledger::WorldState& state) : state_(state) {}

    std::optional<Bytes> get(const std::string& key);
    void put(const std::string& key, Bytes value);
    void warn(std::string message) { warnings_.push_back(std::move(message)); }

    const ledger::RwSet& rw_set() const { return rw_set_; }
    ledger::RwSet take_rw_set() { return std::move(rw_set_); }
    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    const ledger::WorldState& state_;
    ledger::RwSet rw_set_;
    std::vector<std::string> warnings_;
};

/// Outcome of simulating one invocation on an endorsing peer.
struct SimulationResult {
    ledger::RwSet rw_set;
    Digest result_digest;  // sha256 of the canonical rw_set bytes
    std::vector<std::string> warnings;
};

/// A deployable contract. Implementations must be deterministic: identical
/// (state, record) inputs must produce identical read/write sets on every
/// peer, or endorsements will disagree and assembly will fail.
class Contract {
public:
    virtual ~Contract() = default;

    /// Stable identifier for the contract code; peers installing the
    /// "same" chaincode must agree on this.
    virtual std::string type_id() const = 0;

    /// Simulates an invocation against `state`, recording effects into
    /// `ctx`. Throws ValidationError when the record is rejected outright.
    virtual void invoke(ExecutionContext& ctx, const EmissionRecord& record) const = 0;

    /// Read-only lookup; returns the stored record if the key exists.
    virtual std::optional<EmissionRecord> query(const ledger::WorldState& state,
                                                const std::string& key) const = 0;
};

/// Optional hook for recomputing the penalty during invocation. The default
/// (absent) rule keeps whatever penalty the record arrived with.
using PenaltyRule = std::function<double(const EmissionRecord&)>;

/// Records air-quality emission readings keyed by monitoring location and
/// timestamp. Rejects records that fail field validation; duplicate keys
/// are treated as fresh versions of the same reading, not as errors (a
/// station may legitimately re-report a window).
class EmissionContract : public Contract {
public:
    static constexpr const char* kTypeId = "emission/1";

    EmissionContract() = default;
    explicit EmissionContract(PenaltyRule penalty_rule)
        : penalty_rule_(std::move(penalty_rule)) {}

    std::string type_id() const override { return kTypeId; }
    void invoke(ExecutionContext& ctx, const EmissionRecord& record) const override;
    std::optional<EmissionRecord> query(const ledger::WorldState& state,
                                        const std::string& key) const override;

private:
    PenaltyRule penalty_rule_;
};

/// Runs a contract against a snapshot of the world state and packages the
/// read/write set with its digest. This is the endorsing peer's core step.
SimulationResult simulate(const Contract& contract, const ledger::WorldState& state,
                          const EmissionRecord& record);

}  // namespace aqchain::chaincode
