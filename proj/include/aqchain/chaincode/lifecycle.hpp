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

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "aqchain/chaincode/contract.hpp"
#include "aqchain/config.hpp"

namespace aqchain::chaincode {

/// A named, versioned contract as shipped to peers.
struct ChaincodePackage {
    std::string name;
    std::string version;
    std::shared_ptr<const Contract> contract;
};

/// Per-peer store of installed chaincode. Installing the same package twice
/// is a no-op; installing a different contract under an existing
/// name/version is a deployment error worth failing loudly on.
class ChaincodeRegistry {
public:
    /// Returns true when the package was newly installed, false when an
    /// identical package was already present. Throws LifecycleError when
    /// the name/version is taken by different code.
    bool install(const ChaincodePackage& package);

    bool installed(const std::string& name, const std::string& version) const;
    const ChaincodePackage* find(const std::string& name) const;
    std::size_t size() const { return packages_.size(); }

private:
    std::map<std::string, ChaincodePackage> packages_;  // keyed by name
};

/// Channel-level activation of an installed chaincode: fixes the
/// endorsement policy every subsequent invocation must satisfy.
struct InstantiationRecord {
    std::string channel;
    std::string name;
    std::string version;
    EndorsementPolicy policy;

    void encode(wire::Writer& w) const;
    static InstantiationRecord decode(wire::Reader& r);
    bool operator==(const InstantiationRecord&) const = default;
};

/// Checks that every endorsing peer named by `policy` has `name`/`version`
/// installed. Returns the peers that are missing it (empty means ready).
std::vector<std::string> missing_installations(
    const EndorsementPolicy& policy,
    const std::map<std::string, const ChaincodeRegistry*>& registries_by_peer,
    const std::string& name, const std::string& version);

}  // namespace aqchain::chaincode
