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

#include <stdexcept>
#include <string>
#include <vector>

namespace aqchain {

/// Root of every aqchain error.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent configuration (topology, block cut, run options).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Canonical encoding could not be decoded (truncated, trailing bytes,
/// out-of-range tag). On a loaded ledger this signals corruption.
class CodecError : public Error {
public:
    using Error::Error;
};

/// Key material or signature of the wrong shape.
class CryptoError : public Error {
public:
    using Error::Error;
};

/// Block does not extend the current tip (height or prev_hash mismatch,
/// or a tx_root that does not match the block body).
class LinkageError : public Error {
public:
    using Error::Error;
};

/// Proposal or endorsement failed authentication (bad certificate or
/// signature). Raised before any chaincode execution.
class AuthError : public Error {
public:
    using Error::Error;
};

/// Record failed chaincode validation; carries the full violation list.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::vector<std::string> violations)
        : Error(what), violations(std::move(violations)) {}
    std::vector<std::string> violations;
};

/// Endorsement set does not satisfy the channel policy; lists the
/// missing (org, peer) pairs.
class PolicyError : public Error {
public:
    PolicyError(const std::string& what, std::vector<std::string> missing)
        : Error(what), missing(std::move(missing)) {}
    std::vector<std::string> missing;
};

/// Endorsements carry diverging result digests (nondeterministic or
/// divergent chaincode execution).
class DigestMismatchError : public Error {
public:
    using Error::Error;
};

/// Chaincode lifecycle violation: install before join, instantiate
/// before install, conflicting re-install, invoke before instantiate.
class LifecycleError : public Error {
public:
    LifecycleError(const std::string& what, std::vector<std::string> peers = {})
        : Error(what), peers(std::move(peers)) {}
    /// Peers that caused the violation (e.g. missing an installation).
    std::vector<std::string> peers;
};

/// Ledger content that should be decodable is not (world-state value that
/// no longer decodes, dump file damage).
class CorruptionError : public Error {
public:
    using Error::Error;
};

/// Out-of-range argument (tamper height beyond chain length, unknown field).
class RangeError : public Error {
public:
    using Error::Error;
};

/// Filesystem problem: missing fixture, unreadable dump.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace aqchain
