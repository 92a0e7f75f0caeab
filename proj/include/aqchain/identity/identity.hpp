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
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "aqchain/bytes.hpp"
#include "aqchain/wire.hpp"

// Minimal per-organization certificate authority backing proposal and
// endorsement authenticity. Signatures are Ed25519: small fixed-size keys,
// deterministic signing, and seeded key generation for reproducible runs.
// The scheme is confined to this module; nothing else names the curve.

namespace aqchain::identity {

struct PublicKey {
    static constexpr std::size_t kSize = 32;
    std::array<std::uint8_t, kSize> bytes{};

    ByteSpan span() const { return ByteSpan(bytes.data(), kSize); }
    auto operator<=>(const PublicKey&) const = default;
};

struct Signature {
    static constexpr std::size_t kSize = 64;
    std::array<std::uint8_t, kSize> bytes{};

    /// Throws CryptoError unless `raw` is exactly 64 bytes.
    static Signature from_raw(ByteSpan raw);

    ByteSpan span() const { return ByteSpan(bytes.data(), kSize); }
    auto operator<=>(const Signature&) const = default;
};

/// Secret signing key. Owned by its node; never serialized onto the bus.
class SigningKey {
public:
    Signature sign(ByteSpan message) const;
    PublicKey public_key() const;

private:
    friend class Ca;
    friend std::pair<PublicKey, SigningKey> keypair_from_seed(ByteSpan seed);
    std::array<std::uint8_t, 64> secret_{};
};

/// Node certificate: the issuer signs (subject ‖ org ‖ public_key), so a
/// single flipped byte anywhere in those fields breaks verification.
struct Certificate {
    std::string subject;   // node id, e.g. "peer0.iiitkottayam.com"
    std::string org_id;    // issuing organization
    PublicKey public_key;  // subject's verification key
    std::string issuer;    // CA id
    Signature issuer_signature;

    Bytes signed_payload() const;  // the bytes the issuer signed

    void encode(wire::Writer& w) const;
    static Certificate decode(wire::Reader& r);

    bool operator==(const Certificate&) const = default;
};

/// Per-organization certificate authority. Immutable after creation.
class Ca {
public:
    /// Seeded creation is deterministic; without a seed the root key is
    /// drawn from the OS entropy pool.
    static Ca create(const std::string& org_id, std::optional<ByteSpan> seed = std::nullopt);

    const std::string& org_id() const { return org_id_; }
    const std::string& id() const { return id_; }
    const PublicKey& root_public_key() const { return root_public_; }

    /// Issues a certificate for `subject`; the signing key is returned
    /// only to the caller. Re-issuance for the same subject is allowed.
    /// Subject keys are derived from the CA's creation entropy, so a
    /// seeded CA issues reproducible certificates (toy-PKI trade-off:
    /// the CA could reconstruct its subjects' keys).
    std::pair<Certificate, SigningKey> issue(const std::string& subject,
                                             const std::string& org) const;

private:
    std::string org_id_;
    std::string id_;
    PublicKey root_public_;
    SigningKey root_key_;
    std::array<std::uint8_t, 32> issue_seed_{};
};

/// True iff `signature` verifies over `message` under the certificate's
/// public key. Pure and deterministic.
bool verify(const Certificate& cert, ByteSpan message, const Signature& signature);

/// True iff the certificate's issuer signature verifies under `ca_root`.
bool verify_certificate(const Certificate& cert, const PublicKey& ca_root);

/// Deterministic keypair from a 32-byte seed. Throws CryptoError on a
/// wrong-length seed.
std::pair<PublicKey, SigningKey> keypair_from_seed(ByteSpan seed);

/// CA root keys the nodes of a channel trust, keyed by org id.
class TrustStore {
public:
    void add_root(const std::string& org_id, const PublicKey& root);
    const PublicKey* root_for(const std::string& org_id) const;

    /// Full check used by endorsers: the issuing org's root is known and
    /// the issuer signature verifies.
    bool trusts(const Certificate& cert) const;

    void encode(wire::Writer& w) const;
    static TrustStore decode(wire::Reader& r);

    bool operator==(const TrustStore&) const = default;

private:
    std::map<std::string, PublicKey> roots_;
};

}  // namespace aqchain::identity
