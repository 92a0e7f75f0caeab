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
#include "aqchain/identity/identity.hpp"

#include <sodium.h>

#include <algorithm>

#include "aqchain/digest.hpp"
#include "aqchain/errors.hpp"

namespace aqchain::identity {

namespace {

void ensure_sodium() {
    static const int rc = sodium_init();
    if (rc < 0) throw CryptoError("libsodium initialization failed");
}

static_assert(PublicKey::kSize == crypto_sign_PUBLICKEYBYTES);
static_assert(Signature::kSize == crypto_sign_BYTES);

}  // namespace

Signature Signature::from_raw(ByteSpan raw) {
    if (raw.size() != kSize)
        throw CryptoError("signature must be " + std::to_string(kSize) + " bytes, got " +
                          std::to_string(raw.size()));
    Signature s;
    std::copy(raw.begin(), raw.end(), s.bytes.begin());
    return s;
}

Signature SigningKey::sign(ByteSpan message) const {
    ensure_sodium();
    Signature sig;
    crypto_sign_detached(sig.bytes.data(), nullptr, message.data(), message.size(),
                         secret_.data());
    return sig;
}

PublicKey SigningKey::public_key() const {
    // libsodium secret keys store the public half in the trailing 32 bytes.
    PublicKey pk;
    std::copy(secret_.begin() + 32, secret_.end(), pk.bytes.begin());
    return pk;
}

std::pair<PublicKey, SigningKey> keypair_from_seed(ByteSpan seed) {
    ensure_sodium();
    if (seed.size() != crypto_sign_SEEDBYTES)
        throw CryptoError("key seed must be " + std::to_string(crypto_sign_SEEDBYTES) +
                          " bytes, got " + std::to_string(seed.size()));
    PublicKey pk;
    SigningKey sk;
    crypto_sign_seed_keypair(pk.bytes.data(), sk.secret_.data(), seed.data());
    return {pk, sk};
}

Bytes Certificate::signed_payload() const {
    wire::Writer w;
    w.str(subject);
    w.str(org_id);
    w.raw(public_key.span());
    return w.take();
}

void Certificate::encode(wire::Writer& w) const {
    w.str(subject);
    w.str(org_id);
    w.raw(public_key.span());
    w.str(issuer);
    w.raw(issuer_signature.span());
}

Certificate Certificate::decode(wire::Reader& r) {
    Certificate c;
    c.subject = r.str();
    c.org_id = r.str();
    r.raw(c.public_key.bytes.data(), PublicKey::kSize);
    c.issuer = r.str();
    r.raw(c.issuer_signature.bytes.data(), Signature::kSize);
    return c;
}

Ca Ca::create(const std::string& org_id, std::optional<ByteSpan> seed) {
    ensure_sodium();
    Ca ca;
    ca.org_id_ = org_id;
    ca.id_ = org_id + "-ca";
    if (seed) {
        auto [pk, sk] = keypair_from_seed(*seed);
        ca.root_public_ = pk;
        ca.root_key_ = sk;
        if (seed->size() != ca.issue_seed_.size())
            throw CryptoError("CA seed must be 32 bytes");
        std::copy(seed->begin(), seed->end(), ca.issue_seed_.begin());
    } else {
        crypto_sign_keypair(ca.root_public_.bytes.data(), ca.root_key_.secret_.data());
        randombytes_buf(ca.issue_seed_.data(), ca.issue_seed_.size());
    }
    return ca;
}

std::pair<Certificate, SigningKey> Ca::issue(const std::string& subject,
                                             const std::string& org) const {
    if (subject.empty()) throw CryptoError("certificate subject must be non-empty");
    // Subject keys are derived, not drawn, so seeded CAs reproduce them.
    wire::Writer w;
    w.raw(ByteSpan(issue_seed_.data(), issue_seed_.size()));
    w.str(subject);
    w.str(org);
    const Digest seed = sha256(ByteSpan(w.data().data(), w.size()));
    auto [pk, sk] = keypair_from_seed(seed.span());

    Certificate cert;
    cert.subject = subject;
    cert.org_id = org;
    cert.public_key = pk;
    cert.issuer = id_;
    const Bytes payload = cert.signed_payload();
    cert.issuer_signature = root_key_.sign(ByteSpan(payload.data(), payload.size()));
    return {cert, sk};
}

bool verify(const Certificate& cert, ByteSpan message, const Signature& signature) {
    ensure_sodium();
    return crypto_sign_verify_detached(signature.bytes.data(), message.data(), message.size(),
                                       cert.public_key.bytes.data()) == 0;
}

bool verify_certificate(const Certificate& cert, const PublicKey& ca_root) {
    ensure_sodium();
    const Bytes payload = cert.signed_payload();
    return crypto_sign_verify_detached(cert.issuer_signature.bytes.data(), payload.data(),
                                       payload.size(), ca_root.bytes.data()) == 0;
}

void TrustStore::add_root(const std::string& org_id, const PublicKey& root) {
    roots_[org_id] = root;
}

const PublicKey* TrustStore::root_for(const std::string& org_id) const {
    const auto it = roots_.find(org_id);
    return it == roots_.end() ? nullptr : &it->second;
}

bool TrustStore::trusts(const Certificate& cert) const {
    const PublicKey* root = root_for(cert.org_id);
    return root != nullptr && verify_certificate(cert, *root);
}

void TrustStore::encode(wire::Writer& w) const {
    w.u32(static_cast<std::uint32_t>(roots_.size()));
    for (const auto& [org, pk] : roots_) {
        w.str(org);
        w.raw(pk.span());
    }
}

TrustStore TrustStore::decode(wire::Reader& r) {
    TrustStore ts;
    const std::uint32_t n = r.u32();
    for (std::uint32_t i = 0; i < n; ++i) {
        const std::string org = r.str();
        PublicKey pk;
        r.raw(pk.bytes.data(), PublicKey::kSize);
        ts.roots_[org] = pk;
    }
    return ts;
}

}  // namespace aqchain::identity
