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
#include "aqchain/ledger/block.hpp"

#include <algorithm>

#include "aqchain/errors.hpp"

namespace aqchain::ledger {

void BlockHeader::encode(wire::Writer& w) const {
    w.u64(height);
    w.raw(prev_hash.span());
    w.raw(tx_root.span());
    w.u64(timestamp_ms);
}

BlockHeader BlockHeader::decode(wire::Reader& r) {
    BlockHeader h;
    h.height = r.u64();
    r.raw(h.prev_hash.bytes.data(), Digest::kSize);
    r.raw(h.tx_root.bytes.data(), Digest::kSize);
    h.timestamp_ms = r.u64();
    return h;
}

Bytes BlockHeader::encoded() const {
    wire::Writer w;
    encode(w);
    return w.take();
}

Digest compute_header_hash(const BlockHeader& header) {
    const Bytes b = header.encoded();
    return sha256(ByteSpan(b.data(), b.size()));
}

const char* to_string(TxValidity v) {
    switch (v) {
        case TxValidity::kValid: return "valid";
        case TxValidity::kPolicyUnsatisfied: return "policy-unsatisfied";
        case TxValidity::kResultDigestMismatch: return "result-digest-mismatch";
        case TxValidity::kVersionConflict: return "version-conflict";
    }
    return "unknown";
}

void Block::encode(wire::Writer& w) const {
    header.encode(w);
    w.list(transactions, [](wire::Writer& ww, const Transaction& tx) { tx.encode(ww); });
    w.list(validity, [](wire::Writer& ww, TxValidity v) {
        ww.u8(static_cast<std::uint8_t>(v));
    });
}

Block Block::decode(wire::Reader& r) {
    Block b;
    b.header = BlockHeader::decode(r);
    r.list([&b](wire::Reader& rr) { b.transactions.push_back(Transaction::decode(rr)); });
    r.list([&b](wire::Reader& rr) {
        const std::uint8_t v = rr.u8();
        if (v > static_cast<std::uint8_t>(TxValidity::kVersionConflict))
            throw CodecError("validity tag out of range: " + std::to_string(v));
        b.validity.push_back(static_cast<TxValidity>(v));
    });
    return b;
}

Bytes Block::encoded() const {
    wire::Writer w;
    encode(w);
    return w.take();
}

std::size_t Block::valid_count() const {
    return static_cast<std::size_t>(
        std::count(validity.begin(), validity.end(), TxValidity::kValid));
}

std::size_t Block::invalid_count() const {
    return validity.size() - valid_count();
}

Digest compute_tx_root(const std::vector<Transaction>& transactions) {
    // Flat hash list: the digest of the concatenated per-transaction
    // digests. Desk-scale blocks gain nothing from a Merkle tree.
    wire::Writer w;
    for (const Transaction& tx : transactions) w.raw(tx.digest().span());
    return sha256(ByteSpan(w.data().data(), w.size()));
}

}  // namespace aqchain::ledger
