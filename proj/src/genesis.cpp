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
#include "aqchain/ledger/genesis.hpp"

#include "aqchain/errors.hpp"
#include "aqchain/wire.hpp"

namespace aqchain::ledger {

Block make_genesis(const NetworkConfig& config, std::uint64_t timestamp_ms) {
    validate_config(config);
    Block genesis;
    genesis.transactions.push_back(Transaction::config(config.encoded()));
    genesis.validity.push_back(TxValidity::kValid);
    genesis.header.height = 0;
    genesis.header.prev_hash = Digest::zero();
    genesis.header.tx_root = compute_tx_root(genesis.transactions);
    genesis.header.timestamp_ms = timestamp_ms;
    return genesis;
}

NetworkConfig genesis_config(const Block& genesis) {
    if (genesis.header.height != 0)
        throw ConfigError("genesis block must have height 0, got " +
                          std::to_string(genesis.header.height));
    if (!genesis.header.prev_hash.is_zero())
        throw ConfigError("genesis prev_hash must be the all-zero digest");
    if (genesis.transactions.size() != 1 ||
        genesis.transactions[0].kind != Transaction::Kind::kConfig)
        throw ConfigError("genesis block must carry exactly one config transaction");
    const Bytes& payload = genesis.transactions[0].config_payload;
    try {
        return wire::decode_exact(ByteSpan(payload.data(), payload.size()),
                                  [](wire::Reader& r) { return NetworkConfig::decode(r); });
    } catch (const CodecError& e) {
        throw ConfigError(std::string("genesis config payload does not decode: ") + e.what());
    }
}

}  // namespace aqchain::ledger
