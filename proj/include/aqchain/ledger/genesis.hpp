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

#include <cstdint>

#include "aqchain/config.hpp"
#include "aqchain/ledger/block.hpp"

namespace aqchain::ledger {

/// Height-0 block anchoring the chain: all-zero prev_hash and one config
/// transaction holding the canonical NetworkConfig bytes. Deterministic
/// given (config, timestamp). Throws ConfigError on an invalid config.
Block make_genesis(const NetworkConfig& config, std::uint64_t timestamp_ms);

/// Decodes the NetworkConfig out of a genesis block's config transaction.
NetworkConfig genesis_config(const Block& genesis);

}  // namespace aqchain::ledger
