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
#include <deque>
#include <string>
#include <vector>

#include "aqchain/config.hpp"
#include "aqchain/identity/identity.hpp"
#include "aqchain/ledger/block.hpp"
#include "aqchain/net/bus.hpp"
#include "aqchain/net/message.hpp"

namespace aqchain::net {

/// Single non-crashing ordering node. Sequences incoming transactions
/// into blocks — cut when max_tx accumulate or max_wait elapses since the
/// first pending transaction — and broadcasts each block to every
/// committing peer. Transactions keep arrival order (the bus guarantees
/// per-link FIFO, so per-actor order survives end to end).
class Orderer : public Node {
public:
    Orderer(const OrdererConfig& config, identity::Certificate certificate,
            identity::SigningKey key, ledger::Block genesis, BlockCutConfig cut,
            std::vector<std::string> committer_uids);

    const std::string& uid() const override { return uid_; }
    void on_message(const Message& msg) override;
    void on_timer(std::uint64_t token) override;

    std::size_t pending_count() const { return pending_.size(); }
    std::uint64_t blocks_cut() const { return blocks_cut_; }
    std::uint64_t next_height() const { return next_height_; }
    const identity::Certificate& certificate() const { return certificate_; }

private:
    void enqueue(ledger::Transaction tx);
    void cut_block();

    std::string uid_;  // volume label
    identity::Certificate certificate_;
    identity::SigningKey key_;
    BlockCutConfig cut_;
    std::vector<std::string> committer_uids_;

    std::deque<ledger::Transaction> pending_;
    std::uint64_t next_height_ = 1;
    Digest prev_hash_;       // hash of the tip header this orderer produced
    std::uint64_t epoch_ = 0;  // arms the wait timer; stale tokens are ignored
    std::uint64_t blocks_cut_ = 0;
};

}  // namespace aqchain::net
