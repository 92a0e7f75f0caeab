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

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "aqchain/clock.hpp"
#include "aqchain/net/message.hpp"

// In-process message bus with per-link latency. Nodes own their state and
// interact only through messages, so the same node code runs unchanged in
// two modes:
//
//   virtual time   single caller thread, the clock jumps to each delivery
//                  time — fully deterministic under a fixed seed;
//   real time      deliveries are paced against the wall clock, optionally
//                  fanned out to a worker pool (per-node mailboxes keep
//                  each node single-threaded from its own point of view).
//
// Per-link FIFO always holds: a message never overtakes an earlier message
// on the same (from, to) link, jitter notwithstanding.

namespace aqchain::net {

struct BusOptions {
    double latency_ms = 2.0;  // one-way per-hop latency
    double jitter_ms = 0.0;   // uniform extra delay in [0, jitter_ms)
    std::uint64_t seed = 1;   // jitter RNG seed
    bool real_time = false;   // pace against the wall clock
    unsigned threads = 0;     // worker pool size; real-time mode only
};

class Bus;

/// A logical process on the bus. Handlers run one at a time per node.
class Node {
public:
    virtual ~Node() = default;

    virtual const std::string& uid() const = 0;
    virtual void on_message(const Message& msg) = 0;
    virtual void on_timer(std::uint64_t token) { (void)token; }

protected:
    /// Valid after Bus::attach; nodes use it to send and set timers.
    Bus* bus_ = nullptr;

private:
    friend class Bus;
};

class Bus {
public:
    explicit Bus(BusOptions options = {});
    ~Bus();

    Bus(const Bus&) = delete;
    Bus& operator=(const Bus&) = delete;

    const BusOptions& options() const { return options_; }
    Clock& clock() { return *clock_; }
    const Clock& clock() const { return *clock_; }

    /// Registers a node and hands it this bus. Uids must be unique.
    void attach(Node& node);

    /// Queues a frame for delivery after the link latency. Unknown
    /// destinations throw ConfigError at post time (a mis-wired topology
    /// is a bug, not a network condition).
    void post(const std::string& from, const std::string& to, Bytes frame);

    /// Delivers `token` to the node's on_timer after `delay_ms`. Nodes
    /// that need cancellation ignore stale tokens.
    void post_timer(const std::string& node_uid, double delay_ms, std::uint64_t token);

    /// Processes events until no deliveries, timers, or handlers remain
    /// in flight. Rethrows the first exception a handler raised.
    void run_until_idle();

    std::uint64_t delivered_count() const;

private:
    struct Event {
        std::int64_t due_us = 0;
        std::uint64_t seq = 0;  // tie-break: post order
        bool is_timer = false;
        Message msg;            // when !is_timer
        std::string node_uid;   // timer target
        std::uint64_t token = 0;
    };
    struct EventLater {
        bool operator()(const Event& a, const Event& b) const {
            if (a.due_us != b.due_us) return a.due_us > b.due_us;
            return a.seq > b.seq;
        }
    };
    struct Mailbox {
        std::deque<Event> pending;
        bool draining = false;
    };

    std::int64_t delivery_time_us(const std::string& from, const std::string& to);
    void dispatch(Node& node, const Event& ev);
    void drain_mailbox(Node& node, Mailbox& box);
    void worker_loop();
    bool idle_locked() const;

    BusOptions options_;
    std::unique_ptr<Clock> clock_;
    VirtualClock* virtual_clock_ = nullptr;  // set iff !real_time

    mutable std::mutex mu_;
    std::condition_variable cv_;
    std::priority_queue<Event, std::vector<Event>, EventLater> queue_;
    std::map<std::string, Node*> nodes_;
    std::map<std::string, Mailbox> mailboxes_;
    std::map<std::pair<std::string, std::string>, std::int64_t> link_last_due_us_;
    std::mt19937_64 jitter_rng_;
    std::uint64_t next_seq_ = 0;
    std::uint64_t delivered_ = 0;
    int in_flight_ = 0;  // handlers currently running or queued to workers

    std::vector<std::thread> workers_;
    std::deque<std::string> ready_nodes_;
    std::condition_variable worker_cv_;
    bool stopping_ = false;
    std::exception_ptr first_error_;
};

}  // namespace aqchain::net
