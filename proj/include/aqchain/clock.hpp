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

#include <atomic>
#include <cstdint>

namespace aqchain {

/// Time source for block timestamps and phase timing. The simulated bus
/// advances a VirtualClock as it delivers messages, so runs under it are
/// reproducible; SystemClock is the wall-clock default.
class Clock {
public:
    virtual ~Clock() = default;
    /// Microseconds since the Unix epoch.
    virtual std::int64_t now_us() const = 0;
    std::int64_t now_ms() const { return now_us() / 1000; }
};

class SystemClock final : public Clock {
public:
    std::int64_t now_us() const override;
};

class VirtualClock final : public Clock {
public:
    /// Starts at a fixed epoch so simulated timestamps look like real ones.
    static constexpr std::int64_t kDefaultEpochMs = 1700000000000;

    explicit VirtualClock(std::int64_t start_ms = kDefaultEpochMs)
        : now_us_(start_ms * 1000) {}

    std::int64_t now_us() const override { return now_us_.load(std::memory_order_relaxed); }

    /// Monotonic: moving backwards is ignored.
    void advance_to_us(std::int64_t t_us) {
        std::int64_t cur = now_us_.load(std::memory_order_relaxed);
        while (t_us > cur &&
               !now_us_.compare_exchange_weak(cur, t_us, std::memory_order_relaxed)) {
        }
    }

private:
    std::atomic<std::int64_t> now_us_;
};

}  // namespace aqchain
