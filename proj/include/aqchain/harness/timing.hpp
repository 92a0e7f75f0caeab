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
#include <string>
#include <vector>

namespace aqchain::harness {

/// The eight pipeline phases every run reports, in execution order.
inline constexpr std::array<const char*, 8> kPhaseNames = {
    "prerequisites",      // fixture loading + config validation
    "generate_certificates",
    "establish_channel",
    "peer_join",
    "chaincode_install",
    "chaincode_instantiate",
    "invoke",             // submit -> endorse -> order -> commit, to quiescence
    "query",              // one read per committed record
};

/// Per-phase durations of one run. Exactly the eight phases above, in
/// order, each ≥ 0 ms.
class TimingReport {
public:
    struct Phase {
        std::string name;
        double milliseconds = 0.0;
    };

    /// Records a phase duration; phases must arrive in kPhaseNames order.
    void add(const std::string& name, double milliseconds);

    const std::vector<Phase>& phases() const { return phases_; }
    /// Duration for a named phase; throws RangeError if absent.
    double milliseconds(const std::string& name) const;

    /// Violated shape constraints (missing/extra/misordered phases,
    /// negative durations); empty means well-formed.
    std::vector<std::string> validate() const;

    /// Machine-readable form: header "phase,milliseconds" + 8 data rows.
    std::string to_csv() const;
    static TimingReport from_csv(const std::string& text);

    /// Human-readable aligned table.
    std::string to_table() const;

    bool operator==(const TimingReport&) const = default;

private:
    std::vector<Phase> phases_;
};

/// Stopwatch over an arbitrary clock source. The pipeline feeds it the
/// bus clock, so simulated runs measure simulated time and are exactly
/// reproducible.
class PhaseTimer {
public:
    using NowMs = double (*)(const void*);

    template <typename ClockT>
    explicit PhaseTimer(const ClockT& clock)
        : ctx_(&clock),
          now_([](const void* c) {
              return static_cast<double>(static_cast<const ClockT*>(c)->now_us()) / 1000.0;
          }) {}

    /// Runs `body` and records its duration under `name`.
    template <typename Fn>
    void phase(TimingReport& report, const std::string& name, Fn&& body) {
        const double begin = now_(ctx_);
        body();
        report.add(name, now_(ctx_) - begin);
    }

private:
    const void* ctx_;
    NowMs now_;
};

}  // namespace aqchain::harness
