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
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "aqchain/config.hpp"
#include "aqchain/digest.hpp"
#include "aqchain/harness/timing.hpp"
#include "aqchain/ingest/ingest.hpp"
#include "aqchain/net/bus.hpp"

namespace aqchain::harness {

/// Everything one `run` needs, merged from the JSON config file and CLI
/// flags. load_run_config fills it from the file; the CLI then overrides
/// records/seed/sim_clock/dump_dir.
struct RunConfig {
    NetworkConfig network;
    net::BusOptions bus;

    std::string chaincode_name = "aqcc";
    std::string chaincode_version = "1.0";

    /// Dataset file, resolved relative to the config file's directory.
    /// Sensor CSVs (mq7/mq2/mq135 header) go through SiteMeta calibration;
    /// ten-column monitoring CSVs are ingested as-is.
    std::string dataset_path;
    ingest::SiteMeta site;
    std::uint64_t sample_start_ms = 0;       // timestamp of the first sensor sample
    std::uint64_t sample_interval_ms = 60000;

    static constexpr std::size_t kAllRecords = std::numeric_limits<std::size_t>::max();
    /// Records to submit; kAllRecords = the whole dataset. Must not exceed
    /// the dataset size; zero runs the degenerate pipeline.
    std::size_t records = kAllRecords;

    std::uint64_t seed = 1;
    bool sim_clock = false;  // virtual bus clock: reproducible runs
    std::string dump_dir;    // when set: per-peer dumps, certs, timing.csv
    std::string actor_id = "gateway-1";
};

/// Parses the JSON config file (topology, block cut, bus, chaincode,
/// dataset, site). Throws ConfigError with the offending key, IoError when
/// unreadable.
RunConfig load_run_config(const std::string& path);

struct RunSummary {
    std::size_t records_loaded = 0;
    std::size_t records_submitted = 0;
    std::size_t forwarded = 0;             // transactions that reached the orderer
    std::size_t rejected_at_endorsement = 0;
    std::uint64_t blocks_committed = 0;    // beyond genesis
    std::size_t valid_tx = 0;
    std::size_t invalid_tx = 0;
    std::size_t queries_answered = 0;
    Digest genesis_digest;
    /// Per-peer fingerprint over the full stored chain bytes.
    std::vector<std::pair<std::string, Digest>> peer_tips;
    bool tips_agree = false;
    bool all_verified = false;

    bool healthy() const { return tips_agree && all_verified; }
    std::string to_text() const;
};

struct RunResult {
    TimingReport timing;
    RunSummary summary;
};

/// The full five-step flow under the eight timed phases: load fixtures,
/// generate certificates, create the channel, join peers, install and
/// instantiate the chaincode, submit N records through endorsement and
/// ordering to commitment, then read every committed key back. Writes
/// dumps/certs/timing.csv into dump_dir when configured.
RunResult run_pipeline(const RunConfig& config);

}  // namespace aqchain::harness
