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
#include <iosfwd>
#include <string>
#include <vector>

#include "aqchain/chaincode/emission.hpp"

namespace aqchain::ingest {

/// One row from a three-channel gas sensor board (10-bit ADC counts).
struct RawSensorSample {
    int mq7 = 0;    // carbon monoxide channel
    int mq2 = 0;    // smoke / combustible particulate channel
    int mq135 = 0;  // air-quality (CO2 cluster) channel, logged but unmapped

    bool operator==(const RawSensorSample&) const = default;
};

/// Errors collected while reading a CSV, one per offending line.
struct RowError {
    std::size_t line = 0;  // 1-based physical line number
    std::string message;
};

struct SensorCsvResult {
    std::vector<RawSensorSample> samples;
    std::vector<RowError> errors;
};

/// Parses "mq7,mq2,mq135" rows. A leading header line naming the channels
/// (e.g. "mq7_co,mq2_smoke,mq135_co2") is recognized and skipped. Counts
/// outside a 10-bit ADC's 0..1023 range, non-numeric fields, and wrong
/// column counts are reported per row; good rows are still returned.
SensorCsvResult parse_sensor_csv(std::istream& in);
SensorCsvResult parse_sensor_csv_file(const std::string& path);

/// Linear count->concentration map for one channel. `target` names the
/// emission field the calibrated value lands in ("co", "rspm", "no2",
/// "so2") or is empty for channels that are logged but not reported.
struct ChannelCalibration {
    double slope = 1.0;
    double offset = 0.0;
    std::string target;

    bool operator==(const ChannelCalibration&) const = default;
};

/// Per-board calibration. Defaults pass counts through unchanged and map
/// MQ-7 to CO, MQ-2 to suspended particulates; the MQ-135 channel stays
/// unmapped until a deployment provides a fit for it.
struct Calibration {
    ChannelCalibration mq7{1.0, 0.0, "co"};
    ChannelCalibration mq2{1.0, 0.0, "rspm"};
    ChannelCalibration mq135{1.0, 0.0, ""};

    bool operator==(const Calibration&) const = default;
};

/// Regulatory limits a site is held against, in the record's units.
struct Thresholds {
    double so2 = 0.0;
    double no2 = 0.0;
    double rspm = 0.0;
    double co = 0.0;

    bool operator==(const Thresholds&) const = default;
};

/// Static description of the monitoring site a sensor board reports for.
struct SiteMeta {
    std::string monitoring_location;
    chaincode::LocationType location_type = chaincode::LocationType::kOther;
    std::vector<std::string> industry_names;
    std::string reporting_agency;
    Thresholds thresholds;
    double penalty_rate = 0.0;  // currency units per unit of exceedance
    Calibration calibration;
};

/// Converts one raw sample into a ledger-ready emission record: calibrates
/// each mapped channel, stamps in the site metadata, and prices the penalty
/// as rate x sum of max(0, value - threshold) over the reported pollutants.
/// Unmapped pollutants (SO2 with the default calibration) report zero.
/// Throws ConfigError for a non-finite slope/offset or an unknown target
/// field, ValidationError when calibration produces an invalid record.
chaincode::EmissionRecord raw_to_record(const RawSensorSample& sample,
                                        const SiteMeta& site,
                                        std::uint64_t timestamp_ms);

struct DatasetResult {
    std::vector<chaincode::EmissionRecord> records;
    std::vector<RowError> errors;
};

/// Loads an archival monitoring CSV with columns
///   timestamp,location_type,so2,no2,rspm,co,industry_names,
///   monitoring_location,penalty_value,reporting_agency
/// Timestamps are RFC 3339; industry names are ";"-separated. Rows that
/// fail field validation are reported and skipped, the rest are returned.
DatasetResult load_monitoring_dataset(std::istream& in);
DatasetResult load_monitoring_dataset_file(const std::string& path);

}  // namespace aqchain::ingest
