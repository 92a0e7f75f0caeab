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
#include <string>
#include <vector>

#include "aqchain/bytes.hpp"
#include "aqchain/wire.hpp"

namespace aqchain::chaincode {

enum class LocationType : std::uint8_t {
    kResidential = 0,
    kIndustrial = 1,
    kSensitive = 2,
    kOther = 3,
};

const char* to_string(LocationType t);
LocationType location_type_from_string(const std::string& name);  // throws ConfigError

/// Ten-field air-quality emission report, the payload of every transaction.
/// SO2/NO2/RSPM are in µg/m³, CO in mg/m³. Values are decimals in memory;
/// the canonical encoding stores them as micro-unit integers (see encode()).
struct EmissionRecord {
    std::uint64_t timestamp_ms = 0;  // UTC milliseconds since epoch
    LocationType location_type = LocationType::kOther;
    double so2 = 0.0;
    double no2 = 0.0;
    double rspm = 0.0;  // RSPM/PM10; also the smoke-proxy slot for raw sensors
    double co = 0.0;
    std::vector<std::string> industry_names;
    std::string monitoring_location;
    double penalty_value = 0.0;  // currency units, carried not computed
    std::string reporting_agency;

    bool operator==(const EmissionRecord&) const = default;

    void encode(wire::Writer& w) const;
    static EmissionRecord decode(wire::Reader& r);
    Bytes encoded() const;

    /// World-state key: "<monitoring_location>/<timestamp_ms>".
    std::string state_key() const;
};

/// Fixed-point scale of the canonical encoding: values are stored as
/// micro-units so the bytes are platform-independent. kMaxValue keeps the
/// double <-> micro conversion exact (|v| * 1e6 well below 2^53).
inline constexpr std::int64_t kMicroPerUnit = 1'000'000;
inline constexpr double kMaxValue = 1e9;

/// Decimal -> micro-units, round to nearest. Throws CodecError for
/// non-finite input or magnitude beyond kMaxValue.
std::int64_t to_micro(double value);
double from_micro(std::int64_t micro);

/// Returns every violated record invariant, not just the first; empty
/// means the record is valid. Pure.
std::vector<std::string> validate_record(const EmissionRecord& record);

}  // namespace aqchain::chaincode
