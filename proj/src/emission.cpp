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
#include "aqchain/chaincode/emission.hpp"

#include <cmath>

#include "aqchain/errors.hpp"

namespace aqchain::chaincode {

const char* to_string(LocationType t) {
    switch (t) {
        case LocationType::kResidential: return "Residential";
        case LocationType::kIndustrial: return "Industrial";
        case LocationType::kSensitive: return "Sensitive";
        case LocationType::kOther: return "Other";
    }
    return "Other";
}

LocationType location_type_from_string(const std::string& name) {
    if (name == "Residential") return LocationType::kResidential;
    if (name == "Industrial") return LocationType::kIndustrial;
    if (name == "Sensitive") return LocationType::kSensitive;
    if (name == "Other") return LocationType::kOther;
    throw ConfigError("unknown location type \"" + name +
                      "\" (expected Residential, Industrial, Sensitive, or Other)");
}

std::int64_t to_micro(double value) {
    if (!std::isfinite(value))
        throw CodecError("cannot encode a non-finite decimal value");
    if (value > kMaxValue || value < -kMaxValue)
        throw CodecError("decimal value " + std::to_string(value) +
                         " exceeds the representable range of ±1e9");
    return std::llround(value * static_cast<double>(kMicroPerUnit));
}

double from_micro(std::int64_t micro) {
    return static_cast<double>(micro) / static_cast<double>(kMicroPerUnit);
}

void EmissionRecord::encode(wire::Writer& w) const {
    w.u64(timestamp_ms);
    w.u8(static_cast<std::uint8_t>(location_type));
    w.i64(to_micro(so2));
    w.i64(to_micro(no2));
    w.i64(to_micro(rspm));
    w.i64(to_micro(co));
    w.list(industry_names, [](wire::Writer& ww, const std::string& s) { ww.str(s); });
    w.str(monitoring_location);
    w.i64(to_micro(penalty_value));
    w.str(reporting_agency);
}

EmissionRecord EmissionRecord::decode(wire::Reader& r) {
    EmissionRecord rec;
    rec.timestamp_ms = r.u64();
    const std::uint8_t lt = r.u8();
    if (lt > static_cast<std::uint8_t>(LocationType::kOther))
        throw CodecError("location type tag out of range: " + std::to_string(lt));
    rec.location_type = static_cast<LocationType>(lt);
    rec.so2 = from_micro(r.i64());
    rec.no2 = from_micro(r.i64());
    rec.rspm = from_micro(r.i64());
    rec.co = from_micro(r.i64());
    r.list([&rec](wire::Reader& rr) { rec.industry_names.push_back(rr.str()); });
    rec.monitoring_location = r.str();
    rec.penalty_value = from_micro(r.i64());
    rec.reporting_agency = r.str();
    return rec;
}

Bytes EmissionRecord::encoded() const {
    wire::Writer w;
    encode(w);
    return w.take();
}

std::string EmissionRecord::state_key() const {
    return monitoring_location + "/" + std::to_string(timestamp_ms);
}

std::vector<std::string> validate_record(const EmissionRecord& record) {
    std::vector<std::string> violations;
    const auto check_value = [&violations](const char* name, double v) {
        if (!(v >= 0))  // also catches NaN
            violations.push_back(std::string(name) + " must be ≥ 0");
        else if (v > kMaxValue)
            violations.push_back(std::string(name) + " exceeds the representable range");
    };
    check_value("so2", record.so2);
    check_value("no2", record.no2);
    check_value("rspm", record.rspm);
    check_value("co", record.co);
    check_value("penalty_value", record.penalty_value);
    if (record.monitoring_location.empty())
        violations.push_back("monitoring_location must be non-empty");
    if (record.monitoring_location.find('/') != std::string::npos)
        violations.push_back("monitoring_location must not contain '/'");
    if (record.reporting_agency.empty())
        violations.push_back("reporting_agency must be non-empty");
    for (const std::string& name : record.industry_names) {
        if (name.empty()) {
            violations.push_back("industry_names must not contain empty names");
            break;
        }
    }
    return violations;
}

}  // namespace aqchain::chaincode
