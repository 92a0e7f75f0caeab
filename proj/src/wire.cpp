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
#include "aqchain/wire.hpp"

#include <cstring>

namespace aqchain::wire {

void Writer::u16(std::uint16_t v) {
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v));
}

void Writer::u32(std::uint32_t v) {
    out_.push_back(static_cast<std::uint8_t>(v >> 24));
    out_.push_back(static_cast<std::uint8_t>(v >> 16));
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
    out_.push_back(static_cast<std::uint8_t>(v));
}

void Writer::u64(std::uint64_t v) {
    u32(static_cast<std::uint32_t>(v >> 32));
    u32(static_cast<std::uint32_t>(v));
}

void Writer::raw(ByteSpan data) {
    out_.insert(out_.end(), data.begin(), data.end());
}

void Writer::bytes(ByteSpan data) {
    u32(static_cast<std::uint32_t>(data.size()));
    raw(data);
}

void Writer::str(const std::string& s) {
    u32(static_cast<std::uint32_t>(s.size()));
    out_.insert(out_.end(), s.begin(), s.end());
}

void Reader::need(std::size_t n) const {
    if (remaining() < n)
        throw CodecError("input truncated: need " + std::to_string(n) + " more bytes, have " +
                         std::to_string(remaining()));
}

std::uint8_t Reader::u8() {
    need(1);
    return data_[pos_++];
}

std::uint16_t Reader::u16() {
    need(2);
    const std::uint16_t v = static_cast<std::uint16_t>(
        (static_cast<std::uint16_t>(data_[pos_]) << 8) | data_[pos_ + 1]);
    pos_ += 2;
    return v;
}

std::uint32_t Reader::u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_ + i];
    pos_ += 4;
    return v;
}

std::uint64_t Reader::u64() {
    const std::uint64_t hi = u32();
    return (hi << 32) | u32();
}

bool Reader::boolean() {
    const std::uint8_t v = u8();
    if (v > 1) throw CodecError("boolean byte out of range: " + std::to_string(v));
    return v == 1;
}

void Reader::raw(std::uint8_t* dst, std::size_t n) {
    need(n);
    std::memcpy(dst, data_.data() + pos_, n);
    pos_ += n;
}

Bytes Reader::bytes() {
    const std::uint32_t n = u32();
    need(n);
    Bytes out(data_.begin() + static_cast<std::ptrdiff_t>(pos_),
              data_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
    pos_ += n;
    return out;
}

std::string Reader::str() {
    const std::uint32_t n = u32();
    need(n);
    std::string out(reinterpret_cast<const char*>(data_.data() + pos_), n);
    pos_ += n;
    return out;
}

void Reader::finish() const {
    if (remaining() != 0)
        throw CodecError("decoder left " + std::to_string(remaining()) + " trailing bytes");
}

}  // namespace aqchain::wire
