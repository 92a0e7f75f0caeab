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
#include <optional>
#include <string>

#include "aqchain/bytes.hpp"
#include "aqchain/errors.hpp"

// Canonical wire encoding. Every hashed or transmitted structure in the
// system serializes through these two classes, so the rules below are the
// single source of truth for cross-peer hash agreement:
//
//   - integers          big-endian, fixed width (u8/u16/u32/u64; i64 as
//                       two's-complement u64)
//   - string            u32 byte length + UTF-8 bytes
//   - bytes             u32 length + raw bytes
//   - list<T>           u32 element count + elements in order
//   - optional<T>       u8 presence flag (0 or 1) + value if present
//   - bool              u8, strictly 0 or 1
//   - enum              u8, strictly within the declared range
//   - fixed arrays      raw bytes, no length prefix (Digest 32 B,
//                       Signature 64 B, PublicKey 32 B, nonce 16 B)
//
// Decoding is strict: a reader must consume its input exactly, and any
// out-of-range tag, flag, or length is a CodecError. This keeps the
// encoding injective, which the tamper-evidence checks rely on.

namespace aqchain::wire {

class Writer {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u16(std::uint16_t v);
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void i64(std::int64_t v) { u64(static_cast<std::uint64_t>(v)); }
    void boolean(bool v) { u8(v ? 1 : 0); }
    void raw(ByteSpan data);
    void bytes(ByteSpan data);  // length-prefixed
    void str(const std::string& s);

    template <typename Container, typename Fn>
    void list(const Container& items, Fn&& encode_item) {
        u32(static_cast<std::uint32_t>(items.size()));
        for (const auto& item : items) encode_item(*this, item);
    }

    template <typename T, typename Fn>
    void opt(const std::optional<T>& v, Fn&& encode_value) {
        boolean(v.has_value());
        if (v) encode_value(*this, *v);
    }

    const Bytes& data() const { return out_; }
    Bytes take() { return std::move(out_); }
    std::size_t size() const { return out_.size(); }

private:
    Bytes out_;
};

class Reader {
public:
    explicit Reader(ByteSpan data) : data_(data) {}

    std::uint8_t u8();
    std::uint16_t u16();
    std::uint32_t u32();
    std::uint64_t u64();
    std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
    bool boolean();
    void raw(std::uint8_t* dst, std::size_t n);
    Bytes bytes();
    std::string str();

    template <typename Fn>
    void list(Fn&& decode_item) {
        const std::uint32_t n = u32();
        // Every element costs at least one byte; reject count bombs early.
        if (n > remaining())
            throw CodecError("list count exceeds remaining input");
        for (std::uint32_t i = 0; i < n; ++i) decode_item(*this);
    }

    template <typename Fn>
    auto opt(Fn&& decode_value) -> std::optional<decltype(decode_value(*this))> {
        if (!boolean()) return std::nullopt;
        return decode_value(*this);
    }

    std::size_t remaining() const { return data_.size() - pos_; }

    /// Decoders call this last; leftover bytes are a CodecError.
    void finish() const;

private:
    void need(std::size_t n) const;

    ByteSpan data_;
    std::size_t pos_ = 0;
};

/// Runs `decode` over `data` and requires it to consume the input exactly.
template <typename Fn>
auto decode_exact(ByteSpan data, Fn&& decode) {
    Reader r(data);
    auto value = decode(r);
    r.finish();
    return value;
}

}  // namespace aqchain::wire
