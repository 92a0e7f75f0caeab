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
#include "aqchain/time_util.hpp"

#include <cstdio>

#include "aqchain/errors.hpp"

namespace aqchain {

namespace {

// Civil-calendar <-> epoch-day conversions (proleptic Gregorian), the
// textbook shift-era formulation.
std::int64_t days_from_civil(std::int64_t y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const std::int64_t yoe = y - era * 400;                                // [0, 399]
    const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;  // [0, 365]
    const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;        // [0, 146096]
    return era * 146097 + doe - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const std::int64_t doe = z - era * 146097;
    const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const std::int64_t mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = yoe + era * 400 + (m <= 2);
}

bool is_leap(std::int64_t y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(std::int64_t y, int m) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return kDays[m - 1];
}

class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }

    char take() {
        if (done()) throw CodecError("timestamp truncated: \"" + s_ + "\"");
        return s_[pos_++];
    }

    void expect(char c) {
        const char got = take();
        if (got != c)
            throw CodecError(std::string("expected '") + c + "' at position " +
                             std::to_string(pos_ - 1) + " of \"" + s_ + "\"");
    }

    int digits(int n) {
        int v = 0;
        for (int i = 0; i < n; ++i) {
            const char c = take();
            if (c < '0' || c > '9')
                throw CodecError("expected digit at position " + std::to_string(pos_ - 1) +
                                 " of \"" + s_ + "\"");
            v = v * 10 + (c - '0');
        }
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::uint64_t parse_rfc3339_ms(const std::string& text) {
    Scanner sc(text);
    const int year = sc.digits(4);
    sc.expect('-');
    const int month = sc.digits(2);
    sc.expect('-');
    const int day = sc.digits(2);
    const char sep = sc.take();
    if (sep != 'T' && sep != 't')
        throw CodecError("expected 'T' date/time separator in \"" + text + "\"");
    const int hour = sc.digits(2);
    sc.expect(':');
    const int minute = sc.digits(2);
    sc.expect(':');
    const int second = sc.digits(2);

    if (month < 1 || month > 12)
        throw CodecError("month out of range in \"" + text + "\"");
    if (day < 1 || day > days_in_month(year, month))
        throw CodecError("day out of range in \"" + text + "\"");
    if (hour > 23 || minute > 59 || second > 59)
        throw CodecError("time of day out of range in \"" + text + "\"");

    std::int64_t ms = 0;
    if (sc.peek() == '.') {
        sc.take();
        int ndigits = 0;
        std::int64_t frac = 0;
        while (sc.peek() >= '0' && sc.peek() <= '9') {
            // Millisecond precision; extra digits are parsed and dropped.
            if (ndigits < 3) frac = frac * 10 + (sc.take() - '0');
            else sc.take();
            ++ndigits;
        }
        if (ndigits == 0)
            throw CodecError("empty fractional seconds in \"" + text + "\"");
        for (int i = ndigits; i < 3; ++i) frac *= 10;
        ms = frac;
    }

    std::int64_t offset_min = 0;
    const char z = sc.take();
    if (z == 'Z' || z == 'z') {
        // UTC
    } else if (z == '+' || z == '-') {
        const int oh = sc.digits(2);
        sc.expect(':');
        const int om = sc.digits(2);
        if (oh > 23 || om > 59)
            throw CodecError("UTC offset out of range in \"" + text + "\"");
        offset_min = (z == '+' ? 1 : -1) * (oh * 60 + om);
    } else {
        throw CodecError("expected 'Z' or numeric UTC offset in \"" + text + "\"");
    }
    if (!sc.done()) throw CodecError("trailing characters in timestamp \"" + text + "\"");

    const std::int64_t days = days_from_civil(year, month, day);
    const std::int64_t total =
        ((days * 24 + hour) * 60 + minute - offset_min) * 60000 + second * 1000 + ms;
    if (total < 0)
        throw CodecError("timestamp precedes the Unix epoch: \"" + text + "\"");
    return static_cast<std::uint64_t>(total);
}

std::string format_rfc3339_ms(std::uint64_t ms_since_epoch) {
    const std::int64_t total_ms = static_cast<std::int64_t>(ms_since_epoch);
    const std::int64_t days = total_ms / 86400000;
    std::int64_t rem = total_ms % 86400000;
    std::int64_t year;
    int month, day;
    civil_from_days(days, year, month, day);
    const int hour = static_cast<int>(rem / 3600000);
    rem %= 3600000;
    const int minute = static_cast<int>(rem / 60000);
    rem %= 60000;
    const int second = static_cast<int>(rem / 1000);
    const int milli = static_cast<int>(rem % 1000);

    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04lld-%02d-%02dT%02d:%02d:%02d.%03dZ",
                  static_cast<long long>(year), month, day, hour, minute, second, milli);
    return buf;
}

}  // namespace aqchain
