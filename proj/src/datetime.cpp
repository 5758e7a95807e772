// Copyright 2026 The dcatq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcatq/datetime.hpp"

#include <cctype>
#include <cstdio>

namespace dcatq::datetime {
namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static const int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[m - 1];
}

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yy = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yy + (m <= 2));
}

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }

    std::optional<int> digits(int count) {
        if (pos + static_cast<std::size_t>(count) > text.size()) return std::nullopt;
        int value = 0;
        for (int i = 0; i < count; ++i) {
            char c = text[pos + static_cast<std::size_t>(i)];
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            value = value * 10 + (c - '0');
        }
        pos += static_cast<std::size_t>(count);
        return value;
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
};

}  // namespace

std::optional<std::int64_t> parse_iso8601(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    Cursor cur{text};
    auto year = cur.digits(4);
    if (!year) return std::nullopt;
    int month = 1, day = 1;

    if (!cur.done()) {
        if (!cur.eat('-')) return std::nullopt;
        auto m = cur.digits(2);
        if (!m || *m < 1 || *m > 12) return std::nullopt;
        month = *m;
        if (!cur.done()) {
            if (!cur.eat('-')) return std::nullopt;
            auto d = cur.digits(2);
            if (!d || *d < 1 || *d > days_in_month(*year, month)) return std::nullopt;
            day = *d;
        }
    }

    std::int64_t seconds = days_from_civil(*year, month, day) * 86400;

    if (!cur.done()) {
        if (!cur.eat('T') && !cur.eat('t') && !cur.eat(' ')) return std::nullopt;
        auto hh = cur.digits(2);
        if (!hh || *hh > 23 || !cur.eat(':')) return std::nullopt;
        auto mm = cur.digits(2);
        if (!mm || *mm > 59) return std::nullopt;
        int ss = 0;
        if (cur.eat(':')) {
            auto s = cur.digits(2);
            if (!s || *s > 60) return std::nullopt;  // tolerate leap second
            ss = *s;
            if (cur.eat('.')) {
                bool any = false;
                while (std::isdigit(static_cast<unsigned char>(cur.peek()))) { ++cur.pos; any = true; }
                if (!any) return std::nullopt;
            }
        }
        seconds += *hh * 3600 + *mm * 60 + ss;

        if (!cur.done()) {
            char sign = cur.peek();
            if (sign == 'Z' || sign == 'z') {
                ++cur.pos;
            } else if (sign == '+' || sign == '-') {
                ++cur.pos;
                auto oh = cur.digits(2);
                if (!oh || *oh > 14) return std::nullopt;
                int om = 0;
                cur.eat(':');
                if (!cur.done()) {
                    auto m2 = cur.digits(2);
                    if (!m2 || *m2 > 59) return std::nullopt;
                    om = *m2;
                }
                std::int64_t offset = *oh * 3600 + om * 60;
                seconds += sign == '+' ? -offset : offset;
            } else {
                return std::nullopt;
            }
        }
    }

    return cur.done() ? std::optional(seconds) : std::nullopt;
}

std::string format_iso8601(std::int64_t seconds) {
    std::int64_t days = seconds / 86400;
    std::int64_t rem = seconds % 86400;
    if (rem < 0) { rem += 86400; --days; }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                  static_cast<int>(rem % 60));
    return buffer;
}

}  // namespace dcatq::datetime
