#pragma once

#include "mshare/common.hpp"

#include <compare>
#include <cstdio>
#include <string>

namespace mshare {

/// Calendar month. Totally ordered by (year, month); closed under
/// adding a number of months.
struct MonthYear {
    int year = 0;
    int month = 1; // 1-12

    MonthYear() = default;
    MonthYear(int y, int m) : year(y), month(m) {
        if (m < 1 || m > 12) {
            throw Error("MonthYear: month out of range: " + std::to_string(m));
        }
    }

    auto operator<=>(const MonthYear&) const = default;

    /// Months since year 0, used as a dense index.
    int index() const { return year * 12 + (month - 1); }

    MonthYear plus_months(int n) const {
        int idx = index() + n;
        return MonthYear{idx / 12, idx % 12 + 1};
    }

    /// "YYYY-MM", the serialization used in every file format.
    std::string str() const {
        char buf[16];
        std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
        return buf;
    }

    static MonthYear parse(const std::string& s) {
        int y = 0;
        int m = 0;
        if (std::sscanf(s.c_str(), "%d-%d", &y, &m) != 2) {
            throw Error("MonthYear: cannot parse '" + s + "'");
        }
        return MonthYear(y, m);
    }
};

} // namespace mshare
