#pragma once

#include "mshare/geo.hpp"
#include "mshare/month.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mshare {

/// One aggregated encounter count for a (facility, month, dimension tuple).
struct EncounterFact {
    std::string facility_id;
    MonthYear month;
    std::string service_line;
    std::string base_class; // ED, Inpatient, Outpatient
    std::string payor_group;
    std::string age_bucket; // 0to10 ... 80Plus
    std::string zip_code;
    std::string physician_id;
    std::string drg_code;
    std::int64_t count = 0;

    /// Full dimension key; unique per fact row.
    std::string key() const {
        return facility_id + '|' + month.str() + '|' + service_line + '|' + base_class + '|' +
               payor_group + '|' + age_bucket + '|' + zip_code + '|' + physician_id + '|' +
               drg_code;
    }
};

/// Static facility attributes.
struct FacilityProfile {
    std::string facility_id;
    std::string name;
    std::string system_id; // facilities sharing it belong to one system
    double latitude = 0.0;
    double longitude = 0.0;
    int licensed_bed_cnt = 1;
    double nurse_avg_rate = 0.0; // 0-5
    std::string service_area;
    std::string hospital_type;
    std::string ownership;
    bool is_covid = false;
    bool emergency_services = false;
    /// Optional extra numeric columns (ratings, sentiment scores...); passed
    /// through to the feature matrix untouched.
    std::map<std::string, double> extra_numeric;

    GeoPoint location() const { return GeoPoint{latitude, longitude}; }
};

/// Configuration for the synthetic dataset generator.
struct SyntheticConfig {
    int n_facilities = 30;
    int n_months = 27;
    int n_service_lines = 9;
    int n_clusters = 5; // planted competitor pools
    double noise_scale = 0.04;
    std::uint64_t seed = 1;
    MonthYear start_month{2020, 1};
};

inline const std::string kOverallScope = "OVERALL";

/// Canonical age buckets (decades).
inline const std::vector<std::string>& age_buckets() {
    static const std::vector<std::string> v = {"0to10",  "10to20", "20to30", "30to40", "40to50",
                                               "50to60", "60to70", "70to80", "80Plus"};
    return v;
}

inline const std::vector<std::string>& base_classes() {
    static const std::vector<std::string> v = {"ED", "Inpatient", "Outpatient"};
    return v;
}

} // namespace mshare
