#pragma once

#include "panelcast/core/date.hpp"
#include "panelcast/core/keyval.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace panelcast::data {

enum class CovariateClass { Static, Past, Future };

struct CovariateMeta {
    std::string name;
    bool categorical = false;

    friend bool operator==(const CovariateMeta&, const CovariateMeta&) = default;
};

/// One group's aligned daily series. All per-date vectors have the same
/// length as `dates`; `dates` is strictly increasing and consecutive except
/// across declared exclusion gaps.
struct GroupData {
    std::string id;
    std::vector<Date> dates;
    std::vector<double> target;
    std::vector<std::vector<double>> past;   // [covariate index][t]
    std::vector<std::vector<double>> future; // [covariate index][t]
    std::vector<double> statics;             // [static covariate index]

    std::size_t size() const { return dates.size(); }

    friend bool operator==(const GroupData&, const GroupData&) = default;
};

/// Immutable after construction: every operation below returns a new value.
struct PanelDataset {
    std::vector<GroupData> groups; // sorted by id
    std::vector<CovariateMeta> past_meta;
    std::vector<CovariateMeta> future_meta;
    std::vector<CovariateMeta> static_meta;
    std::vector<DateRange> exclusion_gaps;

    int group_index(const std::string& id) const;
    int past_index(const std::string& name) const;
    int future_index(const std::string& name) const;

    std::size_t total_rows() const;

    /// Half-open index ranges [begin, end) of consecutive-day runs.
    std::vector<std::pair<int, int>> segments(const GroupData& g) const;

    /// Checks every structural invariant; throws std::runtime_error naming
    /// the first violation.
    void validate() const;

    friend bool operator==(const PanelDataset&, const PanelDataset&) = default;
};

/// Column-role mapping for CSV ingestion, loaded from a key-value file whose
/// keys are column names and whose values are roles:
///   date | group | target | covariate:<past|future|static>[:categorical] | ignore
struct ColumnSchema {
    struct CovariateColumn {
        std::string column;
        CovariateClass cls = CovariateClass::Past;
        bool categorical = false;
    };

    std::string date_column;
    std::string group_column;
    std::string target_column;
    std::vector<CovariateColumn> covariates; // file order

    static ColumnSchema load(const std::string& path);
    static ColumnSchema parse(const KeyValueFile& kv);
};

PanelDataset load_panel_csv(const std::string& path, const ColumnSchema& schema);

/// Writes one row per (group, date): date, group, target, past covariates,
/// future covariates. Bit-stable: numbers use shortest round-trip form.
void save_panel_csv(const PanelDataset& ds, const std::string& path);

/// Schema file matching save_panel_csv's column layout.
void write_schema_file(const PanelDataset& ds, const std::string& path);

struct CalendarFeatures {
    std::vector<double> day_of_week; // categorical 0..6, Monday = 0
    std::vector<double> weekend;     // 0/1
    std::vector<double> holiday;     // 0/1
};

CalendarFeatures derive_calendar_features(const std::vector<Date>& dates,
                                          const std::set<Date>& holidays);

/// Appends day_of_week / weekend / holiday as categorical future covariates.
/// Throws if any of those names already exists.
PanelDataset attach_calendar_features(const PanelDataset& ds, const std::set<Date>& holidays);

/// Removes all rows inside the given inclusive ranges and records each range
/// as an exclusion gap, so windowing never crosses it.
PanelDataset exclude_date_ranges(const PanelDataset& ds, const std::vector<DateRange>& ranges);

struct SplitResult {
    PanelDataset train; // dates <  val_start
    PanelDataset val;   // dates in [val_start, test_start)
    PanelDataset test;  // dates >= test_start
};

SplitResult split_train_val_test(const PanelDataset& ds, Date val_start, Date test_start);

struct SeriesStats {
    double mean = 0.0;
    double stddev = 0.0; // population standard deviation
};

/// Per-group standardization statistics for the target ("target") and every
/// continuous covariate, computed on training dates only.
struct NormalizationStats {
    std::map<std::string, std::map<std::string, SeriesStats>> by_group;

    const SeriesStats& lookup(const std::string& group, const std::string& series) const;
};

struct GroupStatisticsResult {
    NormalizationStats stats;
    PanelDataset dataset; // input with target_mean / target_std static covariates attached
};

/// Computes per-group training statistics and attaches the target mean and
/// standard deviation as continuous static covariates. Population standard
/// deviation throughout (divisor n, not n-1): fixed so that independent
/// implementations agree exactly. Degenerate (zero-variance) series raise.
GroupStatisticsResult compute_group_statistics(const PanelDataset& train);

/// Attaches train-derived static statistics to another split of the same panel.
PanelDataset attach_static_statistics(const PanelDataset& ds, const NormalizationStats& stats);

enum class NormalizationDirection { Forward, Inverse };

/// Standardizes (or un-standardizes) target and continuous covariates per
/// group. Categorical series and statics are untouched.
PanelDataset apply_normalization(const PanelDataset& ds, const NormalizationStats& stats,
                                 NormalizationDirection direction);

/// One training/inference instance: encoder_len steps of context followed by
/// `horizon` decoder steps, contiguous within a single gap-free segment.
struct SampleWindow {
    int group = 0;       // index into PanelDataset::groups
    int start = 0;       // index of first encoder element in the group arrays
    int encoder_len = 0;
    int horizon = 0;
    Date origin;         // date of the last encoder element

    int decoder_start() const { return start + encoder_len; }
};

/// All windows, ordered by (group, origin date). Segments shorter than
/// encoder_len + horizon yield no windows.
std::vector<SampleWindow> window_samples(const PanelDataset& ds, int encoder_len, int horizon,
                                         int stride);

} // namespace panelcast::data
