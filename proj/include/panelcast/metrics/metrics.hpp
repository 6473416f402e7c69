#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace panelcast::metrics {

struct MetricConfig {
    /// Points with |actual| <= this are excluded from MAPE (counts close to
    /// zero make the percentage error unreliable). Targets are people/day,
    /// so 1.0 removes only near-empty days.
    double mape_exclusion_threshold = 1.0;
    /// Interval-score alpha, taken literally: penalty factor is 2/alpha.
    double mis_alpha = 0.95;

    void validate() const;
};

/// Aligned actual/forecast values for one group, pooled over whatever
/// windows/steps the caller evaluated.
struct GroupSeries {
    std::string group;
    std::vector<double> values;
};

struct GroupMetrics {
    double mae = 0.0;
    double rmse = 0.0;
    double mape = 0.0; // percent
    double mse = 0.0;
    std::int64_t mape_excluded = 0;
    std::int64_t count = 0;
};

/// Point-forecast error report. Aggregate values are uniform averages of the
/// per-group values; in particular RMSE is root-per-group, then averaged, so
/// aggregate RMSE^2 need not equal aggregate MSE.
struct MetricReport {
    std::vector<std::string> group_names;
    std::vector<GroupMetrics> per_group;
    double mae = 0.0;
    double rmse = 0.0;
    double mape = 0.0; // percent
    double mse = 0.0;
    std::optional<double> mis;
    std::int64_t mape_excluded_total = 0;
};

MetricReport compute_point_metrics(const std::vector<GroupSeries>& actuals,
                                   const std::vector<GroupSeries>& forecasts,
                                   const MetricConfig& cfg = {});

/// (U-L) + (2/alpha)(L-y)1[y<L] + (2/alpha)(y-U)1[y>U], mean per group,
/// then averaged uniformly across groups. Throws on crossed bounds.
double mean_interval_score(const std::vector<GroupSeries>& actuals,
                           const std::vector<GroupSeries>& lower,
                           const std::vector<GroupSeries>& upper,
                           const MetricConfig& cfg = {});

/// Pinball loss max{q(y-yhat), (q-1)(y-yhat)}; q must lie in (0,1).
double quantile_loss(double y, double yhat, double q);

/// One forecast window of a group: horizon-aligned actual and forecast values.
struct WindowSeries {
    std::string group;
    std::vector<double> actual;
    std::vector<double> forecast;
};

struct WeeklyMape {
    std::vector<double> week; // percent, one entry per 7-step block
    double total = 0.0;       // pooled over all steps; equals the plain MAPE
    std::vector<std::int64_t> excluded_per_week;
};

/// Week w pools horizon steps 7(w-1)+1 .. 7w across all windows and groups.
/// Horizon must be a multiple of 7.
WeeklyMape per_week_mape(const std::vector<WindowSeries>& windows, int horizon,
                         const MetricConfig& cfg = {});

struct EcdfPoint {
    double threshold;
    double fraction;
};

/// Right-continuous ECDF of |y - yhat| pooled over all groups and steps.
std::vector<EcdfPoint> empirical_cdf_abs_error(const std::vector<GroupSeries>& actuals,
                                               const std::vector<GroupSeries>& forecasts);

/// Fraction of pooled absolute errors <= threshold, evaluated from ECDF points.
double ecdf_evaluate(const std::vector<EcdfPoint>& ecdf, double threshold);

/// Standard Pearson coefficient; throws if either input has zero variance or
/// lengths differ / are < 2.
double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y);

} // namespace panelcast::metrics
