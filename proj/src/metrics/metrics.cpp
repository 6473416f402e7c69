#include "panelcast/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace panelcast::metrics {

void MetricConfig::validate() const {
    if (mape_exclusion_threshold < 0.0) {
        throw std::invalid_argument("mape_exclusion_threshold must be >= 0");
    }
    if (!(mis_alpha > 0.0 && mis_alpha < 1.0)) {
        throw std::invalid_argument("mis_alpha must lie in (0,1)");
    }
}

namespace {

void check_alignment(const std::vector<GroupSeries>& a, const std::vector<GroupSeries>& b,
                     const char* what) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(what) + ": group count mismatch");
    }
    for (size_t g = 0; g < a.size(); ++g) {
        if (a[g].group != b[g].group) {
            throw std::invalid_argument(std::string(what) + ": group order mismatch ('" +
                                        a[g].group + "' vs '" + b[g].group + "')");
        }
        if (a[g].values.size() != b[g].values.size()) {
            throw std::invalid_argument(std::string(what) + ": length mismatch in group '" +
                                        a[g].group + "'");
        }
    }
}

} // namespace

MetricReport compute_point_metrics(const std::vector<GroupSeries>& actuals,
                                   const std::vector<GroupSeries>& forecasts,
                                   const MetricConfig& cfg) {
    cfg.validate();
    check_alignment(actuals, forecasts, "compute_point_metrics");
    if (actuals.empty()) {
        throw std::invalid_argument("compute_point_metrics: no groups");
    }

    MetricReport report;
    for (size_t g = 0; g < actuals.size(); ++g) {
        const auto& y = actuals[g].values;
        const auto& f = forecasts[g].values;
        if (y.empty()) {
            throw std::invalid_argument("compute_point_metrics: empty series in group '" +
                                        actuals[g].group + "'");
        }
        GroupMetrics m;
        m.count = static_cast<std::int64_t>(y.size());
        double abs_sum = 0.0, sq_sum = 0.0, pct_sum = 0.0;
        std::int64_t pct_n = 0;
        for (size_t i = 0; i < y.size(); ++i) {
            const double e = y[i] - f[i];
            abs_sum += std::abs(e);
            sq_sum += e * e;
            if (std::abs(y[i]) > cfg.mape_exclusion_threshold) {
                pct_sum += std::abs(e) / std::abs(y[i]);
                ++pct_n;
            } else {
                ++m.mape_excluded;
            }
        }
        if (pct_n == 0) {
            throw std::invalid_argument("compute_point_metrics: all points excluded from MAPE in group '" +
                                        actuals[g].group + "'");
        }
        const double n = static_cast<double>(y.size());
        m.mae = abs_sum / n;
        m.mse = sq_sum / n;
        m.rmse = std::sqrt(m.mse);
        m.mape = 100.0 * pct_sum / static_cast<double>(pct_n);
        report.group_names.push_back(actuals[g].group);
        report.per_group.push_back(m);
    }

    const double G = static_cast<double>(report.per_group.size());
    for (const auto& m : report.per_group) {
        report.mae += m.mae / G;
        report.rmse += m.rmse / G;
        report.mape += m.mape / G;
        report.mse += m.mse / G;
        report.mape_excluded_total += m.mape_excluded;
    }
    return report;
}

double mean_interval_score(const std::vector<GroupSeries>& actuals,
                           const std::vector<GroupSeries>& lower,
                           const std::vector<GroupSeries>& upper,
                           const MetricConfig& cfg) {
    cfg.validate();
    check_alignment(actuals, lower, "mean_interval_score");
    check_alignment(actuals, upper, "mean_interval_score");
    if (actuals.empty()) {
        throw std::invalid_argument("mean_interval_score: no groups");
    }
    const double penalty = 2.0 / cfg.mis_alpha;
    double total = 0.0;
    for (size_t g = 0; g < actuals.size(); ++g) {
        const auto& y = actuals[g].values;
        const auto& lo = lower[g].values;
        const auto& hi = upper[g].values;
        if (y.empty()) {
            throw std::invalid_argument("mean_interval_score: empty series in group '" +
                                        actuals[g].group + "'");
        }
        double sum = 0.0;
        for (size_t i = 0; i < y.size(); ++i) {
            if (lo[i] > hi[i]) {
                throw std::invalid_argument("mean_interval_score: crossed bounds in group '" +
                                            actuals[g].group + "' at index " + std::to_string(i));
            }
            double score = hi[i] - lo[i];
            if (y[i] < lo[i]) score += penalty * (lo[i] - y[i]);
            if (y[i] > hi[i]) score += penalty * (y[i] - hi[i]);
            sum += score;
        }
        total += sum / static_cast<double>(y.size());
    }
    return total / static_cast<double>(actuals.size());
}

double quantile_loss(double y, double yhat, double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw std::invalid_argument("quantile_loss: q must lie in (0,1)");
    }
    const double d = y - yhat;
    return std::max(q * d, (q - 1.0) * d);
}

WeeklyMape per_week_mape(const std::vector<WindowSeries>& windows, int horizon,
                         const MetricConfig& cfg) {
    cfg.validate();
    if (horizon <= 0 || horizon % 7 != 0) {
        throw std::invalid_argument("per_week_mape: horizon must be a positive multiple of 7");
    }
    if (windows.empty()) {
        throw std::invalid_argument("per_week_mape: no windows");
    }
    const int num_weeks = horizon / 7;

    // Group names in first-appearance order.
    std::vector<std::string> group_names;
    for (const auto& w : windows) {
        if (w.actual.size() != static_cast<size_t>(horizon) ||
            w.forecast.size() != static_cast<size_t>(horizon)) {
            throw std::invalid_argument("per_week_mape: window length != horizon in group '" +
                                        w.group + "'");
        }
        if (std::find(group_names.begin(), group_names.end(), w.group) == group_names.end()) {
            group_names.push_back(w.group);
        }
    }

    WeeklyMape out;
    out.week.assign(num_weeks, 0.0);
    out.excluded_per_week.assign(num_weeks, 0);

    // Per group: pooled mean of |y-f|/|y| over the included points of the
    // step range, then a uniform average across groups. "Week 0" here means
    // all steps, which reproduces the plain MAPE.
    auto mape_over_steps = [&](int step_lo, int step_hi, std::int64_t* excluded) {
        double acc = 0.0;
        int groups_counted = 0;
        for (const auto& name : group_names) {
            double pct_sum = 0.0;
            std::int64_t pct_n = 0;
            for (const auto& w : windows) {
                if (w.group != name) continue;
                for (int s = step_lo; s < step_hi; ++s) {
                    if (std::abs(w.actual[s]) > cfg.mape_exclusion_threshold) {
                        pct_sum += std::abs(w.actual[s] - w.forecast[s]) / std::abs(w.actual[s]);
                        ++pct_n;
                    } else if (excluded) {
                        ++*excluded;
                    }
                }
            }
            if (pct_n == 0) {
                throw std::invalid_argument("per_week_mape: all points excluded in group '" + name +
                                            "' for steps [" + std::to_string(step_lo + 1) + "," +
                                            std::to_string(step_hi) + "]");
            }
            acc += 100.0 * pct_sum / static_cast<double>(pct_n);
            ++groups_counted;
        }
        return acc / static_cast<double>(groups_counted);
    };

    for (int w = 0; w < num_weeks; ++w) {
        out.week[w] = mape_over_steps(7 * w, 7 * (w + 1), &out.excluded_per_week[w]);
    }
    out.total = mape_over_steps(0, horizon, nullptr);
    return out;
}

std::vector<EcdfPoint> empirical_cdf_abs_error(const std::vector<GroupSeries>& actuals,
                                               const std::vector<GroupSeries>& forecasts) {
    check_alignment(actuals, forecasts, "empirical_cdf_abs_error");
    std::vector<double> errors;
    for (size_t g = 0; g < actuals.size(); ++g) {
        for (size_t i = 0; i < actuals[g].values.size(); ++i) {
            errors.push_back(std::abs(actuals[g].values[i] - forecasts[g].values[i]));
        }
    }
    if (errors.empty()) {
        throw std::invalid_argument("empirical_cdf_abs_error: empty input");
    }
    std::sort(errors.begin(), errors.end());
    std::vector<EcdfPoint> out;
    const double n = static_cast<double>(errors.size());
    for (size_t i = 0; i < errors.size(); ++i) {
        if (i + 1 < errors.size() && errors[i + 1] == errors[i]) continue;
        out.push_back({errors[i], static_cast<double>(i + 1) / n});
    }
    return out;
}

double ecdf_evaluate(const std::vector<EcdfPoint>& ecdf, double threshold) {
    double frac = 0.0;
    for (const auto& p : ecdf) {
        if (p.threshold <= threshold) {
            frac = p.fraction;
        } else {
            break;
        }
    }
    return frac;
}

double pearson_correlation(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("pearson_correlation: length mismatch");
    }
    if (x.size() < 2) {
        throw std::invalid_argument("pearson_correlation: need at least 2 points");
    }
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw std::invalid_argument("pearson_correlation: zero variance input");
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace panelcast::metrics
