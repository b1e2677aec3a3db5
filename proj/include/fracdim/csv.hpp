#ifndef FRACDIM_CSV_HPP
#define FRACDIM_CSV_HPP

#include <string>
#include <vector>

#include "fracdim/experiments.hpp"
#include "fracdim/series.hpp"
#include "fracdim/tracking.hpp"

namespace fracdim::csv {

// Shortest decimal that round-trips the exact double (17 significant
// digits), the encoding used by every data file this library writes.
std::string format_double(double v);

// Series file: '#'-prefixed comment lines, then "index,value" with a
// 1-based index. Comments (e.g. a manifest echo) are written verbatim after
// "# ". write throws IoError; read throws IoError / ParseError.
void write_series(const std::string& path, const TimeSeries& series,
                  const std::vector<std::string>& comments = {});
TimeSeries read_series(const std::string& path);

// Trace file: "step,window_start,dimension"; gaps leave the dimension
// field empty.
void write_trace(const std::string& path, const TrackingTrace& trace,
                 const std::vector<std::string>& comments = {});

// Static report: "length,method,mean,std_dev,std_err,trials".
void write_static_report(const std::string& path, const StaticReport& report,
                         const std::vector<std::string>& comments = {});

// Tracking report, wide format:
// "step,higuchi,bk,pursuit_a1,pursuit_a2,..." (one column per trace).
void write_tracking_report(const std::string& path, const TrackingReport& report,
                           const std::vector<std::string>& comments = {});

// Convergence summary: "series,convergence_step,final_quarter_std".
void write_tracking_convergence(const std::string& path, const TrackingReport& report,
                                const std::vector<std::string>& comments = {});

// Per-trial convergence steps: "trial,series,convergence_step".
void write_tracking_trial_convergence(const std::string& path, const TrackingReport& report,
                                      const std::vector<std::string>& comments = {});

// Long format for plotting tools: "step,series_label,value" (gaps skipped).
void write_tracking_long(const std::string& path, const TrackingReport& report,
                         const std::vector<std::string>& comments = {});
// Long-format static report: (length, method, mean) triplets.
void write_static_long(const std::string& path, const StaticReport& report,
                       const std::vector<std::string>& comments = {});

}  // namespace fracdim::csv

#endif
