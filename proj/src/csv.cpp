#include "fracdim/csv.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fracdim::csv {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("failed writing '" + path + "'");
}

void write_comments(std::ofstream& out, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << "\n";
}

std::string trace_gap_or_value(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string{};
}

}  // namespace

void write_series(const std::string& path, const TimeSeries& series,
                  const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "# values: decimal, 17 significant digits (bit-exact round trip)\n";
  out << "index,value\n";
  for (std::int64_t i = 0; i < series.size(); ++i) {
    out << (i + 1) << ',' << format_double(series[i]) << '\n';
  }
  finish(out, path);
}

TimeSeries read_series(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");

  std::vector<double> values;
  std::string line;
  std::int64_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "index,value") {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": expected header 'index,value', got '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected 'index,value' row");
    }
    const std::string field = line.substr(comma + 1);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end == field.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v)) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": bad value '" + field + "'");
    }
    values.push_back(v);
  }
  if (!header_seen) throw ParseError(path + ": missing 'index,value' header");
  if (values.empty()) throw ParseError(path + ": no samples");
  return TimeSeries(std::move(values));
}

void write_trace(const std::string& path, const TrackingTrace& trace,
                 const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "# alignment: " << alignment_name(trace.config.alignment) << "\n";
  out << "step,window_start,dimension\n";
  for (const auto& s : trace.steps) {
    out << s.step_index << ',' << s.window_start << ',' << trace_gap_or_value(s.dimension)
        << '\n';
  }
  finish(out, path);
}

void write_static_report(const std::string& path, const StaticReport& report,
                         const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "length,method,mean,std_dev,std_err,trials\n";
  for (const auto& c : report.cells) {
    out << c.length << ',' << method_name(c.method) << ',' << format_double(c.stats.mean) << ','
        << format_double(c.stats.std_dev) << ',' << format_double(c.stats.std_err) << ','
        << c.ok_count << '\n';
  }
  finish(out, path);
}

void write_tracking_report(const std::string& path, const TrackingReport& report,
                           const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "# window_start = 1 + (step - 1) * " << report.spec.stride << "\n";
  out << "step";
  for (const auto& t : report.traces) out << ',' << t.label;
  out << '\n';
  for (std::size_t s = 0; s < report.window_starts.size(); ++s) {
    out << (s + 1);
    for (const auto& t : report.traces) out << ',' << trace_gap_or_value(t.mean[s]);
    out << '\n';
  }
  finish(out, path);
}

void write_tracking_convergence(const std::string& path, const TrackingReport& report,
                                const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "# convergence: target " << format_double(report.spec.conv_target) << ", band "
      << format_double(report.spec.conv_band) << ", hold " << report.spec.conv_hold
      << " stride-1 steps\n";
  out << "series,convergence_step,final_quarter_std\n";
  for (const auto& t : report.traces) {
    out << t.label << ',';
    if (t.convergence_step) out << *t.convergence_step;
    out << ',' << format_double(t.final_quarter_std) << '\n';
  }
  finish(out, path);
}

void write_tracking_trial_convergence(const std::string& path, const TrackingReport& report,
                                      const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "trial,series,convergence_step\n";
  for (std::size_t trial = 0; trial < report.trial_seeds.size(); ++trial) {
    for (const auto& t : report.traces) {
      out << (trial + 1) << ',' << t.label << ',';
      const auto& c = t.per_trial_convergence[trial];
      if (c) out << *c;
      out << '\n';
    }
  }
  finish(out, path);
}

void write_tracking_long(const std::string& path, const TrackingReport& report,
                         const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "step,series_label,value\n";
  for (std::size_t s = 0; s < report.window_starts.size(); ++s) {
    for (const auto& t : report.traces) {
      if (!t.mean[s]) continue;
      out << (s + 1) << ',' << t.label << ',' << format_double(*t.mean[s]) << '\n';
    }
  }
  finish(out, path);
}

void write_static_long(const std::string& path, const StaticReport& report,
                       const std::vector<std::string>& comments) {
  auto out = open_out(path);
  write_comments(out, comments);
  out << "length,series_label,value\n";
  for (const auto& c : report.cells) {
    out << c.length << ',' << method_name(c.method) << ',' << format_double(c.stats.mean) << '\n';
  }
  finish(out, path);
}

}  // namespace fracdim::csv
