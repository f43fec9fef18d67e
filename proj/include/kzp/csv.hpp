#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kzp/adaptive.hpp"
#include "kzp/bounds.hpp"
#include "kzp/core.hpp"
#include "kzp/protocol.hpp"

namespace kzp {

// Full-precision decimal rendering of a double (17 significant digits, so
// values survive a write/read round trip bit-exactly).
std::string format_full(double v);

// Reads a series from CSV with one column (value) or two (index,value). A
// leading header row is detected by its non-numeric final field and skipped
// unless no_header forces the first row to be data.
TimeSeries read_series_csv(std::istream& in, bool no_header = false);
TimeSeries read_series_csv_file(const std::string& path, bool no_header = false);

// Tables are comma separated with one header row; all floating-point values
// use format_full so outputs are byte-stable.
void write_series_csv(std::ostream& out, const TimeSeries& y);
void write_raw_periodogram_csv(std::ostream& out, const RawPeriodogram& raw);
void write_smoothed_csv(std::ostream& out, const SmoothedPeriodogram& sp);
void write_summary_csv(std::ostream& out, const std::vector<PeakSummary>& peaks);
void write_bounds_csv(std::ostream& out, const std::vector<BoundsReport>& reports);
void write_ci_curves_csv(std::ostream& out, const std::vector<CiCurvePoint>& points);
void write_protocol_csv(std::ostream& out, const ProtocolReport& report);

// Re-reads the numeric content of a smoothed-periodogram table written by
// write_smoothed_csv (scale and method metadata are not stored in the file).
SmoothedPeriodogram read_smoothed_csv(std::istream& in);
SmoothedPeriodogram read_smoothed_csv_file(const std::string& path);

}  // namespace kzp
