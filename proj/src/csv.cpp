#include "kzp/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kzp {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (const char ch : line) {
        if (ch == ',') {
            fields.push_back(field);
            field.clear();
        } else if (ch != '\r') {
            field += ch;
        }
    }
    fields.push_back(field);
    for (auto& f : fields) {
        const auto first = f.find_first_not_of(" \t");
        const auto last = f.find_last_not_of(" \t");
        f = first == std::string::npos ? std::string() : f.substr(first, last - first + 1);
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

double require_double(const std::string& s, std::size_t line_no, const char* what) {
    double v;
    if (!parse_double(s, v)) {
        throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": cannot parse " +
                                    what + " from '" + s + "'");
    }
    return v;
}

}  // namespace

TimeSeries read_series_csv(std::istream& in, bool no_header) {
    std::vector<double> values;
    std::string line;
    std::size_t line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_fields(line);
        if (fields.size() > 2) {
            throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                        ": expected 1 or 2 columns, found " +
                                        std::to_string(fields.size()));
        }
        double v;
        if (!parse_double(fields.back(), v)) {
            if (first_content && !no_header) {
                first_content = false;
                continue;  // header row
            }
            throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                        ": cannot parse value '" + fields.back() + "'");
        }
        first_content = false;
        values.push_back(v);
    }
    return validate_series(std::move(values));
}

TimeSeries read_series_csv_file(const std::string& path, bool no_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return read_series_csv(in, no_header);
}

void write_series_csv(std::ostream& out, const TimeSeries& y) {
    out << "index,value\n";
    for (std::size_t t = 0; t < y.values.size(); ++t) {
        out << (t + 1) << ',' << format_full(y.values[t]) << '\n';
    }
}

void write_raw_periodogram_csv(std::ostream& out, const RawPeriodogram& raw) {
    out << "frequency,ordinate\n";
    for (std::size_t i = 0; i < raw.ordinates.size(); ++i) {
        out << format_full(raw.grid.frequencies[i]) << ',' << format_full(raw.ordinates[i]) << '\n';
    }
}

void write_smoothed_csv(std::ostream& out, const SmoothedPeriodogram& sp) {
    out << "frequency,ordinate,ci_lower,ci_upper,half_width,realized_length,floor_flag\n";
    for (std::size_t i = 0; i < sp.ordinates.size(); ++i) {
        out << format_full(sp.grid.frequencies[i]) << ',' << format_full(sp.ordinates[i]) << ','
            << format_full(sp.ci_lower[i]) << ',' << format_full(sp.ci_upper[i]) << ','
            << sp.half_widths[i] << ',' << sp.realized_lengths[i] << ','
            << static_cast<int>(sp.floored[i]) << '\n';
    }
}

void write_summary_csv(std::ostream& out, const std::vector<PeakSummary>& peaks) {
    out << "frequency,period,ordinate,ci_lower,ci_upper\n";
    for (const auto& p : peaks) {
        out << format_full(p.frequency) << ',' << format_full(p.period) << ','
            << format_full(p.value) << ',' << format_full(p.ci_lower) << ','
            << format_full(p.ci_upper) << '\n';
    }
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundsReport>& reports) {
    out << "window,n,delta_lambda,lower_m,upper_m,feasible,m_min,m_median,m_max\n";
    for (const auto& r : reports) {
        out << window_name(r.kind) << ',' << r.n << ',' << format_full(r.delta_lambda) << ','
            << format_full(r.lower_m) << ',' << format_full(r.upper_m) << ','
            << (r.feasible ? "true" : "false") << ',' << r.m_min << ',' << r.m_median << ','
            << r.m_max << '\n';
    }
}

void write_ci_curves_csv(std::ostream& out, const std::vector<CiCurvePoint>& points) {
    out << "series,x,nu,ci_width\n";
    for (const auto& p : points) {
        out << p.series << ',' << p.x << ',' << format_full(p.nu) << ',' << format_full(p.width)
            << '\n';
    }
}

void write_protocol_csv(std::ostream& out, const ProtocolReport& report) {
    out << "frequency,dynamic_ordinate,dyn_ci_lower,dyn_ci_upper,amplitude,log_ci_lower,"
           "log_ci_upper,amp_ci_lower,amp_ci_upper,source,window,chosen_m,min_gap_rad,"
           "fallback_used\n";
    const char* source = report.fallback_used ? "dynamic" : "static";
    for (std::size_t i = 0; i < report.detected.size(); ++i) {
        const auto& d = report.detected[i];
        const auto& s = report.strengths[i];
        out << format_full(d.frequency) << ',' << format_full(d.ordinate) << ','
            << format_full(d.ci.lower) << ',' << format_full(d.ci.upper) << ','
            << format_full(s.amplitude) << ',' << format_full(s.log_ci.lower) << ','
            << format_full(s.log_ci.upper) << ',' << format_full(s.amplitude_ci.lower) << ','
            << format_full(s.amplitude_ci.upper) << ',' << source << ','
            << window_name(report.chosen_kind) << ',' << report.chosen_m << ','
            << format_full(report.min_gap_rad) << ',' << (report.fallback_used ? "true" : "false")
            << '\n';
    }
}

SmoothedPeriodogram read_smoothed_csv(std::istream& in) {
    SmoothedPeriodogram sp;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 7) {
            throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                        ": expected 7 columns, found " +
                                        std::to_string(fields.size()));
        }
        sp.grid.frequencies.push_back(require_double(fields[0], line_no, "frequency"));
        sp.ordinates.push_back(require_double(fields[1], line_no, "ordinate"));
        sp.ci_lower.push_back(require_double(fields[2], line_no, "ci_lower"));
        sp.ci_upper.push_back(require_double(fields[3], line_no, "ci_upper"));
        sp.half_widths.push_back(static_cast<int>(require_double(fields[4], line_no, "half_width")));
        sp.realized_lengths.push_back(
            static_cast<int>(require_double(fields[5], line_no, "realized_length")));
        sp.floored.push_back(require_double(fields[6], line_no, "floor_flag") != 0.0 ? 1 : 0);
    }
    if (sp.grid.frequencies.size() < 2) {
        throw std::invalid_argument("smoothed-periodogram table needs at least 2 rows");
    }
    sp.grid.spacing = sp.grid.frequencies[1] - sp.grid.frequencies[0];
    validate_smoothed(sp);
    return sp;
}

SmoothedPeriodogram read_smoothed_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return read_smoothed_csv(in);
}

}  // namespace kzp
