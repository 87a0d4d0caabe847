#include "duris/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "duris/version.hpp"

namespace duris::io {

using nlohmann::json;

namespace {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double parse_double(const std::string& s, const char* what) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw IoError(std::string("csv: bad number in column ") + what + ": '" + s + "'");
    }
    return v;
}

}  // namespace

Format format_from_string(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    if (name == "svg") return Format::svg;
    throw ConfigError("unknown output format '" + name + "'");
}

std::string to_csv(const sweep::SweepResult& result) {
    std::string out = "axis,axis_value,snr_db,metric,value,ci95\n";
    for (const auto& row : result.rows) {
        out += row.axis;
        out += ',';
        out += row.axis_value;
        out += ',';
        out += format_double(row.snr_db);
        out += ',';
        out += row.metric;
        out += ',';
        out += format_double(row.value);
        out += ',';
        out += format_double(row.ci95);
        out += '\n';
    }
    return out;
}

sweep::SweepResult parse_csv(const std::string& text) {
    sweep::SweepResult result;
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "axis,axis_value,snr_db,metric,value,ci95") {
        throw IoError("csv: missing or unexpected header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (fields.size() != 6) throw IoError("csv: expected 6 columns, got line '" + line + "'");
        sweep::SweepRow row;
        row.axis = fields[0];
        row.axis_value = fields[1];
        row.snr_db = parse_double(fields[2], "snr_db");
        row.metric = fields[3];
        row.value = parse_double(fields[4], "value");
        row.ci95 = parse_double(fields[5], "ci95");
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string to_json(const sweep::SweepResult& result) {
    json j;
    j["metadata"] = {
        {"tool", "duris"},
        {"version", kVersion},
        {"config_hash", result.config_hash},
        {"master_seed", result.master_seed},
        {"n_trials", result.n_trials},
        {"marcum_q_pair_residual", result.marcum_q_pair_residual},
    };
    json rows = json::array();
    for (const auto& row : result.rows) {
        rows.push_back({{"axis", row.axis},
                        {"axis_value", row.axis_value},
                        {"snr_db", row.snr_db},
                        {"metric", row.metric},
                        {"value", row.value},
                        {"ci95", row.ci95}});
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

namespace {

struct Series {
    std::string label;
    bool log_scale = false;
    std::vector<std::pair<double, double>> points;  // (snr_db, value)
};

constexpr const char* kPalette[] = {"#00589c", "#c03a2b", "#1d8a4e", "#8e44ad",
                                    "#b8860b", "#17808d", "#5d4f42", "#b0486e"};

bool metric_uses_log(const std::string& metric) {
    return metric.rfind("outage", 0) == 0 || metric.rfind("ber", 0) == 0;
}

}  // namespace

std::string to_svg(const sweep::SweepResult& result) {
    // Group rows into series by (axis_value, metric), first appearance order.
    std::vector<Series> series;
    bool any_log = false;
    for (const auto& row : result.rows) {
        const std::string label = row.axis_value + " " + row.metric;
        auto it = std::find_if(series.begin(), series.end(),
                               [&](const Series& s) { return s.label == label; });
        if (it == series.end()) {
            series.push_back({label, metric_uses_log(row.metric), {}});
            it = series.end() - 1;
            any_log = any_log || it->log_scale;
        }
        it->points.emplace_back(row.snr_db, row.value);
    }

    const double width = 900, height = 560;
    const double ml = 80, mr = 220, mt = 30, mb = 60;
    const double plot_w = width - ml - mr, plot_h = height - mt - mb;

    double x_min = 1e300, x_max = -1e300, y_max = 0.0;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_max = std::max(y_max, y);
        }
    }
    if (series.empty()) {
        x_min = 0;
        x_max = 1;
    }
    if (x_max <= x_min) x_max = x_min + 1;

    const double log_floor = 1e-12;
    const double y_lin_max = y_max > 0 ? 1.05 * y_max : 1.0;

    const auto x_px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * plot_w; };
    const auto y_px = [&](double y, bool log_scale) {
        if (log_scale) {
            const double clipped = std::max(y, log_floor);
            return mt + (std::log10(1.0) - std::log10(clipped)) /
                            (std::log10(1.0) - std::log10(log_floor)) * plot_h;
        }
        return mt + (y_lin_max - y) / y_lin_max * plot_h;
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + format_double(width) +
           "\" height=\"" + format_double(height) + "\" viewBox=\"0 0 " +
           format_double(width) + " " + format_double(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<rect x=\"" + format_double(ml) + "\" y=\"" + format_double(mt) + "\" width=\"" +
           format_double(plot_w) + "\" height=\"" + format_double(plot_h) +
           "\" fill=\"none\" stroke=\"#333\"/>\n";

    // X ticks on grid-friendly steps.
    const double x_span = x_max - x_min;
    const double x_step = x_span > 30 ? 10.0 : (x_span > 12 ? 5.0 : 2.0);
    for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9; x += x_step) {
        const double px = x_px(x);
        svg += "<line x1=\"" + format_double(px) + "\" y1=\"" + format_double(mt + plot_h) +
               "\" x2=\"" + format_double(px) + "\" y2=\"" +
               format_double(mt + plot_h + 5) + "\" stroke=\"#333\"/>\n";
        svg += "<text x=\"" + format_double(px) + "\" y=\"" + format_double(mt + plot_h + 20) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + format_double(x) + "</text>\n";
    }
    svg += "<text x=\"" + format_double(ml + plot_w / 2) + "\" y=\"" +
           format_double(height - 15) +
           "\" font-size=\"13\" text-anchor=\"middle\">SNR (dB)</text>\n";

    // Y ticks: decades for log, six divisions for linear.
    if (any_log) {
        for (int e = 0; e >= -12; e -= 2) {
            const double y = std::pow(10.0, e);
            const double py = y_px(y, true);
            svg += "<line x1=\"" + format_double(ml - 5) + "\" y1=\"" + format_double(py) +
                   "\" x2=\"" + format_double(ml) + "\" y2=\"" + format_double(py) +
                   "\" stroke=\"#333\"/>\n";
            svg += "<text x=\"" + format_double(ml - 8) + "\" y=\"" + format_double(py + 4) +
                   "\" font-size=\"12\" text-anchor=\"end\">1e" + std::to_string(e) +
                   "</text>\n";
        }
    } else {
        for (int i = 0; i <= 6; ++i) {
            const double y = y_lin_max * i / 6.0;
            const double py = y_px(y, false);
            svg += "<line x1=\"" + format_double(ml - 5) + "\" y1=\"" + format_double(py) +
                   "\" x2=\"" + format_double(ml) + "\" y2=\"" + format_double(py) +
                   "\" stroke=\"#333\"/>\n";
            char label[32];
            std::snprintf(label, sizeof(label), "%.3g", y);
            svg += "<text x=\"" + format_double(ml - 8) + "\" y=\"" + format_double(py + 4) +
                   "\" font-size=\"12\" text-anchor=\"end\">" + label + "</text>\n";
        }
    }

    int color = 0;
    double legend_y = mt + 14;
    for (const auto& s : series) {
        const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
        ++color;
        std::string pts;
        for (const auto& [x, y] : s.points) {
            pts += format_double(x_px(x)) + "," + format_double(y_px(y, s.log_scale)) + " ";
        }
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
               "\" stroke-width=\"1.6\" points=\"" + pts + "\"/>\n";
        svg += "<line x1=\"" + format_double(ml + plot_w + 10) + "\" y1=\"" +
               format_double(legend_y - 4) + "\" x2=\"" + format_double(ml + plot_w + 34) +
               "\" y2=\"" + format_double(legend_y - 4) + "\" stroke=\"" + stroke +
               "\" stroke-width=\"1.6\"/>\n";
        svg += "<text x=\"" + format_double(ml + plot_w + 40) + "\" y=\"" +
               format_double(legend_y) + "\" font-size=\"12\">" + s.label + "</text>\n";
        legend_y += 16;
    }
    svg += "</svg>\n";
    return svg;
}

std::string render(const sweep::SweepResult& result, Format format) {
    switch (format) {
        case Format::csv: return to_csv(result);
        case Format::json: return to_json(result);
        case Format::svg: return to_svg(result);
    }
    throw ConfigError("unknown output format");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace duris::io
