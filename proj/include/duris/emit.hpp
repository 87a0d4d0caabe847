#pragma once

#include <string>

#include "duris/sweep.hpp"

namespace duris::io {

enum class Format { csv, json, svg };

Format format_from_string(const std::string& name);

// CSV schema: axis,axis_value,snr_db,metric,value,ci95 with shortest
// round-trip number formatting, so identical results serialize to
// identical bytes.
std::string to_csv(const sweep::SweepResult& result);

// Rows plus a metadata header (tool version, base config hash, master
// seed, trial count, printed-identity residual). No wall-clock fields:
// reruns of the same plan emit identical bytes.
std::string to_json(const sweep::SweepResult& result);

// One chart: log-scale ordinate for outage/BER metrics, linear for
// capacity, one polyline per (axis value, metric) series.
std::string to_svg(const sweep::SweepResult& result);

std::string render(const sweep::SweepResult& result, Format format);

// Inverse of to_csv, for round-trip checks and rerun verification.
sweep::SweepResult parse_csv(const std::string& text);

// Writes an artifact; failures surface as IoError with path context.
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace duris::io
