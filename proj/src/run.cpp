#include "abchain/run.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "abchain/errors.hpp"
#include "abchain/parallel.hpp"

namespace abchain {

namespace {

using nlohmann::json;

std::string format_number(Real v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", v);
  return buffer;
}

std::vector<Real> parse_piece(const std::string& piece) {
  std::size_t colons = 0;
  for (const char ch : piece) colons += (ch == ':');
  if (colons == 0) {
    std::size_t used = 0;
    const Real v = std::stod(piece, &used);
    if (used != piece.size()) throw InvalidInputError("bad grid value: " + piece);
    return {v};
  }
  if (colons != 2) throw InvalidInputError("grid must be start:stop:step, got " + piece);
  std::istringstream in(piece);
  std::string a, b, c;
  std::getline(in, a, ':');
  std::getline(in, b, ':');
  std::getline(in, c, ':');
  const Real start = std::stod(a), stop = std::stod(b), step = std::stod(c);
  if (!(step > 0.0) || stop < start) {
    throw InvalidInputError("grid needs step > 0 and stop >= start: " + piece);
  }
  std::vector<Real> grid;
  for (int i = 0;; ++i) {
    const Real v = start + step * i;
    if (v > stop + 0.5 * step) break;
    grid.push_back(v);
  }
  return grid;
}

ChainSpec chain_from_config(const RunConfig& config, Real ratio) {
  if (config.delta > 0.0 && config.big_delta > 0.0) {
    return build_chain(config.n_sites, config.delta, config.big_delta);
  }
  return chain_for_ratio(config.n_sites, ratio);
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);  // LF line ends everywhere
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "," : "") << row[i];
    }
    out << '\n';
  }
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

json config_json(const RunConfig& config) {
  json j;
  j["command"] = config.command;
  j["n_sites"] = config.n_sites;
  if (config.delta > 0.0 && config.big_delta > 0.0) {
    j["delta"] = config.delta;
    j["big_delta"] = config.big_delta;
  } else {
    j["ratio"] = config.ratio;
  }
  j["protocol"] = to_string(config.protocol);
  j["kind"] = to_string(config.kind);
  j["times"] = config.times;
  j["ratios"] = config.ratios;
  j["levels"] = config.levels;
  j["delays"] = config.delays;
  j["n_realizations"] = config.n_realizations;
  j["base_seed"] = config.base_seed;
  j["threads"] = config.threads;
  j["peak_window_lo"] = config.peak.window_lo;
  j["peak_window_hi"] = config.peak.window_hi;
  j["peak_coarse_points"] = config.peak.coarse_points;
  j["peak_time_rel_tol"] = config.peak.time_rel_tol;
  return j;
}

}  // namespace

std::vector<Real> parse_grid(const std::string& text) {
  std::vector<Real> grid;
  std::istringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    const auto values = parse_piece(piece);
    grid.insert(grid.end(), values.begin(), values.end());
  }
  if (grid.empty()) throw InvalidInputError("empty grid: " + text);
  return grid;
}

std::string run(const RunConfig& config) {
  const auto t_start = std::chrono::steady_clock::now();

  CsvTable table;
  json extras;

  if (config.command == "trace") {
    const ChainSpec chain = chain_from_config(config, config.ratio);
    std::vector<Real> times = config.times;
    if (times.empty()) {
      const Real hi =
          config.peak.window_hi > 0.0 ? config.peak.window_hi : default_window_hi(chain);
      times.reserve(2001);
      for (int i = 0; i <= 2000; ++i) times.push_back(hi * i / 2000.0);
    }
    table.header = {"t", "eof"};
    for (const auto& [t, value] : eof_trace(chain, config.protocol, times)) {
      table.rows.push_back({format_number(t), format_number(value)});
    }
  } else if (config.command == "ratio-sweep") {
    std::vector<Real> ratios = config.ratios;
    if (ratios.empty()) ratios = parse_grid("0.05:0.6:0.001");
    const auto results =
        ratio_sweep(config.n_sites, config.protocol, ratios, config.peak, config.threads);
    table.header = {"ratio", "t_E", "eof"};
    for (const auto& r : results) {
      table.rows.push_back(
          {format_number(r.ratio), format_number(r.t_entangle), format_number(r.eof_at_peak)});
    }
    json maxima = json::array();
    for (const auto& m : local_peak_maxima(results)) {
      maxima.push_back({{"ratio", m.ratio}, {"eof", m.eof_at_peak}});
    }
    extras["local_maxima"] = maxima;
  } else if (config.command == "disorder-sweep") {
    const ChainSpec chain = chain_from_config(config, config.ratio);
    std::vector<Real> levels = config.levels;
    if (levels.empty()) levels = parse_grid("0:1:0.05");
    const PeakResult clean = find_entangling_time(chain, config.protocol, config.peak);
    const auto records =
        disorder_sweep(chain, config.protocol, config.kind, levels, config.n_realizations,
                       config.base_seed, config.peak, config.threads, clean);
    table.header = {"E", "percent_of_delta", "mean_eof", "std_eof", "n"};
    for (const auto& r : records) {
      table.rows.push_back({format_number(r.strength), format_number(100.0 * r.strength / 2.0),
                            format_number(r.mean_eof), format_number(r.std_eof),
                            std::to_string(r.n_realizations)});
    }
    extras["t_entangle"] = clean.t_entangle;
    extras["clean_eof"] = clean.eof_at_peak;
  } else if (config.command == "delay-sweep") {
    const ChainSpec chain = chain_from_config(config, config.ratio);
    std::vector<Real> delays = config.delays;
    if (delays.empty()) delays = parse_grid("0:0.1:0.005");
    const PeakResult clean = find_entangling_time(chain, config.protocol, config.peak);
    const auto results = delay_sweep(chain, config.protocol, delays, config.peak,
                                     config.threads, clean);
    table.header = {"D", "eof"};
    for (const auto& [d, value] : results) {
      table.rows.push_back({format_number(d), format_number(value)});
    }
    extras["t_entangle"] = clean.t_entangle;
    extras["clean_eof"] = clean.eof_at_peak;
  } else {
    throw InvalidInputError("unknown command: " + config.command);
  }

  const std::filesystem::path csv_path =
      config.output.empty() ? std::filesystem::path(config.command + ".csv")
                            : std::filesystem::path(config.output);
  write_csv(csv_path, table);

  const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start);
  json manifest;
  manifest["version"] = kVersion;
  manifest["config"] = config_json(config);
  manifest["resolved_threads"] = resolve_thread_count(config.threads);
  manifest["wall_time_seconds"] = elapsed.count();
  manifest["csv"] = csv_path.string();
  if (!extras.is_null()) manifest["results"] = extras;

  const std::filesystem::path manifest_path = csv_path.string() + ".manifest.json";
  std::ofstream out(manifest_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + manifest_path.string() + " for writing");
  out << manifest.dump(2) << '\n';
  if (!out.flush()) throw IoError("failed writing " + manifest_path.string());

  return csv_path.string();
}

}  // namespace abchain
