#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <string>

#include "hocc/error.hpp"
#include "hocc_cli/cli.hpp"

namespace hocc::cli {
namespace {

constexpr const char* kKeys[] = {"model", "order",   "snr-db", "points",      "methods", "samples",
                                 "seed",  "eps",     "weights", "delta-start", "out",     "threads"};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::size_t skip_space(const std::string& s, std::size_t i) {
  while (i < s.size() && is_space(s[i])) ++i;
  return i;
}

std::size_t trim_end(const std::string& s, std::size_t begin, std::size_t end) {
  while (end > begin && is_space(s[end - 1])) --end;
  return end;
}

double to_double(const std::string& text, std::size_t offset, const std::string& what) {
  const std::size_t b = skip_space(text, 0);
  const std::size_t e = trim_end(text, b, text.size());
  double v = 0.0;
  auto res = std::from_chars(text.data() + b, text.data() + e, v);
  if (b == e || res.ec != std::errc() || res.ptr != text.data() + e) {
    throw ParseError("invalid " + what + " '" + text + "'", 0, static_cast<int>(offset + b + 1));
  }
  return v;
}

}  // namespace

std::vector<ConfigEntry> read_config(std::istream& in) {
  std::vector<ConfigEntry> out;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    const std::string line = raw.substr(0, hash);
    const std::size_t b = skip_space(line, 0);
    if (b == line.size()) continue;
    const std::size_t eq = line.find('=', b);
    if (eq == std::string::npos) {
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value", line_no,
                       static_cast<int>(b + 1));
    }
    std::string key = line.substr(b, trim_end(line, b, eq) - b);
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty()) {
      throw ParseError("config line " + std::to_string(line_no) + ": empty key", line_no,
                       static_cast<int>(b + 1));
    }
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
      throw ParseError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'",
                       line_no, static_cast<int>(b + 1));
    }
    const std::size_t vb = skip_space(line, eq + 1);
    const std::size_t ve = trim_end(line, vb, line.size());
    if (vb == ve) {
      throw ParseError("config line " + std::to_string(line_no) + ": missing value for '" + key + "'",
                       line_no, static_cast<int>(eq + 2));
    }
    out.push_back({key, line.substr(vb, ve - vb), line_no});
  }
  return out;
}

std::pair<double, double> parse_snr_range(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParseError("snr range must be START:STOP, got '" + text + "'", 0,
                     static_cast<int>(text.size() + 1));
  }
  const double a = to_double(text.substr(0, colon), 0, "snr start");
  const double b = to_double(text.substr(colon + 1), colon + 1, "snr stop");
  return {a, b};
}

std::vector<std::string> parse_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::size_t b = skip_space(text, pos);
    const std::size_t e = trim_end(text, b, comma);
    if (b == e) throw ParseError("empty list item in '" + text + "'", 0, static_cast<int>(b + 1));
    out.push_back(text.substr(b, e - b));
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return out;
}

std::array<double, 4> parse_weights(const std::string& text) {
  std::array<double, 4> w{};
  std::size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    if (i < 3 && comma == text.size()) {
      throw ParseError("weights need 4 comma-separated values, got '" + text + "'", 0,
                       static_cast<int>(text.size() + 1));
    }
    w[i] = to_double(text.substr(pos, comma - pos), pos, "weight");
    pos = comma + 1;
    if (i == 3 && comma != text.size()) {
      throw ParseError("weights need exactly 4 values, got '" + text + "'", 0,
                       static_cast<int>(comma + 1));
    }
  }
  return w;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void RunConfig::validate() const {
  if (order < 1) throw DomainError("--order must be >= 1");
  if (points < 2) throw DomainError("--points must be >= 2");
  if (!(snr_start_db < snr_stop_db)) throw DomainError("--snr-db needs START < STOP");
  if (methods.empty()) throw DomainError("--methods must not be empty");
  if (samples < 10000) throw DomainError("--samples must be >= 10000");
  if (delta_start < 1) throw DomainError("--delta-start must be >= 1");
}

}  // namespace hocc::cli
