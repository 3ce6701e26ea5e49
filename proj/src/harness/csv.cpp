#include "ffscale/harness/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace ffscale::harness {

std::string format_decimal(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("format_decimal: non-finite value");
  if (x == 0.0) return "0";
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(x))));
  const int precision = std::max(0, 14 - exponent);
  char buf[512];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, precision);
  if (ec != std::errc{}) throw std::runtime_error("format_decimal: buffer too small");
  return std::string(buf, end);
}

std::string to_csv(const FigureDataset& ds) {
  ds.validate();
  std::string out;
  for (std::size_t c = 0; c < ds.names.size(); ++c) {
    if (c) out += ',';
    out += ds.names[c];
  }
  out += '\n';
  for (std::size_t r = 0; r < ds.rows(); ++r) {
    for (std::size_t c = 0; c < ds.columns.size(); ++c) {
      if (c) out += ',';
      out += format_decimal(ds.columns[c][r]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const FigureDataset& ds, const std::string& path) {
  const std::string text = to_csv(ds);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace ffscale::harness
