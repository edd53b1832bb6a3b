// Copyright 2026 The qlsi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qlsi/errors.hpp"
#include "qlsi_app/experiment.hpp"

namespace qlsi::app {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, r.ptr);
}

bool Report::pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.pass == "no" ? 1 : 0;
  return n;
}

std::string report_csv(const Report& report) {
  std::ostringstream out;
  out << "suite,cell,tag,value,margin,pass,value_bits\n";
  for (const auto& r : report.rows) {
    out << r.suite << ',' << '"' << r.cell << '"' << ',' << r.tag << ',' << format_double(r.value) << ','
        << format_double(r.margin) << ',' << r.pass << ',';
    if (r.value_bits) out << format_double(*r.value_bits);
    out << '\n';
  }
  return out.str();
}

nlohmann::json report_summary(const Report& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["tolerance"] = report.tolerance;
  j["rows"] = report.rows.size();
  j["failures"] = report.failures();
  j["pass"] = report.pass();
  if (!report.rows.empty()) {
    std::size_t worst = 0;
    bool found = false;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      if (report.rows[i].pass == "exploratory") continue;
      if (!found || report.rows[i].margin < report.rows[worst].margin) {
        worst = i;
        found = true;
      }
    }
    if (found) {
      const auto& r = report.rows[worst];
      j["worst"] = {{"cell", r.cell}, {"tag", r.tag}, {"margin", format_double(r.margin)}};
    }
  }
  j["witnesses"] = report.witnesses;
  return j;
}

std::string emit_plot_data(const Report& report) {
  if (report.rows.empty()) throw ParameterError("emit_plot_data: empty report");
  std::ostringstream out;
  out << "x,y,series\n";
  if (!report.plot.empty()) {
    for (const auto& p : report.plot) out << format_double(p.x) << ',' << format_double(p.y) << ',' << p.series << '\n';
  } else {
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      out << i << ',' << format_double(report.rows[i].margin) << ',' << report.rows[i].tag << '\n';
    }
  }
  return out.str();
}

void write_report(const Report& report, const std::string& prefix) {
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ResourceError("cannot write '" + path + "'");
    f << text;
  };
  write(prefix + ".csv", report_csv(report));
  write(prefix + ".json", report_summary(report).dump(2) + "\n");
  write(prefix + ".plot.csv", emit_plot_data(report));
}

}  // namespace qlsi::app
