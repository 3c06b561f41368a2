#ifndef QUATDIFF_OUTPUT_HPP
#define QUATDIFF_OUTPUT_HPP

#include <string>
#include <vector>

namespace qd {

// locale-independent shortest round-trip formatting
std::string format_double(double v);

// CSV with '#'-prefixed comment header lines
struct CsvWriter {
    explicit CsvWriter(const std::string& path);
    ~CsvWriter();
    void comment(const std::string& line);
    void columns(const std::vector<std::string>& names);
    void row(const std::vector<double>& values, const std::string& trailing = "");

  private:
    struct Impl;
    Impl* impl_;
};

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

// minimal SVG 1.1 polyline plot with axes, ticks and labels
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& xlabel, const std::string& ylabel,
                    const std::vector<PlotSeries>& series, bool log_y = false);

}  // namespace qd

#endif
