#include "quatdiff/output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "quatdiff/errors.hpp"

namespace qd {

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct CsvWriter::Impl {
    std::ofstream out;
    std::size_t ncols = 0;
};

CsvWriter::CsvWriter(const std::string& path) : impl_(new Impl) {
    impl_->out.open(path);
    if (!impl_->out) {
        delete impl_;
        throw Error("cannot open output file '" + path + "'");
    }
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::comment(const std::string& line) { impl_->out << "# " << line << "\n"; }

void CsvWriter::columns(const std::vector<std::string>& names) {
    impl_->ncols = names.size();
    for (std::size_t i = 0; i < names.size(); ++i)
        impl_->out << names[i] << (i + 1 < names.size() ? "," : "");
    impl_->out << "\n";
}

void CsvWriter::row(const std::vector<double>& values, const std::string& trailing) {
    for (std::size_t i = 0; i < values.size(); ++i)
        impl_->out << format_double(values[i])
                   << (i + 1 < values.size() || !trailing.empty() ? "," : "");
    if (!trailing.empty()) impl_->out << trailing;
    impl_->out << "\n";
}

namespace {

constexpr int width = 720, height = 480;
constexpr int ml = 70, mr = 20, mt = 40, mb = 50;

const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string fmt_tick(double v) {
    std::ostringstream os;
    os.precision(4);
    os << v;
    return os.str();
}

}  // namespace

void write_svg_plot(const std::string& path, const std::string& title,
                    const std::string& xlabel, const std::string& ylabel,
                    const std::vector<PlotSeries>& series, bool log_y) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open output file '" + path + "'");

    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto ty = [&](double y) { return log_y ? std::log10(std::max(std::abs(y), 1e-300)) : y; };
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, ty(s.y[i]));
            ymax = std::max(ymax, ty(s.y[i]));
        }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (width - ml - mr); };
    auto py = [&](double y) { return height - mb - (ty(y) - ymin) / (ymax - ymin) * (height - mt - mb); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"16\">"
        << title << "</text>\n";

    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
        << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
        << height - mb << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        double xv = xmin + (xmax - xmin) * i / 5.0;
        double yv = ymin + (ymax - ymin) * i / 5.0;
        double xp = px(xv);
        double yp = height - mb - (yv - ymin) / (ymax - ymin) * (height - mt - mb);
        out << "<line x1=\"" << xp << "\" y1=\"" << height - mb << "\" x2=\"" << xp << "\" y2=\""
            << height - mb + 5 << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << xp << "\" y=\"" << height - mb + 18
            << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt_tick(xv) << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << yp << "\" x2=\"" << ml << "\" y2=\"" << yp
            << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << yp + 4
            << "\" text-anchor=\"end\" font-size=\"11\">"
            << (log_y ? "1e" + fmt_tick(yv) : fmt_tick(yv)) << "</text>\n";
    }
    out << "<text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\" font-size=\"13\">" << xlabel << "</text>\n";
    out << "<text x=\"16\" y=\"" << (mt + height - mb) / 2
        << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
        << (mt + height - mb) / 2 << ")\">" << ylabel << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        out << "<polyline fill=\"none\" stroke=\"" << palette[si % 5]
            << "\" stroke-width=\"1.3\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            out << px(s.x[i]) << "," << py(s.y[i]) << " ";
        out << "\"/>\n";
        out << "<text x=\"" << width - mr - 8 << "\" y=\"" << mt + 16 + 16 * si
            << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << palette[si % 5] << "\">"
            << s.name << "</text>\n";
    }
    out << "</svg>\n";
}

}  // namespace qd
