#include "bfr/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace bfr::svg {

namespace {

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void include(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    bool empty() const { return !(lo <= hi); }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// 1-2-5 step giving roughly `target` intervals over [lo, hi].
double nice_step(double lo, double hi, int target) {
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0}) {
        if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
}

class Axis {
public:
    Axis(Range data, bool log, double px_lo, double px_hi) : log_(log), px_lo_(px_lo), px_hi_(px_hi) {
        if (data.empty()) data = {0.0, 1.0};
        lo_ = log_ ? std::log10(data.lo) : data.lo;
        hi_ = log_ ? std::log10(data.hi) : data.hi;
        if (hi_ - lo_ <= 0.0) {
            lo_ -= 0.5;
            hi_ += 0.5;
        }
        if (log_) {
            lo_ = std::floor(lo_);
            hi_ = std::ceil(hi_);
        } else {
            const double pad = 0.04 * (hi_ - lo_);
            lo_ -= pad;
            hi_ += pad;
        }
    }

    bool valid(double v) const { return std::isfinite(v) && (!log_ || v > 0.0); }

    double map(double v) const {
        const double t = ((log_ ? std::log10(v) : v) - lo_) / (hi_ - lo_);
        return px_lo_ + t * (px_hi_ - px_lo_);
    }

    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log_) {
            const int span = static_cast<int>(hi_ - lo_);
            const int stride = std::max(1, span / 8);
            for (int e = static_cast<int>(lo_); e <= static_cast<int>(hi_); e += stride) {
                out.push_back(std::pow(10.0, e));
            }
            return out;
        }
        const double step = nice_step(lo_, hi_, 6);
        for (double v = std::ceil(lo_ / step) * step; v <= hi_ + 1e-9 * step; v += step) {
            out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
        }
        return out;
    }

private:
    bool log_;
    double px_lo_;
    double px_hi_;
    double lo_ = 0.0;
    double hi_ = 1.0;
};

}  // namespace

std::string escape_xml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

LinePlot::LinePlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

LinePlot& LinePlot::log_x(bool on) {
    log_x_ = on;
    return *this;
}

LinePlot& LinePlot::log_y(bool on) {
    log_y_ = on;
    return *this;
}

void LinePlot::add_series(Series s) {
    if (s.color.empty()) s.color = palette(series_.size());
    series_.push_back(std::move(s));
}

void LinePlot::add_marker(Marker m) {
    if (m.color.empty()) m.color = "#000000";
    markers_.push_back(std::move(m));
}

void LinePlot::add_hline(ReferenceLine line) { hlines_.push_back(std::move(line)); }
void LinePlot::add_vline(ReferenceLine line) { vlines_.push_back(std::move(line)); }

std::string LinePlot::palette(std::size_t i) {
    static constexpr std::array<const char*, 8> kColors = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                                           "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
    return kColors[i % kColors.size()];
}

std::string LinePlot::render(int width, int height) const {
    const double left = 70.0;
    const double right = width - 150.0;
    const double top = 40.0;
    const double bottom = height - 55.0;

    Range xr;
    Range yr;
    auto take = [&](const Point& p) {
        if (!log_x_ || p.x > 0.0) xr.include(p.x);
        if (!log_y_ || p.y > 0.0) yr.include(p.y);
    };
    for (const auto& s : series_) {
        for (const auto& p : s.points) take(p);
    }
    for (const auto& m : markers_) take(m.at);
    for (const auto& h : hlines_) {
        if (!log_y_ || h.value > 0.0) yr.include(h.value);
    }
    for (const auto& v : vlines_) {
        if (!log_x_ || v.value > 0.0) xr.include(v.value);
    }

    const Axis xa(xr, log_x_, left, right);
    const Axis ya(yr, log_y_, bottom, top);

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << num((left + right) / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
        << escape_xml(title_) << "</text>\n";

    // Axes and ticks.
    out << "<g stroke=\"#000000\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(right) << "\" y2=\""
        << num(bottom) << "\"/>\n";
    out << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left) << "\" y2=\""
        << num(bottom) << "\"/>\n";
    out << "</g>\n";
    for (double t : xa.ticks()) {
        const double px = xa.map(t);
        out << "<line x1=\"" << num(px) << "\" y1=\"" << num(bottom) << "\" x2=\"" << num(px) << "\" y2=\""
            << num(bottom + 5) << "\" stroke=\"#000000\"/>\n";
        out << "<text x=\"" << num(px) << "\" y=\"" << num(bottom + 18) << "\" text-anchor=\"middle\">"
            << tick_label(t) << "</text>\n";
    }
    for (double t : ya.ticks()) {
        const double py = ya.map(t);
        out << "<line x1=\"" << num(left - 5) << "\" y1=\"" << num(py) << "\" x2=\"" << num(left) << "\" y2=\""
            << num(py) << "\" stroke=\"#000000\"/>\n";
        out << "<text x=\"" << num(left - 8) << "\" y=\"" << num(py + 4) << "\" text-anchor=\"end\">"
            << tick_label(t) << "</text>\n";
    }
    out << "<text x=\"" << num((left + right) / 2) << "\" y=\"" << num(height - 15.0)
        << "\" text-anchor=\"middle\">" << escape_xml(x_label_) << "</text>\n";
    out << "<text x=\"18\" y=\"" << num((top + bottom) / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
        << num((top + bottom) / 2) << ")\">" << escape_xml(y_label_) << "</text>\n";

    for (const auto& h : hlines_) {
        if (!ya.valid(h.value)) continue;
        const double py = ya.map(h.value);
        out << "<line x1=\"" << num(left) << "\" y1=\"" << num(py) << "\" x2=\"" << num(right) << "\" y2=\""
            << num(py) << "\" stroke=\"#555555\" stroke-dasharray=\"6,4\"/>\n";
        if (!h.label.empty()) {
            out << "<text x=\"" << num(right - 4) << "\" y=\"" << num(py - 4) << "\" text-anchor=\"end\" fill=\"#555555\">"
                << escape_xml(h.label) << "</text>\n";
        }
    }
    for (const auto& v : vlines_) {
        if (!xa.valid(v.value)) continue;
        const double px = xa.map(v.value);
        out << "<line x1=\"" << num(px) << "\" y1=\"" << num(top) << "\" x2=\"" << num(px) << "\" y2=\""
            << num(bottom) << "\" stroke=\"#555555\" stroke-dasharray=\"6,4\"/>\n";
        if (!v.label.empty()) {
            out << "<text x=\"" << num(px + 4) << "\" y=\"" << num(top + 12) << "\" fill=\"#555555\">"
                << escape_xml(v.label) << "</text>\n";
        }
    }

    for (const auto& s : series_) {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& p : s.points) {
            if (!xa.valid(p.x) || !ya.valid(p.y)) continue;
            out << (first ? "" : " ") << num(xa.map(p.x)) << ',' << num(ya.map(p.y));
            first = false;
        }
        out << "\"/>\n";
    }
    for (const auto& m : markers_) {
        if (!xa.valid(m.at.x) || !ya.valid(m.at.y)) continue;
        const double px = xa.map(m.at.x);
        const double py = ya.map(m.at.y);
        out << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py) << "\" r=\"4\" fill=\"" << m.color << "\"/>\n";
        if (!m.label.empty()) {
            out << "<text x=\"" << num(px + 6) << "\" y=\"" << num(py - 6) << "\">" << escape_xml(m.label)
                << "</text>\n";
        }
    }

    // Legend.
    double ly = top + 10.0;
    for (const auto& s : series_) {
        if (s.label.empty()) continue;
        out << "<line x1=\"" << num(right + 15) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(right + 40) << "\" y2=\""
            << num(ly) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        out << "<text x=\"" << num(right + 46) << "\" y=\"" << num(ly + 4) << "\">" << escape_xml(s.label)
            << "</text>\n";
        ly += 18.0;
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace bfr::svg
