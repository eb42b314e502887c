#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bfr::svg {

struct Point {
    double x;
    double y;
};

struct Series {
    std::string label;
    std::vector<Point> points;
    std::string color;
};

struct Marker {
    Point at;
    std::string label;
    std::string color;
};

struct ReferenceLine {
    double value;
    std::string label;
};

/// Minimal line chart: axes with ticks, one polyline per series, circle
/// markers, dashed horizontal/vertical reference lines. Log axes drop
/// nonpositive coordinates.
class LinePlot {
public:
    LinePlot(std::string title, std::string x_label, std::string y_label);

    LinePlot& log_x(bool on = true);
    LinePlot& log_y(bool on = true);

    void add_series(Series s);
    void add_marker(Marker m);
    void add_hline(ReferenceLine line);
    void add_vline(ReferenceLine line);

    std::string render(int width = 720, int height = 480) const;

    /// Default colour for the i-th series.
    static std::string palette(std::size_t i);

private:
    std::string title_;
    std::string x_label_;
    std::string y_label_;
    bool log_x_ = false;
    bool log_y_ = false;
    std::vector<Series> series_;
    std::vector<Marker> markers_;
    std::vector<ReferenceLine> hlines_;
    std::vector<ReferenceLine> vlines_;
};

std::string escape_xml(const std::string& text);

}  // namespace bfr::svg
