#include "interp/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>

#include "interp/bounds.hpp"
#include "interp/errors.hpp"

namespace interp::plot {

namespace {

struct Point {
    double x = 0.0;
    double y = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    bool band = false;
};

struct Series {
    std::string label;
    std::vector<Point> points;
    bool dashed = false;
};

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22"};

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

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

class Axis {
public:
    Axis(double lo, double hi, bool log, double pix_lo, double pix_hi)
        : log_(log), pix_lo_(pix_lo), pix_hi_(pix_hi) {
        if (log_) {
            lo_ = std::floor(std::log10(lo));
            hi_ = std::ceil(std::log10(hi));
        } else {
            lo_ = std::min(0.0, lo);
            hi_ = hi;
        }
        if (hi_ <= lo_) hi_ = lo_ + 1.0;
    }

    double map(double v) const {
        const double t = ((log_ ? std::log10(v) : v) - lo_) / (hi_ - lo_);
        return pix_lo_ + t * (pix_hi_ - pix_lo_);
    }

    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log_) {
            for (double e = lo_; e <= hi_ + 1e-9; e += 1.0) out.push_back(std::pow(10.0, e));
        } else {
            for (int i = 0; i <= 5; ++i) out.push_back(lo_ + (hi_ - lo_) * i / 5.0);
        }
        return out;
    }

    bool log() const { return log_; }

private:
    bool log_;
    double lo_ = 0.0, hi_ = 1.0;
    double pix_lo_, pix_hi_;
};

struct Panel {
    std::string title;
    std::vector<Series> series;
    std::vector<Series> overlays;
};

bool plottable(const Point& p, bool logy) { return p.x > 0 && std::isfinite(p.y) && (!logy || p.y > 0); }

std::string render_panel(const Panel& panel, double ox, double width, double height) {
    const double left = ox + 70, right = ox + width - 170, top = 40, bottom = height - 50;
    double xmin = std::numeric_limits<double>::infinity(), xmax = 0.0;
    double ymin = std::numeric_limits<double>::infinity(), ymax = -std::numeric_limits<double>::infinity();
    bool all_positive = true;
    for (const auto* group : {&panel.series, &panel.overlays})
        for (const auto& s : *group)
            for (const auto& p : s.points) {
                if (!std::isfinite(p.y)) continue;
                xmin = std::min(xmin, p.x);
                xmax = std::max(xmax, p.x);
                if (p.y <= 0) all_positive = false;
            }
    const bool logy = all_positive;
    for (const auto* group : {&panel.series, &panel.overlays})
        for (const auto& s : *group)
            for (const auto& p : s.points) {
                if (!plottable(p, logy)) continue;
                ymin = std::min(ymin, p.band && (!logy || p.lo > 0) ? p.lo : p.y);
                ymax = std::max(ymax, p.band ? p.hi : p.y);
            }
    if (!std::isfinite(ymin)) ymin = ymax = 1.0;
    if (xmax <= xmin) xmax = xmin * 10.0;
    const Axis ax(xmin, xmax, xmin > 0, left, right);
    const Axis ay(ymin, ymax, logy, bottom, top);

    std::string svg;
    svg += "<text x=\"" + num((left + right) / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
           xml_escape(panel.title) + "</text>\n";
    svg += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(right - left) + "\" height=\"" +
           num(bottom - top) + "\" fill=\"none\" stroke=\"#000\"/>\n";
    for (double t : ax.ticks()) {
        const double px = ax.map(t);
        svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(px) + "\" y2=\"" + num(bottom + 5) +
               "\" stroke=\"#000\"/><text x=\"" + num(px) + "\" y=\"" + num(bottom + 18) +
               "\" text-anchor=\"middle\" font-size=\"10\">" + tick_label(t) + "</text>\n";
    }
    for (double t : ay.ticks()) {
        const double py = ay.map(t);
        svg += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(left) + "\" y2=\"" + num(py) +
               "\" stroke=\"#000\"/><text x=\"" + num(left - 8) + "\" y=\"" + num(py + 3) +
               "\" text-anchor=\"end\" font-size=\"10\">" + tick_label(t) + "</text>\n";
    }
    svg += "<text x=\"" + num((left + right) / 2) + "\" y=\"" + num(height - 12) +
           "\" text-anchor=\"middle\" font-size=\"12\">d" + (ax.log() ? " (log)" : "") + "</text>\n";
    svg += "<text x=\"" + num(ox + 16) + "\" y=\"" + num((top + bottom) / 2) +
           "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 " + num(ox + 16) + " " +
           num((top + bottom) / 2) + ")\">test MSE" + (ay.log() ? " (log)" : "") + "</text>\n";

    auto draw = [&](const Series& s, const std::string& color, std::size_t legend_row) {
        std::string path;
        for (const auto& p : s.points) {
            if (!plottable(p, logy)) continue;
            path += (path.empty() ? "M" : " L") + num(ax.map(p.x)) + "," + num(ay.map(p.y));
        }
        if (!path.empty())
            svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"" +
                   (s.dashed ? " stroke-dasharray=\"5,3\"" : "") + "/>\n";
        for (const auto& p : s.points) {
            if (!plottable(p, logy)) continue;
            const double px = ax.map(p.x), py = ay.map(p.y);
            if (p.band) {
                const double lo = logy && p.lo <= 0 ? ymin : p.lo;
                svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(ay.map(lo)) + "\" x2=\"" + num(px) + "\" y2=\"" +
                       num(ay.map(p.hi)) + "\" stroke=\"" + color + "\"/>\n";
            }
            if (!s.dashed)
                svg += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
        }
        const double ly = top + 14.0 * static_cast<double>(legend_row);
        svg += "<line x1=\"" + num(right + 10) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(right + 28) + "\" y2=\"" +
               num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"" + (s.dashed ? " stroke-dasharray=\"5,3\"" : "") +
               "/><text x=\"" + num(right + 32) + "\" y=\"" + num(ly + 3) + "\" font-size=\"10\">" +
               xml_escape(s.label) + "</text>\n";
    };
    std::size_t row = 0;
    for (std::size_t i = 0; i < panel.series.size(); ++i, ++row) draw(panel.series[i], kPalette[i % 10], row);
    for (const auto& s : panel.overlays) draw(s, "#444444", row++);
    return svg;
}

std::vector<Series> bound_overlays(const std::string& scenario, const std::vector<std::pair<Index, Index>>& sizes,
                                   double sigma2, double delta) {
    std::vector<Series> out;
    if (scenario == "sparse_gaussian_sweep" || scenario == "pure_noise_parsimony") {
        Series lower{"ideal lower bound (up to constants)", {}, true};
        Series upper{"ideal upper bound (up to constants)", {}, true};
        Series floor{"parsimonious floor (up to constants)", {}, true};
        for (const auto& [n, d] : sizes) {
            if (d < n) continue;
            bounds::BoundParams p;
            p.n = n;
            p.d = d;
            p.sigma2 = sigma2;
            p.delta = delta;
            const double x = static_cast<double>(d);
            lower.points.push_back({x, bounds::ideal_mse_lower_gaussian(p)});
            const auto up = bounds::ideal_mse_upper_gaussian(p);
            if (!up.flagged) upper.points.push_back({x, up.value});
            const auto fl = bounds::parsimonious_floor(p, 1.0);
            if (!fl.flagged) floor.points.push_back({x, fl.value});
        }
        out.push_back(lower);
        out.push_back(upper);
        if (scenario == "pure_noise_parsimony") out.push_back(floor);
    } else if (scenario == "fourier_converse") {
        Series dissipation{"noise dissipation n sigma^2 / d", {}, true};
        for (const auto& [n, d] : sizes)
            if (d >= n)
                dissipation.points.push_back({static_cast<double>(d),
                                              sigma2 * static_cast<double>(n) / static_cast<double>(d)});
        out.push_back(dissipation);
    }
    for (auto& s : out) std::erase_if(s.points, [](const Point& p) { return !(p.y > 0); });
    std::erase_if(out, [](const Series& s) { return s.points.empty(); });
    return out;
}

}  // namespace

Style parse_style(const std::string& name) {
    if (name == "median") return Style::Median;
    if (name == "mean") return Style::Mean;
    if (name == "errorbars") return Style::ErrorBars;
    if (name == "paired") return Style::Paired;
    throw InvalidArgument("unknown plot style '" + name + "' (median, mean, errorbars, paired)");
}

std::string to_string(Style style) {
    switch (style) {
    case Style::Median: return "median";
    case Style::Mean: return "mean";
    case Style::ErrorBars: return "errorbars";
    case Style::Paired: return "paired";
    }
    return "median";
}

std::string render_summary(const csv::Table& t, const PlotOptions& opts) {
    const std::size_t c_scenario = t.column("scenario"), c_variant = t.column("variant"),
                      c_estimator = t.column("estimator"), c_n = t.column("n"), c_d = t.column("d"),
                      c_sigma2 = t.column("sigma2"), c_median = t.column("test_mse_median"),
                      c_mean = t.column("test_mse_mean"), c_lo = t.column("test_mse_p075"),
                      c_hi = t.column("test_mse_p925");
    if (t.rows.empty()) throw InvalidArgument("summary has no rows; nothing to plot");

    const std::string scenario = t.rows.front().at(c_scenario);
    const double sigma2 = std::stod(t.rows.front().at(c_sigma2));
    std::map<std::string, Series> mean_series, median_series, band_series;
    std::vector<std::string> order;
    std::vector<std::pair<Index, Index>> sizes;
    for (const auto& row : t.rows) {
        const std::string label = row.at(c_variant) + " / " + row.at(c_estimator);
        if (!median_series.count(label)) order.push_back(label);
        const double d = std::stod(row.at(c_d));
        const auto med = csv::parse_optional_double(row.at(c_median));
        const auto mn = csv::parse_optional_double(row.at(c_mean));
        const auto lo = csv::parse_optional_double(row.at(c_lo));
        const auto hi = csv::parse_optional_double(row.at(c_hi));
        auto& m = median_series[label];
        auto& a = mean_series[label];
        auto& b = band_series[label];
        m.label = a.label = b.label = label;
        if (med) m.points.push_back({d, *med});
        if (mn) a.points.push_back({d, *mn});
        if (med && lo && hi) b.points.push_back({d, *med, *lo, *hi, true});
        sizes.emplace_back(std::stoll(row.at(c_n)), static_cast<Index>(d));
    }
    std::sort(sizes.begin(), sizes.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    const std::vector<Series> overlays =
        opts.bounds ? bound_overlays(scenario, sizes, sigma2, opts.delta) : std::vector<Series>{};

    auto collect = [&](std::map<std::string, Series>& m) {
        std::vector<Series> out;
        for (const auto& label : order) {
            Series s = m[label];
            std::sort(s.points.begin(), s.points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
            out.push_back(std::move(s));
        }
        return out;
    };

    std::vector<Panel> panels;
    switch (opts.style) {
    case Style::Median: panels.push_back({scenario + ": median", collect(median_series), overlays}); break;
    case Style::Mean: panels.push_back({scenario + ": mean", collect(mean_series), overlays}); break;
    case Style::ErrorBars:
        panels.push_back({scenario + ": median, 7.5-92.5% band", collect(band_series), overlays});
        break;
    case Style::Paired:
        panels.push_back({scenario + ": median", collect(median_series), overlays});
        panels.push_back({scenario + ": median, 7.5-92.5% band", collect(band_series), overlays});
        break;
    }
    const double panel_w = 640, height = 420;
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      num(panel_w * static_cast<double>(panels.size())) + "\" height=\"" + num(height) +
                      "\" font-family=\"sans-serif\">\n<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i)
        svg += render_panel(panels[i], panel_w * static_cast<double>(i), panel_w, height);
    svg += "</svg>\n";
    return svg;
}

std::string plot_summary_file(const std::string& summary_path, const PlotOptions& opts, const std::string& out_dir) {
    const csv::Table table = csv::read_file(summary_path);
    const std::string svg = render_summary(table, opts);
    const std::filesystem::path src(summary_path);
    const std::filesystem::path dir = out_dir.empty() ? src.parent_path() : std::filesystem::path(out_dir);
    if (!dir.empty()) std::filesystem::create_directories(dir);
    const std::filesystem::path out = dir / (src.stem().string() + "_" + to_string(opts.style) + ".svg");
    std::ofstream f(out, std::ios::binary);
    if (!f) throw InvalidArgument("cannot write '" + out.string() + "'");
    f << svg;
    return out.string();
}

}  // namespace interp::plot
