#include "eisenspec/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace eisenspec::emit {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) throw std::invalid_argument("Table: row width mismatch");
    rows.push_back(std::move(row));
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "svg") return Format::Svg;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + name + "' (expected csv, svg or json)");
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

namespace {

void require_rows(const Table& t) {
    if (t.rows.empty()) throw std::runtime_error("refusing to emit an empty table");
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    return std::get<std::string>(c);
}

double cell_number(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return *d;
    throw std::invalid_argument("SVG columns must be numeric");
}

}  // namespace

std::string to_csv(const Table& t) {
    require_rows(t);
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += csv_field(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(cell_text(row[i]));
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table& t) {
    require_rows(t);
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json rec = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (const auto* d = std::get_if<double>(&row[i])) {
                if (std::isfinite(*d)) {
                    rec[t.columns[i]] = *d;
                } else {
                    rec[t.columns[i]] = format_number(*d);
                }
            } else {
                rec[t.columns[i]] = std::get<std::string>(row[i]);
            }
        }
        arr.push_back(std::move(rec));
    }
    return arr.dump(2) + "\n";
}

std::string to_svg(const Table& t, std::size_t x_column, std::size_t y_column) {
    require_rows(t);
    if (x_column >= t.columns.size() || y_column >= t.columns.size()) {
        throw std::invalid_argument("SVG column index out of range");
    }
    std::vector<double> xs, ys;
    for (const auto& row : t.rows) {
        const double x = cell_number(row[x_column]);
        const double y = cell_number(row[y_column]);
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        xs.push_back(x);
        ys.push_back(y);
    }
    if (xs.empty()) throw std::runtime_error("SVG: no finite points to plot");
    auto [xmin_it, xmax_it] = std::minmax_element(xs.begin(), xs.end());
    auto [ymin_it, ymax_it] = std::minmax_element(ys.begin(), ys.end());
    double x0 = *xmin_it, x1 = *xmax_it, y0 = *ymin_it, y1 = *ymax_it;
    if (x1 == x0) { x0 -= 0.5; x1 += 0.5; }
    if (y1 == y0) { y0 -= 0.5; y1 += 0.5; }

    constexpr double W = 800, H = 600, M = 60;
    auto px = [&](double x) { return M + (x - x0) / (x1 - x0) * (W - 2 * M); };
    auto py = [&](double y) { return H - M - (y - y0) / (y1 - y0) * (H - 2 * M); };
    auto num = [](double v) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
        return std::string(buf, res.ptr);
    };

    std::string out =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" height=\"600\">\n";
    out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out += "<line x1=\"" + num(M) + "\" y1=\"" + num(H - M) + "\" x2=\"" + num(W - M) + "\" y2=\"" +
           num(H - M) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + num(M) + "\" y1=\"" + num(M) + "\" x2=\"" + num(M) + "\" y2=\"" + num(H - M) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"400\" y=\"590\" text-anchor=\"middle\" font-size=\"14\">" + t.columns[x_column] +
           "</text>\n";
    out += "<text x=\"15\" y=\"300\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 15 300)\">" +
           t.columns[y_column] + "</text>\n";
    out += "<text x=\"" + num(M) + "\" y=\"" + num(H - M + 18) + "\" font-size=\"11\">" + format_number(x0) +
           "</text>\n";
    out += "<text x=\"" + num(W - M) + "\" y=\"" + num(H - M + 18) +
           "\" font-size=\"11\" text-anchor=\"end\">" + format_number(x1) + "</text>\n";
    out += "<text x=\"" + num(M - 4) + "\" y=\"" + num(H - M) + "\" font-size=\"11\" text-anchor=\"end\">" +
           format_number(y0) + "</text>\n";
    out += "<text x=\"" + num(M - 4) + "\" y=\"" + num(M + 4) + "\" font-size=\"11\" text-anchor=\"end\">" +
           format_number(y1) + "</text>\n";
    out += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += num(px(xs[i])) + "," + num(py(ys[i]));
    }
    out += "\"/>\n</svg>\n";
    return out;
}

std::string render(const Table& t, Format f) {
    switch (f) {
        case Format::Csv: return to_csv(t);
        case Format::Svg: return to_svg(t);
        case Format::Json: return to_json(t);
    }
    throw std::invalid_argument("unknown format");
}

void write(const Table& t, Format f, const std::string& path) {
    const std::string body = render(t, f);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << body;
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace eisenspec::emit
