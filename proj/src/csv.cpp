#include "setrec/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace setrec {

namespace {

void write_whole_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

std::vector<double> parse_row(const std::string& line, const std::string& path) {
    std::vector<double> row;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        if (comma == std::string::npos) comma = line.size();
        const std::string field = line.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(field, &used);
            while (used < field.size() &&
                   (field[used] == ' ' || field[used] == '\t' || field[used] == '\r'))
                ++used;
            if (used != field.size()) throw std::invalid_argument(field);
            row.push_back(v);
        } catch (const std::exception&) {
            throw IoError("malformed numeric field '" + field + "' in " + path);
        }
        pos = comma + 1;
        if (comma == line.size()) break;
    }
    return row;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

PointCloud read_point_cloud(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::vector<Vector> points;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        points.push_back(parse_row(line, path));
    }
    if (points.empty()) throw IoError("no data rows in " + path);
    try {
        return PointCloud(std::move(points));
    } catch (const std::exception& e) {
        throw IoError(std::string("invalid point cloud in ") + path + ": " + e.what());
    }
}

void write_point_cloud(const std::string& path, const PointCloud& cloud) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const Vector& p = cloud[i];
        for (std::size_t d = 0; d < p.size(); ++d) {
            if (d) out << ',';
            out << format_double(p[d]);
        }
        out << '\n';
    }
    write_whole_file(path, out.str());
}

void write_body(const std::string& path, const ConvexBody& body) {
    std::ostringstream out;
    out << "direction_index,support_value\n";
    for (std::size_t j = 0; j < body.support().size(); ++j)
        out << j << ',' << format_double(body.value(j)) << '\n';
    write_whole_file(path, out.str());
}

void write_grid(const std::string& path, const DirectionGrid& grid) {
    std::ostringstream out;
    out << "direction_index";
    for (std::size_t d = 1; d <= grid.dim(); ++d) out << ",u" << d;
    out << '\n';
    for (std::size_t j = 0; j < grid.size(); ++j) {
        out << j;
        for (double c : grid.direction(j)) out << ',' << format_double(c);
        out << '\n';
    }
    write_whole_file(path, out.str());
}

void write_table(const std::string& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
    std::ostringstream out;
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (c) out << ',';
        out << header[c];
    }
    out << '\n';
    for (const std::vector<double>& row : rows) {
        if (row.size() != header.size())
            throw IoError("table row width does not match the header: " + path);
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << format_double(row[c]);
        }
        out << '\n';
    }
    write_whole_file(path, out.str());
}

}  // namespace setrec
