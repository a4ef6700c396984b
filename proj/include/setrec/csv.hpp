#pragma once

// CSV input and output. Point clouds are plain numeric rows; tables carry a
// header row. All numbers are written with 17 significant digits and files
// are written in one shot, never partially.

#include <stdexcept>
#include <string>
#include <vector>

#include "setrec/convexcal.hpp"
#include "setrec/geometry.hpp"

namespace setrec {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double v);

// Rows "x1,...,xm"; blank lines and lines starting with '#' are skipped.
PointCloud read_point_cloud(const std::string& path);
void write_point_cloud(const std::string& path, const PointCloud& cloud);

// Header "direction_index,support_value", one row per grid direction.
void write_body(const std::string& path, const ConvexBody& body);

// Header "direction_index,u1,...,um", one row per grid direction.
void write_grid(const std::string& path, const DirectionGrid& grid);

// Generic numeric table with the given column names.
void write_table(const std::string& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows);

}  // namespace setrec
