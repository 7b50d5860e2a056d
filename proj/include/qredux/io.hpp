#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace qredux::io {

/// Fixed 17-significant-digit decimal rendering ('.' separator), enough to
/// round-trip any binary64 value; all CSV output goes through this.
std::string format_number(double v);

/// A uniform table that renders as CSV (LF line endings) or as a JSON
/// array of row objects carrying the same numbers.
class Table {
public:
    explicit Table(std::vector<std::string> columns)
        : columns_(std::move(columns)) {}

    void add_row(std::vector<nlohmann::json> row);
    void write_csv(std::ostream& os) const;
    nlohmann::json json() const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<nlohmann::json>> rows_;
};

/// CSV dump of a dense matrix in mask order: header "I,J,value", row-major.
void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m);

/// Raw binary layout: 16-byte header (magic "ZETA", uint32 n, binary64 u,
/// both little-endian), then the 4^n entries row-major as little-endian
/// binary64.
void write_matrix_binary(std::ostream& os, int n, double u,
                         const Eigen::MatrixXd& m);

struct ZetaFile {
    int n = 0;
    double u = 0.0;
    Eigen::MatrixXd entries;
};

ZetaFile read_matrix_binary(std::istream& is);

} // namespace qredux::io
