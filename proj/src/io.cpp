#include "qredux/io.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>

#include "qredux/errors.hpp"

namespace qredux::io {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string render_cell(const nlohmann::json& cell) {
    if (cell.is_string()) return cell.get<std::string>();
    if (cell.is_number_float()) return format_number(cell.get<double>());
    return cell.dump();
}

void put_u32_le(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 4);
}

void put_f64_le(std::ostream& os, double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    char b[8];
    for (int i = 0; i < 8; ++i)
        b[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
    os.write(b, 8);
}

std::uint32_t get_u32_le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (std::uint32_t{b[1]} << 8) |
           (std::uint32_t{b[2]} << 16) | (std::uint32_t{b[3]} << 24);
}

double get_f64_le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | b[i];
    return std::bit_cast<double>(bits);
}

} // namespace

void Table::add_row(std::vector<nlohmann::json> row) {
    if (row.size() != columns_.size())
        throw domain_error("Table: row width mismatch");
    rows_.push_back(std::move(row));
}

void Table::write_csv(std::ostream& os) const {
    for (std::size_t i = 0; i < columns_.size(); ++i)
        os << (i ? "," : "") << columns_[i];
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << render_cell(row[i]);
        os << '\n';
    }
}

nlohmann::json Table::json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows_) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[columns_[i]] = row[i];
        out.push_back(std::move(obj));
    }
    return out;
}

void write_matrix_csv(std::ostream& os, const Eigen::MatrixXd& m) {
    os << "I,J,value\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << i << ',' << j << ',' << format_number(m(i, j)) << '\n';
}

void write_matrix_binary(std::ostream& os, int n, double u,
                         const Eigen::MatrixXd& m) {
    os.write("ZETA", 4);
    put_u32_le(os, static_cast<std::uint32_t>(n));
    put_f64_le(os, u);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) put_f64_le(os, m(i, j));
}

ZetaFile read_matrix_binary(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "ZETA", 4) != 0)
        throw domain_error("read_matrix_binary: bad magic");
    ZetaFile f;
    f.n = static_cast<int>(get_u32_le(is));
    f.u = get_f64_le(is);
    if (!is || f.n < 1 || f.n > 12)
        throw domain_error("read_matrix_binary: implausible header");
    const Eigen::Index dim = Eigen::Index{1} << f.n;
    f.entries.resize(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) f.entries(i, j) = get_f64_le(is);
    if (!is) throw domain_error("read_matrix_binary: truncated payload");
    return f;
}

} // namespace qredux::io
