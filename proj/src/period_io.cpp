#include "theta3/torelli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace theta3
{

namespace
{

std::vector<std::string> tokens(const std::string &line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) {
        out.push_back(t);
    }
    return out;
}

double to_double(const std::string &t, int line)
{
    double v = 0;
    const auto *end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw PeriodParseError(line, "not a number: '" + t + "'");
    }
    return v;
}

} // namespace

PeriodMatrix parse_period_matrix(std::istream &in)
{
    std::string line;
    int lineno = 0;
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Complex>> data;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tk = tokens(line);
        if (tk.empty() || tk[0][0] == '#') {
            continue;
        }
        if (rows == 0) {
            if (tk.size() != 3 || tk[0] != "PERIOD" || !((tk[1] == "3" && tk[2] == "6") || (tk[1] == "6" && tk[2] == "3"))) {
                throw PeriodParseError(lineno, "expected header 'PERIOD 3 6'");
            }
            rows = tk[1] == "3" ? 3 : 6;
            cols = rows == 3 ? 6 : 3;
            continue;
        }
        if (static_cast<int>(data.size()) == rows) {
            throw PeriodParseError(lineno, "unexpected data after " + std::to_string(rows) + " rows");
        }
        if (static_cast<int>(tk.size()) != 2 * cols) {
            throw PeriodParseError(lineno, "expected " + std::to_string(cols) + " complex entries (" +
                                               std::to_string(2 * cols) + " numbers), found " +
                                               std::to_string(tk.size()) + " numbers");
        }
        std::vector<Complex> row;
        for (int k = 0; k < cols; ++k) {
            row.emplace_back(to_double(tk[2 * k], lineno), to_double(tk[2 * k + 1], lineno));
        }
        data.push_back(std::move(row));
    }
    if (rows == 0) {
        throw PeriodParseError(lineno, "missing header 'PERIOD 3 6'");
    }
    if (static_cast<int>(data.size()) != rows) {
        throw PeriodParseError(lineno, "expected " + std::to_string(rows) + " rows, found " +
                                           std::to_string(data.size()));
    }
    PeriodMatrix m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (rows == 3) {
                m.omega1(i, j) = data[i][j];
                m.omega2(i, j) = data[i][j + 3];
            } else {
                m.omega1(i, j) = data[j][i];
                m.omega2(i, j) = data[j + 3][i];
            }
        }
    }
    return m;
}

PeriodMatrix read_period_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open period file '" + path + "'");
    }
    return parse_period_matrix(in);
}

void write_period_matrix(std::ostream &out, const PeriodMatrix &m)
{
    std::ostringstream s;
    s << std::setprecision(17);
    s << "PERIOD 3 6\n";
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 6; ++j) {
            const Complex v = j < 3 ? m.omega1(i, j) : m.omega2(i, j - 3);
            s << (j ? " " : "") << v.real() << ' ' << v.imag();
        }
        s << '\n';
    }
    out << s.str();
}

} // namespace theta3
