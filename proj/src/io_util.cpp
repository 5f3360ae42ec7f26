#include "ftre/io_util.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <stdexcept>
#include <vector>

namespace ftre {

double sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::strtod(buf, nullptr);
}

std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string humanize_seconds(double seconds) {
    struct Scale {
        double unit;
        const char* name;
    };
    static const Scale scales[] = {
        {365.25 * 86400.0, "years"},
        {86400.0, "days"},
        {3600.0, "h"},
        {60.0, "min"},
    };
    char buf[64];
    for (const Scale& s : scales) {
        if (seconds >= s.unit) {
            std::snprintf(buf, sizeof(buf), "%.3g %s", seconds / s.unit, s.name);
            return buf;
        }
    }
    std::snprintf(buf, sizeof(buf), "%.3g s", seconds);
    return buf;
}

SymplecticMat parse_matrix(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::vector<int> bits;
        for (char c : line) {
            if (c == '0')
                bits.push_back(0);
            else if (c == '1')
                bits.push_back(1);
            else if (c == ' ' || c == '\t' || c == ',' || c == '\r')
                continue;
            else
                throw std::invalid_argument(std::string("unexpected character '") + c +
                                            "' in matrix file");
        }
        if (!bits.empty())
            rows.push_back(std::move(bits));
    }
    if (rows.empty() || rows.size() % 2 != 0)
        throw std::invalid_argument("matrix file must contain 2n non-empty rows");
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw std::invalid_argument("matrix file rows must be square (2n x 2n)");
    std::vector<PauliVec> prows;
    prows.reserve(rows.size());
    for (const auto& r : rows)
        prows.push_back(PauliVec::from_bits(r));
    return SymplecticMat::from_rows(std::move(prows));
}

std::string matrix_to_text(const SymplecticMat& m) {
    std::string out;
    std::size_t dim = 2 * m.qubits();
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            out.push_back(m.entry(i, j) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

} // namespace ftre
