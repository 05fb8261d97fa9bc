#include "cli/csv.hpp"

#include <cstdio>

namespace casimir::cli {

std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.11e", v);
    return buf;
}

void write_csv(std::ostream& out, const Table& table) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    line(table.header);
    for (const auto& r : table.rows) line(r);
}

}  // namespace casimir::cli
