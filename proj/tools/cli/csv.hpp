#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace casimir::cli {

/// Scientific notation, 12 significant digits.
std::string format_sci(double v);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Comma separated, header first, LF line endings.
void write_csv(std::ostream& out, const Table& table);

}  // namespace casimir::cli
