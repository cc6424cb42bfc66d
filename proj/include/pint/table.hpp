#pragma once

#include <string>
#include <vector>

namespace pint {

/// Column-labelled string table; the single exchange format the CLI emits.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const Table&) const = default;
};

std::string to_csv(const Table& t);
Table from_csv(const std::string& text);
std::string to_markdown(const Table& t);

/// Format with `sig` significant digits (printf %g semantics).
std::string format_sig(double v, int sig);

} // namespace pint
