#pragma once

#include "cpsurgery/io.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace cpsurgery {

struct CellDiff {
    std::string row;
    std::string cell;
    std::string expected;
    std::string actual;
};

struct TableReport {
    int table = 0;
    std::size_t cells = 0;  // cells compared
    std::vector<CellDiff> diffs;
    std::vector<std::string> notes;
    std::string latex;  // regenerated table body

    bool pass() const { return diffs.empty(); }
};

std::vector<int> available_tables();

// CPSURGERY_GOLDEN_DIR if set, else the directory baked in at build time.
std::filesystem::path default_golden_dir();

json load_golden(int table, const std::filesystem::path& dir);

TableReport reproduce_table(int table, const json& golden);
TableReport reproduce_table(int table, const std::filesystem::path& dir);

std::string render_reproduce(const std::vector<TableReport>& reports, Format f);

}  // namespace cpsurgery
