#pragma once

#include <filesystem>
#include <istream>

#include "euroqual/model.hpp"

namespace euroqual {

/// Reads a comma-separated team table with a header line naming the columns
/// `name`, `uefa_rank` and `elo` (any order, extra columns ignored).
TeamSet read_team_table(std::istream& in);

TeamSet load_team_file(const std::filesystem::path& path);

}  // namespace euroqual
