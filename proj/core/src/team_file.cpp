#include "euroqual/team_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string>
#include <vector>

namespace euroqual {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(std::string_view(line).substr(
        start, comma == std::string::npos ? std::string::npos
                                          : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

template <typename T>
T parse_number(const std::string& cell, int line_no, const char* column) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw TeamSetError("line " + std::to_string(line_no) + ": bad " + column +
                       " value '" + cell + "'");
  }
  return value;
}

}  // namespace

TeamSet read_team_table(std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) break;
  }
  const auto header = split(line);
  auto column = [&](std::string_view name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw TeamSetError("team table header lacks column '" +
                         std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t name_col = column("name");
  const std::size_t rank_col = column("uefa_rank");
  const std::size_t elo_col = column("elo");
  const std::size_t width = std::max({name_col, rank_col, elo_col}) + 1;

  std::vector<TeamRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() < width) {
      throw TeamSetError("line " + std::to_string(line_no) +
                         ": expected at least " + std::to_string(width) +
                         " columns");
    }
    records.push_back(
        TeamRecord{cells[name_col],
                   parse_number<int>(cells[rank_col], line_no, "uefa_rank"),
                   parse_number<double>(cells[elo_col], line_no, "elo")});
  }
  return build_team_set(records);
}

TeamSet load_team_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw TeamSetError("cannot open team file " + path.string());
  return read_team_table(in);
}

}  // namespace euroqual
