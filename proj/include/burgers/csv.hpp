#pragma once

// CSV emission and parsing for every report type. Each file starts with one
// '#'-prefixed metadata line, followed by a header row and data rows. Numbers
// use the shortest round-trip representation, so parsing a file back yields
// bit-identical doubles.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "burgers/levy.hpp"
#include "burgers/regen.hpp"
#include "burgers/shocks.hpp"
#include "burgers/solver.hpp"

namespace burgers::io {

std::string format_double(double v);
double parse_double(std::string_view text);

struct CsvTable {
  std::string meta;  // without the leading '#'
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& file);

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, std::string_view text);

class CsvWriter {
 public:
  CsvWriter(std::string_view meta, std::vector<std::string> header);

  CsvWriter& row(const std::vector<std::string>& cells);
  const std::string& str() const noexcept { return out_; }

 private:
  std::size_t width_;
  std::string out_;
};

std::string path_csv(const LevyPath& path, std::string_view meta);
std::string jumps_csv(const LevyPath& path, std::string_view meta);
// Rebuilds a path (grid, values, optional jumps) from the two files.
LevyPath read_path(const std::filesystem::path& path_file,
                   const std::optional<std::filesystem::path>& jumps_file = std::nullopt);
std::vector<TrackedJump> parse_jumps(const CsvTable& table);

std::string vertices_csv(const BurgersSolution& sol, std::string_view meta);
std::string eulerian_csv(const BurgersSolution& sol, std::string_view meta);

std::string shocks_csv(const ShockReport& report, std::string_view meta);
std::vector<Shock> parse_shocks(const CsvTable& table);
std::string zero_set_csv(const ShockReport& report, std::string_view meta);
std::string rarefactions_csv(const ShockReport& report, std::string_view meta);
std::vector<Rarefaction> parse_rarefactions(const CsvTable& table);

std::string replicates_csv(const std::vector<IndependenceReplicate>& table, std::string_view meta);
std::vector<IndependenceReplicate> parse_replicates(const CsvTable& table);

std::string refinement_csv(const std::vector<RefinementRow>& rows, std::string_view meta);
std::vector<RefinementRow> parse_refinement(const CsvTable& table);

std::string integral_csv(const std::vector<IntegralRow>& rows, std::string_view meta);
std::vector<IntegralRow> parse_integral(const CsvTable& table);

}  // namespace burgers::io
