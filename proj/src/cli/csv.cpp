#include "burgers/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "burgers/errors.hpp"

namespace burgers::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

std::string fmt(std::size_t v) { return std::to_string(v); }
std::string fmt(double v) { return format_double(v); }
std::string fmt_bool(bool v) { return v ? "1" : "0"; }

std::size_t parse_size(std::string_view text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::input, "not an unsigned integer: '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::input, "not an unsigned integer: '" + std::string(text) + "'");
  }
  return v;
}

bool parse_bool(std::string_view text) {
  if (text == "1" || text == "true") return true;
  if (text == "0" || text == "false") return false;
  fail(ErrorKind::input, "not a boolean: '" + std::string(text) + "'");
}

void expect_header(const CsvTable& table, const std::vector<std::string>& header) {
  if (table.header != header) fail(ErrorKind::input, "unexpected CSV header");
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  // from_chars rejects a leading '+'
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::input, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::size_t CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  fail(ErrorKind::input, "missing CSV column '" + std::string(name) + "'");
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (!have_header && table.meta.empty()) table.meta = std::string(trim(line.substr(1)));
      continue;
    }
    auto cells = split(line);
    if (!have_header) {
      table.header = std::move(cells);
      have_header = true;
    } else {
      if (cells.size() != table.header.size()) {
        fail(ErrorKind::input, "CSV row has " + std::to_string(cells.size()) + " cells, header has " +
                                   std::to_string(table.header.size()));
      }
      table.rows.push_back(std::move(cells));
    }
  }
  if (!have_header) fail(ErrorKind::input, "CSV has no header row");
  return table;
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& file, std::string_view text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::io, "cannot write " + file.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorKind::io, "write failed for " + file.string());
}

CsvTable read_csv(const std::filesystem::path& file) { return parse_csv(read_text_file(file)); }

CsvWriter::CsvWriter(std::string_view meta, std::vector<std::string> header) : width_(header.size()) {
  out_ += "# ";
  out_ += meta;
  out_ += '\n';
  row(header);
}

CsvWriter& CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) fail(ErrorKind::input, "CSV row width mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
  return *this;
}

// ---------------------------------------------------------------------------
// Paths

std::string path_csv(const LevyPath& path, std::string_view meta) {
  CsvWriter w(meta, {"y", "psi"});
  for (std::size_t i = 0; i < path.size(); ++i) w.row({fmt(path.point(i)), fmt(path.value(i))});
  return w.str();
}

std::string jumps_csv(const LevyPath& path, std::string_view meta) {
  CsvWriter w(meta, {"index", "y", "size"});
  for (const auto& j : path.tracked_jumps()) w.row({fmt(j.index), fmt(path.point(j.index)), fmt(j.size)});
  return w.str();
}

std::vector<TrackedJump> parse_jumps(const CsvTable& table) {
  expect_header(table, {"index", "y", "size"});
  std::vector<TrackedJump> jumps;
  for (const auto& r : table.rows) jumps.push_back({parse_size(r[0]), parse_double(r[2])});
  return jumps;
}

LevyPath read_path(const std::filesystem::path& path_file,
                   const std::optional<std::filesystem::path>& jumps_file) {
  const CsvTable table = read_csv(path_file);
  expect_header(table, {"y", "psi"});
  const std::size_t n = table.rows.size();
  if (n < 3) fail(ErrorKind::input, "path file needs at least 3 rows");
  std::vector<double> ys(n), values(n);
  for (std::size_t i = 0; i < n; ++i) {
    ys[i] = parse_double(table.rows[i][0]);
    values[i] = parse_double(table.rows[i][1]);
  }
  const GridSpec grid(ys.front(), ys.back(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(ys[i] - grid.point(i)) > 1e-9 * grid.step()) {
      fail(ErrorKind::input, "path file y column is not a uniform grid containing 0 (row " +
                                 std::to_string(i) + ")");
    }
  }
  std::vector<TrackedJump> jumps;
  if (jumps_file) jumps = parse_jumps(read_csv(*jumps_file));
  return LevyPath(grid, std::move(values), std::move(jumps));
}

// ---------------------------------------------------------------------------
// Solution

std::string vertices_csv(const BurgersSolution& sol, std::string_view meta) {
  CsvWriter w(meta, {"y", "C", "s_left", "s_right", "x_lo", "x_hi"});
  const auto& cm = sol.majorant();
  for (std::size_t k = 0; k < sol.vertex_count(); ++k) {
    w.row({fmt(cm.ys()[k]), fmt(cm.values()[k]), fmt(cm.left_slope(k)), fmt(cm.right_slope(k)),
           fmt(sol.x_lo(k)), fmt(sol.x_hi(k))});
  }
  return w.str();
}

std::string eulerian_csv(const BurgersSolution& sol, std::string_view meta) {
  CsvWriter w(meta, {"x", "a", "u"});
  for (double x : sol.path().points()) {
    const auto p = evaluate_solution(sol, x);
    w.row({fmt(x), fmt(p.a), fmt(p.u)});
  }
  return w.str();
}

// ---------------------------------------------------------------------------
// Shocks

std::string shocks_csv(const ShockReport& report, std::string_view meta) {
  CsvWriter w(meta, {"x", "a_minus", "a_plus", "mass", "velocity", "boundary_affected"});
  for (const auto& s : report.shocks) {
    w.row({fmt(s.x), fmt(s.a_minus), fmt(s.a_plus), fmt(s.mass), fmt(s.velocity),
           fmt_bool(s.boundary_affected)});
  }
  return w.str();
}

std::vector<Shock> parse_shocks(const CsvTable& table) {
  expect_header(table, {"x", "a_minus", "a_plus", "mass", "velocity", "boundary_affected"});
  std::vector<Shock> out;
  for (const auto& r : table.rows) {
    out.push_back({parse_double(r[0]), parse_double(r[1]), parse_double(r[2]), parse_double(r[3]),
                   parse_double(r[4]), parse_bool(r[5]), 0});
  }
  return out;
}

std::string zero_set_csv(const ShockReport& report, std::string_view meta) {
  CsvWriter w(meta, {"y"});
  for (double y : report.zero_set) w.row({fmt(y)});
  return w.str();
}

std::string rarefactions_csv(const ShockReport& report, std::string_view meta) {
  CsvWriter w(meta, {"y", "x_lo", "x_hi", "length"});
  for (const auto& r : report.rarefactions) w.row({fmt(r.y), fmt(r.x_lo), fmt(r.x_hi), fmt(r.length)});
  return w.str();
}

std::vector<Rarefaction> parse_rarefactions(const CsvTable& table) {
  expect_header(table, {"y", "x_lo", "x_hi", "length"});
  std::vector<Rarefaction> out;
  for (const auto& r : table.rows) {
    out.push_back({parse_double(r[0]), parse_double(r[1]), parse_double(r[2]), parse_double(r[3]), 0});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Regeneration replicates

namespace {
const std::vector<std::string> kReplicateHeader = {
    "replicate",   "seed",     "dropped",     "drop_reason", "T",          "pre_mean_u",
    "pre_min_u",   "pre_shocks", "post_mean_u", "post_min_u", "post_shocks"};
}

std::string replicates_csv(const std::vector<IndependenceReplicate>& table, std::string_view meta) {
  CsvWriter w(meta, kReplicateHeader);
  for (const auto& r : table) {
    w.row({fmt(r.replicate), std::to_string(r.seed), fmt_bool(r.dropped),
           r.drop_reason.empty() ? "-" : r.drop_reason, fmt(r.T), fmt(r.pre.mean_u),
           fmt(r.pre.min_u), fmt(r.pre.shock_count), fmt(r.post.mean_u), fmt(r.post.min_u),
           fmt(r.post.shock_count)});
  }
  return w.str();
}

std::vector<IndependenceReplicate> parse_replicates(const CsvTable& table) {
  expect_header(table, kReplicateHeader);
  std::vector<IndependenceReplicate> out;
  for (const auto& r : table.rows) {
    IndependenceReplicate rep;
    rep.replicate = parse_size(r[0]);
    rep.seed = parse_u64(r[1]);
    rep.dropped = parse_bool(r[2]);
    rep.drop_reason = r[3] == "-" ? "" : r[3];
    rep.T = parse_double(r[4]);
    rep.pre = {parse_double(r[5]), parse_double(r[6]), parse_double(r[7])};
    rep.post = {parse_double(r[8]), parse_double(r[9]), parse_double(r[10])};
    out.push_back(rep);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Refinement and integral tables

std::string refinement_csv(const std::vector<RefinementRow>& rows, std::string_view meta) {
  CsvWriter w(meta, {"h", "median_contacts", "median_zero_set", "median_max_rarefaction",
                     "contact_fraction", "replicates", "failures"});
  for (const auto& r : rows) {
    w.row({fmt(r.h), fmt(r.median_contacts), fmt(r.median_zero_set), fmt(r.median_max_rarefaction),
           fmt(r.contact_fraction), fmt(r.replicates), fmt(r.failures)});
  }
  return w.str();
}

std::vector<RefinementRow> parse_refinement(const CsvTable& table) {
  expect_header(table, {"h", "median_contacts", "median_zero_set", "median_max_rarefaction",
                        "contact_fraction", "replicates", "failures"});
  std::vector<RefinementRow> out;
  for (const auto& r : table.rows) {
    out.push_back({parse_double(r[0]), parse_double(r[1]), parse_double(r[2]), parse_double(r[3]),
                   parse_double(r[4]), parse_size(r[5]), parse_size(r[6])});
  }
  return out;
}

std::string integral_csv(const std::vector<IntegralRow>& rows, std::string_view meta) {
  CsvWriter w(meta, {"eps", "estimate"});
  for (const auto& r : rows) w.row({fmt(r.eps), fmt(r.estimate)});
  return w.str();
}

std::vector<IntegralRow> parse_integral(const CsvTable& table) {
  expect_header(table, {"eps", "estimate"});
  std::vector<IntegralRow> out;
  for (const auto& r : table.rows) out.push_back({parse_double(r[0]), parse_double(r[1])});
  return out;
}

}  // namespace burgers::io
