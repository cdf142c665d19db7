#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crisis {

/// Base error type for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A country identified by a 3-letter uppercase code plus a display name.
/// The name falls back to the code when no lookup table is available.
struct CountryLabel {
  std::string code;
  std::string name;

  friend bool operator==(const CountryLabel&, const CountryLabel&) = default;
};

bool valid_country_code(std::string_view code);

/// Inclusive calendar-year interval.
struct YearWindow {
  int start = 0;
  int end = 0;

  bool contains(int year) const { return year >= start && year <= end; }
  int length() const { return end - start + 1; }

  static std::optional<YearWindow> intersect(YearWindow a, YearWindow b);

  friend bool operator==(const YearWindow&, const YearWindow&) = default;
};

std::string to_string(const YearWindow& w);

/// Parses "START:END" (both inclusive).
YearWindow parse_year_window(std::string_view text);

enum class Cell : std::int8_t { Missing = -1, NoCrisis = 0, Crisis = 1 };

/// One country's crisis indicator series with missing years omitted.
struct BinarySeries {
  CountryLabel label;
  std::vector<int> years;             // strictly increasing
  std::vector<std::uint8_t> values;   // 0/1, aligned with years

  std::size_t size() const { return years.size(); }
  std::size_t ones() const;
  std::size_t zeros() const { return size() - ones(); }
};

/// Immutable rectangular country x year grid of {0, 1, missing} cells.
/// Countries are kept in lexicographic code order so that every matrix
/// built downstream has a deterministic row/column order.
class CrisisPanel {
 public:
  CrisisPanel() = default;

  /// `cells` is row-major: country index * window length + (year - start).
  /// Throws Error on malformed codes, duplicate codes, size mismatch, or
  /// a country without a single observed cell.
  CrisisPanel(std::vector<CountryLabel> countries, YearWindow window,
              std::vector<Cell> cells);

  const std::vector<CountryLabel>& countries() const { return countries_; }
  YearWindow window() const { return window_; }
  std::size_t country_count() const { return countries_.size(); }

  Cell cell(std::size_t country_index, int year) const;
  std::optional<std::size_t> index_of(std::string_view code) const;

  BinarySeries series(std::size_t country_index) const;
  /// Throws Error for an unknown code.
  BinarySeries series(std::string_view code) const;

  bool operator==(const CrisisPanel& other) const = default;

 private:
  std::vector<CountryLabel> countries_;
  YearWindow window_{0, -1};
  std::vector<Cell> cells_;
};

struct SliceResult {
  CrisisPanel panel;
  std::vector<std::string> dropped_countries;  // all-missing in the new window
};

/// Restricts the panel to `window` (intersected with the panel window).
/// Throws Error when the windows are disjoint.
SliceResult slice_window(const CrisisPanel& panel, YearWindow window);

struct CrisisCounts {
  std::vector<std::pair<std::string, long>> by_country;  // panel order
  std::vector<std::pair<int, long>> by_year;             // ascending
  long total = 0;
};

CrisisCounts crisis_counts(const CrisisPanel& panel);

}  // namespace crisis
