#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace crisis {

inline constexpr std::string_view kVersion = "0.1.0";

/// 6 significant digits, the default for tabular floating-point output.
std::string format_g6(double v);

/// Wider form used where serialized values must reconstruct to ~1e-9.
std::string format_g12(double v);

/// p-values below 1e-4 render as "<0.0001"; otherwise 6 significant digits.
std::string format_pvalue(double p);

std::string trim(std::string_view s);

/// Splits one CSV record; handles quoted fields, trims unquoted whitespace.
std::vector<std::string> split_csv_line(std::string_view line);

std::string csv_escape(std::string_view field);

/// FNV-1a 64-bit over the bytes; used to fingerprint inputs in manifests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);
std::string hash_file_hex(const std::filesystem::path& path);

/// Writes content to a temporary sibling and renames it into place.
void atomic_write_file(const std::filesystem::path& path,
                       std::string_view content);
std::string read_file(const std::filesystem::path& path);

/// Runs fn(i) for i in [0, count); blocks are statically partitioned so the
/// result of writing to disjoint slots is identical for every thread count.
/// threads = 0 uses the hardware concurrency.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace crisis
