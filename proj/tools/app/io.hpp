#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ramsey/spectroscopy.hpp"

namespace ramsey::app {

// Nine significant digits, locale independent.
std::string format_number(double value);

// Writes to a sibling temporary file and renames it over the destination.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// "omega_ghz,p_e" header then one row per point.
std::string spectrum_to_csv(const Spectrum& spectrum);

// Parses the CSV produced by spectrum_to_csv; only the points are restored.
Spectrum spectrum_from_csv(std::string_view text);
Spectrum read_spectrum_csv(const std::filesystem::path& path);

// Rounds every point to what the CSV stores, so metrics on the result equal metrics on
// the file read back from disk.
Spectrum quantize_to_csv_precision(const Spectrum& spectrum);

}  // namespace ramsey::app
