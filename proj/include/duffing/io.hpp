// Deterministic text output: fixed float format and the provenance header line.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace duffing::io {

inline constexpr std::string_view kVersion = "0.1.0";

// %.12g, always with '.' as decimal separator.
std::string format_double(double x);
std::string format_optional(const std::optional<double>& x);

std::string sha256_hex(std::string_view data);

// "# duffing-qsim v0.1.0 config-hash=<hex>"
std::string header_line(std::string_view config_hash);

class CsvWriter {
public:
    CsvWriter(std::string header_comment, const std::vector<std::string>& columns);

    void row(const std::vector<std::string>& cells);
    const std::string& text() const noexcept { return text_; }

private:
    std::size_t ncols_;
    std::string text_;
};

// Writes bytes exactly; throws std::runtime_error on I/O failure.
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace duffing::io
