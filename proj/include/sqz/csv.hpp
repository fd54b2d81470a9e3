#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "sqz/core.hpp"

namespace sqz {

// CSV with a header row and full-precision doubles, so identical runs produce
// byte-identical files.
class CsvWriter {
  public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    const std::filesystem::path& path() const { return path_; }

  private:
    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t n_columns_;
};

std::string format_double(double v);  // round-trip "%.17g"

// Plain-text run manifest: key = value lines in fixed order.
void write_manifest(const std::filesystem::path& path,
                    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace sqz
