#pragma once

#include <string>
#include <vector>

namespace ringfwm::io {

/// Shortest canonical representation at 9 significant digits. The fixed
/// format makes output files byte-stable across runs and platforms libm's
/// printf agrees on.
std::string format_g9(double v);

/// CSV writer with a bit-exact contract: '.' decimal separator, LF line
/// endings, header row, values at 9 significant digits. The file is staged
/// to `<path>.tmp` and renamed into place so readers never see a torn file.
class CsvWriter {
public:
    explicit CsvWriter(std::string path);
    void header(const std::vector<std::string>& names);
    void row(const std::vector<double>& values);
    void raw_row(const std::vector<std::string>& cells);
    /// Rename the staged file into place. Must be called; the destructor
    /// discards unstaged output.
    void commit();
    ~CsvWriter();

private:
    std::string path_;
    std::string tmp_path_;
    std::string buffer_;
    bool committed_ = false;
};

}  // namespace ringfwm::io
