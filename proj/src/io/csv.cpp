#include "ringfwm/io/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "ringfwm/core/errors.hpp"

namespace ringfwm::io {

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

CsvWriter::CsvWriter(std::string path)
    : path_(std::move(path)), tmp_path_(path_ + ".tmp") {}

void CsvWriter::header(const std::vector<std::string>& names) {
    raw_row(names);
}

void CsvWriter::row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) cells.push_back(format_g9(v));
    raw_row(cells);
}

void CsvWriter::raw_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) buffer_ += ',';
        buffer_ += cells[i];
    }
    buffer_ += '\n';
}

void CsvWriter::commit() {
    std::ofstream out(tmp_path_, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp_path_);
    out << buffer_;
    out.close();
    if (!out) throw IoError("short write to " + tmp_path_);
    if (std::rename(tmp_path_.c_str(), path_.c_str()) != 0) {
        throw IoError("cannot rename " + tmp_path_ + " to " + path_);
    }
    committed_ = true;
}

CsvWriter::~CsvWriter() {
    if (!committed_) std::remove(tmp_path_.c_str());
}

}  // namespace ringfwm::io
