#pragma once

#include <cstdint>
#include <string>

#include "nell2rdf/util/result.hpp"

namespace nell2rdf {

/// Streaming line reader over a possibly gzip-compressed file. Compression is
/// detected from the magic bytes, so plain and .gz inputs go through the same
/// path. Lines are returned without the trailing LF / CRLF. Memory use is
/// bounded by the longest single line.
class LineReader {
  public:
    LineReader() = default;
    ~LineReader();
    LineReader(const LineReader&) = delete;
    LineReader& operator=(const LineReader&) = delete;

    Result<bool> open(const std::string& path);
    bool is_open() const { return file_ != nullptr; }

    /// Reads the next line into `line`. Returns false at end of input.
    bool next(std::string& line);

    std::uint64_t lines_read() const { return lines_read_; }
    const std::string& io_error() const { return io_error_; }

  private:
    bool fill();

    void* file_ = nullptr;  // gzFile
    std::string buf_;
    std::size_t buf_pos_ = 0;
    bool eof_ = false;
    std::uint64_t lines_read_ = 0;
    std::string io_error_;
};

}  // namespace nell2rdf
