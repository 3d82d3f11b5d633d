#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "nell2rdf/util/result.hpp"

namespace nell2rdf {

/// Byte sink for serializer output. Each sink has a single writer; parallel
/// pipelines funnel through one writer thread per sink.
class OutputSink {
  public:
    virtual ~OutputSink() = default;
    virtual void write(std::string_view bytes) = 0;
    virtual Result<bool> close() = 0;

    std::uint64_t bytes_written() const { return bytes_written_; }

  protected:
    std::uint64_t bytes_written_ = 0;
};

class FileSink final : public OutputSink {
  public:
    static Result<std::unique_ptr<OutputSink>> open(const std::string& path);
    ~FileSink() override;
    void write(std::string_view bytes) override;
    Result<bool> close() override;

  private:
    explicit FileSink(std::FILE* f) : f_(f) {}
    std::FILE* f_;
    bool failed_ = false;
};

/// Gzip-compressed sink. The compression level is fixed so reruns are
/// byte-identical (zlib writes mtime 0 in the member header).
class GzipSink final : public OutputSink {
  public:
    static Result<std::unique_ptr<OutputSink>> open(const std::string& path);
    ~GzipSink() override;
    void write(std::string_view bytes) override;
    Result<bool> close() override;

  private:
    explicit GzipSink(void* f) : f_(f) {}
    void* f_;  // gzFile
    bool failed_ = false;
};

class StringSink final : public OutputSink {
  public:
    void write(std::string_view bytes) override {
        data_.append(bytes);
        bytes_written_ += bytes.size();
    }
    Result<bool> close() override { return true; }
    const std::string& data() const { return data_; }

  private:
    std::string data_;
};

/// Swallows bytes; keeps only the byte count.
class NullSink final : public OutputSink {
  public:
    void write(std::string_view bytes) override { bytes_written_ += bytes.size(); }
    Result<bool> close() override { return true; }
};

/// Opens a FileSink or GzipSink depending on `gzip`.
Result<std::unique_ptr<OutputSink>> open_sink(const std::string& path, bool gzip);

}  // namespace nell2rdf
