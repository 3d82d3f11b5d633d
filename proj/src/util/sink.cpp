#include "nell2rdf/util/sink.hpp"

#include <zlib.h>

#include <cstdio>

namespace nell2rdf {

Result<std::unique_ptr<OutputSink>> FileSink::open(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) return Error{Errc::IoError, "cannot open for writing: " + path};
    setvbuf(f, nullptr, _IOFBF, 1 << 18);
    return std::unique_ptr<OutputSink>(new FileSink(f));
}

FileSink::~FileSink() {
    if (f_) std::fclose(f_);
}

void FileSink::write(std::string_view bytes) {
    if (!f_ || bytes.empty()) return;
    if (std::fwrite(bytes.data(), 1, bytes.size(), f_) != bytes.size()) failed_ = true;
    bytes_written_ += bytes.size();
}

Result<bool> FileSink::close() {
    if (!f_) return true;
    bool flush_ok = std::fclose(f_) == 0;
    f_ = nullptr;
    if (failed_ || !flush_ok) return Error{Errc::IoError, "short write while closing file"};
    return true;
}

Result<std::unique_ptr<OutputSink>> GzipSink::open(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "wb6");
    if (!f) return Error{Errc::IoError, "cannot open for writing: " + path};
    gzbuffer(f, 1 << 17);
    return std::unique_ptr<OutputSink>(new GzipSink(f));
}

GzipSink::~GzipSink() {
    if (f_) gzclose(static_cast<gzFile>(f_));
}

void GzipSink::write(std::string_view bytes) {
    if (!f_ || bytes.empty()) return;
    if (gzwrite(static_cast<gzFile>(f_), bytes.data(), static_cast<unsigned>(bytes.size())) <= 0)
        failed_ = true;
    bytes_written_ += bytes.size();
}

Result<bool> GzipSink::close() {
    if (!f_) return true;
    bool flush_ok = gzclose(static_cast<gzFile>(f_)) == Z_OK;
    f_ = nullptr;
    if (failed_ || !flush_ok) return Error{Errc::IoError, "short write while closing gzip file"};
    return true;
}

Result<std::unique_ptr<OutputSink>> open_sink(const std::string& path, bool gzip) {
    return gzip ? GzipSink::open(path) : FileSink::open(path);
}

}  // namespace nell2rdf
