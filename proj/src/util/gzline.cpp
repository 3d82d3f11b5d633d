#include "nell2rdf/util/gzline.hpp"

#include <zlib.h>

#include <cstring>

namespace nell2rdf {

namespace {
constexpr std::size_t kChunk = 1 << 16;
}

LineReader::~LineReader() {
    if (file_) gzclose(static_cast<gzFile>(file_));
}

Result<bool> LineReader::open(const std::string& path) {
    gzFile f = gzopen(path.c_str(), "rb");
    if (!f) return Error{Errc::IoError, "cannot open " + path};
    gzbuffer(f, 1 << 17);
    file_ = f;
    return true;
}

bool LineReader::fill() {
    if (eof_ || !file_) return false;
    // Compact consumed bytes before growing the buffer.
    if (buf_pos_ > 0) {
        buf_.erase(0, buf_pos_);
        buf_pos_ = 0;
    }
    std::size_t old = buf_.size();
    buf_.resize(old + kChunk);
    int n = gzread(static_cast<gzFile>(file_), buf_.data() + old, kChunk);
    if (n < 0) {
        int errnum = 0;
        const char* msg = gzerror(static_cast<gzFile>(file_), &errnum);
        io_error_ = msg ? msg : "gzread failed";
        buf_.resize(old);
        eof_ = true;
        return false;
    }
    buf_.resize(old + static_cast<std::size_t>(n));
    if (n == 0) eof_ = true;
    return n > 0;
}

bool LineReader::next(std::string& line) {
    while (true) {
        const char* start = buf_.data() + buf_pos_;
        std::size_t avail = buf_.size() - buf_pos_;
        const char* nl = static_cast<const char*>(std::memchr(start, '\n', avail));
        if (nl) {
            std::size_t len = static_cast<std::size_t>(nl - start);
            if (len > 0 && start[len - 1] == '\r') --len;
            line.assign(start, len);
            buf_pos_ += static_cast<std::size_t>(nl - start) + 1;
            ++lines_read_;
            return true;
        }
        if (!fill()) {
            // fill() may have compacted the buffer; recompute the window.
            start = buf_.data() + buf_pos_;
            avail = buf_.size() - buf_pos_;
            if (avail == 0) return false;
            // Final line without a terminator.
            std::size_t len = avail;
            if (len > 0 && start[len - 1] == '\r') --len;
            line.assign(start, len);
            buf_pos_ = buf_.size();
            ++lines_read_;
            return true;
        }
    }
}

}  // namespace nell2rdf
