#include "duffing/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <stdexcept>

namespace duffing::io {

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    if (x == 0.0) {
        x = 0.0;  // no "-0"
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    // snprintf follows LC_NUMERIC; normalise in case a comma locale is active
    for (char* c = buf; *c; ++c) {
        if (*c == ',') {
            *c = '.';
        }
    }
    return buf;
}

std::string format_optional(const std::optional<double>& x) { return x ? format_double(*x) : ""; }

std::string sha256_hex(std::string_view data) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

std::string header_line(std::string_view config_hash) {
    return "# duffing-qsim v" + std::string(kVersion) + " config-hash=" + std::string(config_hash);
}

CsvWriter::CsvWriter(std::string header_comment, const std::vector<std::string>& columns)
    : ncols_(columns.size()), text_(std::move(header_comment)) {
    text_ += '\n';
    row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != ncols_) {
        throw std::logic_error("csv row has " + std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(ncols_));
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) {
            text_ += ',';
        }
        const auto& c = cells[i];
        if (c.find_first_of(",\"\n") != std::string::npos) {
            text_ += '"';
            for (char ch : c) {
                if (ch == '"') {
                    text_ += '"';
                }
                text_ += ch;
            }
            text_ += '"';
        } else {
            text_ += c;
        }
    }
    text_ += '\n';
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw std::runtime_error("write to " + path.string() + " failed");
    }
}

} // namespace duffing::io
