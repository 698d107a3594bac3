#include "pdbkit/pdb/pattern_db.hpp"

#include <cstdio>
#include <cstring>
#include <memory>

namespace pdbkit {

namespace {

constexpr char kMagic[4] = {'A', 'P', 'D', 'B'};
constexpr std::uint8_t kFormatVersion = 1;

struct Fnv1a {
    std::uint64_t state = 0xcbf29ce484222325ULL;
    void feed(const void* data, std::size_t n) {
        const auto* p = static_cast<const std::uint8_t*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            state ^= p[i];
            state *= 0x100000001b3ULL;
        }
    }
};

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f)
            std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void put_u64(std::FILE* f, Fnv1a& sum, std::uint64_t v) {
    std::uint8_t buf[8];
    for (int i = 0; i < 8; ++i)
        buf[i] = static_cast<std::uint8_t>(v >> (8 * i));
    sum.feed(buf, 8);
    if (std::fwrite(buf, 1, 8, f) != 8)
        throw PdbIoError("save_pdb: short write");
}

std::uint64_t get_u64(std::FILE* f, Fnv1a* sum) {
    std::uint8_t buf[8];
    if (std::fread(buf, 1, 8, f) != 8)
        throw PdbTruncated("load_pdb: truncated file");
    if (sum)
        sum->feed(buf, 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i)
        v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return v;
}

} // namespace

void save_pdb(const PatternDatabase& db, const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f)
        throw PdbIoError("save_pdb: cannot open " + path);
    Fnv1a sum;

    auto put_bytes = [&](const void* data, std::size_t n) {
        sum.feed(data, n);
        if (std::fwrite(data, 1, n, f.get()) != n)
            throw PdbIoError("save_pdb: short write");
    };

    put_bytes(kMagic, 4);
    const std::uint8_t header[6] = {
        kFormatVersion,
        static_cast<std::uint8_t>(db.domain),
        static_cast<std::uint8_t>(db.mapping.L),
        static_cast<std::uint8_t>(db.mapping.k),
        static_cast<std::uint8_t>(db.mapping.variant),
        static_cast<std::uint8_t>(db.policy),
    };
    put_bytes(header, sizeof header);
    const std::uint8_t pattern_len = static_cast<std::uint8_t>(db.pattern.size());
    put_bytes(&pattern_len, 1);
    if (!db.pattern.empty())
        put_bytes(db.pattern.data(), db.pattern.size());
    put_u64(f.get(), sum, db.costs.size());
    if (!db.costs.empty())
        put_bytes(db.costs.data(), db.costs.size());

    const std::uint64_t checksum = sum.state;
    std::uint8_t buf[8];
    for (int i = 0; i < 8; ++i)
        buf[i] = static_cast<std::uint8_t>(checksum >> (8 * i));
    if (std::fwrite(buf, 1, 8, f.get()) != 8)
        throw PdbIoError("save_pdb: short write");
    if (std::fflush(f.get()) != 0)
        throw PdbIoError("save_pdb: flush failed");
}

PatternDatabase load_pdb(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f)
        throw PdbIoError("load_pdb: cannot open " + path);
    Fnv1a sum;

    auto get_bytes = [&](void* data, std::size_t n) {
        if (std::fread(data, 1, n, f.get()) != n)
            throw PdbTruncated("load_pdb: truncated file");
        sum.feed(data, n);
    };

    char magic[4];
    get_bytes(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw PdbBadMagic("load_pdb: bad magic");
    std::uint8_t header[6];
    get_bytes(header, sizeof header);
    if (header[0] != kFormatVersion)
        throw PdbBadVersion("load_pdb: unsupported format version");

    PatternDatabase db;
    db.domain = static_cast<PdbDomain>(header[1]);
    db.mapping.L = header[2];
    db.mapping.k = header[3];
    db.mapping.variant = static_cast<MappingVariant>(header[4]);
    db.policy = static_cast<CostPolicy>(header[5]);

    std::uint8_t pattern_len = 0;
    get_bytes(&pattern_len, 1);
    db.pattern.resize(pattern_len);
    if (pattern_len)
        get_bytes(db.pattern.data(), pattern_len);

    const std::uint64_t count = get_u64(f.get(), &sum);
    db.costs.resize(count);
    if (count)
        get_bytes(db.costs.data(), count);

    const std::uint64_t expect = sum.state;
    const std::uint64_t stored = get_u64(f.get(), nullptr);
    if (stored != expect)
        throw PdbChecksumMismatch("load_pdb: checksum mismatch");
    return db;
}

} // namespace pdbkit
