#include "pdbkit/tiles/pairs_triples.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>

#include "pdbkit/pdb/mapping.hpp"
#include "pdbkit/tiles/pdb_build.hpp"

namespace pdbkit::tiles {

int PairsTriplesDB::pair_id(int t1, int t2) const {
    // Triangular index over tiles 1..n-1.
    const int m = rows_ * cols_ - 1; // tile count
    const int i = t1 - 1, j = t2 - 1;
    return i * (2 * m - i - 1) / 2 + (j - i - 1);
}

int PairsTriplesDB::triple_id(int t1, int t2, int t3) const {
    const int m = rows_ * cols_ - 1;
    auto c2 = [](int x) { return x * (x - 1) / 2; };
    auto c3 = [](int x) { return x * (x - 1) * (x - 2) / 6; };
    const int i = t1 - 1, j = t2 - 1, k = t3 - 1;
    // Combinations of {0..m-1} in lexicographic order.
    return c3(m) - c3(m - i) + (c2(m - i - 1) - c2(m - j)) + (k - j - 1);
}

const PairsTriplesDB::Entry* PairsTriplesDB::find(const std::vector<Entry>& entries,
                                                  std::uint32_t key) {
    auto it = std::lower_bound(entries.begin(), entries.end(), key,
                               [](const Entry& e, std::uint32_t k) { return e.key < k; });
    if (it != entries.end() && it->key == key)
        return &*it;
    return nullptr;
}

int PairsTriplesDB::pair_excess(int t1, int t2, int p1, int p2) const {
    if (t1 > t2) {
        std::swap(t1, t2);
        std::swap(p1, p2);
    }
    const int n = rows_ * cols_;
    const Entry* e = find(pair_entries_[pair_id(t1, t2)],
                          static_cast<std::uint32_t>(p1) * n + p2);
    return e ? e->excess : 0;
}

int PairsTriplesDB::triple_excess(int t1, int t2, int t3, int p1, int p2, int p3) const {
    // Sort tiles, carrying positions along.
    if (t1 > t2) { std::swap(t1, t2); std::swap(p1, p2); }
    if (t2 > t3) { std::swap(t2, t3); std::swap(p2, p3); }
    if (t1 > t2) { std::swap(t1, t2); std::swap(p1, p2); }
    const int n = rows_ * cols_;
    const Entry* e = find(triple_entries_[triple_id(t1, t2, t3)],
                          (static_cast<std::uint32_t>(p1) * n + p2) * n + p3);
    return e ? e->excess : 0;
}

PairsTriplesDB PairsTriplesDB::build(const Board& board, bool with_triples) {
    const auto t0 = std::chrono::steady_clock::now();
    PairsTriplesDB db;
    db.rows_ = board.rows();
    db.cols_ = board.cols();
    db.has_triples_ = with_triples;
    const int n = board.cells();
    const int m = n - 1;
    db.pair_entries_.resize(m * (m - 1) / 2);
    if (with_triples)
        db.triple_entries_.resize(m * (m - 1) * (m - 2) / 6);

    for (int a = 1; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            const PatternDatabase pdb = build_tile_pdb(
                board, {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)},
                MappingVariant::Compact);
            auto& bucket = db.pair_entries_[db.pair_id(a, b)];
            for (std::uint64_t r = 0; r < pdb.costs.size(); ++r) {
                ++db.stats_.full_pair_entries;
                const std::uint8_t dist = pdb.costs[r];
                if (dist == kPdbUnreached)
                    throw std::logic_error("pair table has unreachable entries");
                const auto locs = compact_unrank(r, 2, n);
                const int md = board.manhattan_of(a, locs[0]) + board.manhattan_of(b, locs[1]);
                if (dist > md) {
                    const int excess = dist - md;
                    if (excess % 2 != 0)
                        throw std::logic_error("pair excess parity violated");
                    bucket.push_back({static_cast<std::uint32_t>(locs[0]) * n + locs[1],
                                      static_cast<std::uint8_t>(excess)});
                    ++db.stats_.retained_pairs;
                }
            }
            std::sort(bucket.begin(), bucket.end(),
                      [](const Entry& x, const Entry& y) { return x.key < y.key; });
        }
    }

    if (with_triples) {
        for (int a = 1; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                for (int c = b + 1; c < n; ++c) {
                    const PatternDatabase pdb = build_tile_pdb(
                        board,
                        {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                         static_cast<std::uint8_t>(c)},
                        MappingVariant::Compact);
                    auto& bucket = db.triple_entries_[db.triple_id(a, b, c)];
                    for (std::uint64_t r = 0; r < pdb.costs.size(); ++r) {
                        ++db.stats_.full_triple_entries;
                        const std::uint8_t dist = pdb.costs[r];
                        if (dist == kPdbUnreached)
                            throw std::logic_error("triple table has unreachable entries");
                        const auto locs = compact_unrank(r, 3, n);
                        const int mda = board.manhattan_of(a, locs[0]);
                        const int mdb = board.manhattan_of(b, locs[1]);
                        const int mdc = board.manhattan_of(c, locs[2]);
                        // Best pair + singleton decomposition of the triple.
                        int best = mda + mdb + mdc;
                        best = std::max(best, mda + mdb + db.pair_excess(a, b, locs[0], locs[1]) + mdc);
                        best = std::max(best, mda + mdc + db.pair_excess(a, c, locs[0], locs[2]) + mdb);
                        best = std::max(best, mdb + mdc + db.pair_excess(b, c, locs[1], locs[2]) + mda);
                        if (dist > best) {
                            const int excess = dist - (mda + mdb + mdc);
                            if (excess % 2 != 0 || excess <= 0)
                                throw std::logic_error("triple excess parity violated");
                            bucket.push_back(
                                {(static_cast<std::uint32_t>(locs[0]) * n + locs[1]) * n + locs[2],
                                 static_cast<std::uint8_t>(excess)});
                            ++db.stats_.retained_triples;
                        }
                    }
                    std::sort(bucket.begin(), bucket.end(),
                              [](const Entry& x, const Entry& y) { return x.key < y.key; });
                }
            }
        }
    }

    db.stats_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return db;
}

namespace {

constexpr char kMagic[4] = {'A', 'P', 'T', 'D'};
constexpr std::uint8_t kVersion = 1;

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

} // namespace

void PairsTriplesDB::save(const std::string& path) const {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f)
        throw std::runtime_error("PairsTriplesDB::save: cannot open " + path);
    Fnv1a sum;
    auto put = [&](const void* data, std::size_t n) {
        sum.feed(data, n);
        if (std::fwrite(data, 1, n, f.get()) != n)
            throw std::runtime_error("PairsTriplesDB::save: short write");
    };
    auto put_u32 = [&](std::uint32_t v) { put(&v, 4); };

    put(kMagic, 4);
    put(&kVersion, 1);
    const std::uint8_t dims[3] = {static_cast<std::uint8_t>(rows_),
                                  static_cast<std::uint8_t>(cols_),
                                  static_cast<std::uint8_t>(has_triples_)};
    put(dims, 3);
    auto put_lists = [&](const std::vector<std::vector<Entry>>& lists) {
        put_u32(static_cast<std::uint32_t>(lists.size()));
        for (const auto& entries : lists) {
            put_u32(static_cast<std::uint32_t>(entries.size()));
            for (const Entry& e : entries) {
                put_u32(e.key);
                put(&e.excess, 1);
            }
        }
    };
    put_lists(pair_entries_);
    put_lists(triple_entries_);
    const std::uint64_t checksum = sum.state;
    if (std::fwrite(&checksum, 1, 8, f.get()) != 8)
        throw std::runtime_error("PairsTriplesDB::save: short write");
}

PairsTriplesDB PairsTriplesDB::load(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f)
        throw std::runtime_error("PairsTriplesDB::load: cannot open " + path);
    Fnv1a sum;
    auto get = [&](void* data, std::size_t n) {
        if (std::fread(data, 1, n, f.get()) != n)
            throw std::runtime_error("PairsTriplesDB::load: truncated file");
        sum.feed(data, n);
    };
    auto get_u32 = [&]() {
        std::uint32_t v;
        get(&v, 4);
        return v;
    };

    char magic[4];
    get(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("PairsTriplesDB::load: bad magic");
    std::uint8_t version;
    get(&version, 1);
    if (version != kVersion)
        throw std::runtime_error("PairsTriplesDB::load: unsupported version");

    PairsTriplesDB db;
    std::uint8_t dims[3];
    get(dims, 3);
    db.rows_ = dims[0];
    db.cols_ = dims[1];
    db.has_triples_ = dims[2] != 0;
    auto get_lists = [&](std::vector<std::vector<Entry>>& lists) {
        lists.resize(get_u32());
        for (auto& entries : lists) {
            entries.resize(get_u32());
            for (Entry& e : entries) {
                e.key = get_u32();
                get(&e.excess, 1);
            }
        }
    };
    get_lists(db.pair_entries_);
    get_lists(db.triple_entries_);
    const std::uint64_t expect = sum.state;
    std::uint64_t stored;
    if (std::fread(&stored, 1, 8, f.get()) != 8)
        throw std::runtime_error("PairsTriplesDB::load: truncated file");
    if (stored != expect)
        throw std::runtime_error("PairsTriplesDB::load: checksum mismatch");
    return db;
}

} // namespace pdbkit::tiles
