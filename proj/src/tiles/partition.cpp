#include "pdbkit/tiles/partition.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "pdbkit/tiles/board.hpp"

namespace pdbkit::tiles {

void validate_partition(const Board& board, const TilePartition& partition) {
    std::vector<int> owner(board.cells(), -1);
    int covered = 0;
    for (std::size_t g = 0; g < partition.groups.size(); ++g) {
        for (const std::uint8_t tile : partition.groups[g]) {
            if (tile == 0 || tile >= board.cells())
                throw std::invalid_argument("partition: tile out of range");
            if (owner[tile] >= 0)
                throw std::invalid_argument("partition: tile in two groups");
            owner[tile] = static_cast<int>(g);
            ++covered;
        }
    }
    if (covered != board.tiles())
        throw std::invalid_argument("partition: does not cover all tiles");
}

TilePartition parse_partition(const std::string& text) {
    TilePartition partition;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::uint8_t> group;
        int tile;
        while (ls >> tile)
            group.push_back(static_cast<std::uint8_t>(tile));
        if (!group.empty())
            partition.groups.push_back(std::move(group));
    }
    if (partition.groups.empty())
        throw std::invalid_argument("partition: no groups");
    std::string name;
    for (const auto& g : partition.groups)
        name += (name.empty() ? "" : "-") + std::to_string(g.size());
    partition.name = name;
    return partition;
}

TilePartition load_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open partition file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_partition(buf.str());
}

std::string partition_to_text(const TilePartition& partition) {
    std::ostringstream out;
    for (const auto& group : partition.groups) {
        for (std::size_t i = 0; i < group.size(); ++i)
            out << (i ? " " : "") << static_cast<int>(group[i]);
        out << '\n';
    }
    return out.str();
}

TilePartition builtin_partition(const Board& board, const std::string& layout_name) {
    TilePartition partition;
    partition.name = layout_name;
    if (layout_name == "singletons") {
        for (int t = 1; t < board.cells(); ++t)
            partition.groups.push_back({static_cast<std::uint8_t>(t)});
        return partition;
    }
    if (board.rows() == 4 && board.cols() == 4) {
        if (layout_name == "5-5-5") {
            partition.groups = {{1, 2, 3, 6, 7}, {4, 5, 8, 9, 12}, {10, 11, 13, 14, 15}};
            return partition;
        }
        if (layout_name == "6-6-3") {
            partition.groups = {{1, 2, 3, 6, 7, 11}, {4, 5, 8, 9, 12, 13}, {10, 14, 15}};
            return partition;
        }
        if (layout_name == "7-8") {
            partition.groups = {{1, 4, 5, 8, 9, 12, 13}, {2, 3, 6, 7, 10, 11, 14, 15}};
            return partition;
        }
    }
    if (board.rows() == 3 && board.cols() == 3) {
        if (layout_name == "4-4") {
            partition.groups = {{1, 2, 4, 5}, {3, 6, 7, 8}};
            return partition;
        }
    }
    throw std::invalid_argument("unknown builtin partition: " + layout_name);
}

} // namespace pdbkit::tiles
