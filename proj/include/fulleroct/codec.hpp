#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fulleroct/graph.hpp"

namespace fulleroct {

inline constexpr std::string_view planar_code_header = ">>planar_code<<";

/// Malformed input; `offset()` is the byte (planar_code) or line (adjlist)
/// position where decoding failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// planar_code: optional ">>planar_code<<" header, then per graph the vertex
/// count (one byte, or 0 + little-endian u16 when n > 255) followed by each
/// vertex's 1-based neighbours in rotation order, zero-terminated, in the same
/// width as the count.
std::vector<EmbeddedGraph> parse_planar_code(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_planar_code(std::span<const EmbeddedGraph> graphs, bool header = true);

/// Plain-text rotation lists: one line per vertex with 1-based neighbour ids,
/// graphs separated by blank lines.
std::vector<EmbeddedGraph> parse_adjlist(std::string_view text);
std::string write_adjlist(std::span<const EmbeddedGraph> graphs);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace fulleroct
