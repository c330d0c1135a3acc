#include "fulleroct/codec.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace fulleroct {

namespace {

class Reader {
public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    bool done() const { return pos_ >= bytes_.size(); }
    std::size_t pos() const { return pos_; }

    unsigned read(bool wide) {
        if (wide) {
            if (pos_ + 2 > bytes_.size()) throw ParseError(pos_, "truncated stream");
            const unsigned v = bytes_[pos_] | (static_cast<unsigned>(bytes_[pos_ + 1]) << 8);
            pos_ += 2;
            return v;
        }
        if (pos_ >= bytes_.size()) throw ParseError(pos_, "truncated stream");
        return bytes_[pos_++];
    }

    void skip(std::size_t k) { pos_ += k; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

void put(std::vector<std::uint8_t>& out, unsigned value, bool wide) {
    out.push_back(static_cast<std::uint8_t>(value & 0xff));
    if (wide) out.push_back(static_cast<std::uint8_t>((value >> 8) & 0xff));
}

}  // namespace

std::vector<EmbeddedGraph> parse_planar_code(std::span<const std::uint8_t> bytes) {
    Reader in(bytes);
    if (bytes.size() >= planar_code_header.size() &&
        std::equal(planar_code_header.begin(), planar_code_header.end(), bytes.begin()))
        in.skip(planar_code_header.size());

    std::vector<EmbeddedGraph> graphs;
    while (!in.done()) {
        const std::size_t start = in.pos();
        unsigned n = in.read(false);
        const bool wide = (n == 0);
        if (wide) {
            n = in.read(true);
            if (n == 0) throw ParseError(start, "zero vertex count");
        }
        std::vector<std::vector<Vertex>> rot(n);
        for (unsigned v = 0; v < n; ++v) {
            for (;;) {
                const std::size_t at = in.pos();
                const unsigned w = in.read(wide);
                if (w == 0) break;
                if (w > n)
                    throw ParseError(at, "vertex index " + std::to_string(w) + " out of range 1.." +
                                             std::to_string(n));
                rot[v].push_back(static_cast<Vertex>(w - 1));
                if (rot[v].size() > n) throw ParseError(at, "missing terminator");
            }
        }
        try {
            graphs.emplace_back(std::move(rot));
        } catch (const GraphError& e) {
            throw ParseError(start, std::string("invalid graph: ") + e.what());
        }
    }
    return graphs;
}

std::vector<std::uint8_t> write_planar_code(std::span<const EmbeddedGraph> graphs, bool header) {
    std::vector<std::uint8_t> out;
    if (header) out.insert(out.end(), planar_code_header.begin(), planar_code_header.end());
    for (const auto& g : graphs) {
        const int n = g.vertex_count();
        if (n > 0xffff) throw std::length_error("graph with " + std::to_string(n) + " vertices exceeds planar_code");
        const bool wide = n > 255;
        if (wide) out.push_back(0);
        put(out, static_cast<unsigned>(n), wide);
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex w : g.rotation(v)) put(out, static_cast<unsigned>(w + 1), wide);
            put(out, 0, wide);
        }
    }
    return out;
}

std::vector<EmbeddedGraph> parse_adjlist(std::string_view text) {
    std::vector<EmbeddedGraph> graphs;
    std::vector<std::vector<Vertex>> current;
    std::size_t line_no = 0, graph_line = 1;
    auto flush = [&] {
        if (current.empty()) return;
        const int n = static_cast<int>(current.size());
        for (auto& r : current)
            for (Vertex& w : r) {
                if (w < 1 || w > n)
                    throw ParseError(graph_line, "vertex index " + std::to_string(w) + " out of range");
                --w;
            }
        try {
            graphs.emplace_back(std::move(current));
        } catch (const GraphError& e) {
            throw ParseError(graph_line, std::string("invalid graph: ") + e.what());
        }
        current.clear();
    };
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            flush();
            graph_line = line_no + 1;
            continue;
        }
        std::istringstream fields(line);
        std::vector<Vertex> r;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                r.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::logic_error&) {
                throw ParseError(line_no, "bad token '" + tok + "'");
            }
        }
        current.push_back(std::move(r));
    }
    flush();
    return graphs;
}

std::string write_adjlist(std::span<const EmbeddedGraph> graphs) {
    std::ostringstream out;
    bool first = true;
    for (const auto& g : graphs) {
        if (!first) out << '\n';
        first = false;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            bool sep = false;
            for (Vertex w : g.rotation(v)) {
                if (sep) out << ' ';
                out << (w + 1);
                sep = true;
            }
            out << '\n';
        }
    }
    return out.str();
}

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace fulleroct
