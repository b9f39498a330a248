#include "domrecon/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "domrecon/errors.hpp"

namespace domrecon {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void append_order(std::string& out, long long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

template <typename G>
std::string encode(const G& g) {
    const long long n = g.order();
    std::string out;
    append_order(out, n);
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Decoded {
    long long n = 0;
    std::vector<Edge> edges;
};

Decoded decode(std::string_view text) {
    text = trim(text);
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    if (text.empty()) throw InvalidGraph("empty graph6 record");
    for (char c : text) {
        if (c < 63 || c > 126) throw InvalidGraph("graph6 byte out of range");
    }
    std::size_t pos = 0;
    auto take = [&](int count) {
        long long v = 0;
        for (int k = 0; k < count; ++k) {
            if (pos >= text.size()) throw InvalidGraph("truncated graph6 order field");
            v = (v << 6) | (text[pos++] - 63);
        }
        return v;
    };
    Decoded d;
    if (text[0] != 126) {
        d.n = take(1);
    } else if (text.size() > 1 && text[1] == 126) {
        pos = 2;
        d.n = take(6);
    } else {
        pos = 1;
        d.n = take(3);
    }
    if (d.n > (1LL << 20)) throw SizeLimit("graph6 order too large");
    const long long bits = d.n * (d.n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) != bytes) {
        throw InvalidGraph("graph6 record has " + std::to_string(text.size() - pos) + " data bytes, expected " +
                           std::to_string(bytes));
    }
    long long k = 0;
    for (int j = 1; j < d.n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) d.edges.emplace_back(i, j);
        }
    }
    return d;
}

template <typename G>
std::string dot(const G& g, const DotOptions& opts) {
    std::ostringstream out;
    out << "graph " << opts.name << " {\n";
    for (int v = 0; v < g.order(); ++v) {
        out << "  " << v;
        if (opts.use_labels && g.has_labels()) {
            out << " [label=\"";
            for (char c : g.labels()[v]) {
                if (c == '"' || c == '\\') out << '\\';
                out << c;
            }
            out << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace

std::string to_graph6(const Graph& g) { return encode(g); }
std::string to_graph6(const SparseGraph& g) { return encode(g); }

Graph graph_from_graph6(std::string_view text) {
    Decoded d = decode(text);
    if (d.n > kMaxVertices) throw SizeLimit("graph6 record has more than 64 vertices");
    return make_graph(static_cast<int>(d.n), d.edges);
}

SparseGraph sparse_from_graph6(std::string_view text) {
    Decoded d = decode(text);
    return SparseGraph(static_cast<int>(d.n), d.edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph graph_from_edge_list(std::string_view text) {
    std::vector<long long> numbers;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        std::string_view body = line;
        if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
        std::istringstream fields{std::string(body)};
        std::string tok;
        while (fields >> tok) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
                throw InvalidGraph("edge list token '" + tok + "' is not an integer");
            }
            numbers.push_back(value);
        }
    }
    if (numbers.empty()) throw InvalidGraph("edge list is empty");
    if (numbers.size() % 2 != 1) throw InvalidGraph("edge list has a dangling endpoint");
    if (numbers[0] > kMaxVertices) throw SizeLimit("edge list order exceeds the 64-vertex cap");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i + 1 < numbers.size(); i += 2) {
        if (numbers[i] < 0 || numbers[i] > kMaxVertices || numbers[i + 1] < 0 || numbers[i + 1] > kMaxVertices) {
            throw InvalidGraph("edge endpoint out of range");
        }
        edges.emplace_back(static_cast<int>(numbers[i]), static_cast<int>(numbers[i + 1]));
    }
    return make_graph(static_cast<int>(numbers[0]), edges);
}

std::string to_dot(const Graph& g, const DotOptions& opts) { return dot(g, opts); }
std::string to_dot(const SparseGraph& g, const DotOptions& opts) { return dot(g, opts); }

}  // namespace domrecon
