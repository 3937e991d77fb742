#include "stabreg/io.hpp"

#include "stabreg/errors.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace stabreg {

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

long long read_index(std::istringstream& fields, std::size_t line_no) {
    std::string token;
    if (!(fields >> token)) {
        throw InputError("line " + std::to_string(line_no) + ": expected two vertex indices", "parse");
    }
    std::size_t used = 0;
    long long value = -1;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || value < 0) {
        throw InputError("line " + std::to_string(line_no) + ": bad vertex index '" + token + "'", "parse");
    }
    return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long n = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        std::istringstream header(line);
        std::string tag;
        header >> tag >> n;
        std::string rest;
        if (tag != "n" || !header || (header >> rest)) {
            throw InputError("line " + std::to_string(line_no) + ": expected header 'n <count>'", "parse");
        }
        break;
    }
    if (n < 0) {
        throw InputError("missing 'n <count>' header", "parse");
    }
    if (n == 0) {
        throw InputError("a graph needs at least one vertex");
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank(line)) continue;
        std::istringstream fields(line);
        const auto u = read_index(fields, line_no);
        const auto v = read_index(fields, line_no);
        std::string rest;
        if (fields >> rest) {
            throw InputError("line " + std::to_string(line_no) + ": trailing token '" + rest + "'", "parse");
        }
        if (u == v) {
            throw InputError("line " + std::to_string(line_no) + ": self-loop " + std::to_string(u) + " " +
                                 std::to_string(v),
                             "self_loop");
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open graph file '" + path.string() + "'", "io");
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace stabreg
