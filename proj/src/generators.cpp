#include "stabreg/generators.hpp"

#include "stabreg/errors.hpp"
#include "stabreg/random.hpp"

#include <cctype>
#include <set>

namespace stabreg {

namespace {

void require_positive(std::int64_t value, const char* what) {
    if (value <= 0) {
        throw InputError(std::string(what) + " must be positive, got " + std::to_string(value));
    }
}

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    FamilySpec parse_all() {
        FamilySpec spec = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return spec;
    }

private:
    FamilySpec parse_spec() {
        const std::string name = parse_name();
        expect('(');
        FamilySpec spec;
        if (name == "perturb") {
            FamilySpec base = parse_spec();
            expect(',');
            const std::int64_t flips = parse_int();
            expect(',');
            const std::int64_t seed = parse_int();
            expect(')');
            if (seed < 0) fail("seed must be nonnegative");
            return FamilySpec::perturb(std::move(base), flips, static_cast<std::uint64_t>(seed));
        }
        std::vector<std::int64_t> args{parse_int()};
        skip_ws();
        while (peek() == ',') {
            ++pos_;
            args.push_back(parse_int());
            skip_ws();
        }
        expect(')');
        if (name == "clique_union") return FamilySpec::clique_union(args);
        if (args.size() != 1) fail("'" + name + "' takes one argument");
        if (name == "empty") return FamilySpec::empty(args[0]);
        if (name == "complete") return FamilySpec::complete(args[0]);
        if (name == "half_graph") return FamilySpec::half_graph(args[0]);
        if (name == "matching") return FamilySpec::matching(args[0]);
        fail("unknown family '" + name + "'");
    }

    std::string parse_name() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
        }
        if (start == pos_) fail("expected a family name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::int64_t parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || (pos_ == start + 1 && text_[start] == '-')) fail("expected an integer");
        try {
            return std::stoll(std::string(text_.substr(start, pos_ - start)));
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("bad family spec '" + std::string(text_) + "': " + why + " at offset " +
                         std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::pair<Vertex, Vertex> pair_from_index(std::uint64_t index, std::size_t n) {
    Vertex u = 0;
    while (index >= n - 1 - u) {
        index -= n - 1 - u;
        ++u;
    }
    return {u, u + 1 + static_cast<Vertex>(index)};
}

}  // namespace

FamilySpec FamilySpec::empty(std::int64_t n) {
    require_positive(n, "empty(n): n");
    FamilySpec s;
    s.kind = Kind::empty;
    s.sizes = {n};
    return s;
}

FamilySpec FamilySpec::complete(std::int64_t n) {
    require_positive(n, "complete(n): n");
    FamilySpec s;
    s.kind = Kind::complete;
    s.sizes = {n};
    return s;
}

FamilySpec FamilySpec::half_graph(std::int64_t k) {
    require_positive(k, "half_graph(k): k");
    FamilySpec s;
    s.kind = Kind::half_graph;
    s.sizes = {k};
    return s;
}

FamilySpec FamilySpec::matching(std::int64_t m) {
    require_positive(m, "matching(m): m");
    FamilySpec s;
    s.kind = Kind::matching;
    s.sizes = {m};
    return s;
}

FamilySpec FamilySpec::clique_union(std::vector<std::int64_t> sizes) {
    if (sizes.empty()) throw InputError("clique_union needs at least one clique");
    for (auto size : sizes) require_positive(size, "clique_union: clique size");
    FamilySpec s;
    s.kind = Kind::clique_union;
    s.sizes = std::move(sizes);
    return s;
}

FamilySpec FamilySpec::perturb(FamilySpec base, std::int64_t flips, std::uint64_t seed) {
    if (flips < 0) throw InputError("perturb: flip count must be nonnegative");
    FamilySpec s;
    s.kind = Kind::perturb;
    s.base = std::make_shared<const FamilySpec>(std::move(base));
    s.flips = flips;
    s.seed = seed;
    return s;
}

FamilySpec FamilySpec::parse(std::string_view text) { return SpecParser(text).parse_all(); }

std::string FamilySpec::to_string() const {
    auto join = [&] {
        std::string out;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(sizes[i]);
        }
        return out;
    };
    switch (kind) {
        case Kind::empty: return "empty(" + join() + ")";
        case Kind::complete: return "complete(" + join() + ")";
        case Kind::half_graph: return "half_graph(" + join() + ")";
        case Kind::matching: return "matching(" + join() + ")";
        case Kind::clique_union: return "clique_union(" + join() + ")";
        case Kind::perturb:
            return "perturb(" + base->to_string() + "," + std::to_string(flips) + "," + std::to_string(seed) + ")";
    }
    return {};
}

Graph generate(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    std::vector<std::pair<Vertex, Vertex>> edges;
    switch (spec.kind) {
        case Kind::empty:
            return Graph(static_cast<std::size_t>(spec.sizes.at(0)), edges);
        case Kind::complete: {
            const auto n = static_cast<std::size_t>(spec.sizes.at(0));
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, edges);
        }
        case Kind::half_graph: {
            const auto k = static_cast<std::size_t>(spec.sizes.at(0));
            for (Vertex i = 0; i < k; ++i)
                for (Vertex j = i; j < k; ++j) edges.emplace_back(i, k + j);
            return Graph(2 * k, edges);
        }
        case Kind::matching: {
            const auto m = static_cast<std::size_t>(spec.sizes.at(0));
            for (Vertex i = 0; i < m; ++i) edges.emplace_back(2 * i, 2 * i + 1);
            return Graph(2 * m, edges);
        }
        case Kind::clique_union: {
            Vertex offset = 0;
            for (auto size : spec.sizes) {
                const auto s = static_cast<std::size_t>(size);
                for (Vertex u = 0; u < s; ++u)
                    for (Vertex v = u + 1; v < s; ++v) edges.emplace_back(offset + u, offset + v);
                offset += s;
            }
            return Graph(offset, edges);
        }
        case Kind::perturb: {
            const Graph base = generate(*spec.base);
            const std::size_t n = base.order();
            const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
            const auto flips = static_cast<std::uint64_t>(spec.flips);
            if (flips > total) {
                throw InputError("perturb: " + std::to_string(flips) + " flips requested but only " +
                                 std::to_string(total) + " vertex pairs exist");
            }
            // Floyd's sampling of `flips` distinct pair indices.
            RandomStream stream = RandomStream(spec.seed).derive("perturb");
            std::set<std::uint64_t> chosen;
            for (std::uint64_t j = total - flips; j < total; ++j) {
                const std::uint64_t t = stream.below(j + 1);
                if (!chosen.insert(t).second) chosen.insert(j);
            }
            std::vector<std::pair<Vertex, Vertex>> pairs;
            pairs.reserve(chosen.size());
            for (auto index : chosen) pairs.push_back(pair_from_index(index, n));
            return base.with_toggled(pairs);
        }
    }
    throw InputError("unknown family kind");
}

VertexSet half_graph_a_side(std::int64_t k) {
    VertexSet s(static_cast<std::size_t>(2 * k));
    for (std::int64_t i = 0; i < k; ++i) s.insert(static_cast<Vertex>(i));
    return s;
}

VertexSet half_graph_b_side(std::int64_t k) {
    VertexSet s(static_cast<std::size_t>(2 * k));
    for (std::int64_t j = 0; j < k; ++j) s.insert(static_cast<Vertex>(k + j));
    return s;
}

}  // namespace stabreg
