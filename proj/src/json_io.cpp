#include "stabreg/json_io.hpp"

#include "stabreg/errors.hpp"

namespace stabreg {

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const VertexSet& set) {
    Json out = Json::array();
    set.for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Json to_json(const Ladder& ladder) { return Json{{"vs", ladder.vs}, {"ws", ladder.ws}}; }

Json to_json(const PairVerdict& verdict) {
    return Json{{"kind", to_string(verdict.kind)},
                {"density", to_json(verdict.density.value())},
                {"edges", verdict.density.edges},
                {"pairs", verdict.density.pairs},
                {"threshold", to_json(verdict.threshold)}};
}

std::string signature_hex(const VertexSet& signature) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    const auto words = signature.words();
    bool leading = true;
    for (std::size_t w = words.size(); w-- > 0;) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            const auto nibble = static_cast<unsigned>((words[w] >> shift) & 0xF);
            if (leading && nibble == 0) continue;
            leading = false;
            out.push_back(digits[nibble]);
        }
    }
    return out.empty() ? "0" : out;
}

Json to_json(const TypeSpectrum& spectrum) {
    Json classes = Json::array();
    for (std::size_t i = 0; i < spectrum.classes.size(); ++i) {
        const TypeClass& c = spectrum.classes[i];
        classes.push_back(Json{{"signature_hex", signature_hex(c.signature)},
                               {"members", to_json(c.members)},
                               {"mass", to_json(spectrum.masses[i])}});
    }
    return classes;
}

Json to_json(const PartitionParams& params) {
    Json out = Json::object();
    out["construction"] = params.construction;
    if (params.epsilon) out["epsilon"] = to_json(*params.epsilon);
    if (params.sigma) out["sigma"] = *params.sigma;
    if (params.goodness) out["goodness"] = to_json(*params.goodness);
    if (params.tau) out["tau"] = to_json(*params.tau);
    if (params.base_parts) out["base_parts"] = *params.base_parts;
    if (params.chunk_size) out["chunk_size"] = *params.chunk_size;
    if (params.sigma_running_min) out["sigma_running_min"] = true;
    return out;
}

Json to_json(const Partition& partition) {
    Json parts = Json::array();
    for (const auto& p : partition.parts) parts.push_back(to_json(p));
    return Json{{"exceptional", to_json(partition.exceptional)},
                {"parts", std::move(parts)},
                {"params", to_json(partition.params)},
                {"certified", partition.certified}};
}

Json to_json(const RegularityReport& report) {
    Json matrix = Json::array();
    Json densities = Json::array();
    for (std::size_t i = 0; i < report.pair_matrix.size(); ++i) {
        Json row = Json::array();
        Json drow = Json::array();
        for (std::size_t j = 0; j < report.pair_matrix[i].size(); ++j) {
            row.push_back(to_string(report.pair_matrix[i][j]));
            drow.push_back(to_json(report.densities[i][j].value()));
        }
        matrix.push_back(std::move(row));
        densities.push_back(std::move(drow));
    }
    return Json{{"n", report.n},
                {"size_check", report.size_check},
                {"exceptional_fraction", to_json(report.exceptional_fraction)},
                {"exceptional_check", report.exceptional_check},
                {"threshold", to_json(report.threshold)},
                {"diagonal_pass", report.diagonal_pass},
                {"off_diagonal_pass", report.off_diagonal_pass},
                {"pair_matrix", std::move(matrix)},
                {"densities", std::move(densities)},
                {"pass", report.pass}};
}

Json to_json(const FiniteGroup& group) {
    Json out{{"order", group.order()}, {"table", group.table()}};
    if (!group.name().empty()) out["name"] = group.name();
    return out;
}

Json to_json(const CosetReport& report) {
    Json cosets = Json::array();
    for (const auto& c : report.cosets) {
        cosets.push_back(Json{{"representative", c.representative},
                              {"elements", to_json(c.elements)},
                              {"hits", c.hits},
                              {"fraction", to_json(c.fraction)},
                              {"verdict", to_string(c.verdict)}});
    }
    return Json{{"subgroup", to_json(report.subgroup.elements)},
                {"index", report.subgroup.index},
                {"threshold", to_json(report.threshold)},
                {"cosets", std::move(cosets)},
                {"failing", report.failing},
                {"min_margin", to_json(report.min_margin)},
                {"error", to_json(report.error)},
                {"exceptional", to_json(report.exceptional)},
                {"pass", report.pass},
                {"certified", report.certified}};
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw InputError("expected a rational \"p/q\", got " + j.dump(), "parse");
}

VertexSet vertex_set_from_json(const Json& j, std::size_t universe) {
    if (!j.is_array()) throw InputError("expected an array of vertices, got " + j.dump(), "parse");
    VertexSet out(universe);
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) throw InputError("vertex must be a nonnegative integer, got " + v.dump(), "parse");
        const auto x = v.get<std::size_t>();
        if (x >= universe) {
            throw InputError("vertex " + std::to_string(x) + " out of range (n = " + std::to_string(universe) + ")",
                             "partition");
        }
        if (out.contains(x)) throw InputError("vertex " + std::to_string(x) + " listed twice", "partition");
        out.insert(x);
    }
    return out;
}

Partition partition_from_json(const Json& j, std::size_t n) {
    if (!j.is_object() || !j.contains("parts")) throw InputError("partition JSON needs a \"parts\" array", "parse");
    Partition p;
    p.exceptional = j.contains("exceptional") ? vertex_set_from_json(j.at("exceptional"), n) : VertexSet(n);
    if (!j.at("parts").is_array()) throw InputError("\"parts\" must be an array", "parse");
    for (const auto& part : j.at("parts")) p.parts.push_back(vertex_set_from_json(part, n));
    p.params.construction = "input";
    if (j.contains("params") && j.at("params").is_object()) {
        const Json& q = j.at("params");
        if (q.contains("construction")) p.params.construction = q.at("construction").get<std::string>();
        if (q.contains("epsilon")) p.params.epsilon = rational_from_json(q.at("epsilon"));
        if (q.contains("sigma")) p.params.sigma = q.at("sigma").get<std::string>();
        if (q.contains("goodness")) p.params.goodness = rational_from_json(q.at("goodness"));
        if (q.contains("tau")) p.params.tau = rational_from_json(q.at("tau"));
        if (q.contains("base_parts")) p.params.base_parts = q.at("base_parts").get<std::size_t>();
        if (q.contains("chunk_size")) p.params.chunk_size = q.at("chunk_size").get<std::size_t>();
        if (q.contains("sigma_running_min")) p.params.sigma_running_min = q.at("sigma_running_min").get<bool>();
    }
    if (j.contains("certified")) p.certified = j.at("certified").get<bool>();
    return p;
}

FiniteGroup group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("table")) throw InputError("group JSON needs a \"table\"", "parse");
    std::vector<std::vector<Element>> table;
    try {
        table = j.at("table").get<std::vector<std::vector<Element>>>();
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad Cayley table: ") + e.what(), "parse");
    }
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
        throw InputError("\"order\" disagrees with the table size", "group");
    }
    const std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string{};
    return FiniteGroup::from_table(std::move(table), name);
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what(), "parse");
    }
}

}  // namespace stabreg
