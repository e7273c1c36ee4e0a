#include "bollobas/io.hpp"

#include <istream>

#include "json.hpp"

namespace bollobas::io {

using Json = nlohmann::ordered_json;

namespace {

Json mask_to_json(SubsetMask m) {
    Json arr = Json::array();
    for (int e : m.elements()) arr.push_back(e);
    return arr;
}

SubsetMask mask_from_json(const Json& arr, GroundSize ground, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + ": element list expected");
    SubsetMask m;
    for (const Json& v : arr) {
        if (!v.is_number_integer())
            throw ParseError(std::string(what) + ": element labels must be integers");
        const std::int64_t e = v.get<std::int64_t>();
        if (e < 1 || e > ground.n)
            throw ParseError(std::string(what) + ": element " + std::to_string(e) +
                             " outside [1, " + std::to_string(ground.n) + "]");
        m.bits |= 1ull << (e - 1);
    }
    return m;
}

GroundSize ground_from_json(const Json& obj) {
    if (!obj.contains("n") || !obj.at("n").is_number_integer())
        throw ParseError("system: integer field \"n\" required");
    const std::int64_t n = obj.at("n").get<std::int64_t>();
    if (n < 0 || n > 64) throw ParseError("system: n outside [0, 64]");
    return GroundSize(static_cast<int>(n));
}

Json parse_object(const std::string& line) {
    Json obj = Json::parse(line, nullptr, false);
    if (obj.is_discarded()) throw ParseError("not valid JSON");
    if (!obj.is_object()) throw ParseError("system line must be a JSON object");
    return obj;
}

SetPairSystem set_pair_system_from_json(const Json& obj) {
    SetPairSystem system{ground_from_json(obj), {}};
    if (!obj.contains("pairs") || !obj.at("pairs").is_array())
        throw ParseError("system: array field \"pairs\" required");
    for (const Json& p : obj.at("pairs")) {
        if (!p.is_object() || !p.contains("A") || !p.contains("B"))
            throw ParseError("pair: object with \"A\" and \"B\" required");
        system.pairs.push_back({mask_from_json(p.at("A"), system.ground, "A"),
                                mask_from_json(p.at("B"), system.ground, "B")});
    }
    return system;
}

DPartitionSystem dpartition_system_from_json(const Json& obj) {
    DPartitionSystem system{ground_from_json(obj), 0, {}};
    if (!obj.contains("d") || !obj.at("d").is_number_integer())
        throw ParseError("system: integer field \"d\" required");
    system.d = obj.at("d").get<int>();
    if (system.d < 1) throw ParseError("system: d must be >= 1");
    if (!obj.contains("members") || !obj.at("members").is_array())
        throw ParseError("system: array field \"members\" required");
    for (const Json& m : obj.at("members")) {
        if (!m.is_object() || !m.contains("blocks") || !m.at("blocks").is_array())
            throw ParseError("member: object with array field \"blocks\" required");
        DPartition part;
        for (const Json& b : m.at("blocks"))
            part.blocks.push_back(mask_from_json(b, system.ground, "block"));
        if (part.d() != system.d)
            throw ParseError("member: expected " + std::to_string(system.d) + " blocks");
        if (!part.disjoint()) throw ParseError("member: blocks are not pairwise disjoint");
        system.members.push_back(std::move(part));
    }
    return system;
}

}  // namespace

std::string to_json_line(const SetPairSystem& system) {
    Json obj;
    obj["n"] = system.ground.n;
    obj["pairs"] = Json::array();
    for (const SetPair& p : system.pairs)
        obj["pairs"].push_back(Json{{"A", mask_to_json(p.A)}, {"B", mask_to_json(p.B)}});
    return obj.dump();
}

std::string to_json_line(const DPartitionSystem& system) {
    Json obj;
    obj["n"] = system.ground.n;
    obj["d"] = system.d;
    obj["members"] = Json::array();
    for (const DPartition& m : system.members) {
        Json blocks = Json::array();
        for (SubsetMask b : m.blocks) blocks.push_back(mask_to_json(b));
        obj["members"].push_back(Json{{"blocks", blocks}});
    }
    return obj.dump();
}

AnySystem parse_system_line(const std::string& line) {
    Json obj = parse_object(line);
    AnySystem out;
    if (obj.contains("pairs")) {
        out.kind = SystemKind::SetPairs;
        out.pairs = set_pair_system_from_json(obj);
    } else if (obj.contains("members")) {
        out.kind = SystemKind::DPartitions;
        out.partitions = dpartition_system_from_json(obj);
    } else {
        throw ParseError("system: either \"pairs\" or \"members\" required");
    }
    return out;
}

SetPairSystem parse_set_pair_system(const std::string& line) {
    return set_pair_system_from_json(parse_object(line));
}

DPartitionSystem parse_dpartition_system(const std::string& line) {
    return dpartition_system_from_json(parse_object(line));
}

std::vector<AnySystem> read_systems(std::istream& in) {
    std::vector<AnySystem> out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            out.push_back(parse_system_line(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_number);
        }
    }
    return out;
}

std::string certificate_to_json(const Certificate& cert) {
    Json obj;
    obj["m"] = cert.m;
    obj["ambient"] = cert.ambient;
    obj["reduced_ambient"] = cert.reduced_ambient;
    obj["t"] = cert.t;
    obj["bound"] = cert.bound;
    Json pattern = Json::array();
    for (const auto& row : cert.pattern) {
        Json r = Json::array();
        for (std::uint8_t cell : row) r.push_back(static_cast<int>(cell));
        pattern.push_back(r);
    }
    obj["pattern"] = pattern;
    obj["rank"] = cert.rank;
    obj["verdict"] = cert.verdict;
    if (cert.offending)
        obj["offending"] = Json::array({cert.offending->first + 1, cert.offending->second + 1});
    else
        obj["offending"] = nullptr;
    if (cert.uniform_grade_bound)
        obj["uniform_grade_bound"] = *cert.uniform_grade_bound;
    obj["field_prime"] = cert.field_prime;
    obj["seed"] = cert.seed;
    return obj.dump();
}

std::string report_to_json(const SearchReport& report) {
    Json obj;
    obj["query"] = report.query;
    obj["n"] = report.n;
    if (report.t) obj["t"] = report.t;
    if (report.d) obj["d"] = report.d;
    obj["skew"] = report.skew;
    obj["mode"] = report.mode;
    obj["optimum_weight"] = rational_to_string(report.optimum_weight);
    obj["optimum_size"] = report.optimum_size;
    if (report.witness_pairs)
        obj["witness"] = Json::parse(to_json_line(*report.witness_pairs));
    if (report.witness_members)
        obj["witness"] = Json::parse(to_json_line(*report.witness_members));
    obj["nodes"] = report.nodes;
    obj["exhaustive"] = report.exhaustive;
    if (!report.conjecture_comparison.empty()) {
        obj["conjecture_comparison"] = report.conjecture_comparison;
        obj["aux_max_size"] = report.aux_max_size;
    }
    obj["timing"] = Json{{"wall_ms", report.wall_ms}};
    return obj.dump();
}

}  // namespace bollobas::io
