#include "fr/incidence.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "fr/errors.hpp"
#include "json.hpp"

namespace fr {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::EmptyStructure: return "EmptyStructure";
        case Errc::InvalidStructure: return "InvalidStructure";
        case Errc::NonUniformBlockSize: return "NonUniformBlockSize";
        case Errc::NonUniformPointDegree: return "NonUniformPointDegree";
        case Errc::ParameterMismatch: return "ParameterMismatch";
        case Errc::BadParameters: return "BadParameters";
        case Errc::NonDivisible: return "NonDivisible";
        case Errc::NotPrime: return "NotPrime";
        case Errc::NotRegular: return "NotRegular";
        case Errc::InadmissibleOrder: return "InadmissibleOrder";
        case Errc::NotSteiner: return "NotSteiner";
        case Errc::RhoOutOfRange: return "RhoOutOfRange";
        case Errc::NotOrthogonal: return "NotOrthogonal";
        case Errc::OrderMismatch: return "OrderMismatch";
        case Errc::KOutOfRange: return "KOutOfRange";
        case Errc::EllOutOfRange: return "EllOutOfRange";
        case Errc::FileTooLarge: return "FileTooLarge";
        case Errc::Unrepairable: return "Unrepairable";
        case Errc::OutOfTheoremRange: return "OutOfTheoremRange";
        case Errc::DegenerateDenominator: return "DegenerateDenominator";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

void normalize_structure(IncidenceStructure& s) {
    if (s.point_ids.empty()) throw Error(Errc::EmptyStructure, "structure has no points");
    if (s.blocks.empty()) throw Error(Errc::EmptyStructure, "structure has no blocks");

    std::unordered_set<int> labels;
    for (int p : s.point_ids) {
        if (p < 0) throw Error(Errc::InvalidStructure, "negative point label " + std::to_string(p));
        if (!labels.insert(p).second)
            throw Error(Errc::InvalidStructure, "duplicate point label " + std::to_string(p));
    }
    for (std::size_t i = 0; i < s.blocks.size(); ++i) {
        auto& b = s.blocks[i];
        if (b.empty())
            throw Error(Errc::InvalidStructure, "block " + std::to_string(i) + " is empty");
        std::sort(b.begin(), b.end());
        if (std::adjacent_find(b.begin(), b.end()) != b.end())
            throw Error(Errc::InvalidStructure,
                        "block " + std::to_string(i) + " contains a repeated point");
        for (int p : b)
            if (!labels.count(p))
                throw Error(Errc::InvalidStructure, "block " + std::to_string(i) +
                                                        " references unknown point " +
                                                        std::to_string(p));
    }
}

FrCode validate_fr(IncidenceStructure s) {
    normalize_structure(s);

    const int n = static_cast<int>(s.blocks.size());
    const int alpha = static_cast<int>(s.blocks[0].size());
    for (int i = 1; i < n; ++i)
        if (static_cast<int>(s.blocks[i].size()) != alpha)
            throw Error(Errc::NonUniformBlockSize,
                        "block " + std::to_string(i) + " has " +
                            std::to_string(s.blocks[i].size()) + " points, expected " +
                            std::to_string(alpha));

    std::unordered_map<int, int> degree;
    for (int p : s.point_ids) degree[p] = 0;
    for (const auto& b : s.blocks)
        for (int p : b) ++degree[p];

    const int rho = degree[s.point_ids[0]];
    for (std::size_t j = 0; j < s.point_ids.size(); ++j) {
        int d = degree[s.point_ids[j]];
        if (d != rho)
            throw Error(Errc::NonUniformPointDegree,
                        "point " + std::to_string(s.point_ids[j]) + " has degree " +
                            std::to_string(d) + ", expected " + std::to_string(rho));
    }

    FrCode c;
    c.structure = std::move(s);
    c.n = n;
    c.alpha = alpha;
    c.rho = rho;
    c.theta = static_cast<int>(c.structure.point_ids.size());
    return c;
}

FrCode dual(const FrCode& c) {
    const auto& s = c.structure;
    std::unordered_map<int, int> pos;
    pos.reserve(s.point_ids.size());
    for (std::size_t j = 0; j < s.point_ids.size(); ++j) pos[s.point_ids[j]] = static_cast<int>(j);

    IncidenceStructure d;
    d.point_ids.resize(c.n);
    for (int i = 0; i < c.n; ++i) d.point_ids[i] = i;
    d.blocks.assign(s.point_ids.size(), {});
    for (int i = 0; i < c.n; ++i)
        for (int p : s.blocks[i]) d.blocks[pos[p]].push_back(i);
    // block indices were appended in ascending order already
    return validate_fr(std::move(d));
}

bool has_repeated_blocks(const FrCode& c) {
    auto blocks = c.structure.blocks;
    std::sort(blocks.begin(), blocks.end());
    return std::adjacent_find(blocks.begin(), blocks.end()) != blocks.end();
}

FrCode disjoint_union(const FrCode& a, const FrCode& b) {
    if (a.alpha != b.alpha || a.rho != b.rho)
        throw Error(Errc::ParameterMismatch,
                    "(alpha,rho)=(" + std::to_string(a.alpha) + "," + std::to_string(a.rho) +
                        ") vs (" + std::to_string(b.alpha) + "," + std::to_string(b.rho) + ")");

    const int offset = *std::max_element(a.structure.point_ids.begin(),
                                         a.structure.point_ids.end()) + 1;
    IncidenceStructure u = a.structure;
    for (int p : b.structure.point_ids) u.point_ids.push_back(p + offset);
    for (const auto& blk : b.structure.blocks) {
        std::vector<int> shifted;
        shifted.reserve(blk.size());
        for (int p : blk) shifted.push_back(p + offset);
        u.blocks.push_back(std::move(shifted));
    }
    return validate_fr(std::move(u));
}

IncidenceStructure relabel_points_to_positions(const IncidenceStructure& s) {
    std::unordered_map<int, int> pos;
    for (std::size_t j = 0; j < s.point_ids.size(); ++j) pos[s.point_ids[j]] = static_cast<int>(j);

    IncidenceStructure r;
    r.point_ids.resize(s.point_ids.size());
    for (std::size_t j = 0; j < s.point_ids.size(); ++j) r.point_ids[j] = static_cast<int>(j);
    r.blocks.reserve(s.blocks.size());
    for (const auto& b : s.blocks) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int p : b) nb.push_back(pos.at(p));
        std::sort(nb.begin(), nb.end());
        r.blocks.push_back(std::move(nb));
    }
    return r;
}

std::string to_json(const IncidenceStructure& s) {
    nlohmann::json j;
    j["points"] = s.point_ids;
    j["blocks"] = s.blocks;
    return j.dump();
}

IncidenceStructure structure_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("points") || !j.contains("blocks"))
        throw Error(Errc::ParseError, "expected object with \"points\" and \"blocks\"");

    IncidenceStructure s;
    try {
        s.point_ids = j["points"].get<std::vector<int>>();
        s.blocks = j["blocks"].get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    normalize_structure(s);
    return s;
}

}  // namespace fr
