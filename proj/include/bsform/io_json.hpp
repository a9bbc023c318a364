#ifndef BSFORM_IO_JSON_HPP
#define BSFORM_IO_JSON_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bsform/euler.hpp"
#include "bsform/seed.hpp"
#include "bsform/word.hpp"

namespace bsform {

using Json = nlohmann::ordered_json;

// {"n": 4, "blocks": [{"k": 2, "a": 3}, ...]}
inline Json seed_to_json(const SeedData& seed) {
    Json j;
    j["n"] = seed.n;
    j["blocks"] = Json::array();
    for (const auto& b : seed.blocks)
        j["blocks"].push_back(Json{{"k", b.k}, {"a", b.a}});
    return j;
}

inline SeedData seed_from_json(const Json& j) {
    const Json& obj = j.contains("seed") ? j.at("seed") : j;  // accept compute output too
    SeedData seed;
    if (!obj.contains("n") || !obj.at("n").is_number_integer())
        throw std::invalid_argument("seed: field \"n\" missing or not an integer");
    seed.n = obj.at("n").get<int>();
    if (!obj.contains("blocks") || !obj.at("blocks").is_array())
        throw std::invalid_argument("seed: field \"blocks\" missing or not an array");
    for (const auto& jb : obj.at("blocks")) {
        if (!jb.contains("k") || !jb.contains("a") ||
            !jb.at("k").is_number_integer() || !jb.at("a").is_number_integer())
            throw std::invalid_argument("seed: each block needs integer fields \"k\" and \"a\"");
        seed.blocks.push_back({jb.at("k").get<int>(), jb.at("a").get<int>()});
    }
    seed.validate();
    return seed;
}

inline SeedData seed_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return seed_from_json(j);
}

inline Json factorization_to_json(const Factorization& f) {
    Json arr = Json::array();
    for (const auto& [p, e] : f)
        arr.push_back(Json::array({p.get_str(), e}));
    return arr;
}

// Big integers are carried as decimal strings.
inline Json compute_result_to_json(const ComputeResult& r) {
    Json j;
    j["seed"] = seed_to_json(r.seed);
    j["N"] = r.N;
    j["len_x"] = r.len_x;
    j["C_direct"] = r.C_direct.get_str();
    j["C_euler"] = r.C_euler.get_str();
    j["sign"] = r.sign;
    j["factorization"] = factorization_to_json(r.factorization);
    return j;
}

inline Json permutation_to_json(const Permutation& w) {
    return Json(w.one_line());  // one-line notation, e.g. [3,1,2]
}

inline Json root_to_json(const Root& r) {
    return Json{{"i", r.i}, {"j", r.j}};
}

inline Json fixed_point_list_to_json(const SeedData& seed, const Permutation& target,
                                     const SubexprSearch& search) {
    Json j;
    j["seed"] = seed_to_json(seed);
    j["target"] = permutation_to_json(target);
    j["complete"] = search.complete;
    j["count"] = search.solutions.size();
    j["points"] = Json::array();
    for (const auto& e : search.solutions)
        j["points"].push_back(e.to_string());
    return j;
}

inline Json weight_multisets_to_json(const SeedData& seed,
                                     const std::vector<std::pair<Subexpression, std::vector<Root>>>& rows) {
    Json j;
    j["seed"] = seed_to_json(seed);
    j["points"] = Json::array();
    for (const auto& [e, weights] : rows) {
        Json row;
        row["bits"] = e.to_string();
        row["normal_weights"] = Json::array();
        for (const Root& r : weights)
            row["normal_weights"].push_back(root_to_json(r));
        j["points"].push_back(row);
    }
    return j;
}

} // namespace bsform

#endif
