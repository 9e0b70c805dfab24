#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

#include "gpid/walgebra.hpp"

namespace gpid {

namespace detail {

inline RatVec parse_rat_vec(const nlohmann::json& arr, int expected) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != expected)
        throw std::invalid_argument("algebra document: coefficient vector of wrong length");
    RatVec v;
    for (const auto& x : arr) {
        if (x.is_number_integer())
            v.push_back(Rat(x.get<long long>()));
        else if (x.is_string())
            v.push_back(rat_from_string(x.get<std::string>()));
        else
            throw std::invalid_argument("algebra document: coefficients must be integers or \"p/q\" strings");
    }
    return v;
}

inline FiniteAlgebra parse_algebra(const nlohmann::json& doc) {
    if (!doc.contains("dim") || !doc.contains("basis") || !doc.contains("mult"))
        throw std::invalid_argument("algebra document: need dim, basis, mult");
    FiniteAlgebra a;
    int d = doc["dim"].get<int>();
    a.basis = doc["basis"].get<std::vector<std::string>>();
    if (static_cast<int>(a.basis.size()) != d)
        throw std::invalid_argument("algebra document: basis length != dim");
    const auto& mult = doc["mult"];
    if (!mult.is_array() || static_cast<int>(mult.size()) != d)
        throw std::invalid_argument("algebra document: mult must be a dim x dim table");
    for (int i = 0; i < d; ++i) {
        if (static_cast<int>(mult[i].size()) != d)
            throw std::invalid_argument("algebra document: mult must be a dim x dim table");
        std::vector<RatVec> row;
        for (int j = 0; j < d; ++j) row.push_back(parse_rat_vec(mult[i][j], d));
        a.mult.push_back(std::move(row));
    }
    return a;
}

} // namespace detail

// Loads and fully validates a W-algebra document (see README for the schema).
inline WAction load_algebra(const nlohmann::json& doc, bool validate_axioms = true) {
    WAction act;
    act.name = doc.value("name", "unnamed");
    if (!doc.contains("W") || !doc.contains("A") || !doc.contains("left") || !doc.contains("right"))
        throw std::invalid_argument("algebra document: need W, A, left, right");
    act.W = detail::parse_algebra(doc["W"]);
    act.A = detail::parse_algebra(doc["A"]);
    int dw = act.W.dim(), da = act.A.dim();
    const auto& left = doc["left"];
    const auto& right = doc["right"];
    if (!left.is_array() || static_cast<int>(left.size()) != dw)
        throw std::invalid_argument("algebra document: left must be a dimW x dimA table");
    for (int i = 0; i < dw; ++i) {
        std::vector<RatVec> row;
        for (int j = 0; j < da; ++j) row.push_back(detail::parse_rat_vec(left[i][j], da));
        act.left.push_back(std::move(row));
    }
    if (!right.is_array() || static_cast<int>(right.size()) != da)
        throw std::invalid_argument("algebra document: right must be a dimA x dimW table");
    for (int j = 0; j < da; ++j) {
        std::vector<RatVec> row;
        for (int i = 0; i < dw; ++i) row.push_back(detail::parse_rat_vec(right[j][i], da));
        act.right.push_back(std::move(row));
    }
    if (doc.contains("parity")) act.parity = doc["parity"].get<std::vector<int>>();
    act.validate(validate_axioms);
    return act;
}

inline WAction load_algebra_file(const std::string& path, bool validate_axioms = true) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open algebra file: " + path);
    nlohmann::json doc;
    in >> doc;
    return load_algebra(doc, validate_axioms);
}

inline nlohmann::json algebra_to_json(const FiniteAlgebra& a) {
    nlohmann::json j;
    j["dim"] = a.dim();
    j["basis"] = a.basis;
    auto vec = [](const RatVec& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Rat& c : v) arr.push_back(rat_to_string(c));
        return arr;
    };
    nlohmann::json mult = nlohmann::json::array();
    for (int i = 0; i < a.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < a.dim(); ++jj) row.push_back(vec(a.mult[i][jj]));
        mult.push_back(row);
    }
    j["mult"] = mult;
    return j;
}

inline nlohmann::json action_to_json(const WAction& act) {
    nlohmann::json j;
    j["name"] = act.name;
    j["W"] = algebra_to_json(act.W);
    j["A"] = algebra_to_json(act.A);
    auto vec = [](const RatVec& v) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Rat& c : v) arr.push_back(rat_to_string(c));
        return arr;
    };
    nlohmann::json left = nlohmann::json::array();
    for (int i = 0; i < act.W.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int jj = 0; jj < act.A.dim(); ++jj) row.push_back(vec(act.left[i][jj]));
        left.push_back(row);
    }
    j["left"] = left;
    nlohmann::json right = nlohmann::json::array();
    for (int jj = 0; jj < act.A.dim(); ++jj) {
        nlohmann::json row = nlohmann::json::array();
        for (int i = 0; i < act.W.dim(); ++i) row.push_back(vec(act.right[jj][i]));
        right.push_back(row);
    }
    j["right"] = right;
    if (act.is_graded()) j["parity"] = act.parity;
    return j;
}

} // namespace gpid
