#include "hess/serialize.hpp"

#include <limits>
#include <string>

#include "hess/errors.hpp"

namespace hess {

Json polynomial_to_json(const QPolynomial& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) {
        if (c <= std::numeric_limits<long long>::max() && c >= std::numeric_limits<long long>::min())
            arr.push_back(static_cast<long long>(c));
        else
            arr.push_back(c.str());
    }
    return arr;
}

QPolynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgs, "polynomial must be a coefficient array");
    std::vector<BigInt> c;
    for (const auto& x : j) {
        if (x.is_number_integer()) c.emplace_back(x.get<long long>());
        else if (x.is_string()) c.emplace_back(BigInt(x.get<std::string>()));
        else throw Error(ErrorKind::InvalidArgs, "polynomial coefficients must be integers");
    }
    return QPolynomial(std::move(c));
}

Json factored_to_json(const std::map<int, int>& factors) {
    Json arr = Json::array();
    for (const auto& [k, m] : factors) arr.push_back(Json::array({k, m}));
    return arr;
}

std::map<int, int> factored_from_json(const Json& j) {
    std::map<int, int> out;
    for (const auto& pair : j) out[pair.at(0).get<int>()] += pair.at(1).get<int>();
    return out;
}

Json ideal_to_json(const RootSet& s) { return s.indices(); }

RootSet ideal_from_indices(const RootSystem& rs, const std::vector<int>& indices) {
    RootSet s = rs.empty_set();
    for (int i : indices) {
        if (i < 0 || i >= rs.num_positive())
            throw Error(ErrorKind::InvalidArgs, "root index " + std::to_string(i) + " outside 0.." +
                                                    std::to_string(rs.num_positive() - 1));
        s.insert(i);
    }
    return s;
}

RootSet ideal_from_json(const RootSystem& rs, const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgs, "ideal must be an index array");
    return ideal_from_indices(rs, j.get<std::vector<int>>());
}

Json hessenberg_to_json(const PartialHessenbergFunction& f) {
    return Json{{"n", f.n}, {"K", f.K}, {"h", f.values}};
}

PartialHessenbergFunction hessenberg_from_json(const Json& j) {
    PartialHessenbergFunction f{j.at("n").get<int>(), j.at("K").get<std::vector<int>>(),
                                j.at("h").get<std::vector<int>>()};
    f.validate();
    return f;
}

Json theta_to_json(const ThetaSet& theta) {
    Json arr = Json::array();
    for (int i : theta.indices()) arr.push_back(i + 1);
    return arr;
}

ThetaSet theta_from_one_based(const RootSystem& rs, const std::vector<int>& one_based) {
    std::vector<int> zero;
    for (int i : one_based) {
        if (i < 1 || i > rs.rank())
            throw Error(ErrorKind::InvalidArgs, "simple index " + std::to_string(i) + " outside 1.." + std::to_string(rs.rank()));
        zero.push_back(i - 1);
    }
    return ThetaSet::from_indices(zero);
}

Json root_to_json(const RootSystem& rs, int index) {
    return Json{{"index", index}, {"height", rs.height(index)}, {"coeffs", rs.root(index).coeffs}};
}

}  // namespace hess
