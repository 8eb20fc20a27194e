#include "relnodes/json_io.hpp"

#include "relnodes/errors.hpp"

namespace relnodes {

Json poly_to_json(const MultiPoly& p) {
    Json j;
    auto vars = p.support_vars();
    Json names = Json::array();
    for (const auto& v : vars) names.push_back(v.name());
    j["vars"] = names;
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json term;
        term["coeff"] = rat_to_string(c);
        std::vector<int> exps(vars.size(), 0);
        for (const auto& [v, e] : m) {
            auto it = std::find(vars.begin(), vars.end(), v);
            exps[it - vars.begin()] = e;
        }
        term["exps"] = exps;
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    std::vector<Var> vars;
    for (const auto& name : j.at("vars")) vars.push_back(Var::parse(name.get<std::string>()));
    MultiPoly p;
    for (const auto& term : j.at("terms")) {
        Rat coeff = rat_from_string(term.at("coeff").get<std::string>());
        const auto& exps = term.at("exps");
        if (exps.size() != vars.size())
            throw DomainError("polynomial JSON: exponent vector length mismatch");
        Monomial m;
        for (size_t i = 0; i < vars.size(); ++i) {
            int e = exps[i].get<int>();
            if (e != 0) m.push_back({vars[i], e});
        }
        p += MultiPoly::monomial(coeff, m);
    }
    return p;
}

Json diagram_to_json(const FloorDiagram& d) {
    Json j;
    j["d"] = d.degree();
    Json edges = Json::array();
    for (const auto& e : d.edges()) edges.push_back({e.src, e.dst, e.w});
    j["edges"] = edges;
    return j;
}

FloorDiagram diagram_from_json(const Json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0), e.at(1), e.at(2)});
    return FloorDiagram(j.at("d").get<int>(), std::move(edges));
}

namespace {

Json edges_to_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& e : edges) out.push_back({e.src, e.dst, e.w});
    return out;
}

Json kappa_to_json(const std::vector<int>& kappa) {
    Json out = Json::array();
    for (int k : kappa) out.push_back(k);
    return out;
}

Json matrix_to_json(const SupportMatrix& m) {
    int rows = m.length();
    int cols = 0;
    for (auto& [rc, v] : m.entries()) cols = std::max(cols, rc.second);
    Json out = Json::array();
    for (int i = 1; i <= rows; ++i) {
        Json row = Json::array();
        for (int j = 1; j <= cols; ++j) row.push_back(m.at(i, j));
        out.push_back(row);
    }
    return out;
}

}  // namespace

Json template_to_json(const Template& t) {
    auto inv = t.invariants();
    Json j;
    j["l"] = t.length();
    j["edges"] = edges_to_json(t.edges());
    Json invariants;
    invariants["delta"] = inv.cogenus;
    invariants["mu"] = inv.mu.str();
    invariants["kappa"] = kappa_to_json(inv.kappa);
    invariants["k_min"] = inv.k_min;
    invariants["P"] = t.poly().to_string();
    invariants["s"] = inv.s;
    j["invariants"] = invariants;
    return j;
}

Json ext_template_to_json(const ExtendedTemplate& t) {
    auto inv = t.invariants();
    Json j;
    Json lambda;
    lambda["l"] = t.length();
    lambda["edges"] = edges_to_json(t.lambda());
    j["lambda"] = lambda;
    j["A"] = matrix_to_json(t.A());
    j["B"] = matrix_to_json(t.B());
    Json invariants;
    invariants["delta"] = inv.cogenus;
    invariants["mu"] = t.lambda_multiplicity().str();
    invariants["kappa"] = kappa_to_json(inv.kappa);
    invariants["d_min"] = inv.d_min;
    invariants["s"] = inv.s;
    j["invariants"] = invariants;
    j["q"] = poly_to_json(t.q_poly());
    return j;
}

Json node_polynomial_to_json(const NodePolynomial& np) {
    Json j = poly_to_json(np.poly);
    j["delta"] = np.delta;
    j["domain"] = "|beta|>=delta";
    return j;
}

NodePolynomial node_polynomial_from_json(const Json& j) {
    NodePolynomial np;
    np.delta = j.at("delta").get<int>();
    np.poly = poly_from_json(j);
    return np;
}

}  // namespace relnodes
