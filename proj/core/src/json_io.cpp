#include "superjack/json_io.hpp"

#include <sstream>

#include <json.hpp>

#include "superjack/error.hpp"

namespace superjack {

namespace {

using nlohmann::json;

json partition_to_json(const Partition& lambda) { return json(lambda.parts()); }

Partition partition_from_json(const json& j) {
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(std::move(parts));
}

std::string quote_csv(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [lambda, c] : f.terms())
        terms.push_back({{"partition", partition_to_json(lambda)}, {"coeff", to_string(c)}});
    const json j = {{"basis", basis_name(f.basis())}, {"terms", terms}};
    return j.dump();
}

SymFunc symfunc_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        SymFunc f(parse_basis(j.at("basis").get<std::string>()));
        for (const auto& t : j.at("terms"))
            f.add_term(partition_from_json(t.at("partition")), parse_theta_function(t.at("coeff").get<std::string>()));
        return f;
    } catch (const error&) {
        throw;
    } catch (const std::exception& e) {
        throw error(errc::invalid_argument, std::string("malformed SymFunc JSON: ") + e.what());
    }
}

std::string to_json(const MPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exps", e}, {"coeff", to_string(c)}});
    const json j = {{"n", p.n()}, {"m", p.m()}, {"terms", terms}};
    return j.dump();
}

MPoly mpoly_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        MPoly p(j.at("n").get<int>(), j.at("m").get<int>());
        for (const auto& t : j.at("terms")) {
            std::vector<int> e;
            for (const auto& v : t.at("exps")) e.push_back(v.get<int>());
            p.add_term(e, parse_theta_function(t.at("coeff").get<std::string>()));
        }
        return p;
    } catch (const error&) {
        throw;
    } catch (const std::exception& e) {
        throw error(errc::invalid_argument, std::string("malformed MPoly JSON: ") + e.what());
    }
}

std::string to_json(const GramReport& rep) {
    json labels = json::array();
    for (const auto& lambda : rep.labels) labels.push_back(partition_to_json(lambda));
    json matrix = json::array();
    for (const auto& row : rep.matrix) {
        json jrow = json::array();
        for (const auto& entry : row) jrow.push_back(to_string(entry));
        matrix.push_back(jrow);
    }
    json diag = json::array();
    for (const auto& entry : rep.expected_diagonal) diag.push_back(to_string(entry));
    json j = {{"n", rep.n},           {"m", rep.m},
              {"degree", rep.degree}, {"labels", labels},
              {"matrix", matrix},     {"expected_diagonal", diag},
              {"family", rep.family}, {"pass", rep.pass}};
    if (!rep.provenance.empty()) j["provenance"] = rep.provenance;
    return j.dump();
}

std::string to_csv(const SymFunc& f) {
    std::ostringstream os;
    os << "partition,coeff\n";
    for (const auto& [lambda, c] : f.terms()) os << quote_csv(to_string(lambda)) << "," << to_string(c) << "\n";
    return os.str();
}

std::string to_csv(const MPoly& p) {
    std::ostringstream os;
    os << "exps,coeff\n";
    for (const auto& [e, c] : p.terms()) {
        std::string label;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (k) label += ",";
            label += std::to_string(e[k]);
        }
        os << quote_csv(label) << "," << to_string(c) << "\n";
    }
    return os.str();
}

std::string to_csv(const GramReport& rep) {
    std::ostringstream os;
    os << "";
    for (const auto& lambda : rep.labels) os << "," << quote_csv(to_string(lambda));
    os << "\n";
    for (std::size_t i = 0; i < rep.matrix.size(); ++i) {
        os << quote_csv(to_string(rep.labels[i]));
        for (const auto& entry : rep.matrix[i]) os << "," << to_string(entry);
        os << "\n";
    }
    os << "expected_diagonal";
    for (const auto& entry : rep.expected_diagonal) os << "," << to_string(entry);
    os << "\n";
    os << "pass," << (rep.pass ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace superjack
