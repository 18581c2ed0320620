#include "qlink/json_io.hpp"

#include "qlink/errors.hpp"

#include <json.hpp>

namespace qlink {

using nlohmann::json;

namespace {

json laurent_to_obj(const Laurent& p) {
    json coeffs = json::object();
    for (const auto& [e, c] : p.coeffs()) coeffs[std::to_string(e)] = c.get_str();
    std::string v = var_name(p.var());
    if (p.var() == Var::TQ) v = "t^(1/4)";
    return json{{"var", v}, {"coeffs", coeffs}};
}

Var var_from_name(const std::string& name) {
    if (name == "A") return Var::A;
    if (name == "s") return Var::S;
    if (name == "t^(1/4)" || name == "t") return Var::TQ;
    throw ParseError("unknown variable '" + name + "'");
}

Laurent laurent_from_obj(const json& j) {
    Laurent p(var_from_name(j.at("var").get<std::string>()));
    for (const auto& [key, val] : j.at("coeffs").items()) {
        mpz_class c(val.is_string() ? val.get<std::string>() : std::to_string(val.get<long>()));
        p += Laurent::monomial(p.var(), std::stol(key), c);
    }
    return p;
}

json cyclotomic_to_obj(const Cyclotomic& v) {
    json coeffs = json::array();
    for (const auto& q : v.coords()) coeffs.push_back(q.get_str());
    return json{{"order", v.field()->order()}, {"coeffs", coeffs}};
}

json sqrt_ext_to_obj(const SqrtExt& v) {
    auto num = v.numeric();
    return json{{"a", cyclotomic_to_obj(v.base_part())},
                {"b", cyclotomic_to_obj(v.root_part())},
                {"radicand", cyclotomic_to_obj(v.radicand())},
                {"numeric", {{"re", num.real()}, {"im", num.imag()}}}};
}

} // namespace

std::string laurent_json(const Laurent& p) { return laurent_to_obj(p).dump(); }

Laurent laurent_from_json(const std::string& text) {
    return laurent_from_obj(json::parse(text));
}

std::string matrix_json(const SparseMatrix<Laurent>& m) {
    json entries = json::array();
    for (const auto& [rc, v] : m.entries())
        entries.push_back(json::array({rc.first, rc.second, canonical_string(v)}));
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}}.dump();
}

std::string braid_json(const BraidWord& b) {
    json letters = json::array();
    for (const auto& [i, sign] : b.letters) letters.push_back(json::array({i, sign}));
    return json{{"strands", b.strands}, {"letters", letters}}.dump();
}

BraidWord braid_from_json(const std::string& text) {
    json j = json::parse(text);
    BraidWord b;
    b.strands = j.at("strands").get<int>();
    for (const auto& e : j.at("letters"))
        b.letters.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return b;
}

std::string diagram_json(const LinkDiagram& d) {
    json crossings = json::array();
    for (const auto& cr : d.crossings())
        crossings.push_back(json::array({cr.arc[0], cr.arc[1], cr.arc[2], cr.arc[3]}));
    json j{{"crossings", crossings}, {"free_loops", d.free_loops()}};
    if (!d.name().empty()) j["name"] = d.name();
    return j.dump();
}

LinkDiagram diagram_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<Crossing> crossings;
    for (const auto& e : j.at("crossings"))
        crossings.push_back(
            {{e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>()}});
    int loops = j.value("free_loops", 0);
    return LinkDiagram(std::move(crossings), loops, j.value("name", ""));
}

std::string surgery_json(const SurgeryPresentation& p) {
    json j{{"pd", pd_string(p.diagram)}, {"framings", p.framings}};
    if (!p.name.empty()) j["name"] = p.name;
    return j.dump();
}

SurgeryPresentation surgery_from_json(const std::string& text) {
    json j = json::parse(text);
    SurgeryPresentation p;
    p.diagram = parse_pd(j.at("pd").get<std::string>());
    for (const auto& f : j.at("framings")) p.framings.push_back(f.get<long>());
    p.name = j.value("name", "");
    p.validate();
    return p;
}

std::string sqrt_ext_json(const SqrtExt& v) { return sqrt_ext_to_obj(v).dump(); }

std::string modular_data_json(const ModularData& md) {
    json j;
    j["l"] = md.level();
    j["order"] = md.rc.order;
    j["exponent"] = md.rc.exponent;
    j["labels"] = md.labels;
    json qd = json::array(), tw = json::array();
    for (const auto& q : md.qdims) qd.push_back(cyclotomic_to_obj(q));
    for (const auto& t : md.twists) tw.push_back(cyclotomic_to_obj(t));
    j["qdims"] = qd;
    j["twists"] = tw;
    json h = json::array();
    for (const auto& row : md.hopf) {
        json r = json::array();
        for (const auto& v : row) r.push_back(cyclotomic_to_obj(v));
        h.push_back(r);
    }
    j["hopf"] = h;
    j["fusion"] = md.fusion_mult;
    j["total_dim"] = cyclotomic_to_obj(md.total_dim);
    j["K"] = sqrt_ext_to_obj(md.K);
    j["u_plus"] = sqrt_ext_to_obj(md.u_plus);
    j["u_minus"] = sqrt_ext_to_obj(md.u_minus);
    return j.dump();
}

std::string rt_value_json(const RTValue& v) {
    json j;
    j["corrected"] = sqrt_ext_to_obj(v.corrected);
    j["biframed"] = sqrt_ext_to_obj(v.biframed);
    j["signature"] = v.sig;
    auto num = v.numeric();
    j["numeric"] = {{"re", num.real()}, {"im", num.imag()}};
    return j.dump();
}

} // namespace qlink
