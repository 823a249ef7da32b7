#include "gkt/report.hpp"

namespace gkt {

Json integer_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Json vector_json(const IntVector& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

Json columns_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(vector_json(m.col(j)));
    return a;
}

Json conditions_json(const ConditionReport& r) {
    Json a = Json::array();
    for (const auto& v : r.verdicts) {
        Json o;
        o["name"] = v.name;
        o["passed"] = v.passed;
        o["witness"] = v.witness;
        o["note"] = v.note;
        a.push_back(std::move(o));
    }
    return a;
}

namespace {

Json classes_json(const std::map<VertexId, Element>& classes) {
    Json o = Json::object();
    for (const auto& [v, e] : classes) o[v] = vector_json(e);
    return o;
}

}  // namespace

Json ktheory_json(const FiniteGraph& f, const KTheoryResult& k) {
    Json o;
    o["k0"] = format_group(k.k0);
    o["k1"] = format_group(k.k1);
    o["k0_classes"] = classes_json(k.k0_class_of_vertex);
    o["k1_lattice"] = columns_json(k.k1_lattice);
    o["relation_set"] = f.relation_set();
    o["stabilized"] = true;
    o["window"] = nullptr;
    return o;
}

Json chain_ktheory_json(const ChainKTheory& k) {
    Json o;
    o["k0"] = format_group(k.k0);
    o["k1"] = format_group(k.k1);
    o["k0_classes"] = classes_json(k.k0_classes);
    o["stabilized"] = k.stabilized;
    o["window"] = k.window;
    o["representative_layer"] = k.representative_layer;
    o["forced"] = k.forced;
    Json layers = Json::array();
    for (const auto& l : k.layers) {
        Json e;
        e["k0"] = format_group(l.k0);
        e["k1"] = format_group(l.k1);
        layers.push_back(std::move(e));
    }
    o["layers"] = std::move(layers);
    o["conditions"] = conditions_json(k.conditions);
    return o;
}

Json les_json(const LesReport& r) {
    Json o;
    o["k1_toeplitz"] = format_group(r.toeplitz.k1);
    o["k1_full"] = format_group(r.full.k1);
    o["ideal_rank"] = r.exempt.size();
    o["k0_toeplitz"] = format_group(r.toeplitz.k0);
    o["k0_full"] = format_group(r.full.k0);
    Json nodes = Json::array();
    for (const auto& n : r.nodes) {
        Json e;
        e["node"] = n.name;
        e["passed"] = n.passed;
        e["detail"] = n.detail;
        nodes.push_back(std::move(e));
    }
    o["nodes"] = std::move(nodes);
    o["passed"] = r.all_passed();
    return o;
}

Json synthesis_json(const SynthesisResult& r) {
    Json o;
    o["case"] = case_name(r.case_tag);
    Json params;
    params["l"] = r.ell;
    params["p"] = r.p;
    params["k"] = r.torsion.size();
    params["torsion"] = r.torsion;
    o["parameters"] = std::move(params);
    o["verified"] = r.verified;
    o["k0"] = format_group(r.k0);
    o["k1"] = format_group(r.k1);
    o["stabilized"] = r.stabilized;
    o["conditions"] = conditions_json(r.conditions);
    return o;
}

}  // namespace gkt
