// JSON views of topologies and bound reports (nlohmann::ordered_json keeps
// the documented key order stable).
#pragma once

#include <json.hpp>

#include "bwkit/bounds.hpp"
#include "bwkit/catalog.hpp"
#include "bwkit/topology.hpp"

namespace bwkit {

using Json = nlohmann::ordered_json;

// Big values degrade to decimal strings instead of losing precision.
inline Json json_int(const BigInt& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return static_cast<int64_t>(v);
    return v.str();
}

inline Json topology_json(const Topology& t) {
    Json j;
    j["servers"] = t.servers;
    j["radices"] = t.radices;
    Json edges = Json::array();
    for (const auto& e : t.edges)
        for (int64_t i = 0; i < e.mult; ++i) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    Json hypers = Json::array();
    for (const auto& he : t.hyperedges) hypers.push_back(he);
    j["hyperedges"] = std::move(hypers);
    Json switches = Json::array();
    for (const auto& sw : t.switches) switches.push_back({{"attached", sw.attached}});
    j["switches"] = std::move(switches);
    j["cut_model"] = cut_model_name(t.cut_model);
    return j;
}

inline Json bound_report_json(const ProductSpec& spec, const LowerBound& lb, const BigInt& ub,
                              const ClosedForm& cf) {
    Json j;
    j["lower"] = {{"rational", rat_str(lb.value)},
                  {"ceil", json_int(lb.ceiling)},
                  {"mode", lb.mode == BoundMode::Strict ? "strict" : "generalized"}};
    j["upper"] = json_int(ub);
    switch (cf.kind) {
        case ClosedForm::Kind::Exact:
            j["closed_form"] = json_int(cf.exact);
            break;
        case ClosedForm::Kind::Interval:
            j["closed_form"] = {rat_str(cf.lo), bigint_str(cf.hi)};
            break;
        case ClosedForm::Kind::None:
            j["closed_form"] = nullptr;
            break;
    }
    PsiValue p = psi(spec);
    j["psi"] = json_int(p.psi);
    j["alpha"] = p.alpha;
    return j;
}

}  // namespace bwkit
