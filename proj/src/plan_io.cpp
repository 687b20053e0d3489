#include <json.hpp>

#include "pfimi/errors.hpp"
#include "pfimi/scheduler.hpp"

namespace pfimi {

std::string plan_to_json(const PbecPlan& plan, int indent) {
    using nlohmann::json;
    json j;
    j["P"] = plan.P;
    j["alpha"] = plan.alpha;
    j["sample_size"] = plan.sample_size;
    j["pbecs"] = json::array();
    for (const auto& q : plan.pbecs) {
        j["pbecs"].push_back({{"prefix", q.prefix.items()}, {"extensions", q.extensions}, {"est", q.est_count}});
    }
    j["split_prefixes"] = json::array();
    for (const auto& s : plan.split_prefixes) j["split_prefixes"].push_back(s.items());
    j["assignment"] = plan.assignment;
    j["loads"] = plan.loads();
    return j.dump(indent);
}

PbecPlan plan_from_json(const std::string& text) {
    using nlohmann::json;
    PbecPlan plan;
    try {
        json j = json::parse(text);
        plan.P = j.at("P").get<std::size_t>();
        plan.alpha = j.at("alpha").get<double>();
        plan.sample_size = j.at("sample_size").get<std::size_t>();
        for (const auto& q : j.at("pbecs")) {
            Pbec p;
            p.prefix = Itemset(q.at("prefix").get<std::vector<Item>>());
            p.extensions = q.at("extensions").get<std::vector<Item>>();
            p.est_count = q.at("est").get<Count>();
            plan.pbecs.push_back(std::move(p));
        }
        for (const auto& s : j.at("split_prefixes")) plan.split_prefixes.emplace_back(s.get<std::vector<Item>>());
        plan.assignment = j.at("assignment").get<Assignment>();
    } catch (const nlohmann::json::exception& e) {
        throw ParameterError(std::string("malformed plan JSON: ") + e.what());
    }
    if (plan.assignment.size() != plan.P) throw ParameterError("plan assignment size differs from P");
    return plan;
}

}  // namespace pfimi
