#include <json.hpp>

#include "dicke/errors.hpp"
#include "dicke/model.hpp"

namespace dicke {

namespace {

using Json = nlohmann::json;

struct Key {
    const char* name;
    std::optional<double> ParamSet::*member;
};

constexpr Key kKeys[] = {
    {"omega0", &ParamSet::omega0}, {"Omega", &ParamSet::Omega},   {"g1", &ParamSet::g1},
    {"g2", &ParamSet::g2},         {"lambda", &ParamSet::lambda}, {"beta", &ParamSet::beta},
};

}  // namespace

ParamSet parse_params_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DomainError("config", std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DomainError("config", "expected a JSON object");

    ParamSet out;
    for (const auto& [name, value] : doc.items()) {
        const Key* key = nullptr;
        for (const auto& k : kKeys) {
            if (name == k.name) key = &k;
        }
        if (key == nullptr) throw DomainError(name, "unknown key");
        if (!value.is_number()) throw DomainError(name, "must be a number");
        out.*(key->member) = value.get<double>();
    }
    return out;
}

std::string dump_params_json(const ParamSet& params) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& k : kKeys) {
        if (const auto& v = params.*(k.member)) doc[k.name] = *v;
    }
    return doc.dump();
}

}  // namespace dicke
