#include "bellsim/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bellsim {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& prefix)
{
    for (const auto& item : obj.items())
        if (!allowed.contains(item.key()))
            throw ConfigError(prefix + item.key(), "unknown key");
}

const json& require(const json& obj, const std::string& key, const std::string& prefix)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ConfigError(prefix + key, "missing required key");
    return *it;
}

double finite_number(const json& v, const std::string& dotted)
{
    if (!v.is_number())
        throw ConfigError(dotted, "must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        throw ConfigError(dotted, "must be finite");
    return d;
}

std::array<Setting, 2> settings_list(const json& v, const std::string& dotted)
{
    if (!v.is_array() || v.size() != 2)
        throw ConfigError(dotted, "must be a list of exactly 2 angles in radians");
    return {Setting(finite_number(v[0], dotted)), Setting(finite_number(v[1], dotted))};
}

}  // namespace

ExperimentConfig parse_config(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("document", std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("document", "top level must be an object");

    reject_unknown_keys(doc,
                        {"geometry", "model", "alice_settings", "bob_settings", "trials_per_pair",
                         "seed", "epsilon"},
                        "");

    const json& geo = require(doc, "geometry", "");
    if (!geo.is_object())
        throw ConfigError("geometry", "must be an object");
    reject_unknown_keys(geo, {"source_z", "alice_z", "bob_z", "alice_beta", "bob_beta", "emission_t"},
                        "geometry.");

    ExperimentConfig cfg;
    cfg.geometry.source_z = finite_number(require(geo, "source_z", "geometry."), "geometry.source_z");
    cfg.geometry.alice_z = finite_number(require(geo, "alice_z", "geometry."), "geometry.alice_z");
    cfg.geometry.bob_z = finite_number(require(geo, "bob_z", "geometry."), "geometry.bob_z");
    cfg.geometry.alice_beta =
        finite_number(require(geo, "alice_beta", "geometry."), "geometry.alice_beta");
    cfg.geometry.bob_beta = finite_number(require(geo, "bob_beta", "geometry."), "geometry.bob_beta");
    cfg.geometry.emission_t =
        finite_number(require(geo, "emission_t", "geometry."), "geometry.emission_t");
    try {
        validate_geometry(cfg.geometry);
    } catch (const std::invalid_argument& e) {
        // validate_geometry messages are "<field>: <reason>"
        const std::string msg = e.what();
        const auto sep = msg.find(": ");
        if (sep == std::string::npos)
            throw ConfigError("geometry", msg);
        throw ConfigError("geometry." + msg.substr(0, sep), msg.substr(sep + 2));
    }

    const json& model = require(doc, "model", "");
    if (!model.is_string())
        throw ConfigError("model", "must be a string");
    cfg.model_id = model.get<std::string>();
    if (cfg.model_id != "local" && cfg.model_id != "quantum" && cfg.model_id != "suarez-scarani")
        throw ConfigError("model", "must be one of \"local\", \"quantum\", \"suarez-scarani\"");

    cfg.alice_settings = settings_list(require(doc, "alice_settings", ""), "alice_settings");
    cfg.bob_settings = settings_list(require(doc, "bob_settings", ""), "bob_settings");

    const json& trials = require(doc, "trials_per_pair", "");
    if (!trials.is_number_unsigned() || trials.get<std::uint64_t>() < 1)
        throw ConfigError("trials_per_pair", "must be an integer >= 1");
    cfg.trials_per_pair = trials.get<std::uint64_t>();

    const json& seed = require(doc, "seed", "");
    if (!seed.is_number_unsigned())
        throw ConfigError("seed", "must be a non-negative integer");
    cfg.seed = seed.get<std::uint64_t>();

    if (const auto it = doc.find("epsilon"); it != doc.end()) {
        cfg.epsilon = finite_number(*it, "epsilon");
        if (!(cfg.epsilon > 0.0))
            throw ConfigError("epsilon", "must be > 0");
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("document", "cannot read config file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace bellsim
