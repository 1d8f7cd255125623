#include "airstack/cli/scenario_json.hpp"

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "airstack/core/error.hpp"

namespace airstack::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw core::Error("ParseError", path + ": " + why);
}

void require_object(const json& v, const std::string& path) {
    if (!v.is_object())
        fail(path, "expected an object");
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> known) {
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) {
                ok = true;
                break;
            }
        if (!ok)
            fail(path.empty() ? key : path + "." + key, "unknown key");
    }
}

std::string join(const std::string& path, const char* key) {
    return path.empty() ? key : path + "." + key;
}

std::uint64_t get_u64(const json& obj, const std::string& path, const char* key,
                      std::uint64_t def) {
    if (!obj.contains(key))
        return def;
    const json& v = obj.at(key);
    if (!v.is_number_integer() && !v.is_number_unsigned())
        fail(join(path, key), "expected an unsigned integer");
    if (v.is_number_integer() && v.get<std::int64_t>() < 0)
        fail(join(path, key), "expected an unsigned integer");
    return v.get<std::uint64_t>();
}

double get_num(const json& obj, const std::string& path, const char* key, double def) {
    if (!obj.contains(key))
        return def;
    const json& v = obj.at(key);
    if (!v.is_number())
        fail(join(path, key), "expected a number");
    return v.get<double>();
}

bool get_bool(const json& obj, const std::string& path, const char* key, bool def) {
    if (!obj.contains(key))
        return def;
    const json& v = obj.at(key);
    if (!v.is_boolean())
        fail(join(path, key), "expected a boolean");
    return v.get<bool>();
}

std::string get_str(const json& obj, const std::string& path, const char* key,
                    const std::string& def, bool required = false) {
    if (!obj.contains(key)) {
        if (required)
            fail(join(path, key), "missing required key");
        return def;
    }
    const json& v = obj.at(key);
    if (!v.is_string())
        fail(join(path, key), "expected a string");
    return v.get<std::string>();
}

core::Vec2 get_point(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(path, "expected a point [x, y]");
    return core::Vec2{v[0].get<double>(), v[1].get<double>()};
}

core::MacAddress get_mac(const json& obj, const std::string& path, const char* key) {
    std::string text = get_str(obj, path, key, "", true);
    try {
        return core::MacAddress::parse(text);
    } catch (const core::Error& e) {
        fail(join(path, key), e.what());
    }
}

identity::MobilityClass parse_mobility_class(const std::string& name, const std::string& path) {
    if (name == "unknown") return identity::MobilityClass::Unknown;
    if (name == "vehicle") return identity::MobilityClass::Vehicle;
    if (name == "stationary") return identity::MobilityClass::Stationary;
    if (name == "anomalous") return identity::MobilityClass::Anomalous;
    fail(path, "unknown mobility class \"" + name + "\"");
}

spectrum::PathLossParams parse_path_loss(const json& v, const std::string& path) {
    require_object(v, path);
    check_keys(v, path, {"pl0_db", "d0_m", "exponent_n", "noise_sigma_db"});
    spectrum::PathLossParams params;
    params.pl0_db = get_num(v, path, "pl0_db", params.pl0_db);
    params.d0_m = get_num(v, path, "d0_m", params.d0_m);
    params.exponent_n = get_num(v, path, "exponent_n", params.exponent_n);
    params.noise_sigma_db = get_num(v, path, "noise_sigma_db", params.noise_sigma_db);
    return params;
}

identity::ClassifierParams parse_classifier(const json& v, const std::string& path) {
    require_object(v, path);
    check_keys(v, path, {"min_observations", "min_distinct_rsus", "speed_lo_mps", "speed_hi_mps",
                         "max_speed_stddev_mps"});
    identity::ClassifierParams params;
    params.min_observations =
        static_cast<std::size_t>(get_u64(v, path, "min_observations", params.min_observations));
    params.min_distinct_rsus =
        static_cast<std::size_t>(get_u64(v, path, "min_distinct_rsus", params.min_distinct_rsus));
    params.speed_lo_mps = get_num(v, path, "speed_lo_mps", params.speed_lo_mps);
    params.speed_hi_mps = get_num(v, path, "speed_hi_mps", params.speed_hi_mps);
    params.max_speed_stddev_mps =
        get_num(v, path, "max_speed_stddev_mps", params.max_speed_stddev_mps);
    return params;
}

ledger::RuleSet parse_rules(const json& v, const std::string& path) {
    if (!v.is_array())
        fail(path, "expected an array of rules");
    ledger::RuleSet rs;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::string rpath = path + "[" + std::to_string(i) + "]";
        const json& rule = v[i];
        require_object(rule, rpath);
        std::string type = get_str(rule, rpath, "type", "", true);
        if (type == "mobility_class_is") {
            check_keys(rule, rpath, {"type", "class"});
            std::string cls = get_str(rule, rpath, "class", "vehicle");
            rs.rules.push_back(
                ledger::MobilityClassIs{parse_mobility_class(cls, join(rpath, "class"))});
        } else if (type == "oui_allowed") {
            check_keys(rule, rpath, {"type"});
            rs.rules.push_back(ledger::OuiAllowed{});
        } else if (type == "profile_not_expired") {
            check_keys(rule, rpath, {"type"});
            rs.rules.push_back(ledger::ProfileNotExpired{});
        } else if (type == "min_observations") {
            check_keys(rule, rpath, {"type", "count"});
            rs.rules.push_back(ledger::MinObservations{
                static_cast<std::uint32_t>(get_u64(rule, rpath, "count", 5))});
        } else if (type == "speed_within") {
            check_keys(rule, rpath, {"type", "lo_mps", "hi_mps"});
            rs.rules.push_back(ledger::SpeedWithin{get_num(rule, rpath, "lo_mps", 1.0),
                                                   get_num(rule, rpath, "hi_mps", 60.0)});
        } else {
            fail(join(rpath, "type"), "unknown rule type \"" + type + "\"");
        }
    }
    return rs;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw core::Error("ParseError", e.what());
    }
}

}  // namespace

netsim::Scenario parse_scenario_text(const std::string& text) {
    json root = parse_text(text);
    require_object(root, "");
    check_keys(root, "",
               {"seed", "duration_ms", "sense_period_ms", "gossip_period_ms", "move_period_ms",
                "expiry_check_period_ms", "auth_chain_id", "cache_capacity", "profile_expiry_ms",
                "observation_retention", "sensitivity_floor_dbm", "path_loss", "classifier",
                "rules", "oui_allowlist", "municipalities", "vehicles", "rogue_devices",
                "gossip_adjacency"});

    netsim::Scenario sc;
    sc.seed = get_u64(root, "", "seed", sc.seed);
    sc.duration_ms = get_u64(root, "", "duration_ms", sc.duration_ms);
    sc.sense_period_ms = get_u64(root, "", "sense_period_ms", sc.sense_period_ms);
    sc.gossip_period_ms = get_u64(root, "", "gossip_period_ms", sc.gossip_period_ms);
    sc.move_period_ms = get_u64(root, "", "move_period_ms", sc.move_period_ms);
    sc.expiry_check_period_ms =
        get_u64(root, "", "expiry_check_period_ms", sc.expiry_check_period_ms);
    sc.auth_chain_id = get_str(root, "", "auth_chain_id", sc.auth_chain_id);
    sc.cache_capacity = static_cast<std::size_t>(get_u64(root, "", "cache_capacity",
                                                         sc.cache_capacity));
    sc.profile_expiry_ms = get_u64(root, "", "profile_expiry_ms", sc.profile_expiry_ms);
    sc.observation_retention =
        static_cast<std::size_t>(get_u64(root, "", "observation_retention",
                                         sc.observation_retention));
    sc.sensitivity_floor_dbm =
        get_num(root, "", "sensitivity_floor_dbm", sc.sensitivity_floor_dbm);
    if (root.contains("path_loss"))
        sc.path_loss = parse_path_loss(root.at("path_loss"), "path_loss");
    if (root.contains("classifier"))
        sc.classifier = parse_classifier(root.at("classifier"), "classifier");
    if (root.contains("rules"))
        sc.rules = parse_rules(root.at("rules"), "rules");

    if (root.contains("oui_allowlist")) {
        const json& v = root.at("oui_allowlist");
        if (!v.is_array())
            fail("oui_allowlist", "expected an array");
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::string path = "oui_allowlist[" + std::to_string(i) + "]";
            if (!v[i].is_string())
                fail(path, "expected a string");
            try {
                sc.oui_allowlist.push_back(core::Oui::parse(v[i].get<std::string>()));
            } catch (const core::Error& e) {
                fail(path, e.what());
            }
        }
    }

    if (!root.contains("municipalities"))
        fail("municipalities", "missing required key");
    const json& munis = root.at("municipalities");
    if (!munis.is_array())
        fail("municipalities", "expected an array");
    for (std::size_t m = 0; m < munis.size(); ++m) {
        std::string mpath = "municipalities[" + std::to_string(m) + "]";
        const json& muni = munis[m];
        require_object(muni, mpath);
        check_keys(muni, mpath, {"network_id", "rsus"});
        netsim::MunicipalityConfig mc;
        mc.network_id = get_str(muni, mpath, "network_id", "", true);
        if (!muni.contains("rsus"))
            fail(join(mpath, "rsus"), "missing required key");
        const json& rsus = muni.at("rsus");
        if (!rsus.is_array())
            fail(join(mpath, "rsus"), "expected an array");
        for (std::size_t r = 0; r < rsus.size(); ++r) {
            std::string rpath = mpath + ".rsus[" + std::to_string(r) + "]";
            const json& rsu = rsus[r];
            require_object(rsu, rpath);
            check_keys(rsu, rpath,
                       {"interface_id", "position", "tx_power_dbm", "channel", "ssid_open"});
            spectrum::AirInterface iface;
            iface.interface_id = get_str(rsu, rpath, "interface_id", "", true);
            if (!rsu.contains("position"))
                fail(join(rpath, "position"), "missing required key");
            iface.position = get_point(rsu.at("position"), join(rpath, "position"));
            iface.tx_power_dbm = get_num(rsu, rpath, "tx_power_dbm", 20.0);
            iface.channel = static_cast<int>(get_u64(rsu, rpath, "channel", 1));
            iface.ssid_open = get_bool(rsu, rpath, "ssid_open", true);
            iface.owner = spectrum::InterfaceOwner::RoadsideUnit;
            mc.rsus.push_back(std::move(iface));
        }
        sc.municipalities.push_back(std::move(mc));
    }

    if (root.contains("vehicles")) {
        const json& vehicles = root.at("vehicles");
        if (!vehicles.is_array())
            fail("vehicles", "expected an array");
        for (std::size_t i = 0; i < vehicles.size(); ++i) {
            std::string vpath = "vehicles[" + std::to_string(i) + "]";
            const json& v = vehicles[i];
            require_object(v, vpath);
            check_keys(v, vpath, {"mac", "route_polyline", "speed_mps", "tx_power_dbm",
                                  "is_legit_manufacturer", "loop"});
            netsim::VehicleConfig vc;
            vc.mac = get_mac(v, vpath, "mac");
            if (!v.contains("route_polyline"))
                fail(join(vpath, "route_polyline"), "missing required key");
            const json& poly = v.at("route_polyline");
            if (!poly.is_array() || poly.empty())
                fail(join(vpath, "route_polyline"), "expected a nonempty array of points");
            for (std::size_t p = 0; p < poly.size(); ++p)
                vc.route_polyline.push_back(
                    get_point(poly[p], vpath + ".route_polyline[" + std::to_string(p) + "]"));
            vc.speed_mps = get_num(v, vpath, "speed_mps", vc.speed_mps);
            vc.tx_power_dbm = get_num(v, vpath, "tx_power_dbm", vc.tx_power_dbm);
            vc.is_legit_manufacturer =
                get_bool(v, vpath, "is_legit_manufacturer", vc.is_legit_manufacturer);
            vc.loop = get_bool(v, vpath, "loop", vc.loop);
            sc.vehicles.push_back(std::move(vc));
        }
    }

    if (root.contains("rogue_devices")) {
        const json& rogues = root.at("rogue_devices");
        if (!rogues.is_array())
            fail("rogue_devices", "expected an array");
        for (std::size_t i = 0; i < rogues.size(); ++i) {
            std::string rpath = "rogue_devices[" + std::to_string(i) + "]";
            const json& r = rogues[i];
            require_object(r, rpath);
            check_keys(r, rpath, {"mac", "position", "tx_power_dbm"});
            netsim::RogueDeviceConfig rc;
            rc.mac = get_mac(r, rpath, "mac");
            if (!r.contains("position"))
                fail(join(rpath, "position"), "missing required key");
            rc.position = get_point(r.at("position"), join(rpath, "position"));
            rc.tx_power_dbm = get_num(r, rpath, "tx_power_dbm", rc.tx_power_dbm);
            sc.rogue_devices.push_back(std::move(rc));
        }
    }

    if (root.contains("gossip_adjacency")) {
        const json& adj = root.at("gossip_adjacency");
        if (!adj.is_array())
            fail("gossip_adjacency", "expected an array");
        for (std::size_t i = 0; i < adj.size(); ++i) {
            std::string apath = "gossip_adjacency[" + std::to_string(i) + "]";
            const json& pair = adj[i];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
                !pair[1].is_string())
                fail(apath, "expected a pair of interface ids");
            sc.gossip_adjacency.push_back(
                {pair[0].get<std::string>(), pair[1].get<std::string>()});
        }
    }
    return sc;
}

netsim::Scenario load_scenario(const std::string& path) {
    return parse_scenario_text(read_file(path));
}

netsim::FloorConfig parse_floor_config_text(const std::string& text) {
    json root = parse_text(text);
    require_object(root, "");
    check_keys(root, "", {"seed", "k", "floor_height_m", "path_loss", "sensitivity_floor_dbm",
                          "aps", "device"});
    netsim::FloorConfig config;
    config.seed = get_u64(root, "", "seed", config.seed);
    config.k = static_cast<std::size_t>(get_u64(root, "", "k", config.k));
    config.floor_height_m = get_num(root, "", "floor_height_m", config.floor_height_m);
    config.sensitivity_floor_dbm =
        get_num(root, "", "sensitivity_floor_dbm", config.sensitivity_floor_dbm);
    if (root.contains("path_loss"))
        config.path_loss = parse_path_loss(root.at("path_loss"), "path_loss");

    if (!root.contains("aps"))
        fail("aps", "missing required key");
    const json& aps = root.at("aps");
    if (!aps.is_array() || aps.empty())
        fail("aps", "expected a nonempty array");
    for (std::size_t i = 0; i < aps.size(); ++i) {
        std::string apath = "aps[" + std::to_string(i) + "]";
        const json& ap = aps[i];
        require_object(ap, apath);
        check_keys(ap, apath, {"interface_id", "floor", "position", "tx_power_dbm"});
        netsim::FloorAp fa;
        fa.interface_id = get_str(ap, apath, "interface_id", "", true);
        fa.floor = static_cast<int>(get_u64(ap, apath, "floor", 1));
        if (!ap.contains("position"))
            fail(join(apath, "position"), "missing required key");
        fa.position = get_point(ap.at("position"), join(apath, "position"));
        fa.tx_power_dbm = get_num(ap, apath, "tx_power_dbm", fa.tx_power_dbm);
        config.aps.push_back(std::move(fa));
    }

    if (!root.contains("device"))
        fail("device", "missing required key");
    const json& device = root.at("device");
    require_object(device, "device");
    check_keys(device, "device", {"position", "floor"});
    if (!device.contains("position"))
        fail("device.position", "missing required key");
    config.device_position = get_point(device.at("position"), "device.position");
    config.device_floor = static_cast<int>(get_u64(device, "device", "floor", 1));
    return config;
}

netsim::FloorConfig load_floor_config(const std::string& path) {
    return parse_floor_config_text(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw core::Error("IoError", "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw core::Error("IoError", "failed reading \"" + path + "\"");
    return buf.str();
}

}  // namespace airstack::cli
