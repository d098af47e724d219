#include "thinpos/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

namespace thinpos {

namespace {

using nlohmann::json;

struct Violations {
    std::string source;
    std::vector<std::string> messages;

    void add(const std::string& where, const std::string& what) {
        messages.push_back(source + ": " + where + ": " + what);
    }
    bool empty() const { return messages.empty(); }
};

std::optional<long long> get_integer(const json& j, const std::string& key) {
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer()) return std::nullopt;
    return it->get<long long>();
}

std::optional<Sign> parse_sign(const json& j) {
    if (!j.is_string()) return std::nullopt;
    const std::string s = j.get<std::string>();
    if (s == "+") return Sign::Plus;
    if (s == "-" || s == "\xE2\x88\x92") return Sign::Minus;  // ASCII or U+2212
    return std::nullopt;
}

void parse_spheres(const json& jsystem, const std::string& where, int bridge_index,
                   Violations& v, std::vector<BowlSphere>& spheres) {
    const auto it = jsystem.find("spheres");
    if (it == jsystem.end() || !it->is_array()) {
        v.add(where + ".spheres", "expected an array of sphere objects");
        return;
    }
    const int max_punctures = 2 * bridge_index - 2;
    for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string swhere = where + ".spheres[" + std::to_string(i) + "]";
        const json& js = (*it)[i];
        if (!js.is_object()) {
            v.add(swhere, "expected an object");
            continue;
        }
        BowlSphere sphere;
        if (const auto id = get_integer(js, "id"); id && *id >= 1) {
            sphere.id = static_cast<int>(*id);
        } else {
            v.add(swhere + ".id", "expected an integer >= 1");
            continue;
        }
        if (const auto pit = js.find("parent"); pit == js.end()) {
            v.add(swhere + ".parent", "expected an integer or null");
        } else if (pit->is_null()) {
            sphere.parent = std::nullopt;
        } else if (pit->is_number_integer()) {
            sphere.parent = pit->get<int>();
        } else {
            v.add(swhere + ".parent", "expected an integer or null");
        }
        if (const auto p = get_integer(js, "punctures"); p) {
            sphere.punctures = static_cast<int>(*p);
            if (*p < 2 || *p % 2 != 0) {
                v.add(swhere + ".punctures", "punctures must be even and >= 2");
            } else if (*p > max_punctures) {
                v.add(swhere + ".punctures",
                      "punctures " + std::to_string(*p) + " exceed the cap 2n-2 = " +
                          std::to_string(max_punctures) + " for bridge index " +
                          std::to_string(bridge_index));
            }
        } else {
            v.add(swhere + ".punctures", "expected an integer");
        }
        spheres.push_back(sphere);
    }
}

void parse_graph_table(const json& jsystem, const std::string& where,
                       const SphereSystem& system, Violations& v, GraphTable& table) {
    const auto it = jsystem.find("graph_table");
    if (it == jsystem.end() || !it->is_array()) {
        v.add(where + ".graph_table", "expected an array of row objects");
        return;
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string rwhere = where + ".graph_table[" + std::to_string(i) + "]";
        const json& jr = (*it)[i];
        if (!jr.is_object()) {
            v.add(rwhere, "expected an object");
            continue;
        }

        SignedVertexGraphSpec spec;
        const auto region = get_integer(jr, "region");
        if (!region || !system.has_region(static_cast<int>(*region))) {
            v.add(rwhere + ".region", "expected 0 or a sphere id of this system");
            continue;
        }
        spec.region_id = static_cast<int>(*region);

        const auto sit = jr.find("signs");
        if (sit == jr.end() || !sit->is_object()) {
            v.add(rwhere + ".signs", "expected an object mapping sphere ids to signs");
            continue;
        }
        GraphTable::Pattern pattern;
        bool signs_ok = true;
        for (const auto& [key, value] : sit->items()) {
            int sphere_id = 0;
            try {
                std::size_t used = 0;
                sphere_id = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                v.add(rwhere + ".signs", "key '" + key + "' is not a sphere id");
                signs_ok = false;
                continue;
            }
            const std::optional<Sign> sign = parse_sign(value);
            if (!sign) {
                v.add(rwhere + ".signs." + key, "expected \"+\" or \"-\"");
                signs_ok = false;
                continue;
            }
            pattern[sphere_id] = *sign;
        }
        if (!signs_ok) continue;

        const std::vector<int> boundary = system.boundary_spheres(spec.region_id);
        std::vector<int> keys;
        for (const auto& [sphere_id, sign] : pattern) keys.push_back(sphere_id);
        if (keys != boundary) {
            std::string want;
            for (int b : boundary) want += (want.empty() ? "" : ", ") + std::to_string(b);
            v.add(rwhere + ".signs", "keys must be exactly the boundary spheres of region " +
                                         std::to_string(spec.region_id) + " ({" + want + "})");
            continue;
        }
        for (const auto& [sphere_id, sign] : pattern) {
            spec.vertices.push_back({sphere_id, sign, system.sphere(sphere_id).punctures});
        }

        if (const auto b = get_integer(jr, "bridge_number"); b && *b >= 1) {
            spec.bridge_number = static_cast<int>(*b);
        } else {
            v.add(rwhere + ".bridge_number", "expected an integer >= 1");
            continue;
        }
        if (const auto ait = jr.find("admits_thinner"); ait != jr.end()) {
            if (ait->is_boolean()) {
                spec.admits_thinner = ait->get<bool>();
            } else {
                v.add(rwhere + ".admits_thinner", "expected a boolean");
            }
        }

        const int twice_b = 2 * spec.bridge_number;
        if (spec.degree_sum(Sign::Minus) > twice_b ||
            spec.degree_sum(Sign::Plus) > twice_b) {
            v.add(rwhere, "degree sums (" + std::to_string(spec.degree_sum(Sign::Minus)) +
                              ", " + std::to_string(spec.degree_sum(Sign::Plus)) +
                              ") exceed twice the bridge number " + std::to_string(twice_b));
            continue;
        }

        try {
            table.add(std::move(spec));
        } catch (const InputError& e) {
            v.add(rwhere, e.what());
        }
    }
}

Instance parse_instance_json(const json& j, const std::string& source,
                             std::vector<std::string>& messages) {
    Violations v;
    v.source = source;
    Instance instance;

    if (!j.is_object()) {
        v.add("top level", "expected an object");
        messages = v.messages;
        return instance;
    }

    if (const auto nit = j.find("name");
        nit != j.end() && nit->is_string() && !nit->get<std::string>().empty()) {
        instance.name = nit->get<std::string>();
    } else {
        v.add("name", "expected a non-empty string");
    }

    if (const auto n = get_integer(j, "bridge_index"); n && *n >= 1) {
        instance.bridge_index = static_cast<int>(*n);
    } else {
        v.add("bridge_index", "expected an integer >= 1");
        messages = v.messages;
        return instance;
    }

    const auto sit = j.find("surface_systems");
    if (sit == j.end() || !sit->is_array()) {
        v.add("surface_systems", "expected an array");
        messages = v.messages;
        return instance;
    }

    for (std::size_t s = 0; s < sit->size(); ++s) {
        const std::string where = "surface_systems[" + std::to_string(s) + "]";
        const json& jsystem = (*sit)[s];
        if (!jsystem.is_object()) {
            v.add(where, "expected an object");
            continue;
        }
        std::vector<BowlSphere> spheres;
        parse_spheres(jsystem, where, instance.bridge_index, v, spheres);

        SurfaceSystemData data;
        try {
            data.system = SphereSystem(std::move(spheres));
        } catch (const MalformedForest& e) {
            v.add(where + ".spheres", e.what());
            continue;
        }
        parse_graph_table(jsystem, where, data.system, v, data.table);
        instance.systems.push_back(std::move(data));
    }

    messages = v.messages;
    return instance;
}

json parse_json_document(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

Instance parse_instance_text(const std::string& text, const std::string& source_name) {
    const json j = parse_json_document(text, source_name);
    std::vector<std::string> messages;
    Instance instance = parse_instance_json(j, source_name, messages);
    if (!messages.empty()) throw ValidationError(std::move(messages));
    return instance;
}

Instance parse_instance_file(const std::string& path) {
    return parse_instance_text(read_file(path), path);
}

std::vector<std::string> validate_instance_file(const std::string& path) {
    const json j = parse_json_document(read_file(path), path);
    std::vector<std::string> messages;
    parse_instance_json(j, path, messages);
    return messages;
}

nlohmann::ordered_json serialize_instance(const Instance& instance) {
    nlohmann::ordered_json out;
    out["name"] = instance.name;
    out["bridge_index"] = instance.bridge_index;
    out["surface_systems"] = nlohmann::ordered_json::array();
    for (const SurfaceSystemData& data : instance.systems) {
        nlohmann::ordered_json jsystem;
        jsystem["spheres"] = nlohmann::ordered_json::array();
        for (const BowlSphere& s : data.system.spheres()) {
            nlohmann::ordered_json js;
            js["id"] = s.id;
            if (s.parent) {
                js["parent"] = *s.parent;
            } else {
                js["parent"] = nullptr;
            }
            js["punctures"] = s.punctures;
            jsystem["spheres"].push_back(std::move(js));
        }
        jsystem["graph_table"] = nlohmann::ordered_json::array();
        for (const auto& [key, spec] : data.table.rows()) {
            nlohmann::ordered_json jr;
            jr["region"] = spec.region_id;
            nlohmann::ordered_json signs;
            for (const SignedVertex& vertex : spec.vertices) {
                signs[std::to_string(vertex.sphere_id)] =
                    std::string(1, sign_char(vertex.sign));
            }
            jr["signs"] = std::move(signs);
            jr["bridge_number"] = spec.bridge_number;
            jr["admits_thinner"] = spec.admits_thinner;
            jsystem["graph_table"].push_back(std::move(jr));
        }
        out["surface_systems"].push_back(std::move(jsystem));
    }
    return out;
}

MorseWord parse_word_text(const std::string& text) {
    std::vector<MorseEvent> events;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream tokens(line);
        std::string token;
        while (tokens >> token) {
            if (token == "MIN") {
                events.push_back(MorseEvent::min());
            } else if (token == "MAX") {
                events.push_back(MorseEvent::max());
            } else if (token.size() > 2 && (token[0] == 'V') &&
                       (token[1] == '+' || token[1] == '-')) {
                int degree = 0;
                try {
                    std::size_t used = 0;
                    degree = std::stoi(token.substr(2), &used);
                    if (used != token.size() - 2) throw std::invalid_argument(token);
                } catch (const std::exception&) {
                    throw ParseError("bad event token '" + token +
                                     "' (expected MIN, MAX, V+<d> or V-<d>)");
                }
                events.push_back(token[1] == '+' ? MorseEvent::vplus(degree)
                                                 : MorseEvent::vminus(degree));
            } else {
                throw ParseError("bad event token '" + token +
                                 "' (expected MIN, MAX, V+<d> or V-<d>)");
            }
        }
    }
    return MorseWord(std::move(events));
}

MorseWord parse_word_file(const std::string& path) {
    return parse_word_text(read_file(path));
}

std::string word_to_text(const MorseWord& word) {
    std::string out;
    for (const MorseEvent& e : word.events()) {
        if (!out.empty()) out += ' ';
        out += e.token();
    }
    out += '\n';
    return out;
}

}  // namespace thinpos
