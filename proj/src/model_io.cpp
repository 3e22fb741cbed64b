#include "gqsem/model_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gqsem {

namespace {

using nlohmann::json;

[[noreturn]] void fail_validation(const std::string& path, const std::string& message) {
    throw ModelValidationError(path + ": " + message);
}

const json& expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) fail_validation(path, "expected an object");
    return j;
}

std::vector<std::string> expect_string_array(const json& j, const std::string& path) {
    if (!j.is_array()) fail_validation(path, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) {
            fail_validation(path + "[" + std::to_string(i) + "]", "expected a string");
        }
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

std::string lowercased(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return s;
}

Subset subset_from_names(const Universe& u, const std::vector<std::string>& names,
                         const std::string& path) {
    Mask bits = 0;
    for (const auto& name : names) {
        if (!u.has_entity(name)) {
            fail_validation(path, "unknown entity '" + name + "'");
        }
        bits |= Mask(1) << u.index_of(name);
    }
    return Subset(u, bits);
}

GeneralizedQuantifier quantifier_from_json(const Universe& u, const std::string& name,
                                           const json& j, const std::string& path) {
    expect_object(j, path);
    const bool has_builtin = j.contains("builtin");
    const bool has_table = j.contains("table");
    if (has_builtin == has_table) {
        fail_validation(path, "expected exactly one of 'builtin' or 'table'");
    }
    if (has_builtin) {
        if (!j["builtin"].is_string()) fail_validation(path + ".builtin", "expected a string");
        const std::string kind_name = j["builtin"].get<std::string>();
        const auto kind = builtin_kind_from_name(kind_name);
        if (!kind) fail_validation(path + ".builtin", "unknown kind '" + kind_name + "'");
        std::uint32_t k = 0;
        if (builtin_kind_takes_k(*kind)) {
            if (!j.contains("k") || !j["k"].is_number_unsigned()) {
                fail_validation(path, "'" + kind_name + "' needs a nonnegative integer 'k'");
            }
            k = j["k"].get<std::uint32_t>();
        } else if (j.contains("k")) {
            fail_validation(path, "'" + kind_name + "' does not take 'k'");
        }
        return GeneralizedQuantifier::builtin(name, *kind, k);
    }
    if (!j["table"].is_array()) fail_validation(path + ".table", "expected an array");
    std::vector<std::pair<Subset, Subset>> pairs;
    for (std::size_t i = 0; i < j["table"].size(); ++i) {
        const std::string ppath = path + ".table[" + std::to_string(i) + "]";
        const json& pair = j["table"][i];
        if (!pair.is_array() || pair.size() != 2) {
            fail_validation(ppath, "expected a pair of entity-name arrays");
        }
        pairs.emplace_back(
            subset_from_names(u, expect_string_array(pair[0], ppath + "[0]"), ppath),
            subset_from_names(u, expect_string_array(pair[1], ppath + "[1]"), ppath));
    }
    return GeneralizedQuantifier::table(name, std::move(pairs));
}

std::map<std::string, std::string> word_map_from_json(const json& j,
                                                      const std::string& path) {
    std::map<std::string, std::string> out;
    expect_object(j, path);
    for (const auto& [word, name] : j.items()) {
        if (!name.is_string()) fail_validation(path + "." + word, "expected a string");
        out[lowercased(word)] = name.get<std::string>();
    }
    return out;
}

Model model_from_json(const json& j, std::size_t universe_cap) {
    expect_object(j, "model");
    if (!j.contains("format") || !j["format"].is_string() ||
        j["format"].get<std::string>() != kModelFormatId) {
        fail_validation("format", std::string("expected \"") + kModelFormatId + "\"");
    }
    if (!j.contains("universe")) fail_validation("universe", "missing");

    Model m;
    m.universe = std::make_shared<Universe>(
        expect_string_array(j["universe"], "universe"), universe_cap);
    const Universe& u = *m.universe;

    if (j.contains("nouns")) {
        for (const auto& [name, val] : expect_object(j["nouns"], "nouns").items()) {
            m.nouns.emplace(name, subset_from_names(
                                      u, expect_string_array(val, "nouns." + name),
                                      "nouns." + name));
        }
    }
    if (j.contains("vps")) {
        for (const auto& [name, val] : expect_object(j["vps"], "vps").items()) {
            m.vps.emplace(name,
                          subset_from_names(u, expect_string_array(val, "vps." + name),
                                            "vps." + name));
        }
    }
    if (j.contains("verbs")) {
        for (const auto& [name, val] : expect_object(j["verbs"], "verbs").items()) {
            const std::string path = "verbs." + name;
            if (!val.is_array()) fail_validation(path, "expected an array of pairs");
            BinRel rel(u);
            for (std::size_t i = 0; i < val.size(); ++i) {
                const std::string ppath = path + "[" + std::to_string(i) + "]";
                const auto pair = expect_string_array(val[i], ppath);
                if (pair.size() != 2) fail_validation(ppath, "expected [subject, object]");
                for (const auto& e : pair) {
                    if (!u.has_entity(e)) fail_validation(ppath, "unknown entity '" + e + "'");
                }
                rel.insert(u.index_of(pair[0]), u.index_of(pair[1]));
            }
            m.verbs.emplace(name, std::move(rel));
        }
    }

    // Parameterless builtins are always available; file entries replace them.
    for (BuiltinKind kind : {BuiltinKind::Some, BuiltinKind::All, BuiltinKind::No,
                             BuiltinKind::Most, BuiltinKind::Few}) {
        const std::string name = builtin_kind_name(kind);
        m.quantifiers.emplace(name, GeneralizedQuantifier::builtin(name, kind));
        m.lexicon.determiners.emplace(name, name);
    }
    if (j.contains("quantifiers")) {
        for (const auto& [name, val] :
             expect_object(j["quantifiers"], "quantifiers").items()) {
            auto q = quantifier_from_json(u, name, val, "quantifiers." + name);
            m.quantifiers.insert_or_assign(name, std::move(q));
        }
    }

    if (j.contains("lexicon")) {
        const json& lex = expect_object(j["lexicon"], "lexicon");
        if (lex.contains("determiners")) {
            for (auto& [word, name] :
                 word_map_from_json(lex["determiners"], "lexicon.determiners")) {
                m.lexicon.determiners.insert_or_assign(word, name);
            }
        }
        if (lex.contains("nouns")) {
            m.lexicon.nouns = word_map_from_json(lex["nouns"], "lexicon.nouns");
        }
        if (lex.contains("verbs")) {
            m.lexicon.verbs = word_map_from_json(lex["verbs"], "lexicon.verbs");
        }
        if (lex.contains("vps")) {
            m.lexicon.vps = word_map_from_json(lex["vps"], "lexicon.vps");
        }
    }

    m.validate();
    return m;
}

json subset_to_json(const Subset& s) {
    json out = json::array();
    for (const auto& name : s.names()) out.push_back(name);
    return out;
}

} // namespace

Model load_model_from_string(const std::string& text, const std::string& origin,
                             std::size_t universe_cap) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelParseError(origin + ": " + e.what());
    }
    try {
        return model_from_json(j, universe_cap);
    } catch (const Error&) {
        throw;
    } catch (const json::exception& e) {
        throw ModelParseError(origin + ": " + e.what());
    }
}

Model load_model(const std::string& path, std::size_t universe_cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelParseError("cannot open model file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_model_from_string(buffer.str(), path, universe_cap);
}

std::string canonical_model_text(const Model& m) {
    json j;
    j["format"] = kModelFormatId;
    j["universe"] = m.universe->entities();
    j["nouns"] = json::object();
    for (const auto& [name, s] : m.nouns) j["nouns"][name] = subset_to_json(s);
    j["vps"] = json::object();
    for (const auto& [name, s] : m.vps) j["vps"][name] = subset_to_json(s);
    j["verbs"] = json::object();
    for (const auto& [name, rel] : m.verbs) {
        json pairs = json::array();
        for (const auto& [a, b] : rel.pairs()) {
            pairs.push_back({m.universe->entity_name(a), m.universe->entity_name(b)});
        }
        j["verbs"][name] = pairs;
    }
    j["quantifiers"] = json::object();
    for (const auto& [name, q] : m.quantifiers) {
        json spec;
        if (q.is_table()) {
            json table = json::array();
            for (const auto& [a, x] : q.table_pairs()) {
                table.push_back({subset_to_json(a), subset_to_json(x)});
            }
            spec["table"] = table;
        } else {
            spec["builtin"] = builtin_kind_name(q.kind());
            if (builtin_kind_takes_k(q.kind())) spec["k"] = q.parameter();
        }
        j["quantifiers"][name] = spec;
    }
    j["lexicon"]["determiners"] = m.lexicon.determiners;
    j["lexicon"]["nouns"] = m.lexicon.nouns;
    j["lexicon"]["verbs"] = m.lexicon.verbs;
    j["lexicon"]["vps"] = m.lexicon.vps;
    return j.dump(2) + "\n";
}

} // namespace gqsem
