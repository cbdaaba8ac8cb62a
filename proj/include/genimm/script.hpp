#pragma once

// Event-script documents: a line-delimited format describing an immersion
// context, an initial invariant state, and an ordered list of discriminant
// crossings, plus the engine that replays a document into a trace.
//
// The first non-empty line is a header object
//
//   {"version": 1, "context": {...}, "initial_state": {...}}
//
// and every following non-empty line is one event
//
//   {"type": "self_tangency", "depth": 2, "sign": 1}
//   {"type": "multiple_point", "sign": -1}
//
// Validation is strict: unknown fields are rejected, the version must be
// exactly 1, the initial_state keys must be exactly the invariants the
// context defines ("J_r", "J", "Lambda", "L"), and self-tangency depths
// must lie in [2, m]. Schema violations raise SchemaError; semantic
// violations found while simulating raise ConsistencyError.

#include "genimm/calculus.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace genimm::cli {

using json = nlohmann::json;

class SchemaError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ConsistencyError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EventScriptDocument {
    calculus::ImmersionContext context;
    calculus::InvariantState initial_state;
    std::vector<calculus::StrataEvent> events;

    bool operator==(const EventScriptDocument&) const = default;
};

namespace detail {

inline void require_object_keys(const json& obj, const std::vector<std::string>& keys,
                                const std::string& where) {
    if (!obj.is_object())
        throw SchemaError(where + ": expected an object");
    for (const auto& k : keys)
        if (!obj.contains(k))
            throw SchemaError(where + ": missing field \"" + k + "\"");
    for (const auto& [k, v] : obj.items()) {
        bool known = false;
        for (const auto& allowed : keys)
            known = known || k == allowed;
        if (!known)
            throw SchemaError(where + ": unknown field \"" + k + "\"");
    }
}

inline long long require_int(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw SchemaError(where + ": field \"" + key + "\" must be an integer");
    return v.get<long long>();
}

inline bool require_bool(const json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_boolean())
        throw SchemaError(where + ": field \"" + key + "\" must be a boolean");
    return v.get<bool>();
}

}  // namespace detail

inline json context_to_json(const calculus::ImmersionContext& ctx) {
    return json{{"n", ctx.n},
                {"m", ctx.m},
                {"target", ctx.target == calculus::Target::Euclidean ? "euclidean"
                                                                     : "general_manifold"},
                {"source_oriented", ctx.source_oriented},
                {"cond_lambda", ctx.cond_lambda},
                {"cond_l", ctx.cond_l},
                {"tor_condition", ctx.tor_condition}};
}

inline calculus::ImmersionContext context_from_json(const json& obj) {
    detail::require_object_keys(obj,
                                {"n", "m", "target", "source_oriented", "cond_lambda", "cond_l",
                                 "tor_condition"},
                                "context");
    calculus::ImmersionContext ctx;
    ctx.n = static_cast<int>(detail::require_int(obj, "n", "context"));
    ctx.m = static_cast<int>(detail::require_int(obj, "m", "context"));
    const auto& target = obj.at("target");
    if (!target.is_string())
        throw SchemaError("context: field \"target\" must be a string");
    const std::string t = target.get<std::string>();
    if (t == "euclidean")
        ctx.target = calculus::Target::Euclidean;
    else if (t == "general_manifold")
        ctx.target = calculus::Target::GeneralManifold;
    else
        throw SchemaError("context: target must be \"euclidean\" or \"general_manifold\"");
    ctx.source_oriented = detail::require_bool(obj, "source_oriented", "context");
    ctx.cond_lambda = detail::require_bool(obj, "cond_lambda", "context");
    ctx.cond_l = detail::require_bool(obj, "cond_l", "context");
    ctx.tor_condition = detail::require_bool(obj, "tor_condition", "context");
    if (ctx.n < 2 || ctx.m < 2)
        throw SchemaError("context: n and m must be >= 2");
    return ctx;
}

inline json state_to_json(const calculus::InvariantState& state) {
    json obj = json::object();
    for (const auto& [r, v] : state.j_values)
        obj["J_" + std::to_string(r)] = v;
    if (state.j_count)
        obj["J"] = *state.j_count;
    if (state.lambda)
        obj["Lambda"] = state.lambda->v;
    if (state.l_value)
        obj["L"] = *state.l_value;
    return obj;
}

inline calculus::InvariantState state_from_json(const json& obj) {
    if (!obj.is_object())
        throw SchemaError("state: expected an object");
    calculus::InvariantState state;
    for (const auto& [key, value] : obj.items()) {
        if (!value.is_number_integer())
            throw SchemaError("state: field \"" + key + "\" must be an integer");
        const long long v = value.get<long long>();
        if (key == "J") {
            state.j_count = v;
        } else if (key == "Lambda") {
            if (v != 0 && v != 1)
                throw SchemaError("state: Lambda must be 0 or 1");
            state.lambda = calculus::Z2(v);
        } else if (key == "L") {
            state.l_value = v;
        } else if (key.rfind("J_", 0) == 0) {
            int r = 0;
            try {
                std::size_t used = 0;
                r = std::stoi(key.substr(2), &used);
                if (used != key.size() - 2)
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw SchemaError("state: malformed invariant name \"" + key + "\"");
            }
            state.j_values[r] = v;
        } else {
            throw SchemaError("state: unknown invariant \"" + key + "\"");
        }
    }
    return state;
}

inline json event_to_json(const calculus::StrataEvent& event) {
    if (event.kind == calculus::StrataEvent::Kind::SelfTangency)
        return json{{"type", "self_tangency"}, {"depth", event.depth}, {"sign", event.sign}};
    return json{{"type", "multiple_point"}, {"sign", event.sign}};
}

inline calculus::StrataEvent event_from_json(const json& obj, int m, const std::string& where) {
    if (!obj.is_object() || !obj.contains("type") || !obj.at("type").is_string())
        throw SchemaError(where + ": expected an event object with a \"type\" string");
    const std::string type = obj.at("type").get<std::string>();
    if (type == "self_tangency") {
        detail::require_object_keys(obj, {"type", "depth", "sign"}, where);
        const int depth = static_cast<int>(detail::require_int(obj, "depth", where));
        const int sign = static_cast<int>(detail::require_int(obj, "sign", where));
        if (sign != 1 && sign != -1)
            throw SchemaError(where + ": sign must be 1 or -1");
        if (depth < 2 || depth > m)
            throw SchemaError(where + ": self-tangency depth outside [2, m]");
        return calculus::StrataEvent::self_tangency(depth, sign);
    }
    if (type == "multiple_point") {
        detail::require_object_keys(obj, {"type", "sign"}, where);
        const int sign = static_cast<int>(detail::require_int(obj, "sign", where));
        if (sign != 1 && sign != -1)
            throw SchemaError(where + ": sign must be 1 or -1");
        return calculus::StrataEvent::multiple_point(sign);
    }
    throw SchemaError(where + ": unknown event type \"" + type + "\"");
}

// The state keys a context defines, for the exact-match schema check.
inline std::vector<std::string> expected_state_keys(const calculus::ImmersionContext& ctx) {
    const auto def = calculus::defined_invariants(ctx);
    std::vector<std::string> keys;
    for (int r : def.j_indices)
        keys.push_back("J_" + std::to_string(r));
    if (def.j)
        keys.push_back("J");
    if (def.lambda)
        keys.push_back("Lambda");
    if (def.l)
        keys.push_back("L");
    return keys;
}

inline EventScriptDocument parse_script(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) {
                out = line;
                return true;
            }
        }
        return false;
    };

    std::string header_line;
    if (!next_line(header_line))
        throw SchemaError("script: empty document");
    json header;
    try {
        header = json::parse(header_line);
    } catch (const json::parse_error& e) {
        throw SchemaError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    detail::require_object_keys(header, {"version", "context", "initial_state"}, "header");
    if (!header.at("version").is_number_integer() || header.at("version").get<long long>() != 1)
        throw SchemaError("header: unsupported schema version (expected 1)");

    EventScriptDocument doc;
    doc.context = context_from_json(header.at("context"));
    doc.initial_state = state_from_json(header.at("initial_state"));

    detail::require_object_keys(header.at("initial_state"), expected_state_keys(doc.context),
                                "initial_state");

    std::string event_line;
    while (next_line(event_line)) {
        json obj;
        try {
            obj = json::parse(event_line);
        } catch (const json::parse_error& e) {
            throw SchemaError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
        }
        doc.events.push_back(
            event_from_json(obj, doc.context.m, "line " + std::to_string(line_no)));
    }
    return doc;
}

inline EventScriptDocument parse_script_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw SchemaError("script: cannot read " + path);
    return parse_script(in);
}

inline void write_script(std::ostream& out, const EventScriptDocument& doc) {
    json header{{"version", 1},
                {"context", context_to_json(doc.context)},
                {"initial_state", state_to_json(doc.initial_state)}};
    out << header.dump() << "\n";
    for (const auto& event : doc.events)
        out << event_to_json(event).dump() << "\n";
}

struct SimulationResult {
    std::vector<calculus::InvariantState> trace;
    calculus::ResidueReport final_residues;
    bool loop_closed = false;
};

// Replay a document. The initial state must be semantically consistent with
// the context (that is a ConsistencyError, not a schema error). With
// check = true the residues are audited for constancy after every event and
// each intermediate state is re-validated.
inline SimulationResult simulate(const EventScriptDocument& doc, bool check = false) {
    try {
        calculus::validate_state(doc.context, doc.initial_state);
    } catch (const std::invalid_argument& e) {
        throw ConsistencyError(e.what());
    }
    const auto trace = calculus::run_script(doc.context, doc.initial_state, doc.events);
    if (check) {
        const auto base = calculus::residues(doc.context, trace.front());
        for (std::size_t i = 1; i < trace.size(); ++i) {
            try {
                calculus::validate_state(doc.context, trace[i]);
            } catch (const std::invalid_argument& e) {
                throw ConsistencyError("step " + std::to_string(i) + ": " + e.what());
            }
            if (!(calculus::residues(doc.context, trace[i]) == base))
                throw ConsistencyError("step " + std::to_string(i) +
                                       ": regular homotopy residues changed");
        }
    }
    SimulationResult result;
    result.final_residues = calculus::residues(doc.context, trace.back());
    result.loop_closed = trace.back() == trace.front();
    result.trace = trace;
    return result;
}

}  // namespace genimm::cli
