#include "genimm/script.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace genimm::cli;
using namespace genimm::calculus;

namespace {

const std::string kScriptsDir = GENIMM_SCRIPTS_DIR;

EventScriptDocument sample_doc() {
    EventScriptDocument doc;
    doc.context = ImmersionContext{2, 2, Target::Euclidean, true, false, true, false};
    doc.initial_state = zero_state(doc.context);
    doc.events = {StrataEvent::multiple_point(+1), StrataEvent::self_tangency(2, -1)};
    return doc;
}

EventScriptDocument reparse(const EventScriptDocument& doc) {
    std::stringstream buffer;
    write_script(buffer, doc);
    return parse_script(buffer);
}

}  // namespace

TEST_CASE("write/parse round-trips a document") {
    const EventScriptDocument doc = sample_doc();
    CHECK(reparse(doc) == doc);

    EventScriptDocument rich;
    rich.context = ImmersionContext{3, 5, Target::GeneralManifold, false, false, false, true};
    rich.initial_state = zero_state(rich.context);
    rich.initial_state.j_values[3] = -4;
    rich.initial_state.j_values[5] = 10;
    rich.events = {StrataEvent::self_tangency(3, +1), StrataEvent::self_tangency(5, -1),
                   StrataEvent::multiple_point(-1)};
    CHECK(reparse(rich) == rich);
}

TEST_CASE("header validation") {
    auto parse_text = [](const std::string& text) {
        std::stringstream in(text);
        return parse_script(in);
    };
    const std::string ctx =
        R"("context": {"n": 2, "m": 2, "target": "euclidean", "source_oriented": true, )"
        R"("cond_lambda": false, "cond_l": true, "tor_condition": false})";

    CHECK_THROWS_AS(parse_text(""), SchemaError);
    CHECK_THROWS_AS(parse_text("not json"), SchemaError);
    // wrong version
    CHECK_THROWS_AS(parse_text(std::string(R"({"version": 2, )") + ctx +
                               R"(, "initial_state": {"J": 0, "L": 0}})"),
                    SchemaError);
    // unknown header field
    CHECK_THROWS_AS(parse_text(std::string(R"({"version": 1, "extra": 0, )") + ctx +
                               R"(, "initial_state": {"J": 0, "L": 0}})"),
                    SchemaError);
    // initial_state keys must be exactly the defined invariants
    CHECK_THROWS_AS(parse_text(std::string(R"({"version": 1, )") + ctx +
                               R"(, "initial_state": {"J": 0}})"),
                    SchemaError);
    CHECK_THROWS_AS(parse_text(std::string(R"({"version": 1, )") + ctx +
                               R"(, "initial_state": {"J": 0, "L": 0, "Lambda": 0}})"),
                    SchemaError);
    // well-formed header passes
    CHECK_NOTHROW(parse_text(std::string(R"({"version": 1, )") + ctx +
                             R"(, "initial_state": {"J": 0, "L": 0}})"));
}

TEST_CASE("context validation") {
    auto bad_ctx = [](const std::string& ctx_body) {
        std::stringstream in(std::string(R"({"version": 1, "context": )") + ctx_body +
                             R"(, "initial_state": {}})");
        return parse_script(in);
    };
    CHECK_THROWS_AS(bad_ctx(R"({"n": 1, "m": 2, "target": "euclidean", "source_oriented": false,
                               "cond_lambda": false, "cond_l": false, "tor_condition": false})"),
                    SchemaError);
    CHECK_THROWS_AS(bad_ctx(R"({"n": 3, "m": 3, "target": "flat", "source_oriented": false,
                               "cond_lambda": false, "cond_l": false, "tor_condition": false})"),
                    SchemaError);
    CHECK_THROWS_AS(bad_ctx(R"({"n": 3, "m": 3, "target": "euclidean", "source_oriented": 1,
                               "cond_lambda": false, "cond_l": false, "tor_condition": false})"),
                    SchemaError);
    CHECK_THROWS_AS(bad_ctx(R"({"n": 3, "target": "euclidean", "source_oriented": false,
                               "cond_lambda": false, "cond_l": false, "tor_condition": false})"),
                    SchemaError);
}

TEST_CASE("event validation") {
    auto with_event = [](const std::string& event_line) {
        std::stringstream in(
            std::string(
                R"({"version": 1, "context": {"n": 2, "m": 2, "target": "euclidean", )"
                R"("source_oriented": true, "cond_lambda": false, "cond_l": true, )"
                R"("tor_condition": false}, "initial_state": {"J": 0, "L": 0}})") +
            "\n" + event_line + "\n");
        return parse_script(in);
    };
    CHECK_NOTHROW(with_event(R"({"type": "multiple_point", "sign": -1})"));
    CHECK_NOTHROW(with_event(R"({"type": "self_tangency", "depth": 2, "sign": 1})"));
    CHECK_THROWS_AS(with_event(R"({"type": "self_tangency", "depth": 3, "sign": 1})"),
                    SchemaError);
    CHECK_THROWS_AS(with_event(R"({"type": "self_tangency", "sign": 1})"), SchemaError);
    CHECK_THROWS_AS(with_event(R"({"type": "multiple_point", "sign": 2})"), SchemaError);
    CHECK_THROWS_AS(with_event(R"({"type": "multiple_point", "sign": 1, "depth": 2})"),
                    SchemaError);
    CHECK_THROWS_AS(with_event(R"({"type": "quadruple_point", "sign": 1})"), SchemaError);
    CHECK_THROWS_AS(with_event(R"({"type": "multiple_point"})"), SchemaError);
}

TEST_CASE("simulate replays the trace and reports residues") {
    const EventScriptDocument doc = sample_doc();
    const SimulationResult result = simulate(doc);
    REQUIRE(result.trace.size() == 3);
    CHECK(*result.trace[1].l_value == 3);
    CHECK(*result.trace[2].l_value == 3);
    CHECK(*result.trace[2].j_count == -1);
    CHECK(*result.final_residues.l_residue == 0);
    CHECK_FALSE(result.loop_closed);

    EventScriptDocument empty = doc;
    empty.events.clear();
    const SimulationResult single = simulate(empty);
    CHECK(single.trace.size() == 1);
    CHECK(single.loop_closed);
}

TEST_CASE("simulate rejects semantically inconsistent initial states") {
    EventScriptDocument doc;
    doc.context = ImmersionContext{2, 2, Target::Euclidean, true, true, true, true};
    doc.initial_state = zero_state(doc.context);
    doc.initial_state.lambda = Z2(1);  // breaks Lambda = L mod 2
    CHECK_THROWS_AS(simulate(doc), ConsistencyError);
}

TEST_CASE("simulate --check audits pass on valid scripts") {
    EventScriptDocument doc;
    doc.context = ImmersionContext{2, 4, Target::Euclidean, true, true, true, true};
    doc.initial_state = zero_state(doc.context);
    for (int i = 0; i < 20; ++i)
        doc.events.push_back(i % 2 ? StrataEvent::multiple_point(+1)
                                   : StrataEvent::self_tangency(2 + i % 3, -1));
    CHECK_NOTHROW(simulate(doc, true));
}

TEST_CASE("bundled scripts behave as documented") {
    const auto triple = parse_script_file(kScriptsDir + "/s3r5_triple.json");
    const auto triple_run = simulate(triple, true);
    CHECK(*triple_run.trace.back().l_value == 3);
    CHECK(*triple_run.final_residues.l_residue == 0);
    CHECK(triple_run.final_residues.modulus == 3);

    CHECK(simulate(parse_script_file(kScriptsDir + "/loop_commuting_pair.json")).loop_closed);
    CHECK(simulate(parse_script_file(kScriptsDir + "/loop_cusp.json")).loop_closed);

    const auto hplus = simulate(parse_script_file(kScriptsDir + "/hplus.json"));
    const auto hminus = simulate(parse_script_file(kScriptsDir + "/hminus.json"));
    CHECK(*hplus.trace.back().l_value == 3);
    CHECK(*hminus.trace.back().l_value == -3);

    const auto bridge = parse_script_file(kScriptsDir + "/hplus_to_hminus.json");
    CHECK(bridge.initial_state == hplus.trace.back());
    CHECK(simulate(bridge).trace.back() == hminus.trace.back());
}

TEST_CASE("state json round-trip") {
    ImmersionContext ctx{3, 5, Target::GeneralManifold};
    InvariantState s = zero_state(ctx);
    s.j_values[3] = -7;
    s.j_values[5] = 2;
    CHECK(state_from_json(state_to_json(s)) == s);

    ImmersionContext full{2, 2, Target::Euclidean, true, true, true, true};
    InvariantState t = zero_state(full);
    t.l_value = 8;
    t.lambda = Z2(0);
    t.j_count = 3;
    CHECK(state_from_json(state_to_json(t)) == t);

    CHECK_THROWS_AS(state_from_json(json{{"K", 1}}), SchemaError);
    CHECK_THROWS_AS(state_from_json(json{{"Lambda", 2}}), SchemaError);
    CHECK_THROWS_AS(state_from_json(json{{"J_x", 1}}), SchemaError);
}

TEST_CASE("event json round-trip") {
    const StrataEvent st = StrataEvent::self_tangency(4, -1);
    CHECK(event_from_json(event_to_json(st), 5, "test") == st);
    const StrataEvent mp = StrataEvent::multiple_point(+1);
    CHECK(event_from_json(event_to_json(mp), 5, "test") == mp);
}
