#pragma once

// Command implementations behind the genimm executable. Every command takes
// its parsed arguments plus output streams and returns a process exit
// status:
//
//   0  success
//   2  usage error (argument out of domain, unreadable input)
//   3  consistency violation while simulating
//   4  script schema error
//
// Machine-readable output (--format json-lines) is one JSON object per
// line; the parse_* helpers below invert it exactly.

#include "genimm/divisibility.hpp"
#include "genimm/script.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

namespace genimm::cli {

enum class OutputFormat { Text, JsonLines };

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitSchema = 4;

// ---------------------------------------------------------------------------
// Rendering helpers

inline std::string state_str(const calculus::InvariantState& state) {
    std::string out;
    auto append = [&](const std::string& piece) {
        if (!out.empty())
            out += " ";
        out += piece;
    };
    for (const auto& [r, v] : state.j_values)
        append("J_" + std::to_string(r) + "=" + std::to_string(v));
    if (state.j_count)
        append("J=" + std::to_string(*state.j_count));
    if (state.lambda)
        append("Lambda=" + std::to_string(state.lambda->v));
    if (state.l_value)
        append("L=" + std::to_string(*state.l_value));
    return out.empty() ? "(no invariants defined)" : out;
}

inline std::string event_str(const calculus::StrataEvent& event) {
    std::string sign = event.sign > 0 ? "+1" : "-1";
    if (event.kind == calculus::StrataEvent::Kind::SelfTangency)
        return "self_tangency depth=" + std::to_string(event.depth) + " sign=" + sign;
    return "multiple_point sign=" + sign;
}

inline std::string residues_str(const calculus::ResidueReport& rep) {
    std::string out;
    auto append = [&](const std::string& piece) {
        if (!out.empty())
            out += ", ";
        out += piece;
    };
    for (const auto& [r, v] : rep.j_residues)
        append("j_" + std::to_string(r) + " = " + std::to_string(v.v));
    if (rep.lambda_residue)
        append("lambda = " + std::to_string(rep.lambda_residue->v));
    if (rep.l_residue)
        append("l = " + std::to_string(*rep.l_residue) + " (mod " +
               std::to_string(rep.modulus) + ")");
    return out.empty() ? "(none)" : out;
}

inline json residues_to_json(const calculus::ResidueReport& rep) {
    json obj{{"modulus", rep.modulus}};
    if (rep.l_residue)
        obj["l"] = *rep.l_residue;
    if (rep.lambda_residue)
        obj["lambda"] = rep.lambda_residue->v;
    json jmap = json::object();
    for (const auto& [r, v] : rep.j_residues)
        jmap[std::to_string(r)] = v.v;
    obj["j"] = jmap;
    return obj;
}

inline calculus::ResidueReport residues_from_json(const json& obj) {
    calculus::ResidueReport rep;
    rep.modulus = obj.at("modulus").get<long long>();
    if (obj.contains("l"))
        rep.l_residue = obj.at("l").get<long long>();
    if (obj.contains("lambda"))
        rep.lambda_residue = calculus::Z2(obj.at("lambda").get<long long>());
    for (const auto& [key, value] : obj.at("j").items())
        rep.j_residues[std::stoi(key)] = calculus::Z2(value.get<long long>());
    return rep;
}

inline json l_range_to_json(const numthy::LRangeReport& rep) {
    return json{{"m", rep.m},
                {"divisor", rep.divisor},
                {"realizable_subgroup", rep.realizable_subgroup},
                {"exact", rep.exact}};
}

inline numthy::LRangeReport l_range_from_json(const json& obj) {
    return {static_cast<int>(obj.at("m").get<long long>()), obj.at("divisor").get<long long>(),
            obj.at("realizable_subgroup").get<long long>(), obj.at("exact").get<bool>()};
}

struct TraceLine {
    std::size_t step = 0;
    std::optional<calculus::StrataEvent> event;
    calculus::InvariantState state;

    bool operator==(const TraceLine&) const = default;
};

inline json trace_line_to_json(const TraceLine& line) {
    return json{{"step", line.step},
                {"event", line.event ? event_to_json(*line.event) : json(nullptr)},
                {"state", state_to_json(line.state)}};
}

inline TraceLine parse_trace_line(const json& obj, int m) {
    TraceLine line;
    line.step = obj.at("step").get<std::size_t>();
    if (!obj.at("event").is_null())
        line.event = event_from_json(obj.at("event"), m, "trace");
    line.state = state_from_json(obj.at("state"));
    return line;
}

// ---------------------------------------------------------------------------
// Table rows (the codimension-two range table over j)

struct TableRow {
    int j = 1;
    long long q = 3;  // 2j + 1
    numthy::Factorization q_factors;
    numthy::BigInt mu_value;
    numthy::Factorization mu_factors;
    long long divisor = 1;
    bool exact = false;

    bool operator==(const TableRow&) const = default;
};

inline TableRow table_row(int j) {
    TableRow row;
    row.j = j;
    row.q = 2LL * j + 1;
    row.q_factors = numthy::factorize(numthy::BigInt(2L * j + 1));
    row.mu_value = numthy::mu(j);
    row.mu_factors = numthy::factorize(row.mu_value);
    row.divisor = numthy::l_divisor(2 * j);
    row.exact = row.divisor == row.q;
    return row;
}

inline json factors_to_json(const numthy::Factorization& f) {
    json arr = json::array();
    for (const auto& [p, e] : f.factors)
        arr.push_back(json::array({p.get_si(), e}));
    return arr;
}

inline numthy::Factorization factors_from_json(const json& arr) {
    numthy::Factorization f;
    for (const auto& pair : arr)
        f.factors.emplace_back(numthy::BigInt(pair.at(0).get<long>()), pair.at(1).get<int>());
    return f;
}

inline json table_row_to_json(const TableRow& row) {
    return json{{"j", row.j},
                {"q", row.q},
                {"q_factors", factors_to_json(row.q_factors)},
                {"mu", row.mu_value.get_str()},
                {"mu_factors", factors_to_json(row.mu_factors)},
                {"divisor", row.divisor},
                {"exact", row.exact}};
}

inline TableRow parse_table_row(const json& obj) {
    TableRow row;
    row.j = static_cast<int>(obj.at("j").get<long long>());
    row.q = obj.at("q").get<long long>();
    row.q_factors = factors_from_json(obj.at("q_factors"));
    row.mu_value = numthy::BigInt(obj.at("mu").get<std::string>());
    row.mu_factors = factors_from_json(obj.at("mu_factors"));
    row.divisor = obj.at("divisor").get<long long>();
    row.exact = obj.at("exact").get<bool>();
    return row;
}

// ---------------------------------------------------------------------------
// Commands

inline int cmd_bernoulli(int j, std::ostream& out, std::ostream& err) {
    if (j < 1) {
        err << "bernoulli: j must be >= 1\n";
        return kExitUsage;
    }
    out << numthy::bernoulli_top(j).str() << "\n";
    return kExitOk;
}

inline int cmd_mu(int j, std::ostream& out, std::ostream& err) {
    if (j < 1) {
        err << "mu: j must be >= 1\n";
        return kExitUsage;
    }
    const numthy::BigInt value = numthy::mu(j);
    out << value.get_str() << " = " << numthy::factorize(value).str() << "\n";
    return kExitOk;
}

inline int cmd_imm_group(int m, std::ostream& out, std::ostream& err) {
    if (m < 2) {
        err << "imm-group: m must be >= 2\n";
        return kExitUsage;
    }
    out << numthy::imm_group(m).str() << "\n";
    return kExitOk;
}

inline std::string subgroup_str(long long d) {
    return d == 1 ? "Z" : std::to_string(d) + "Z";
}

inline int cmd_l_range(int m, OutputFormat format, std::ostream& out, std::ostream& err) {
    if (m < 2) {
        err << "l-range: m must be >= 2\n";
        return kExitUsage;
    }
    const numthy::LRangeReport rep = numthy::l_range(m);
    if (format == OutputFormat::JsonLines) {
        out << l_range_to_json(rep).dump() << "\n";
        return kExitOk;
    }
    out << "m = " << m << "  (immersions S^" << 2 * m - 1 << " -> R^" << 2 * m + 1 << ")\n";
    out << "  every attainable L is a multiple of " << rep.divisor << "\n";
    out << "  every multiple of " << rep.realizable_subgroup << " is attained\n";
    if (rep.exact)
        out << "  range: exactly " << subgroup_str(rep.divisor) << "\n";
    else
        out << "  range: between " << subgroup_str(rep.realizable_subgroup) << " and "
            << subgroup_str(rep.divisor) << " (not settled by these constraints)\n";
    return kExitOk;
}

inline int cmd_simulate(const std::string& path, OutputFormat format, bool check,
                        std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) {
        err << "simulate: cannot read " << path << "\n";
        return kExitUsage;
    }
    EventScriptDocument doc;
    try {
        doc = parse_script(in);
    } catch (const SchemaError& e) {
        err << "simulate: " << e.what() << "\n";
        return kExitSchema;
    }
    SimulationResult result;
    try {
        result = simulate(doc, check);
    } catch (const ConsistencyError& e) {
        err << "simulate: " << e.what() << "\n";
        return kExitConsistency;
    }

    if (format == OutputFormat::JsonLines) {
        for (std::size_t i = 0; i < result.trace.size(); ++i) {
            TraceLine line{i, i == 0 ? std::nullopt : std::optional(doc.events[i - 1]),
                           result.trace[i]};
            out << trace_line_to_json(line).dump() << "\n";
        }
        out << json{{"residues", residues_to_json(result.final_residues)},
                    {"loop_closed", result.loop_closed}}
                   .dump()
            << "\n";
        return kExitOk;
    }

    out << "context: n=" << doc.context.n << " m=" << doc.context.m << " target="
        << (doc.context.target == calculus::Target::Euclidean ? "euclidean" : "general_manifold")
        << " oriented=" << (doc.context.source_oriented ? "true" : "false")
        << " cond_lambda=" << (doc.context.cond_lambda ? "true" : "false")
        << " cond_l=" << (doc.context.cond_l ? "true" : "false")
        << " tor=" << (doc.context.tor_condition ? "true" : "false") << "\n";
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        std::string label = i == 0 ? "initial" : event_str(doc.events[i - 1]);
        out << "step " << std::left << std::setw(4) << i << std::setw(32) << label << std::right
            << state_str(result.trace[i]) << "\n";
    }
    out << "residues: " << residues_str(result.final_residues) << "\n";
    out << "loop closed: " << (result.loop_closed ? "true" : "false") << "\n";
    return kExitOk;
}

// Pad to a display width; setw counts bytes, which misaligns columns
// containing the multi-byte factor separator.
inline std::string pad_cell(const std::string& s, std::size_t width) {
    std::size_t glyphs = 0;
    for (unsigned char c : s)
        if ((c & 0xc0) != 0x80)
            ++glyphs;
    std::string out = s;
    if (glyphs >= width)
        return out + ' ';
    while (glyphs++ < width)
        out += ' ';
    return out;
}

inline int cmd_table(int max_j, OutputFormat format, std::ostream& out, std::ostream& err) {
    if (max_j < 1 || max_j > 100) {
        err << "table: max-j must be in [1, 100]\n";
        return kExitUsage;
    }
    if (format == OutputFormat::JsonLines) {
        for (int j = 1; j <= max_j; ++j)
            out << table_row_to_json(table_row(j)).dump() << "\n";
        return kExitOk;
    }
    out << pad_cell("j", 5) << pad_cell("2j+1", 20) << pad_cell("mu_j", 34) << pad_cell("D", 8)
        << "range of L\n";
    for (int j = 1; j <= max_j; ++j) {
        const TableRow row = table_row(j);
        std::ostringstream q_cell, mu_cell;
        q_cell << row.q << " = " << row.q_factors.str();
        mu_cell << row.mu_value.get_str() << " = " << row.mu_factors.str();
        out << pad_cell(std::to_string(row.j), 5) << pad_cell(q_cell.str(), 20)
            << pad_cell(mu_cell.str(), 34) << pad_cell(std::to_string(row.divisor), 8)
            << (row.exact ? "exactly " + subgroup_str(row.divisor)
                          : "between " + subgroup_str(row.q) + " and " + subgroup_str(row.divisor))
            << "\n";
    }
    return kExitOk;
}

}  // namespace genimm::cli
