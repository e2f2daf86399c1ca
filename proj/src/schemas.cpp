#include "gla/calculus.hpp"

#include <array>
#include <vector>

namespace gla {

namespace {

struct SchemaInfo {
    SchemaId id;
    const char* name;
    std::vector<const char*> patterns;
};

const std::vector<SchemaInfo>& schema_table()
{
    static const std::vector<SchemaInfo> table = {
        {SchemaId::P1, "P1", {"A -> (B -> A)"}},
        {SchemaId::P2, "P2", {"(A -> B) -> ((A -> (B -> C)) -> (A -> C))"}},
        {SchemaId::P3, "P3", {"A & B -> A"}},
        {SchemaId::P4, "P4", {"A & B -> B"}},
        {SchemaId::P5, "P5", {"A -> (B -> A & B)"}},
        {SchemaId::P6, "P6", {"A -> A | B"}},
        {SchemaId::P7, "P7", {"B -> A | B"}},
        {SchemaId::P8, "P8", {"(A -> C) -> ((B -> C) -> (A | B -> C))"}},
        {SchemaId::P9, "P9", {"(A -> B) -> ((A -> ~B) -> ~A)"}},
        {SchemaId::P10, "P10", {"~~A -> A"}},
        {SchemaId::GL1, "GL1", {"[](A -> B) -> ([]A -> []B)"}},
        {SchemaId::GL2, "GL2", {"[]A -> [][]A"}},
        {SchemaId::GL3, "GL3", {"[]([]A -> A) -> []A"}},
        {SchemaId::LP1, "LP1", {"x:(A -> B) -> (y:A -> (x*y):B)"}},
        {SchemaId::LP2, "LP2", {"x:A -> !x:(x:A)"}},
        {SchemaId::LP3, "LP3", {"x:A -> (x+y):A", "y:A -> (x+y):A"}},
        {SchemaId::LP4, "LP4", {"x:A -> A"}},
        {SchemaId::C1, "C1", {"x:A -> []A"}},
        {SchemaId::C2, "C2", {"~x:A -> []~x:A"}},
        {SchemaId::C3, "C3", {"x:[]A -> A"}},
    };
    return table;
}

const std::array<std::vector<Formula>, schema_count>& parsed_patterns()
{
    static const auto patterns = [] {
        std::array<std::vector<Formula>, schema_count> out;
        for (const auto& info : schema_table())
            for (const char* text : info.patterns)
                out[static_cast<std::size_t>(info.id)].push_back(parse_formula(text));
        return out;
    }();
    return patterns;
}

constexpr std::array<const char*, 7> rule_names = {"Axiom", "CS", "MP", "Nec", "Refl", "Hyp", "Taut"};

} // namespace

std::string_view to_string(SchemaId id)
{
    return schema_table()[static_cast<std::size_t>(id)].name;
}

std::optional<SchemaId> schema_from_string(std::string_view name)
{
    for (const auto& info : schema_table())
        if (name == info.name)
            return info.id;
    return std::nullopt;
}

std::string_view to_string(LogicMode mode)
{
    switch (mode) {
    case LogicMode::GL: return "GL";
    case LogicMode::LP: return "LP";
    default: return "GLA";
    }
}

std::optional<LogicMode> mode_from_string(std::string_view name)
{
    if (name == "GLA")
        return LogicMode::GLA;
    if (name == "GL")
        return LogicMode::GL;
    if (name == "LP")
        return LogicMode::LP;
    return std::nullopt;
}

std::string_view to_string(Rule rule)
{
    return rule_names[static_cast<std::size_t>(rule)];
}

std::optional<Rule> rule_from_string(std::string_view name)
{
    for (std::size_t i = 0; i < rule_names.size(); ++i)
        if (name == rule_names[i])
            return static_cast<Rule>(i);
    return std::nullopt;
}

bool schema_allowed(SchemaId id, LogicMode mode)
{
    if (id <= SchemaId::P10 || mode == LogicMode::GLA)
        return true;
    if (mode == LogicMode::GL)
        return id >= SchemaId::GL1 && id <= SchemaId::GL3;
    return id >= SchemaId::LP1 && id <= SchemaId::LP4;
}

std::span<const Formula> schema_patterns(SchemaId id)
{
    return parsed_patterns()[static_cast<std::size_t>(id)];
}

bool is_instance_of(const Formula& f, SchemaId id)
{
    for (const Formula& pattern : schema_patterns(id)) {
        PropositionMap props;
        VariableMap vars;
        if (match_pattern(pattern, f, props, vars))
            return true;
    }
    return false;
}

std::optional<AxiomMatch> match_axiom(const Formula& f, LogicMode mode)
{
    if (f.kind() != Formula::Kind::Imp)
        return std::nullopt;
    for (int i = 0; i < schema_count; ++i) {
        auto id = static_cast<SchemaId>(i);
        if (!schema_allowed(id, mode))
            continue;
        for (const Formula& pattern : schema_patterns(id)) {
            AxiomMatch m{id, {}, {}};
            if (match_pattern(pattern, f, m.formulas, m.terms))
                return m;
        }
    }
    return std::nullopt;
}

bool ConstantSpecification::includes(const ConstantSpecification& other) const
{
    for (const auto& e : other)
        if (!entries_.count(e))
            return false;
    return true;
}

bool ConstantSpecification::uses_constant(std::string_view name) const
{
    for (const auto& e : entries_) {
        if (e.constant == name)
            return true;
        std::set<ProofTerm> terms = subformula_closure(e.axiom).terms;
        for (const auto& t : terms)
            if (t.kind() == ProofTerm::Kind::Const && t.name() == name)
                return true;
    }
    return false;
}

CheckReport validate_cs(const ConstantSpecification& cs)
{
    std::size_t index = 0;
    for (const auto& entry : cs) {
        ++index;
        try {
            ProofTerm::constant(entry.constant);
        } catch (const std::invalid_argument&) {
            return CheckReport::failure(index, "'" + entry.constant + "' is not a proof constant name");
        }
        if (!match_axiom(entry.axiom, LogicMode::GLA))
            return CheckReport::failure(index, entry.constant + ":" + print_formula(entry.axiom)
                                                   + " does not specify an axiom instance");
    }
    return CheckReport::success();
}

} // namespace gla
