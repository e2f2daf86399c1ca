#include "gla/io.hpp"

#include <fstream>

namespace gla::io {

namespace {

Formula formula_at(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw FormatError(where + ": expected a formula string");
    try {
        return parse_formula(j.get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(where + ": " + e.what());
    }
}

ProofTerm term_at(const json& j, const std::string& where)
{
    if (!j.is_string())
        throw FormatError(where + ": expected a term string");
    try {
        return parse_term(j.get<std::string>());
    } catch (const std::exception& e) {
        throw FormatError(where + ": " + e.what());
    }
}

const json& field(const json& j, const char* key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw FormatError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::vector<std::size_t> refs_at(const json& j, const std::string& where)
{
    const json& from = field(j, "from", where);
    if (!from.is_array())
        throw FormatError(where + ": \"from\" must be an array");
    std::vector<std::size_t> refs;
    for (const json& r : from) {
        if (!r.is_number_integer() || r.get<long long>() < 1)
            throw FormatError(where + ": step references are positive integers");
        refs.push_back(r.get<std::size_t>());
    }
    return refs;
}

} // namespace

json to_json(const Derivation& d)
{
    json steps = json::array();
    for (const Step& s : d.steps) {
        json step{{"formula", print_formula(s.formula)}, {"rule", std::string(to_string(s.just.rule))}};
        switch (s.just.rule) {
        case Rule::Axiom: step["schema"] = std::string(to_string(s.just.schema)); break;
        case Rule::CS: step["constant"] = s.just.constant; break;
        case Rule::Hyp: step["hyp"] = s.just.hypothesis; break;
        default: step["from"] = s.just.refs; break;
        }
        steps.push_back(std::move(step));
    }
    json hyps = json::array();
    for (const Formula& h : d.hypotheses)
        hyps.push_back(print_formula(h));
    return {{"mode", std::string(to_string(d.mode))}, {"hypotheses", hyps}, {"steps", steps}};
}

Derivation derivation_from_json(const json& j)
{
    Derivation d;
    if (!j.is_object())
        throw FormatError("derivation: expected an object");
    if (j.contains("mode")) {
        auto mode = j.at("mode").is_string() ? mode_from_string(j.at("mode").get<std::string>()) : std::nullopt;
        if (!mode)
            throw FormatError("derivation: unknown mode");
        d.mode = *mode;
    }
    if (j.contains("hypotheses")) {
        const json& hs = j.at("hypotheses");
        if (!hs.is_array())
            throw FormatError("derivation: \"hypotheses\" must be an array");
        for (std::size_t i = 0; i < hs.size(); ++i)
            d.hypotheses.push_back(formula_at(hs[i], "hypothesis " + std::to_string(i + 1)));
    }
    const json& steps = field(j, "steps", "derivation");
    if (!steps.is_array())
        throw FormatError("derivation: \"steps\" must be an array");
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string where = "step " + std::to_string(i + 1);
        const json& s = steps[i];
        Formula f = formula_at(field(s, "formula", where), where);
        const json& rule_name = field(s, "rule", where);
        auto rule = rule_name.is_string() ? rule_from_string(rule_name.get<std::string>()) : std::nullopt;
        if (!rule)
            throw FormatError(where + ": unknown rule");
        Justification just;
        just.rule = *rule;
        switch (*rule) {
        case Rule::Axiom: {
            const json& name = field(s, "schema", where);
            auto id = name.is_string() ? schema_from_string(name.get<std::string>()) : std::nullopt;
            if (!id)
                throw FormatError(where + ": unknown schema");
            just.schema = *id;
            break;
        }
        case Rule::CS:
            if (s.contains("constant")) {
                if (!s.at("constant").is_string())
                    throw FormatError(where + ": \"constant\" must be a string");
                just.constant = s.at("constant").get<std::string>();
            } else if (f.kind() == Formula::Kind::Proof && f.term().kind() == ProofTerm::Kind::Const) {
                just.constant = f.term().name();
            }
            break;
        case Rule::Hyp: {
            const json& k = field(s, "hyp", where);
            if (!k.is_number_integer() || k.get<long long>() < 1)
                throw FormatError(where + ": \"hyp\" is a positive integer");
            just.hypothesis = k.get<std::size_t>();
            break;
        }
        case Rule::Taut:
            just.refs = s.contains("from") ? refs_at(s, where) : std::vector<std::size_t>{};
            break;
        default:
            just.refs = refs_at(s, where);
            break;
        }
        d.steps.push_back({std::move(f), std::move(just)});
    }
    return d;
}

json to_json(const ConstantSpecification& cs)
{
    json entries = json::array();
    for (const auto& e : cs)
        entries.push_back({{"constant", e.constant}, {"axiom", print_formula(e.axiom)}});
    return {{"entries", entries}};
}

ConstantSpecification cs_from_json(const json& j)
{
    ConstantSpecification cs;
    const json& entries = field(j, "entries", "cs");
    if (!entries.is_array())
        throw FormatError("cs: \"entries\" must be an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const std::string where = "cs entry " + std::to_string(i + 1);
        const json& c = field(entries[i], "constant", where);
        if (!c.is_string())
            throw FormatError(where + ": \"constant\" must be a string");
        cs.add(c.get<std::string>(), formula_at(field(entries[i], "axiom", where), where));
    }
    return cs;
}

json to_json(const KripkeModel& m)
{
    json rel = json::array();
    for (const auto& [u, v] : m.rel)
        rel.push_back({u, v});
    json val = json::object();
    for (const auto& [letter, where] : m.valuation)
        val[letter] = std::vector<std::string>(where.begin(), where.end());
    json evidence = json::array();
    for (const auto& [t, f] : m.evidence)
        evidence.push_back({print_term(t), print_formula(f)});
    return {{"worlds", m.worlds}, {"root", m.root}, {"rel", rel}, {"val", val}, {"evidence", evidence}};
}

KripkeModel model_from_json(const json& j)
{
    KripkeModel m;
    try {
        m.worlds = field(j, "worlds", "model").get<std::vector<std::string>>();
        m.root = field(j, "root", "model").get<std::string>();
        for (const json& pair : field(j, "rel", "model")) {
            if (!pair.is_array() || pair.size() != 2)
                throw FormatError("model: relation entries are [from, to] pairs");
            m.rel.insert({pair[0].get<std::string>(), pair[1].get<std::string>()});
        }
        if (j.contains("val"))
            for (const auto& [letter, where] : j.at("val").items())
                m.valuation[letter] = where.get<std::set<std::string>>();
        if (j.contains("evidence"))
            for (const json& pair : j.at("evidence")) {
                if (!pair.is_array() || pair.size() != 2)
                    throw FormatError("model: evidence entries are [term, formula] pairs");
                m.evidence.insert({term_at(pair[0], "model evidence"), formula_at(pair[1], "model evidence")});
            }
    } catch (const json::exception& e) {
        throw FormatError(std::string("model: ") + e.what());
    }
    return m;
}

json to_json(const LiftResult& r)
{
    return {{"term", print_term(r.term)}, {"cs", to_json(r.cs)}, {"witness", to_json(r.witness)}};
}

LiftResult lift_result_from_json(const json& j)
{
    return {term_at(field(j, "term", "lift result"), "lift result term"), cs_from_json(field(j, "cs", "lift result")),
            derivation_from_json(field(j, "witness", "lift result"))};
}

json to_json(const Verdict& v)
{
    if (const auto* t = std::get_if<Theorem>(&v)) {
        json out{{"verdict", "Theorem"}, {"certificate", t->certificate}};
        if (t->derivation)
            out["derivation"] = to_json(*t->derivation);
        return out;
    }
    if (const auto* n = std::get_if<NonTheorem>(&v))
        return {{"verdict", "NonTheorem"}, {"failing_world", n->failing_world}, {"model", to_json(n->model)}};
    return {{"verdict", "Unknown"}, {"exhausted", std::get<Unknown>(v).exhausted}};
}

json to_json(const SoundnessReport& r)
{
    return {{"frame_ok", r.frame_ok}, {"root_ok", r.root_ok}, {"f_sound", r.f_sound},
            {"cs_sound", r.cs_sound}, {"cs_holds", r.cs_holds}, {"failures", r.failures}};
}

json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw FormatError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

Derivation load_derivation(const std::filesystem::path& path)
{
    try {
        return derivation_from_json(read_json(path));
    } catch (const json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

ConstantSpecification load_cs(const std::filesystem::path& path)
{
    try {
        return cs_from_json(read_json(path));
    } catch (const json::exception& e) {
        throw FormatError(path.string() + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

KripkeModel load_model(const std::filesystem::path& path)
{
    return model_from_json(read_json(path));
}

} // namespace gla::io
