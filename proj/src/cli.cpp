#include "gla/cli.hpp"

#include "gla/decide.hpp"
#include "gla/internalize.hpp"
#include "gla/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <ostream>

namespace gla::cli {

namespace {

using io::json;

struct Options {
    bool as_json = false;

    // parse
    bool term = false;
    std::string expr;

    // check, lift, conjoin
    std::string cs_file;
    std::string derivation_file;
    std::string second_file;
    std::string out_file;
    bool allow_taut = false;

    // model-check
    std::string model_file;
    std::string formula;
    std::string mode = "all";
    std::vector<std::string> sound_for;

    // decide
    int max_worlds = SearchConfig{}.max_worlds;
    int max_seed = SearchConfig{}.max_seed;
    int depth = SearchConfig{}.saturation_depth;
    double budget = 30.0;
    bool serial = false;
    std::string model_out;
};

EvalMode eval_mode(const std::string& name)
{
    return name == "root" ? EvalMode::RootOnly : EvalMode::AllWorlds;
}

ConstantSpecification read_cs(const std::string& file)
{
    if (file.empty())
        return {};
    ConstantSpecification cs = io::load_cs(file);
    if (auto r = validate_cs(cs); !r.ok)
        throw io::FormatError(file + ": entry " + std::to_string(r.first_error->first) + ": " + r.first_error->second);
    return cs;
}

void emit(std::ostream& out, const Options& o, const json& record, const std::string& text)
{
    if (o.as_json)
        out << record.dump() << '\n';
    else
        out << text << '\n';
}

int cmd_parse(const Options& o, std::ostream& out)
{
    if (o.term) {
        ProofTerm t = parse_term(o.expr);
        emit(out, o, {{"kind", "term"}, {"printed", print_term(t)}, {"size", t.size()}}, print_term(t));
    } else {
        Formula f = parse_formula(o.expr);
        emit(out, o, {{"kind", "formula"}, {"printed", print_formula(f)}, {"size", f.size()}}, print_formula(f));
    }
    return ok;
}

int cmd_check(const Options& o, std::ostream& out)
{
    const ConstantSpecification cs = read_cs(o.cs_file);
    const Derivation d = io::load_derivation(o.derivation_file);
    const CheckReport r = check_derivation(d, cs, {.allow_taut = o.allow_taut});
    json record{{"ok", r.ok}, {"steps", d.steps.size()}};
    std::string text = "ok: " + std::to_string(d.steps.size()) + " steps";
    if (!r.ok) {
        record["step"] = r.first_error->first;
        record["reason"] = r.first_error->second;
        text = "step " + std::to_string(r.first_error->first) + ": " + r.first_error->second;
    } else if (!d.steps.empty()) {
        record["conclusion"] = print_formula(d.conclusion());
        text += ", concludes " + print_formula(d.conclusion());
    }
    emit(out, o, record, text);
    return r.ok ? ok : negative;
}

int cmd_lift(const Options& o, std::ostream& out, std::ostream& err)
{
    const ConstantSpecification cs = read_cs(o.cs_file);
    const Derivation d = io::load_derivation(o.derivation_file);
    if (auto r = check_derivation(d, cs); !r.ok) {
        err << "derivation does not check: step " << r.first_error->first << ": " << r.first_error->second << '\n';
        return negative;
    }
    std::optional<LiftResult> result;
    try {
        result = lift(d, cs);
    } catch (const LiftError& e) {
        err << e.what() << '\n';
        return negative;
    }
    io::write_json(o.out_file, io::to_json(*result));
    emit(out, o,
         {{"term", print_term(result->term)}, {"constants_added", result->cs.size() - cs.size()},
          {"witness_steps", result->witness.steps.size()}, {"out", o.out_file}},
         print_formula(Formula::proof(result->term, d.conclusion())));
    return ok;
}

int cmd_model_check(const Options& o, std::ostream& out)
{
    const KripkeModel m = io::load_model(o.model_file);
    const Formula f = parse_formula(o.formula);
    const ConstantSpecification cs = read_cs(o.cs_file);
    std::vector<Formula> sound_for;
    for (const auto& s : o.sound_for)
        sound_for.push_back(parse_formula(s));

    if (auto problems = frame_problems(m); !problems.empty()) {
        json record{{"valid_model", false}, {"failures", problems}};
        std::string text = "invalid model:";
        for (const auto& p : problems)
            text += "\n  " + p;
        emit(out, o, record, text);
        return negative;
    }

    const EvalMode mode = eval_mode(o.mode);
    const auto failing = failing_world(m, f, mode);
    ModelEvaluator eval(m);
    json worlds = json::object();
    for (const auto& w : m.worlds)
        worlds[w] = eval.forces(w, f);

    json record{{"valid_model", true}, {"formula", print_formula(f)}, {"mode", o.mode}, {"holds", !failing}, {"forced", worlds}};
    std::string text = failing ? "fails at world " + *failing : "holds";
    if (failing)
        record["failing_world"] = *failing;
    bool report_ok = true;
    if (!sound_for.empty() || !cs.empty()) {
        const SoundnessReport report = validate_model(m, sound_for, cs);
        record["soundness"] = io::to_json(report);
        report_ok = report.ok();
        text += report_ok ? "\nmodel is sound and satisfies the cs" : "\nmodel check failures:";
        for (const auto& p : report.failures)
            text += "\n  " + p;
    }
    emit(out, o, record, text);
    return !failing && report_ok ? ok : negative;
}

std::string describe(const Verdict& v)
{
    if (const auto* t = std::get_if<Theorem>(&v))
        return "Theorem (" + t->certificate + ")";
    if (const auto* n = std::get_if<NonTheorem>(&v))
        return "NonTheorem: fails at world " + n->failing_world + "\n" + io::to_json(n->model).dump();
    return "Unknown: exhausted " + std::get<Unknown>(v).exhausted;
}

int verdict_code(const Verdict& v)
{
    if (std::holds_alternative<Theorem>(v))
        return ok;
    if (std::holds_alternative<NonTheorem>(v))
        return negative;
    return unknown;
}

int cmd_decide(const Options& o, std::ostream& out)
{
    const Formula f = parse_formula(o.expr);
    const ConstantSpecification cs = read_cs(o.cs_file);
    SearchConfig cfg;
    cfg.max_worlds = o.max_worlds;
    cfg.max_seed = o.max_seed;
    cfg.eval_mode = eval_mode(o.mode);
    cfg.saturation_depth = o.depth;
    cfg.time_budget = std::chrono::milliseconds(static_cast<long long>(o.budget * 1000));
    cfg.parallel = !o.serial;
    const Verdict v = decide(f, cs, cfg);
    if (const auto* n = std::get_if<NonTheorem>(&v); n && !o.model_out.empty())
        io::write_json(o.model_out, io::to_json(n->model));
    emit(out, o, io::to_json(v), describe(v));
    return verdict_code(v);
}

int cmd_decide_gl(const Options& o, std::ostream& out)
{
    const Verdict v = decide_gl(parse_formula(o.expr));
    emit(out, o, io::to_json(v), describe(v));
    return verdict_code(v);
}

int cmd_conjoin(const Options& o, std::ostream& out)
{
    const Derivation k = io::load_derivation(o.derivation_file);
    const Derivation l = io::load_derivation(o.second_file);
    const Derivation joined = conjoin(k, l);
    io::write_json(o.out_file, io::to_json(joined));
    emit(out, o, {{"steps", joined.steps.size()}, {"out", o.out_file}},
         std::to_string(joined.steps.size()) + " steps written to " + o.out_file);
    return ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Checker, model checker and decision procedure for the logic GLA", "gla"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", o.as_json, "Machine-readable output");

    auto* parse = app.add_subcommand("parse", "Parse and print a formula or term");
    parse->add_flag("--term", o.term, "Read EXPR as a proof term");
    parse->add_option("EXPR", o.expr)->required();

    auto* check = app.add_subcommand("check", "Check a derivation file");
    check->add_option("--cs", o.cs_file, "Constant specification file")->check(CLI::ExistingFile);
    check->add_flag("--allow-taut", o.allow_taut, "Accept Taut steps");
    check->add_option("DERIV", o.derivation_file)->required()->check(CLI::ExistingFile);

    auto* lift_cmd = app.add_subcommand("lift", "Internalize a derivation into a proof term");
    lift_cmd->add_option("--cs", o.cs_file)->check(CLI::ExistingFile);
    lift_cmd->add_option("--out", o.out_file)->required();
    lift_cmd->add_option("DERIV", o.derivation_file)->required()->check(CLI::ExistingFile);

    auto* model_check = app.add_subcommand("model-check", "Evaluate a formula in a model file");
    model_check->add_option("--model", o.model_file)->required()->check(CLI::ExistingFile);
    model_check->add_option("--formula", o.formula)->required();
    model_check->add_option("--mode", o.mode)->check(CLI::IsMember({"all", "root"}));
    model_check->add_option("--sound-for", o.sound_for, "Check soundness for this formula");
    model_check->add_option("--cs", o.cs_file)->check(CLI::ExistingFile);

    auto* decide_cmd = app.add_subcommand("decide", "Decide a formula within bounds");
    decide_cmd->add_option("EXPR", o.expr)->required();
    decide_cmd->add_option("--cs", o.cs_file)->check(CLI::ExistingFile);
    decide_cmd->add_option("--max-worlds", o.max_worlds)->check(CLI::Range(1, 6));
    decide_cmd->add_option("--max-seed", o.max_seed)->check(CLI::Range(1, 64));
    decide_cmd->add_option("--mode", o.mode)->check(CLI::IsMember({"all", "root"}));
    decide_cmd->add_option("--depth", o.depth)->check(CLI::PositiveNumber);
    decide_cmd->add_option("--budget", o.budget, "Seconds")->check(CLI::PositiveNumber);
    decide_cmd->add_flag("--serial", o.serial, "Single-threaded search");
    decide_cmd->add_option("--model-out", o.model_out, "Write a countermodel here");

    auto* decide_gl_cmd = app.add_subcommand("decide-gl", "Decide GL validity of a formula without proof terms");
    decide_gl_cmd->add_option("EXPR", o.expr)->required();

    auto* conjoin_cmd = app.add_subcommand("conjoin", "Concatenate two derivations");
    conjoin_cmd->add_option("D1", o.derivation_file)->required()->check(CLI::ExistingFile);
    conjoin_cmd->add_option("D2", o.second_file)->required()->check(CLI::ExistingFile);
    conjoin_cmd->add_option("--out", o.out_file)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage;
    }

    try {
        if (*parse)
            return cmd_parse(o, out);
        if (*check)
            return cmd_check(o, out);
        if (*lift_cmd)
            return cmd_lift(o, out, err);
        if (*model_check)
            return cmd_model_check(o, out);
        if (*decide_cmd)
            return cmd_decide(o, out);
        if (*decide_gl_cmd)
            return cmd_decide_gl(o, out);
        if (*conjoin_cmd)
            return cmd_conjoin(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return usage;
    } catch (const io::FormatError& e) {
        err << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return usage;
    }
    return usage;
}

} // namespace gla::cli
