// smslc: domain definition -> state machine -> coverage plan -> demonstrations.
//
// Exit codes: 0 ok, 1 semantic findings, 2 bad input, 3 resource cap.

#include "smsl/coverage.hpp"
#include "smsl/demogen.hpp"
#include "smsl/domain_json.hpp"
#include "smsl/domains.hpp"
#include "smsl/errors.hpp"
#include "smsl/oracle.hpp"
#include "smsl/smsl_io.hpp"
#include "smsl/synthesis.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace smsl;

enum Exit { ok = 0, findings = 1, bad_input = 2, cap = 3 };

struct RunConfig {
    std::string domain_path;
    std::string builtin;
    std::string smsl_path;
    std::string plan_path;
    std::string output;
    std::uint64_t seed = 0;
    std::uint64_t seeds = 1;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::optional<double> tol_xy;
    std::optional<double> tol_yaw_deg;
    std::string chess_movement;
    std::vector<std::string> impassable;
    bool impassable_given = false;
    bool sample = false;
};

struct InputError : Error {
    using Error::Error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Temp file in the target directory, then rename over the target.
void write_atomic(const std::string& path, const std::string& text)
{
    namespace fs = std::filesystem;
    const fs::path target{path};
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw InputError("cannot write '" + tmp.string() + "'");
        out << text;
        out.flush();
        if (!out)
            throw InputError("cannot write '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw InputError("cannot replace '" + path + "'");
    }
}

void emit_output(const RunConfig& cfg, const std::string& text)
{
    if (cfg.output.empty() || cfg.output == "-")
        std::cout << text;
    else
        write_atomic(cfg.output, text);
}

domains::ChessRules chess_rules(const RunConfig& cfg)
{
    domains::ChessRules rules;
    if (!cfg.chess_movement.empty()) {
        auto movement = domains::chess_movement_from_string(cfg.chess_movement);
        if (!movement)
            throw InputError("unknown chess movement '" + cfg.chess_movement + "'");
        rules.movement = *movement;
    }
    if (cfg.impassable_given)
        rules.impassable = cfg.impassable;
    return rules;
}

std::optional<DomainSpec> builtin_spec(const std::string& name, const RunConfig& cfg)
{
    if (name == "chess")
        return domains::chess(chess_rules(cfg)).spec;
    if (auto m = domains::builtin(name))
        return m->spec;
    return std::nullopt;
}

DomainSpec load_domain(const RunConfig& cfg)
{
    if (!cfg.domain_path.empty() == !cfg.builtin.empty())
        throw InputError("give exactly one of a domain file or --builtin");
    if (!cfg.builtin.empty()) {
        auto spec = builtin_spec(cfg.builtin, cfg);
        if (!spec)
            throw InputError("unknown built-in domain '" + cfg.builtin + "'");
        return *spec;
    }
    return parse_domain(read_file(cfg.domain_path));
}

int cmd_synth(const RunConfig& cfg)
{
    const auto spec = load_domain(cfg);
    SynthesisOptions options{cfg.sample, cfg.seed};
    const auto result = synthesize_traced(spec, options);
    const auto& c = result.fsm.counts;
    if (!cfg.output.empty())
        write_atomic(cfg.output, emit_smsl(result.fsm));
    std::cout << "candidates valid_states operations transitions\n"
              << c.candidates << ' ' << c.valid_states << ' ' << c.operations << ' ' << c.transitions << '\n';
    if (result.trace.sampled)
        std::cerr << "warning: state space sampled (seed " << cfg.seed << ")\n";
    return ok;
}

int cmd_coverage(const RunConfig& cfg)
{
    const auto fsm = parse_smsl(read_file(cfg.smsl_path));
    const auto plan = plan_coverage(fsm, fsm.initial_state, cfg.node_budget);
    if (!cfg.output.empty())
        write_atomic(cfg.output, emit_plan(plan));
    std::cout << "mode " << to_string(plan.mode) << "\npaths " << plan.paths.size() << "\ntotal_steps "
              << plan.total_steps() << "\ncovered " << plan.covered.size() << "\nunreachable "
              << plan.unreachable.size() << '\n';
    if (!plan.unreachable.empty()) {
        std::cerr << "warning: " << plan.unreachable.size() << " state(s) unreachable from "
                  << state_id(fsm.initial_state) << ':';
        for (auto code : plan.unreachable)
            std::cerr << ' ' << state_id(code);
        std::cerr << '\n';
    }
    return ok;
}

int cmd_demos(const RunConfig& cfg)
{
    const auto fsm = parse_smsl(read_file(cfg.smsl_path));
    const auto plan = parse_plan(read_file(cfg.plan_path));
    if (auto problem = plan_mismatch(fsm, plan))
        throw InputError("plan does not match the state machine: " + *problem);

    // Poses need a layout, which the state machine does not carry.
    std::optional<DomainSpec> spec;
    if (!cfg.domain_path.empty() || !cfg.builtin.empty())
        spec = load_domain(cfg);
    else
        spec = builtin_spec(fsm.spec_name, cfg);
    if (!spec)
        throw InputError("no layout for task '" + fsm.spec_name + "'; pass --domain or --builtin");
    if (cfg.tol_xy)
        spec->layout.tolerance.xy = *cfg.tol_xy;
    if (cfg.tol_yaw_deg)
        spec->layout.tolerance.yaw = *cfg.tol_yaw_deg * std::numbers::pi / 180.0;

    std::string out;
    std::size_t count = 0;
    for (std::uint64_t k = 0; k < cfg.seeds; ++k) {
        const auto store = collect_configs(*spec, fsm, plan, cfg.seed + k);
        for (const auto& record : generate_demos(fsm, store)) {
            out += emit_record(record);
            out += '\n';
            ++count;
        }
    }
    emit_output(cfg, out);
    std::cerr << count << " record(s) over " << cfg.seeds << " seed(s)\n";
    return ok;
}

int cmd_validate(const RunConfig& cfg)
{
    const auto report = validate_smsl(read_file(cfg.smsl_path));
    std::cout << format_report(report);
    return report.ok() ? ok : findings;
}

int cmd_oracle(const RunConfig& cfg)
{
    if (cfg.builtin.empty())
        throw InputError("oracle needs --builtin");
    auto spec = builtin_spec(cfg.builtin, cfg);
    if (!spec)
        throw InputError("unknown built-in domain '" + cfg.builtin + "'");
    const auto expected = oracle::reference(cfg.builtin, chess_rules(cfg));
    const auto actual = oracle::project(synthesize(*spec), expected);
    const auto diff = oracle::compare(expected, actual);
    std::cout << expected.domain << ": reference " << expected.states.size() << " states, "
              << expected.transitions.size() << " transitions; synthesized " << actual.states.size()
              << " states, " << actual.transitions.size() << " transitions\n";
    if (diff.identical()) {
        std::cout << "identical\n";
        return ok;
    }
    std::cout << diff.total << " discrepancies\n";
    for (const auto& line : diff.discrepancies)
        std::cout << "  " << line << '\n';
    return findings;
}

int cmd_stats(const RunConfig& cfg)
{
    const auto fsm = parse_smsl(read_file(cfg.smsl_path));
    std::map<std::size_t, std::size_t> degrees;
    for (const auto& out : fsm.successors())
        ++degrees[out.size()];
    std::cout << "task " << fsm.spec_name << "\nstates " << fsm.states.size() << "\noperations "
              << fsm.operations.size() << "\ntransitions " << fsm.transitions.size() << "\nreachable "
              << reachable_states(fsm, fsm.initial_state).size() << "\nout_degree";
    for (auto [d, n] : degrees)
        std::cout << ' ' << d << ':' << n;
    std::cout << '\n';
    return ok;
}

int cmd_export_domain(const RunConfig& cfg)
{
    emit_output(cfg, emit_domain(load_domain(cfg)));
    return ok;
}

int run_guarded(const std::function<int()>& body)
{
    try {
        return body();
    } catch (const EnumerationCapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cap;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const SyntaxError& e) {
        std::cerr << "syntax error: " << e.what() << '\n';
        return bad_input;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return bad_input;
    } catch (const ReferenceError& e) {
        std::cerr << "reference error: " << e.what() << '\n';
        return bad_input;
    } catch (const InvalidDomain& e) {
        std::cerr << "invalid domain: " << e.what() << '\n';
        return bad_input;
    } catch (const MalformedExpression& e) {
        std::cerr << "invalid domain: " << e.what() << '\n';
        return bad_input;
    } catch (const TemplateError& e) {
        std::cerr << "invalid domain: " << e.what() << '\n';
        return bad_input;
    } catch (const InfeasibleLayout& e) {
        std::cerr << "infeasible layout: " << e.what() << '\n';
        return bad_input;
    } catch (const ConsistencyError& e) {
        std::cerr << "inconsistent input: " << e.what() << '\n';
        return bad_input;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return findings;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"State machine synthesis, coverage planning and demonstration generation"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_builtin = [&](CLI::App* cmd) {
        cmd->add_option("--builtin", cfg.builtin, "Built-in domain: hanoi, river_crossing (river), chess");
        cmd->add_option("--chess-movement", cfg.chess_movement, "rook_slide, orthogonal_step, king_step or free");
        cmd->add_option("--impassable", cfg.impassable, "Impassable chess blocks")
            ->delimiter(',')
            ->each([&](const std::string&) { cfg.impassable_given = true; });
    };

    auto* synth = app.add_subcommand("synth", "Synthesize a state machine from a domain definition");
    synth->add_option("domain", cfg.domain_path, "Domain definition (.domain.json)");
    add_builtin(synth);
    synth->add_option("-o,--output", cfg.output, "SMSL output (.smsl.json)");
    synth->add_flag("--sample", cfg.sample, "Sample valid states when the enumeration cap is exceeded");
    synth->add_option("--seed", cfg.seed, "Sampling seed");

    auto* coverage = app.add_subcommand("coverage", "Plan paths covering every reachable state");
    coverage->add_option("smsl", cfg.smsl_path, "SMSL file")->required();
    coverage->add_option("-o,--output", cfg.output, "Plan output (.plan.json)");
    coverage->add_option("--node-budget", cfg.node_budget, "Search nodes before falling back to several paths");

    auto* demos = app.add_subcommand("demos", "Generate demonstration records");
    demos->add_option("smsl", cfg.smsl_path, "SMSL file")->required();
    demos->add_option("plan", cfg.plan_path, "Coverage plan")->required();
    demos->add_option("--domain", cfg.domain_path, "Domain definition supplying the layout");
    add_builtin(demos);
    demos->add_option("-o,--output", cfg.output, "Records output (.demos.jsonl)");
    demos->add_option("--seed", cfg.seed, "First layout seed");
    demos->add_option("--seeds", cfg.seeds, "Number of consecutive seeds")->check(CLI::PositiveNumber);
    demos->add_option("--tol-xy", cfg.tol_xy, "Abstraction tolerance in metres");
    demos->add_option("--tol-yaw", cfg.tol_yaw_deg, "Abstraction yaw tolerance in degrees");

    auto* validate = app.add_subcommand("validate", "Check an SMSL document");
    validate->add_option("smsl", cfg.smsl_path, "SMSL file")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Compare synthesis with a brute-force reference");
    add_builtin(oracle_cmd);

    auto* stats = app.add_subcommand("stats", "Summarize an SMSL document");
    stats->add_option("smsl", cfg.smsl_path, "SMSL file")->required();

    auto* export_domain = app.add_subcommand("export-domain", "Write a built-in domain as a definition file");
    add_builtin(export_domain);
    export_domain->add_option("-o,--output", cfg.output, "Output (.domain.json)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_input;
    }

    const std::pair<CLI::App*, int (*)(const RunConfig&)> table[] = {
        {synth, cmd_synth},         {coverage, cmd_coverage}, {demos, cmd_demos},
        {validate, cmd_validate},   {oracle_cmd, cmd_oracle}, {stats, cmd_stats},
        {export_domain, cmd_export_domain},
    };
    for (auto [cmd, fn] : table)
        if (cmd->parsed())
            return run_guarded([&] { return fn(cfg); });
    return bad_input;
}
