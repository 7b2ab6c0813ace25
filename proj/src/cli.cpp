#include "pieri/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pieri/branching.hpp"
#include "pieri/json_io.hpp"
#include "pieri/kostant.hpp"
#include "pieri/pieri_rules.hpp"
#include "pieri/tensor.hpp"

namespace pieri::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, sep))
        out.push_back(token);
    return out;
}

// "3,2,-2" as exact coordinates; "3/2,1/2" only for family B.
Weight parse_weight_arg(const std::string& text, GroupType g) {
    std::vector<int> doubled;
    for (const std::string& token : split(text, ',')) {
        auto slash = token.find('/');
        if (slash != std::string::npos) {
            if (g.family != Family::B)
                throw std::invalid_argument("half-integral coordinates are only available for family B");
            if (token.substr(slash + 1) != "2")
                throw std::invalid_argument("only halves are supported: write p/2");
            doubled.push_back(std::stoi(token.substr(0, slash)));
        } else {
            std::size_t pos = 0;
            int v = std::stoi(token, &pos);
            if (pos != token.size())
                throw std::invalid_argument("malformed coordinate '" + token + "'");
            doubled.push_back(2 * v);
        }
    }
    if (static_cast<int>(doubled.size()) != g.rank)
        throw std::invalid_argument("rank mismatch: expected " + std::to_string(g.rank) +
                                    " coordinates");
    return Weight(std::move(doubled)); // rejects mixed parity
}

int threads_default() {
    if (const char* env = std::getenv("PIERI_THREADS")) {
        int v = std::atoi(env);
        if (v < 1)
            throw std::invalid_argument("PIERI_THREADS must be a positive integer");
        return v;
    }
    return 1;
}

std::string mult_str(const Int& m) { return m.str(); }

std::string render_decomposition(const Decomposition& dec, const std::string& format,
                                 const std::string& header, const std::string& warning) {
    if (format == "json") {
        nlohmann::json j = to_json(dec);
        if (!warning.empty())
            j["warning"] = warning;
        return j.dump() + "\n";
    }
    std::ostringstream out;
    out << "# " << header << "\n";
    if (!warning.empty())
        out << "# warning: " << warning << "\n";
    const auto& terms = dec.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        out << Weight(it->first).str() << "  " << mult_str(it->second) << "\n";
    return out.str();
}

std::string render_diagram(const WeightDiagram& d, const std::string& format,
                           const std::string& header) {
    if (format == "json")
        return to_json(d).dump() + "\n";
    std::ostringstream out;
    out << "# " << header << "  mass=" << mult_str(d.mass()) << "\n";
    const auto& entries = d.entries();
    for (auto it = entries.rbegin(); it != entries.rend(); ++it)
        out << Weight(it->first).str() << "  " << mult_str(it->second) << "\n";
    return out.str();
}

void maybe_write_json(const Command& cmd, const nlohmann::json& j) {
    if (cmd.json_path.empty())
        return;
    std::ofstream f(cmd.json_path);
    if (!f)
        throw std::invalid_argument("cannot open '" + cmd.json_path + "' for writing");
    f << j.dump(2) << "\n";
}

Weight lambda_weight(const Command& cmd) {
    GroupType g = *cmd.group;
    if (cmd.hw)
        return *cmd.hw;
    if (cmd.lambda)
        return Weight::from_partition(*cmd.lambda, g.rank);
    throw std::invalid_argument("missing --lambda or --hw");
}

RunResult run_rule(const Command& cmd) {
    GroupType g = *cmd.group;
    const Partition& lam = *cmd.lambda;
    std::ostringstream header;
    std::string warning;
    Decomposition dec{g};
    if (cmd.diagram == DiagramKind::Exterior) {
        if (g.family == Family::A) {
            dec = gl_exterior(lam, cmd.degree, g.rank);
        } else {
            if (!classical_rule_applies(g, lam)) {
                if (!cmd.force)
                    throw std::invalid_argument(
                        "highest weight is not regular for " + g.str() +
                        "; pass --force to compute the overlay count anyway");
                warning = "highest weight is not regular; the overlay count is not "
                          "guaranteed to match the tensor product";
            }
            dec = classical_exterior(g, lam, cmd.degree, cmd.force);
        }
        header << "rule " << g.str() << " lambda=" << lam.str() << " ext^" << cmd.degree;
    } else if (cmd.diagram == DiagramKind::Symmetric) {
        if (g.family != Family::A)
            throw std::invalid_argument(
                "no closed-form symmetric rule for families B/C/D; use `decompose --sym`");
        dec = gl_symmetric(lam, cmd.degree, g.rank);
        header << "rule " << g.str() << " lambda=" << lam.str() << " sym^" << cmd.degree;
    } else {
        throw std::invalid_argument("rule needs --ext or --sym");
    }
    maybe_write_json(cmd, to_json(dec));
    return {0, render_decomposition(dec, cmd.format, header.str(), warning)};
}

RunResult run_decompose(const Command& cmd) {
    GroupType g = *cmd.group;
    Weight lam = lambda_weight(cmd);
    Decomposition dec{g};
    std::ostringstream header;
    header << "decompose " << g.str() << " lambda=" << lam.str();
    switch (cmd.diagram) {
    case DiagramKind::Exterior:
        dec = klimyk_decompose(g, lam, exterior_power(g, cmd.degree));
        header << " ext^" << cmd.degree;
        break;
    case DiagramKind::Symmetric:
        dec = klimyk_decompose(g, lam, symmetric_power(g, cmd.degree));
        header << " sym^" << cmd.degree;
        break;
    case DiagramKind::Irrep: {
        Weight mu = cmd.mu_hw ? *cmd.mu_hw : Weight::from_partition(*cmd.mu, g.rank);
        dec = tensor_irreps(g, lam, mu);
        header << " mu=" << mu.str();
        break;
    }
    default:
        throw std::invalid_argument("decompose needs --ext, --sym or --mu");
    }
    maybe_write_json(cmd, to_json(dec));
    return {0, render_decomposition(dec, cmd.format, header.str(), "")};
}

RunResult run_branch(const Command& cmd) {
    GroupType g = *cmd.group;
    if (g.family != Family::A)
        throw std::invalid_argument("branching is implemented for general linear groups only");
    if (g.rank < 2)
        throw std::invalid_argument("branching needs rank at least 2");
    Decomposition dec = branch_gl(*cmd.lambda, g.rank - 1);
    std::ostringstream header;
    header << "branch GL" << g.rank << " -> GL" << (g.rank - 1) << " hw=" << cmd.lambda->str();
    maybe_write_json(cmd, to_json(dec));
    return {0, render_decomposition(dec, cmd.format, header.str(), "")};
}

RunResult run_dim(const Command& cmd) {
    GroupType g = *cmd.group;
    Weight lam = lambda_weight(cmd);
    Int dim = weyl_dim(g, lam);
    nlohmann::json j{{"group", g.str()}, {"hw", weight_to_json(lam)}, {"dim", dim.str()}};
    maybe_write_json(cmd, j);
    if (cmd.format == "json")
        return {0, j.dump() + "\n"};
    return {0, dim.str() + "\n"};
}

RunResult run_weights(const Command& cmd) {
    GroupType g = *cmd.group;
    WeightDiagram d{g};
    std::ostringstream header;
    header << "weights " << g.str();
    switch (cmd.diagram) {
    case DiagramKind::Defining:
        d = defining_weights(g);
        header << " defining";
        break;
    case DiagramKind::Exterior:
        d = exterior_power(g, cmd.degree);
        header << " ext^" << cmd.degree;
        break;
    case DiagramKind::Symmetric:
        d = symmetric_power(g, cmd.degree);
        header << " sym^" << cmd.degree;
        break;
    case DiagramKind::Irrep: {
        Weight lam = lambda_weight(cmd);
        d = freudenthal(g, lam);
        header << " hw=" << lam.str();
        break;
    }
    default:
        throw std::invalid_argument("weights needs --hw, --lambda, --ext, --sym or --defining");
    }
    maybe_write_json(cmd, to_json(d));
    return {0, render_diagram(d, cmd.format, header.str())};
}

RunResult run_verify(const Command& cmd) {
    std::ostringstream out;
    switch (cmd.verify) {
    case VerifyKind::Kostant: {
        GroupType g = *cmd.group;
        Weight lam = lambda_weight(cmd);
        Weight mu = cmd.mu_hw ? *cmd.mu_hw : Weight::from_partition(*cmd.mu, g.rank);
        KostantBoundReport r = kostant_bound_check(g, lam, mu);
        maybe_write_json(cmd, to_json(r));
        if (cmd.format == "json")
            return {r.holds ? 0 : 1, to_json(r).dump() + "\n"};
        out << "# verify kostant " << g.str() << " lambda=" << lam.str() << " mu=" << mu.str()
            << "\n";
        out << "constituents " << r.constituents.size() << "\n";
        out << "converse gaps " << r.converse_gaps.size() << ":";
        for (const auto& w : r.converse_gaps)
            out << " " << w.str();
        out << "\n";
        out << (r.holds ? "PASS\n" : "FAIL\n");
        return {r.holds ? 0 : 1, out.str()};
    }
    case VerifyKind::ExtendedKostant: {
        GroupType g = *cmd.group;
        HomEqualityReport r = hom_equality_check(g, *cmd.lambda, cmd.degree);
        maybe_write_json(cmd, to_json(r));
        if (cmd.format == "json")
            return {r.ok() ? 0 : 1, to_json(r).dump() + "\n"};
        out << "# verify extended-kostant " << g.str() << " lambda=" << cmd.lambda->str()
            << " ext^" << cmd.degree << "\n";
        out << "checked " << r.checked << " highest weights\n";
        for (const auto& m : r.mismatches)
            out << "mismatch nu=" << m.nu.str() << " tensor=" << mult_str(m.tensor_mult)
                << " hom=" << mult_str(m.hom_count) << "\n";
        if (r.nonpartition_terms > 0)
            out << "unscanned non-partition terms: " << r.nonpartition_terms << "\n";
        out << (r.ok() ? "PASS\n" : "FAIL\n");
        return {r.ok() ? 0 : 1, out.str()};
    }
    case VerifyKind::Shift: {
        GroupType g = *cmd.group;
        if (g.family != Family::C)
            throw std::invalid_argument("shift invariance is a symplectic statement; use a C group");
        ShiftInvarianceReport r = shift_invariance_check(g.rank, *cmd.lambda, cmd.degree);
        maybe_write_json(cmd, to_json(r));
        if (cmd.format == "json")
            return {r.exterior_ok() ? 0 : 1, to_json(r).dump() + "\n"};
        out << "# verify shift C" << r.n << " lambda=" << r.lambda.str() << " d=" << r.degree
            << "\n";
        out << "exterior: " << (r.exterior_ok() ? "invariant" : "VIOLATED") << "\n";
        for (const auto& v : r.exterior_violations)
            out << "  at " << v.shifted_hw.str() << ": " << mult_str(v.shifted_mult)
                << " != " << mult_str(v.direct_mult) << "\n";
        out << "symmetric: " << r.symmetric_violations.size() << " violations\n";
        for (const auto& v : r.symmetric_violations)
            out << "  at " << v.shifted_hw.str() << ": " << mult_str(v.shifted_mult)
                << " != " << mult_str(v.direct_mult) << "\n";
        out << (r.exterior_ok() ? "PASS\n" : "FAIL\n");
        return {r.exterior_ok() ? 0 : 1, out.str()};
    }
    case VerifyKind::Equivalence: {
        BranchReport r = equivalence_check(cmd.n, cmd.bound);
        maybe_write_json(cmd, to_json(r));
        if (cmd.format == "json")
            return {r.ok() ? 0 : 1, to_json(r).dump() + "\n"};
        out << "# verify equivalence n=" << r.n << " bound=" << r.degree_bound << "\n";
        out << "checked " << r.checked_pairs << " pairs\n";
        for (const auto& [mu, lam] : r.mismatches)
            out << "mismatch mu=" << mu.str() << " lambda=" << lam.str() << "\n";
        out << (r.ok() ? "PASS\n" : "FAIL\n");
        return {r.ok() ? 0 : 1, out.str()};
    }
    case VerifyKind::Cauchy: {
        CauchyReport r = cauchy_dimension_check(cmd.n, cmd.m, cmd.d);
        maybe_write_json(cmd, to_json(r));
        if (cmd.format == "json")
            return {r.ok() ? 0 : 1, to_json(r).dump() + "\n"};
        out << "# verify cauchy n=" << r.n << " m=" << r.m << " d=" << r.d << "\n";
        out << "paired sum " << mult_str(r.paired_sum) << " vs polynomial dim "
            << mult_str(r.polynomial_dim) << "\n";
        out << (r.ok() ? "PASS\n" : "FAIL\n");
        return {r.ok() ? 0 : 1, out.str()};
    }
    case VerifyKind::Necessity: {
        GroupType g = *cmd.group;
        std::vector<WeightDiagram> reps;
        std::vector<std::string> names;
        for (int i = 1; i <= cmd.max_degree && i <= g.dim_defining(); ++i) {
            reps.push_back(exterior_power(g, i));
            names.push_back("ext^" + std::to_string(i));
        }
        for (int i = 1; i <= cmd.max_degree; ++i) {
            reps.push_back(symmetric_power(g, i));
            names.push_back("sym^" + std::to_string(i));
        }
        auto records = necessity_scan(g, cmd.max_entry, reps);
        nlohmann::json j{{"claim", "deep-chamber-necessity"},
                         {"group", g.str()},
                         {"max_entry", cmd.max_entry},
                         {"max_degree", cmd.max_degree},
                         {"counterexamples", nlohmann::json::array()}};
        for (const auto& rec : records)
            j["counterexamples"].push_back(
                {{"lambda", weight_to_json(rec.lambda)}, {"u", names[rec.rep_index]}});
        maybe_write_json(cmd, j);
        if (cmd.format == "json")
            return {records.empty() ? 0 : 1, j.dump() + "\n"};
        out << "# verify necessity " << g.str() << " entries<=" << cmd.max_entry
            << " degrees<=" << cmd.max_degree << "\n";
        for (const auto& rec : records)
            out << "counterexample lambda=" << rec.lambda.str() << " u=" << names[rec.rep_index]
                << "\n";
        out << (records.empty() ? "PASS (no counterexamples)\n" : "FAIL (counterexamples found)\n");
        return {records.empty() ? 0 : 1, out.str()};
    }
    default:
        throw std::invalid_argument("unknown verify subcommand");
    }
}

} // namespace

Command parse(const std::vector<std::string>& args) {
    CLI::App app{"Exact tensor-product, Pieri-rule and branching calculator for classical groups"};
    app.require_subcommand(0, 1);

    Command cmd;
    cmd.threads = threads_default();

    std::string group_s, lambda_s, hw_s, mu_s, mu_hw_s, from_s;
    int ext = -1, sym = -1;
    bool defining = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cmd.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--json", cmd.json_path, "also write a JSON document to this file");
        sub->add_option("--threads", cmd.threads, "worker cap (results are identical at any value)")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* rule = app.add_subcommand("rule", "closed-form Pieri rule");
    rule->add_option("--group", group_s)->required();
    rule->add_option("--lambda", lambda_s)->required();
    rule->add_option("--ext", ext)->check(CLI::NonNegativeNumber);
    rule->add_option("--sym", sym)->check(CLI::NonNegativeNumber);
    rule->add_flag("--force", cmd.force, "compute for non-regular weights too");
    add_common(rule);

    CLI::App* dec = app.add_subcommand("decompose", "character-theoretic tensor decomposition");
    dec->add_option("--group", group_s)->required();
    dec->add_option("--lambda", lambda_s);
    dec->add_option("--hw", hw_s);
    dec->add_option("--ext", ext)->check(CLI::NonNegativeNumber);
    dec->add_option("--sym", sym)->check(CLI::NonNegativeNumber);
    dec->add_option("--mu", mu_s);
    dec->add_option("--mu-hw", mu_hw_s);
    add_common(dec);

    CLI::App* branch = app.add_subcommand("branch", "restrict GL(n+1) to GL(n)");
    branch->add_option("--from", from_s)->required();
    branch->add_option("--hw", lambda_s)->required();
    add_common(branch);

    CLI::App* dim = app.add_subcommand("dim", "Weyl dimension");
    dim->add_option("--group", group_s)->required();
    dim->add_option("--hw", hw_s);
    dim->add_option("--lambda", lambda_s);
    add_common(dim);

    CLI::App* weights = app.add_subcommand("weights", "weight diagrams");
    weights->add_option("--group", group_s)->required();
    weights->add_option("--hw", hw_s);
    weights->add_option("--lambda", lambda_s);
    weights->add_option("--ext", ext)->check(CLI::NonNegativeNumber);
    weights->add_option("--sym", sym)->check(CLI::NonNegativeNumber);
    weights->add_flag("--defining", defining);
    add_common(weights);

    CLI::App* verify = app.add_subcommand("verify", "cross-checks with structured reports");
    verify->require_subcommand(1);
    CLI::App* vk = verify->add_subcommand("kostant", "support and multiplicity bound");
    vk->add_option("--group", group_s)->required();
    vk->add_option("--lambda", lambda_s);
    vk->add_option("--hw", hw_s);
    vk->add_option("--mu", mu_s);
    vk->add_option("--mu-hw", mu_hw_s);
    add_common(vk);
    CLI::App* vek = verify->add_subcommand("extended-kostant", "Levi Hom-count equality");
    vek->add_option("--group", group_s)->required();
    vek->add_option("--lambda", lambda_s)->required();
    vek->add_option("--ext", ext)->required()->check(CLI::NonNegativeNumber);
    add_common(vek);
    CLI::App* vs = verify->add_subcommand("shift", "row-shift invariance on Sp(2n)");
    vs->add_option("--group", group_s)->required();
    vs->add_option("--lambda", lambda_s)->required();
    vs->add_option("--ext", ext)->required()->check(CLI::NonNegativeNumber);
    add_common(vs);
    CLI::App* ve = verify->add_subcommand("equivalence", "Pieri vs branching");
    ve->add_option("--n", cmd.n)->required()->check(CLI::PositiveNumber);
    ve->add_option("--bound", cmd.bound)->check(CLI::NonNegativeNumber);
    add_common(ve);
    CLI::App* vc = verify->add_subcommand("cauchy", "polynomial-ring dimension identity");
    vc->add_option("--n", cmd.n)->required()->check(CLI::PositiveNumber);
    vc->add_option("--m", cmd.m)->required()->check(CLI::PositiveNumber);
    vc->add_option("--d", cmd.d)->required()->check(CLI::NonNegativeNumber);
    add_common(vc);
    CLI::App* vn = verify->add_subcommand("necessity", "deep-chamber hypothesis necessity scan");
    vn->add_option("--group", group_s)->required();
    vn->add_option("--max-entry", cmd.max_entry)->check(CLI::NonNegativeNumber);
    vn->add_option("--max-i", cmd.max_degree)->check(CLI::NonNegativeNumber);
    add_common(vn);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        cmd.verb = Verb::Help;
        cmd.help_text = app.help();
        return cmd;
    } catch (const CLI::ParseError& e) {
        throw std::invalid_argument(std::string("usage: ") + e.what());
    }

    if (cmd.threads < 1)
        throw std::invalid_argument("--threads must be a positive integer");

    auto parse_group = [&](const std::string& s) {
        cmd.group = GroupType::parse(s);
    };

    if (rule->parsed() || dec->parsed() || dim->parsed() || weights->parsed())
        parse_group(group_s);
    if (branch->parsed())
        parse_group(from_s);
    if (verify->parsed() && !group_s.empty())
        parse_group(group_s);

    if (!lambda_s.empty())
        cmd.lambda = Partition::parse(lambda_s);
    if (!hw_s.empty()) {
        if (!cmd.group)
            throw std::invalid_argument("--hw needs --group");
        cmd.hw = parse_weight_arg(hw_s, *cmd.group);
    }
    if (!mu_s.empty())
        cmd.mu = Partition::parse(mu_s);
    if (!mu_hw_s.empty()) {
        if (!cmd.group)
            throw std::invalid_argument("--mu-hw needs --group");
        cmd.mu_hw = parse_weight_arg(mu_hw_s, *cmd.group);
    }

    if (ext >= 0 && sym >= 0)
        throw std::invalid_argument("--ext and --sym are mutually exclusive");
    if (ext >= 0) {
        cmd.diagram = DiagramKind::Exterior;
        cmd.degree = ext;
    } else if (sym >= 0) {
        cmd.diagram = DiagramKind::Symmetric;
        cmd.degree = sym;
    } else if (defining) {
        cmd.diagram = DiagramKind::Defining;
    } else if (cmd.mu || cmd.mu_hw) {
        cmd.diagram = DiagramKind::Irrep;
    } else if (cmd.hw || cmd.lambda) {
        cmd.diagram = DiagramKind::Irrep;
    }

    if (rule->parsed())
        cmd.verb = Verb::Rule;
    else if (dec->parsed())
        cmd.verb = Verb::Decompose;
    else if (branch->parsed())
        cmd.verb = Verb::Branch;
    else if (dim->parsed())
        cmd.verb = Verb::Dim;
    else if (weights->parsed())
        cmd.verb = Verb::Weights;
    else if (verify->parsed()) {
        cmd.verb = Verb::Verify;
        if (vk->parsed())
            cmd.verify = VerifyKind::Kostant;
        else if (vek->parsed())
            cmd.verify = VerifyKind::ExtendedKostant;
        else if (vs->parsed())
            cmd.verify = VerifyKind::Shift;
        else if (ve->parsed())
            cmd.verify = VerifyKind::Equivalence;
        else if (vc->parsed())
            cmd.verify = VerifyKind::Cauchy;
        else if (vn->parsed())
            cmd.verify = VerifyKind::Necessity;
        cmd.degree = ext >= 0 ? ext : cmd.degree;
    } else {
        cmd.verb = Verb::Help;
        cmd.help_text = app.help();
    }
    return cmd;
}

RunResult run(const Command& cmd) {
    switch (cmd.verb) {
    case Verb::Help:
        return {0, cmd.help_text};
    case Verb::Rule:
        return run_rule(cmd);
    case Verb::Decompose:
        return run_decompose(cmd);
    case Verb::Branch:
        return run_branch(cmd);
    case Verb::Dim:
        return run_dim(cmd);
    case Verb::Weights:
        return run_weights(cmd);
    case Verb::Verify:
        return run_verify(cmd);
    }
    return {2, "error: unknown verb\n"};
}

RunResult run_args(const std::vector<std::string>& args) {
    try {
        return run(parse(args));
    } catch (const invalid_character_error& e) {
        return {3, std::string("internal error: ") + e.what() + "\n"};
    } catch (const std::logic_error& e) {
        return {3, std::string("internal error: ") + e.what() + "\n"};
    } catch (const std::invalid_argument& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {3, std::string("internal error: ") + e.what() + "\n"};
    }
}

int main_entry(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunResult r = run_args(args);
    if (r.exit_code == 2 || r.exit_code == 3)
        std::cerr << r.output;
    else
        std::cout << r.output;
    return r.exit_code;
}

} // namespace pieri::cli
