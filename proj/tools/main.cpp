// Command-line front end: parsers, invariants and verification suites.

#include "qlink/errors.hpp"
#include "qlink/json_io.hpp"
#include "qlink/modular.hpp"
#include "qlink/parallel.hpp"
#include "qlink/qgroup.hpp"
#include "qlink/rt.hpp"
#include "qlink/skein.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace qlink;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline input is recognized by its leading token; anything else is a
// file path.
std::string resolve_input(const std::string& arg) {
    size_t i = arg.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) return ""; // empty link
    if (arg.compare(i, 5, "braid") == 0 || arg.compare(i, 2, "X(") == 0 || arg[i] == 'U' ||
        arg.find("framings:") != std::string::npos)
        return arg;
    return read_file(arg);
}

std::vector<long> parse_long_list(const std::string& text) {
    std::vector<long> out;
    std::string piece;
    std::istringstream in(text);
    while (std::getline(in, piece, ',')) {
        if (piece.empty()) continue;
        out.push_back(std::stol(piece));
    }
    return out;
}

std::vector<long> blackboard_framings(const LinkDiagram& d) {
    std::vector<long> f(d.component_count(), 0);
    for (int i = 0; i < d.component_count(); ++i) f[i] = d.self_writhe(i);
    return f;
}

BraidWord random_braid(std::mt19937& rng, int max_strands, int max_letters) {
    std::uniform_int_distribution<int> strands(2, max_strands);
    BraidWord b;
    b.strands = strands(rng);
    std::uniform_int_distribution<int> len(1, max_letters);
    std::uniform_int_distribution<int> gen(1, b.strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    int n = len(rng);
    for (int i = 0; i < n; ++i) b.letters.emplace_back(gen(rng), sign(rng) ? 1 : -1);
    return b;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact link and 3-manifold quantum invariants"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "worker threads (default: QLINK_THREADS or 1)");

    std::string input, labels_str, framings_str, corpus_dir = "tests/data";
    long level = 0, root_exp = 1, genus = 0;
    unsigned long long max_cost = 10000000ull;
    bool as_json = false, reduced = false, use_functor = false;
    unsigned long count = 25, seed = 20240601;

    auto* cmd_bracket = app.add_subcommand("bracket", "Kauffman bracket of a braid or PD input");
    cmd_bracket->add_option("input", input)->required();
    cmd_bracket->add_flag("--json", as_json);
    cmd_bracket->add_flag("--functor", use_functor, "evaluate through the tangle functor");

    auto* cmd_jones = app.add_subcommand("jones", "Jones polynomial of an oriented input");
    cmd_jones->add_option("input", input)->required();
    cmd_jones->add_flag("--json", as_json);
    cmd_jones->add_flag("--reduced", reduced, "divide by the unknot value");

    auto* cmd_colored = app.add_subcommand("colored", "labeled framed-link invariant");
    cmd_colored->add_option("input", input)->required();
    cmd_colored->add_option("--labels", labels_str)->required();
    cmd_colored->add_option("--framings", framings_str);
    cmd_colored->add_option("--l", level, "evaluate at a root (order 4l); omit for generic");
    cmd_colored->add_option("--root-exp", root_exp);
    cmd_colored->add_flag("--json", as_json);

    auto* cmd_rt = app.add_subcommand("rt", "closed 3-manifold invariant from surgery");
    cmd_rt->add_option("input", input)->required();
    cmd_rt->add_option("--l", level)->required();
    cmd_rt->add_option("--root-exp", root_exp);
    cmd_rt->add_option("--max-cost", max_cost);
    cmd_rt->add_flag("--json", as_json);

    auto* cmd_dim = app.add_subcommand("tqft-dim", "state-space dimension of a closed surface");
    cmd_dim->add_option("--l", level)->required();
    cmd_dim->add_option("--genus", genus)->required();
    cmd_dim->add_option("--root-exp", root_exp);

    auto* cmd_md = app.add_subcommand("modular-data", "label data at a root, as JSON");
    cmd_md->add_option("--l", level)->required();
    cmd_md->add_option("--root-exp", root_exp);

    auto* cmd_check = app.add_subcommand("check", "verification suites");
    std::string suite;
    cmd_check->add_option("suite", suite, "relations|kirby|dual-alg")->required();
    cmd_check->add_option("--l", level);
    cmd_check->add_option("--root-exp", root_exp);
    cmd_check->add_option("--count", count);
    cmd_check->add_option("--seed", seed);
    cmd_check->add_option("--corpus", corpus_dir);
    cmd_check->add_option("--max-cost", max_cost);

    CLI11_PARSE(app, argc, argv);

    if (cmd_bracket->parsed()) {
        LinkDiagram d = parse_diagram(resolve_input(input));
        Laurent b = use_functor ? bracket_functor(d) : bracket_statesum(d, threads);
        std::cout << (as_json ? laurent_json(b) : canonical_string(b)) << "\n";
        return 0;
    }
    if (cmd_jones->parsed()) {
        LinkDiagram d = parse_diagram(resolve_input(input));
        Laurent v = reduced ? jones_reduced(d) : jones(d);
        std::cout << (as_json ? laurent_json(v) : jones_string(v)) << "\n";
        return 0;
    }
    if (cmd_colored->parsed()) {
        LinkDiagram d = parse_diagram(resolve_input(input));
        std::vector<long> labels = parse_long_list(labels_str);
        std::vector<long> framings =
            framings_str.empty() ? blackboard_framings(d) : parse_long_list(framings_str);
        if (level > 0) {
            RootContext rc = root_context(level, root_exp);
            Cyclotomic v = colored_invariant(d, labels, framings, rc);
            if (as_json) {
                std::cout << sqrt_ext_json(SqrtExt::from_base(Cyclotomic(rc.field, 1), v)) << "\n";
            } else {
                auto num = v.numeric();
                std::cout << v.str() << "  ~ (" << num.real() << ", " << num.imag() << ")\n";
            }
        } else {
            Laurent v = colored_invariant(d, labels, framings);
            std::cout << (as_json ? laurent_json(v) : canonical_string(v)) << "\n";
        }
        return 0;
    }
    if (cmd_rt->parsed()) {
        SurgeryPresentation p = parse_surgery(resolve_input(input));
        ModularData md = modular_data(level, root_exp);
        RTOptions opts;
        opts.threads = threads;
        opts.max_cost = max_cost;
        RTValue z = rt_invariant(p, md, opts);
        if (as_json) {
            std::cout << rt_value_json(z) << "\n";
        } else {
            auto num = z.numeric();
            std::cout << "corrected: " << z.corrected.str() << "\n";
            std::cout << "biframed:  " << z.biframed.str() << "  (signature " << z.sig << ")\n";
            std::cout << "numeric:   (" << num.real() << ", " << num.imag() << ")\n";
        }
        return 0;
    }
    if (cmd_dim->parsed()) {
        ModularData md = modular_data(level, root_exp);
        std::cout << tqft_dim(static_cast<int>(genus), md) << "\n";
        return 0;
    }
    if (cmd_md->parsed()) {
        std::cout << modular_data_json(modular_data(level, root_exp)) << "\n";
        return 0;
    }
    if (cmd_check->parsed()) {
        if (suite == "relations") {
            RelationReport r1 = check_relations(bracket_table());
            std::cout << r1.summary();
            long max_label = level > 0 ? level : 3;
            RelationReport r2 = labeled_relation_report(max_label, 2);
            std::cout << r2.summary();
            if (!r1.all_passed() || !r2.all_passed()) {
                std::cerr << "error kind=check msg=\"relation suite failed\"\n";
                return 2;
            }
            return 0;
        }
        if (suite == "kirby") {
            if (level < 2) throw ValidationError("check kirby needs --l");
            ModularData md = modular_data(level, root_exp);
            RTOptions opts;
            opts.threads = threads;
            opts.max_cost = max_cost;
            KirbyReport rep = kirby_invariance_suite(md, load_corpus(corpus_dir),
                                                     load_slide_pairs(corpus_dir), opts);
            std::cout << rep.summary();
            if (!rep.all_passed()) {
                std::cerr << "error kind=check msg=\"kirby suite failed\"\n";
                return 2;
            }
            return 0;
        }
        if (suite == "dual-alg") {
            std::mt19937 rng(seed);
            for (unsigned long i = 0; i < count; ++i) {
                BraidWord b = random_braid(rng, 5, 10);
                LinkDiagram d = braid_closure(b);
                if (bracket_statesum(d, threads) != bracket_functor(d)) {
                    std::cerr << "error kind=check msg=\"mismatch on " << braid_string(b)
                              << "\"\n";
                    return 2;
                }
            }
            std::cout << "pass  dual-alg on " << count << " random braids\n";
            return 0;
        }
        throw ValidationError("unknown suite '" + suite + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qlink::ParseError& e) {
        std::cerr << "error kind=parse pos=" << e.position() << " msg=\"" << e.what() << "\"\n";
        return 1;
    } catch (const qlink::CostLimitError& e) {
        std::cerr << "error kind=cost estimate=" << e.estimated_cost() << " msg=\"" << e.what()
                  << "\"\n";
        return 3;
    } catch (const qlink::ValidationError& e) {
        std::cerr << "error kind=validation msg=\"" << e.what() << "\"\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error kind=internal msg=\"" << e.what() << "\"\n";
        return 2;
    }
}
