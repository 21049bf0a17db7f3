// fixword: command-line front end. Exit codes: 0 verdict true / success,
// 1 verdict false (counterexample printed), 2 usage or parse error,
// 3 cap exceeded.
#include "fixword/analysis.hpp"
#include "fixword/digraph.hpp"
#include "fixword/dynamics.hpp"
#include "fixword/error.hpp"
#include "fixword/experiments.hpp"
#include "fixword/families.hpp"
#include "fixword/fixing.hpp"
#include "fixword/netlang.hpp"
#include "fixword/words.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fw = fixword;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fw::BooleanNetwork load_network(const std::string& path) { return fw::parse_network(read_file(path)); }
fw::SignedDigraph load_graph(const std::string& path) { return fw::parse_graph(read_file(path)); }

// A word argument is either a file path or the word text itself.
fw::Word load_word(const std::string& arg) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return fw::parse_word(read_file(arg));
    return fw::parse_word(arg);
}

int to_int(const std::string& s, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size()) throw usage_error("");
        return v;
    } catch (...) {
        throw usage_error(std::string("expected an integer for ") + what + ", got '" + s + "'");
    }
}

void need(const std::vector<std::string>& args, std::size_t count, const std::string& usage) {
    if (args.size() != count) throw usage_error("usage: " + usage);
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

const char* balance_name(fw::Balance b) {
    switch (b) {
    case fw::Balance::balanced: return "balanced";
    case fw::Balance::unbalanced: return "unbalanced";
    case fw::Balance::indefinite: return "indefinite";
    }
    return "?";
}

void print_word(const fw::Word& w, int n) {
    std::cout << fw::emit_word(w, n) << '\n' << "length = " << w.size() << '\n';
}

int cmd_classify(const std::string& path, const fw::Caps& caps) {
    const auto f = load_network(path);
    const auto c = fw::classify(f, caps);
    std::cout << "monotone: " << yes_no(c.monotone) << '\n'
              << "increasing: " << yes_no(c.increasing) << '\n'
              << "decreasing: " << yes_no(c.decreasing) << '\n'
              << "acyclic: " << yes_no(c.acyclic) << '\n'
              << "conjunctive: " << yes_no(c.conjunctive) << '\n'
              << "path: " << yes_no(c.path) << '\n'
              << "balanced: " << yes_no(c.balanced) << '\n'
              << "balance: " << balance_name(c.balance) << '\n';
    return kTrue;
}

int cmd_fixes(const std::string& path, const std::string& word, const fw::Caps& caps) {
    const auto f = load_network(path);
    const auto w = load_word(word);
    const auto v = fw::fixes(f, w, caps);
    if (v.fixes) {
        std::cout << "FIXES (checked " << v.checked << " states)\n";
        return kTrue;
    }
    const int n = f.size();
    std::cout << "DOES NOT FIX\ncounterexample: " << fw::to_string(*v.start, n) << " -> "
              << fw::to_string(*v.end, n) << " (not a fixed point; its image is "
              << fw::to_string(f.image(*v.end), n) << ")\n";
    return kFalse;
}

int cmd_lambda(const std::string& path, const fw::Caps& caps) {
    const auto f = load_network(path);
    try {
        const auto r = fw::fixing_length(f, caps);
        std::cout << "lambda = " << r.length << '\n' << "witness = " << fw::emit_word(r.witness, f.size()) << '\n';
        return kTrue;
    } catch (const fw::not_fixable&) {
        std::cout << "NOT FIXABLE\n";
        return kFalse;
    }
}

int cmd_fixable(const std::string& path, const fw::Caps& caps) {
    const auto f = load_network(path);
    const bool ok = fw::is_fixable(f, caps);
    std::cout << (ok ? "FIXABLE" : "NOT FIXABLE") << '\n';
    return ok ? kTrue : kFalse;
}

int cmd_word(const std::string& form, const std::vector<std::string>& args, bool improved, const fw::Caps& caps) {
    if (form == "monotone-universal") {
        need(args, 1, "word monotone-universal <n>");
        const int n = to_int(args[0], "n");
        print_word(fw::monotone_universal_word(n, caps), n);
    } else if (form == "balanced-universal") {
        need(args, 1, "word balanced-universal <n>");
        const int n = to_int(args[0], "n");
        print_word(fw::balanced_universal_word(n, caps), n);
    } else if (form == "graph-monotone") {
        need(args, 1, "word graph-monotone <g.dg>");
        const auto g = load_graph(args[0]);
        print_word(fw::graph_monotone_word(g, std::nullopt, caps), g.size());
    } else if (form == "conjunctive") {
        need(args, 1, "word conjunctive <g.dg>");
        const auto g = load_graph(args[0]);
        print_word(fw::conjunctive_fixing_word(g, caps), g.size());
    } else if (form == "complete") {
        need(args, 1, "word complete <n> [--improved]");
        const int n = to_int(args[0], "n");
        print_word(fw::complete_word(n, improved ? fw::CompleteMode::improved : fw::CompleteMode::simple, caps), n);
    } else if (form == "constrained") {
        need(args, 2, "word constrained <alpha> <i>");
        const int alpha = to_int(args[0], "alpha");
        const int i = to_int(args[1], "i");
        print_word(fw::constrained_complete_word(alpha, i), alpha + i);
    } else {
        throw usage_error("unknown word form '" + form + "'");
    }
    return kTrue;
}

struct MakeOptions {
    int paths = 0;
    bool increasing = false;
    std::vector<std::string> hooks;
};

int cmd_make(const std::string& form, const std::vector<std::string>& args, const MakeOptions& opt,
             const fw::Caps& caps) {
    if (form == "path") {
        need(args, 1, "make path <perm>");
        std::cout << fw::emit_network(fw::path_network(fw::parse_word(args[0])));
    } else if (form == "gray") {
        need(args, 1, "make gray <n>");
        std::cout << fw::emit_network(fw::gray_code_network(to_int(args[0], "n"), caps));
    } else if (form == "chain") {
        need(args, 1, "make chain <perm>");
        std::cout << fw::emit_network(fw::chain_increasing_network(fw::parse_word(args[0])));
    } else if (form == "conjunctive") {
        need(args, 1, "make conjunctive <g.dg>");
        std::cout << fw::emit_network(fw::conjunctive_network(load_graph(args[0])));
    } else if (form == "packing") {
        const std::string usage = "make packing <r> (--paths <m> | --hooks <h.bn>... | --increasing <perm>...)";
        if (args.empty()) throw usage_error("usage: " + usage);
        const int r = to_int(args[0], "r");
        const std::vector<std::string> rest(args.begin() + 1, args.end());
        if (opt.increasing) {
            if (rest.empty()) throw usage_error("usage: " + usage);
            fw::PermutationFamily perms;
            for (const auto& p : rest) perms.perms.push_back(fw::parse_word(p));
            perms.n = static_cast<int>(perms.perms.front().size());
            std::cout << fw::emit_network(fw::packing_increasing_network(perms, r));
        } else {
            std::vector<fw::BooleanNetwork> hooks;
            if (opt.paths > 0) {
                for (const auto& p : fw::all_permutations(opt.paths, caps).perms) hooks.push_back(fw::path_network(p));
            }
            for (const auto& h : opt.hooks) hooks.push_back(load_network(h));
            if (hooks.empty() || !rest.empty()) throw usage_error("usage: " + usage);
            std::cout << fw::emit_network(fw::packing_monotone_network(hooks, r, caps));
        }
    } else if (form == "hard-perms") {
        need(args, 3, "make hard-perms <n> <a> <b>");
        const auto fam = fw::hard_permutation_family(to_int(args[0], "n"), to_int(args[1], "a"),
                                                     to_int(args[2], "b"), caps);
        for (const auto& p : fam.perms) std::cout << fw::emit_word(p, fam.n) << '\n';
    } else if (form == "baranyai") {
        need(args, 2, "make baranyai <n> <a>");
        for (const auto& part : fw::baranyai_partitions(to_int(args[0], "n"), to_int(args[1], "a"), caps)) {
            for (std::size_t k = 0; k < part.size(); ++k) {
                if (k) std::cout << '|';
                for (std::size_t t = 0; t < part[k].size(); ++t) std::cout << (t ? "," : "") << part[k][t];
            }
            std::cout << '\n';
        }
    } else {
        throw usage_error("unknown make form '" + form + "'");
    }
    return kTrue;
}

int cmd_experiment(const std::string& form, const std::vector<std::string>& args, unsigned workers,
                   const fw::Caps& caps) {
    if (form == "fixable-fraction") {
        need(args, 3, "experiment fixable-fraction <n> <samples> <seed>");
        const int n = to_int(args[0], "n");
        const auto samples = std::stoull(args[1]);
        const auto seed = std::stoull(args[2]);
        std::cout << fw::to_csv(fw::fixable_fraction(n, samples, seed, workers));
        return kTrue;
    }
    if (form == "conjunctive-exhaustive") {
        need(args, 1, "experiment conjunctive-exhaustive <n>");
        const auto r = fw::conjunctive_exhaustive(to_int(args[0], "n"), workers, caps);
        std::cout << fw::to_csv(r);
        return r.ok() ? kTrue : kFalse;
    }
    if (form == "monotone-exhaustive") {
        need(args, 1, "experiment monotone-exhaustive <n>");
        const auto r = fw::monotone_exhaustive(to_int(args[0], "n"), workers, caps);
        std::cout << fw::to_csv(r);
        return r.failures == 0 ? kTrue : kFalse;
    }
    if (form == "lambda-table") {
        need(args, 1, "experiment lambda-table <nmax>");
        std::cout << fw::to_csv(fw::lambda_table(to_int(args[0], "nmax"), caps));
        return kTrue;
    }
    throw usage_error("unknown experiment '" + form + "'");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fixing words for asynchronous Boolean networks"};
    app.require_subcommand(1);
    std::string caps_file;
    std::vector<std::string> cap_overrides;
    app.add_option("--caps", caps_file, "caps file (key=value lines)");
    app.add_option("--cap", cap_overrides, "override one cap, key=value (repeatable)");

    std::string net_path;
    std::string word_arg;
    auto* classify = app.add_subcommand("classify", "classification flags of a network");
    classify->add_option("network", net_path, ".bn file")->required();
    auto* fixes = app.add_subcommand("fixes", "does a word fix a network");
    fixes->add_option("network", net_path, ".bn file")->required();
    fixes->add_option("word", word_arg, "word text or .w file")->required();
    auto* lambda = app.add_subcommand("lambda", "exact fixing length");
    lambda->add_option("network", net_path, ".bn file")->required();
    auto* fixable = app.add_subcommand("fixable", "is the network fixable");
    fixable->add_option("network", net_path, ".bn file")->required();

    std::string form;
    std::vector<std::string> args;
    bool improved = false;
    auto* word = app.add_subcommand("word", "build a fixing or complete word");
    word->add_option("form", form,
                     "monotone-universal | balanced-universal | graph-monotone | conjunctive | complete | constrained")
        ->required();
    word->add_option("args", args, "form arguments");
    word->add_flag("--improved", improved, "improved complete word");

    MakeOptions make_opt;
    auto* make = app.add_subcommand("make", "emit a network or a combinatorial family");
    make->add_option("form", form, "path | gray | chain | conjunctive | packing | hard-perms | baranyai")->required();
    make->add_option("args", args, "form arguments");
    make->add_option("--paths", make_opt.paths, "packing: use all path networks on [m]");
    make->add_option("--hooks", make_opt.hooks, "packing: hook networks (.bn)");
    make->add_flag("--increasing", make_opt.increasing, "packing: increasing variant over the given permutations");

    unsigned workers = 1;
    auto* experiment = app.add_subcommand("experiment", "run an experiment suite (CSV output)");
    experiment->add_option("form", form, "fixable-fraction | conjunctive-exhaustive | monotone-exhaustive | lambda-table")
        ->required();
    experiment->add_option("args", args, "experiment arguments");
    experiment->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kTrue : kUsage;
    }

    try {
        fw::Caps caps = fw::Caps::load(caps_file);
        for (const auto& kv : cap_overrides) caps.apply(kv);

        if (*classify) return cmd_classify(net_path, caps);
        if (*fixes) return cmd_fixes(net_path, word_arg, caps);
        if (*lambda) return cmd_lambda(net_path, caps);
        if (*fixable) return cmd_fixable(net_path, caps);
        if (*word) return cmd_word(form, args, improved, caps);
        if (*make) return cmd_make(form, args, make_opt, caps);
        if (*experiment) return cmd_experiment(form, args, workers, caps);
    } catch (const fw::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const fw::cap_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCap;
    } catch (const fw::not_fixable& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFalse;
    } catch (const usage_error& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    } catch (const fw::invalid_input& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
