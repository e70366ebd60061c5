// Command-line front end. Talks to the library exclusively through the
// public C API.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "wfa/wfa.h"

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct AutomatonHandle {
    wfa_automaton* ptr = nullptr;
    ~AutomatonHandle() { wfa_automaton_free(ptr); }
};

struct StringHandle {
    char* ptr = nullptr;
    ~StringHandle() { wfa_string_free(ptr); }
};

[[noreturn]] void die(wfa_status status) {
    std::fprintf(stderr, "wfa: %s\n", wfa_last_error());
    std::exit(status == WFA_ERROR_INTERNAL ? kExitInternal : kExitUsage);
}

void check(wfa_status status) {
    if (status != WFA_OK)
        die(status);
}

AutomatonHandle load(const std::string& path) {
    AutomatonHandle a;
    check(wfa_automaton_read_file(path.c_str(), &a.ptr));
    return a;
}

int run_eval(const std::string& file, const std::string& word) {
    AutomatonHandle a = load(file);
    StringHandle value;
    check(wfa_evaluate(a.ptr, word.c_str(), &value.ptr));
    std::printf("%s\n", value.ptr);
    return 0;
}

int run_zero(const std::string& file) {
    AutomatonHandle a = load(file);
    int zero = 0;
    StringHandle witness;
    check(wfa_is_zero(a.ptr, &zero, &witness.ptr));
    if (zero) {
        std::printf("zero\n");
        return 0;
    }
    std::printf("nonzero %s\n", witness.ptr);
    return kExitNegative;
}

int run_equiv(const std::string& file1, const std::string& file2, bool gram,
              size_t oracle_budget) {
    AutomatonHandle a1 = load(file1);
    AutomatonHandle a2 = load(file2);
    int equal = 0;
    if (gram) {
        check(wfa_gram_equivalent(a1.ptr, a2.ptr, oracle_budget, &equal));
        std::printf(equal ? "equivalent\n" : "inequivalent\n");
    } else {
        StringHandle counterexample;
        check(wfa_equivalent(a1.ptr, a2.ptr, &equal, &counterexample.ptr));
        if (equal)
            std::printf("equivalent\n");
        else
            std::printf("inequivalent %s\n", counterexample.ptr);
    }
    return equal ? 0 : kExitNegative;
}

int run_minimize(const std::string& file, const std::string& out_path) {
    AutomatonHandle a = load(file);
    AutomatonHandle minimal;
    check(wfa_minimize(a.ptr, &minimal.ptr));
    check(wfa_automaton_write_file(minimal.ptr, out_path.c_str()));
    std::printf("%zu -> %zu\n", wfa_automaton_states(a.ptr),
                wfa_automaton_states(minimal.ptr));
    return 0;
}

int run_rank(const std::string& file) {
    AutomatonHandle a = load(file);
    size_t rank = 0;
    check(wfa_series_rank(a.ptr, &rank));
    std::printf("%zu\n", rank);
    return 0;
}

int run_hankel(const std::string& file, const std::string& out_path) {
    AutomatonHandle a = load(file);
    AutomatonHandle hankel;
    StringHandle complete_set;
    check(wfa_hankel_automaton(a.ptr, &hankel.ptr, &complete_set.ptr));
    check(wfa_automaton_write_file(hankel.ptr, out_path.c_str()));
    std::string words(complete_set.ptr);
    std::string pretty;
    for (char c : words)
        pretty += (c == ' ') ? std::string(", ") : std::string(1, c);
    std::printf("C = {%s}\n", pretty.c_str());
    return 0;
}

int run_conjugacy(const std::string& file1, const std::string& file2) {
    AutomatonHandle a1 = load(file1);
    AutomatonHandle a2 = load(file2);
    StringHandle matrix;
    wfa_status status = wfa_conjugacy_witness(a1.ptr, a2.ptr, &matrix.ptr);
    if (status == WFA_ERROR_PRECONDITION) {
        std::printf("no witness: %s\n", wfa_last_error());
        return kExitNegative;
    }
    check(status);
    std::printf("Q:\n%s", matrix.ptr);
    return 0;
}

int run_binary_op(const char* op, const std::string& file1, const std::string& file2,
                  const std::string& out_path) {
    AutomatonHandle a1 = load(file1);
    AutomatonHandle a2 = load(file2);
    AutomatonHandle result;
    if (std::string(op) == "sum")
        check(wfa_sum(a1.ptr, a2.ptr, &result.ptr));
    else if (std::string(op) == "diff")
        check(wfa_difference(a1.ptr, a2.ptr, &result.ptr));
    else
        check(wfa_hadamard(a1.ptr, a2.ptr, &result.ptr));
    check(wfa_automaton_write_file(result.ptr, out_path.c_str()));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted-automata toolkit (exact rational arithmetic)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(wfa_version()));

    size_t oracle_budget = 0;
    app.add_option("--oracle-budget", oracle_budget,
                   "override the brute-force/Gram budgets (0 = defaults)");

    std::string file1, file2, word, out_path;
    bool gram = false;

    auto* eval = app.add_subcommand("eval", "evaluate the automaton on a word");
    eval->add_option("file", file1, "automaton file")->required();
    eval->add_option("--word", word, "word to evaluate ('' for the empty word)")->required();

    auto* zero = app.add_subcommand("zero", "decide whether the series is zero");
    zero->add_option("file", file1)->required();

    auto* equiv = app.add_subcommand("equiv", "decide equivalence of two automata");
    equiv->add_option("file1", file1)->required();
    equiv->add_option("file2", file2)->required();
    equiv->add_flag("--gram", gram, "use the Gram-matrix procedure (no counterexample)");

    auto* minimize = app.add_subcommand("minimize", "write a minimal equivalent automaton");
    minimize->add_option("file", file1)->required();
    minimize->add_option("-o,--output", out_path, "output file")->required();

    auto* rank_cmd = app.add_subcommand("rank", "print the rank of the series");
    rank_cmd->add_option("file", file1)->required();

    auto* hankel = app.add_subcommand("hankel", "write the Hankel automaton");
    hankel->add_option("file", file1)->required();
    hankel->add_option("-o,--output", out_path, "output file")->required();

    auto* conjugacy = app.add_subcommand("conjugacy", "witness matrix for minimal equivalent automata");
    conjugacy->add_option("file1", file1)->required();
    conjugacy->add_option("file2", file2)->required();

    auto* sum_cmd = app.add_subcommand("sum", "pointwise sum of two automata");
    auto* diff_cmd = app.add_subcommand("diff", "pointwise difference of two automata");
    auto* product_cmd = app.add_subcommand("product", "pointwise (Hadamard) product");
    for (auto* cmd : {sum_cmd, diff_cmd, product_cmd}) {
        cmd->add_option("file1", file1)->required();
        cmd->add_option("file2", file2)->required();
        cmd->add_option("-o,--output", out_path, "output file")->required();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (eval->parsed())
        return run_eval(file1, word);
    if (zero->parsed())
        return run_zero(file1);
    if (equiv->parsed())
        return run_equiv(file1, file2, gram, oracle_budget);
    if (minimize->parsed())
        return run_minimize(file1, out_path);
    if (rank_cmd->parsed())
        return run_rank(file1);
    if (hankel->parsed())
        return run_hankel(file1, out_path);
    if (conjugacy->parsed())
        return run_conjugacy(file1, file2);
    if (sum_cmd->parsed())
        return run_binary_op("sum", file1, file2, out_path);
    if (diff_cmd->parsed())
        return run_binary_op("diff", file1, file2, out_path);
    if (product_cmd->parsed())
        return run_binary_op("product", file1, file2, out_path);
    return kExitUsage;
}
