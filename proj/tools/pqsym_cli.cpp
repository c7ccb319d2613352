#include <pqsym/errors.hpp>
#include <pqsym/expr.hpp>
#include <pqsym/io.hpp>
#include <pqsym/verify.hpp>
#include <pqsym/words.hpp>
#include <pqsym/cqsym.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

namespace {

using namespace pqsym;
using nlohmann::json;

// bare comma form, as in `park 3,5,1,1,11,8,8,2`
std::string plain(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
    }
    return out.empty() ? "()" : out;
}

Word parse_positive_word(const std::string& text, const char* what) {
    const Word w = parse_word(text);
    for (std::int32_t x : w)
        if (x < 1) throw InvalidIndexError(std::string(what) + " needs positive letters");
    return w;
}

int cmd_park(const std::string& input, bool trace, bool as_json) {
    const Word w = parse_positive_word(input, "park");
    const ParkizationTrace t = parkize(w);
    if (as_json) {
        if (trace) {
            std::cout << trace_to_json(w, t) << "\n";
        } else {
            std::cout << json{{"input", json::parse(words_to_json({w}))[0]},
                              {"result", json::parse(words_to_json({t.result}))[0]}}
                             .dump()
                      << "\n";
        }
        return 0;
    }
    if (trace) {
        Word current = w;
        for (std::size_t r = 0; r < t.rounds.size(); ++r) {
            std::cout << "round " << r + 1 << ": pivot " << t.rounds[r].first << ", " << plain(current)
                      << " -> " << plain(t.rounds[r].second) << "\n";
            current = t.rounds[r].second;
        }
    }
    std::cout << plain(t.result) << "\n";
    return 0;
}

int cmd_std(const std::string& input, bool as_json) {
    const Word w = parse_positive_word(input, "std");
    const Word out = standardize(w);
    if (as_json)
        std::cout << json{{"input", json::parse(words_to_json({w}))[0]},
                          {"result", json::parse(words_to_json({out}))[0]}}
                         .dump()
                  << "\n";
    else
        std::cout << plain(out) << "\n";
    return 0;
}

int cmd_eval(const std::string& text, bool as_json) {
    const Value v = eval_expression(text);
    std::cout << (as_json ? value_to_json(v) : value_to_string(v)) << "\n";
    return 0;
}

int cmd_enumerate(const std::string& kind, int n, bool as_json) {
    std::vector<Word> words;
    if (kind == "pf") words = enumerate_parking(n);
    else if (kind == "ndpf") words = enumerate_ndpf(n);
    else if (kind == "prime") words = enumerate_prime(n);
    else throw Error("unknown enumeration kind: " + kind);
    if (as_json) {
        std::cout << json{{"kind", kind}, {"n", n}, {"count", words.size()},
                          {"words", json::parse(words_to_json(words))}}
                         .dump()
                  << "\n";
        return 0;
    }
    for (const Word& w : words) std::cout << plain(w) << "\n";
    std::cout << "count: " << words.size() << "\n";
    return 0;
}

int cmd_poset(int n, bool as_json) {
    const auto& covers = poset_covers(n);
    if (as_json) {
        std::cout << covers_to_json(covers) << "\n";
        return 0;
    }
    for (const auto& [from, to] : covers) std::cout << plain(from) << " -> " << plain(to) << "\n";
    return 0;
}

int cmd_verify(const std::string& suite, int max_n, bool as_json) {
    const auto results = verify_suite(suite, max_n);
    bool ok = true;
    for (const CheckResult& r : results) ok = ok && r.pass;
    if (as_json) {
        std::cout << check_results_to_json(results) << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.range << ")";
            if (!r.pass) std::cout << ": " << r.counterexample;
            char buf[32];
            std::snprintf(buf, sizeof buf, " [%.3fs]", r.seconds);
            std::cout << buf << "\n";
        }
        std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"parking-function Hopf algebra calculator"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "structured output");

    auto* park_cmd = app.add_subcommand("park", "parkize a word");
    park_cmd->fallthrough();
    std::string park_word;
    bool park_trace = false;
    park_cmd->add_option("word", park_word, "input word, e.g. 3,5,1,1,11,8,8,2")->required();
    park_cmd->add_flag("--trace", park_trace, "print each decrement round");

    auto* std_cmd = app.add_subcommand("std", "standardize a word");
    std_cmd->fallthrough();
    std::string std_word;
    std_cmd->add_option("word", std_word, "input word")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->fallthrough();
    std::string expr_text;
    eval_cmd->add_option("expr", expr_text, "e.g. \"F[2,1,1] .i. F[1,1,2]\"")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "list an index family");
    enum_cmd->fallthrough();
    std::string enum_kind;
    int enum_n = 0;
    enum_cmd->add_option("kind", enum_kind, "pf, ndpf or prime")
        ->required()
        ->check(CLI::IsMember({"pf", "ndpf", "prime"}));
    enum_cmd->add_option("--n", enum_n, "degree")->required();

    auto* poset_cmd = app.add_subcommand("poset", "print successor cover relations");
    poset_cmd->fallthrough();
    int poset_n = 0;
    poset_cmd->add_option("--n", poset_n, "degree")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->fallthrough();
    std::string suite = "all";
    int max_n = 4;
    verify_cmd->add_option("--suite", suite, "all, hopf, internal, catalan, sym or oracle")
        ->check(CLI::IsMember({"all", "hopf", "internal", "catalan", "sym", "oracle"}));
    verify_cmd->add_option("--max-n", max_n, "degree bound (default 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (park_cmd->parsed()) return cmd_park(park_word, park_trace, as_json);
        if (std_cmd->parsed()) return cmd_std(std_word, as_json);
        if (eval_cmd->parsed()) return cmd_eval(expr_text, as_json);
        if (enum_cmd->parsed()) return cmd_enumerate(enum_kind, enum_n, as_json);
        if (poset_cmd->parsed()) return cmd_poset(poset_n, as_json);
        if (verify_cmd->parsed()) return cmd_verify(suite, max_n, as_json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ExprTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
