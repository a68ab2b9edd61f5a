/*
 * Copyright 2026 The muller authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Artifacts go to stdout as JSON, summaries and diagnostics to stderr.
// Exit codes: 0 ok, 1 property violation, 2 malformed input / precondition / unsupported,
// 3 scale guard.

#include <CLI11.hpp>

#include <muller/muller.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace muller;
using muller::io::json;

enum Exit { kOk = 0, kViolation = 1, kBadInput = 2, kScale = 3 };

struct Options {
    std::uint64_t seed = 0;
    std::string format = "auto";
    std::size_t threads = 1;
    std::size_t max_size = 0;
    bool synthesize = false;
    bool two_state = false;
    std::string condition_path;
    std::vector<std::string> files;
    std::string what;
    std::size_t n = 3;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malformed("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return io::parse(slurp(path));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

MullerCondition read_condition(const std::string& path) { return io::condition_from_json(read_json(path)); }
Automaton read_automaton(const std::string& path) { return io::automaton_from_json(read_json(path)); }
SimpleGraph read_graph(const std::string& path) { return parse_dimacs(slurp(path)); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

bool want_json(const Options& o) { return o.format == "json"; }

/// A game file may carry its winning condition under "condition"; --condition overrides it.
std::pair<Arena, MullerCondition> read_game(const Options& o, const std::string& path) {
    const auto j = read_json(path);
    auto g = io::arena_from_json(j);
    if (!o.condition_path.empty()) return {std::move(g), read_condition(o.condition_path)};
    if (!j.contains("condition")) throw malformed(path + ": no condition in game file and no --condition given");
    return {std::move(g), io::condition_from_json(j.at("condition"))};
}

json game_json(const Arena& g, const MullerCondition& f) {
    auto j = io::to_json(g);
    j["condition"] = io::to_json(f);
    return j;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

int cmd_zielonka(const Options& o) {
    const auto f = read_condition(o.files[0]);
    const auto t = zielonka_tree(f);
    if (o.format == "text") {
        std::cout << render_tree(t, f.alphabet());
    } else {
        emit(io::to_json(t, f.alphabet()));
        std::cerr << render_tree(t, f.alphabet());
    }
    return kOk;
}

int cmd_mem(const Options& o) {
    const auto r = memory_requirements(read_condition(o.files[0]));
    if (want_json(o)) {
        emit({{"mem_gen", r.mem_gen},
              {"half_positional", r.half_positional},
              {"genbuchi_recognizable", r.genbuchi_recognizable},
              {"parity_priorities_used", r.parity_priorities_used}});
    } else {
        std::cout << "mem_gen=" << r.mem_gen << " half-positional=" << yes_no(r.half_positional)
                  << " genbuchi-recognizable=" << yes_no(r.genbuchi_recognizable)
                  << " parity-priorities=" << r.parity_priorities_used << "\n";
    }
    return kOk;
}

int cmd_memchrom(const Options& o) {
    const auto f = read_condition(o.files[0]);
    const auto k_max = o.max_size ? o.max_size : zielonka_tree(f).leaves();
    const auto r = min_rabin_size(f, k_max, o.threads);
    if (want_json(o)) {
        json j{{"max_size", k_max}, {"mem_chrom", nullptr}};
        if (r.size) j["mem_chrom"] = *r.size, j["witness"] = io::to_json(*r.witness);
        emit(j);
    } else if (r.size) {
        std::cout << "mem_chrom=" << *r.size << "\n";
    } else {
        std::cout << "mem_chrom>" << k_max << "\n";
    }
    return kOk;
}

int cmd_zt2parity(const Options& o) {
    emit(io::to_json(zt_to_parity(read_condition(o.files[0]))));
    return kOk;
}

int cmd_minparity(const Options& o) {
    const auto a = read_automaton(o.files[0]);
    const auto m = minimize_parity(a);
    std::cerr << a.states << " -> " << m.states << " states\n";
    emit(io::to_json(m));
    return kOk;
}

int cmd_minbuchi(const Options& o) {
    const auto a = read_automaton(o.files[0]);
    if (!a.acceptance.is<GenBuchiAcc>() && !a.acceptance.is<GenCoBuchiAcc>())
        throw unsupported("minbuchi needs a genbuchi or gencobuchi automaton");
    if (a.acceptance.is<GenCoBuchiAcc>()) {
        auto dual = a;
        dual.acceptance = dualise(a.acceptance);
        auto m = minimize_genbuchi(dual);
        m.acceptance = dualise(m.acceptance);
        emit(io::to_json(m));
    } else {
        emit(io::to_json(minimize_genbuchi(a)));
    }
    return kOk;
}

int cmd_rabincheck(const Options& o) {
    const auto a = read_automaton(o.files[0]);
    const auto r = check_rabin_typeable(a);
    std::ostringstream summary;
    summary << "rabin-typeable=" << yes_no(r.typeable);
    if (r.witness)
        summary << " witness: state " << r.witness->state << ", rejecting cycles "
                << json(a.output.names_of(r.witness->first)).dump() << " and "
                << json(a.output.names_of(r.witness->second)).dump() << " with accepting union";
    if (o.synthesize) {
        if (!r.typeable) {
            std::cerr << summary.str() << "\n";
            throw NotRabinTypeable(*r.witness);
        }
        std::cerr << summary.str() << "\n";
        emit(io::to_json(synthesize_rabin_pairs(a)));
        return kOk;
    }
    if (want_json(o)) {
        json j{{"typeable", r.typeable}};
        if (r.witness)
            j["witness"] = {{"state", r.witness->state},
                            {"first", a.output.names_of(r.witness->first)},
                            {"second", a.output.names_of(r.witness->second)}};
        emit(j);
    } else {
        std::cout << summary.str() << "\n";
    }
    return kOk;
}

int cmd_equiv(const Options& o) {
    const auto a = read_automaton(o.files[0]);
    const auto b = read_automaton(o.files[1]);
    const bool rabin = a.acceptance.is<RabinAcc>() && b.acceptance.is<RabinAcc>();
    const bool eq = rabin ? rabin_equivalent(a, b) : muller_equivalent(a, b);
    if (want_json(o))
        emit({{"equivalent", eq}});
    else
        std::cout << "equivalent=" << yes_no(eq) << "\n";
    return kOk;
}

int cmd_chromatic(const Options& o) {
    const auto g = read_graph(o.files[0]);
    const auto r = chromatic_number(g);
    std::cerr << "chi(G) = " << r.k << "\n";
    emit(io::to_json(r.colouring));
    return kOk;
}

int cmd_graph2rabin(const Options& o) {
    emit(io::to_json(build_A_G(read_graph(o.files[0]))));
    return kOk;
}

int cmd_colour2rabin(const Options& o) {
    const auto g = read_graph(o.files[0]);
    emit(io::to_json(colouring_to_rabin(g, io::colouring_from_json(read_json(o.files[1])))));
    return kOk;
}

int cmd_rabin2colouring(const Options& o) {
    const auto a = read_automaton(o.files[0]);
    const auto g = read_graph(o.files[1]);
    emit(io::to_json(rabin_to_colouring(a, g)));
    return kOk;
}

int cmd_solve(const Options& o) {
    const auto [g, f] = read_game(o, o.files[0]);
    const auto s = solve_muller_game(g, f);
    const auto name = [](Player p) { return p == Player::Eve ? "eve" : "adam"; };
    json j = json::object();
    if (s.memory) j = io::to_json(MemoryStrategy{*s.memory, *s.table}, g);
    j["winner"] = name(s.winner);
    j["winning_from"] = json::array();
    for (auto p : s.winning_from) j["winning_from"].push_back(name(p));
    std::cerr << "winner: " << name(s.winner);
    if (s.memory) std::cerr << " (chromatic memory with " << s.memory->states << " states)";
    std::cerr << "\n";
    emit(j);
    return kOk;
}

int cmd_verify(const Options& o) {
    const auto [g, f] = read_game(o, o.files[0]);
    const auto s = io::strategy_from_json(read_json(o.files[1]), g);
    const auto r = verify_strategy_report(g, f, s.memory, s.table);
    if (want_json(o)) {
        emit({{"winning", r.winning}, {"reason", r.reason}});
    } else {
        std::cout << (r.winning ? "winning" : "not winning") << "\n";
    }
    if (!r.winning) std::cerr << "strategy loses: " << r.reason << "\n";
    return r.winning ? kOk : kViolation;
}

int cmd_memgame(const Options& o) {
    const auto [g, f] = read_game(o, o.files[0]);
    if (o.two_state) {
        if (!(f == min2_condition(f.alphabet()))) throw precondition("--two-state needs the condition {A : |A| > 1}");
        const auto s = two_state_memory_min2(g, f.alphabet().size());
        emit(io::to_json(s, g));
        return kOk;
    }
    const auto k_max = o.max_size ? o.max_size : zielonka_tree(f).leaves();
    const auto r = min_chromatic_memory_exhaustive(g, f, k_max);
    if (!r.size) {
        std::cerr << "Eve has no winning strategy with chromatic memory of size <= " << k_max << "\n";
        emit({{"size", nullptr}, {"max_size", k_max}});
        return kOk;
    }
    std::cerr << "least chromatic memory: " << *r.size << " states\n";
    emit(io::to_json(MemoryStrategy{*r.memory, *r.table}, g));
    return kOk;
}

Arena random_game(std::uint64_t seed, std::size_t vertices, const Alphabet& colours) {
    std::mt19937_64 rng(seed);
    std::vector<Player> owner(vertices);
    for (auto& p : owner) p = rng() % 3 ? Player::Eve : Player::Adam;
    std::vector<Arena::Edge> edges;
    for (std::size_t v = 0; v < vertices; ++v) {
        const auto k = 1 + rng() % 2;
        for (std::size_t i = 0; i < k; ++i)
            edges.push_back({v, static_cast<std::size_t>(rng() % vertices),
                             static_cast<std::size_t>(rng() % colours.size())});
    }
    return Arena(colours, std::move(owner), 0, std::move(edges));
}

int cmd_gen(const Options& o) {
    if (o.what == "example22") {
        emit(game_json(example22_game(), clique_condition(Alphabet({"a", "b", "c"}))));
    } else if (o.what == "example22-chromatic" || o.what == "example22-general") {
        const auto g = example22_game();
        emit(io::to_json(o.what == "example22-general" ? example22_general_strategy(g) : example22_chromatic_strategy(g), g));
    } else if (o.what == "clique-cond") {
        emit(io::to_json(clique_condition(o.n)));
    } else if (o.what == "min2-cond") {
        emit(io::to_json(min2_condition(o.n)));
    } else if (o.what == "random-game") {
        const auto f = min2_condition(o.n);
        emit(game_json(random_game(o.seed, 2 + o.seed % 11, f.alphabet()), f));
    } else {
        throw malformed("unknown generator '" + o.what + "'");
    }
    return kOk;
}

int cmd_reduce_demo(const Options& o) {
    const auto g = read_graph(o.files[0]);
    const auto chi = chromatic_number(g);
    const auto ag = build_A_G(g);
    const auto from_colouring = colouring_to_rabin(g, chi.colouring);
    const auto back = rabin_to_colouring(from_colouring, g);
    const auto f = condition_F_G(g);
    const auto k_max = std::max<std::size_t>(g.vertices(), 1);
    const auto min = min_rabin_size(f, k_max, o.threads);
    const auto& pairs = ag.acceptance.as<RabinAcc>().pairs;

    const bool ag_ok = ag.states == g.vertices() && pairs.size() == g.edges().size();
    const bool equiv_ok = rabin_equivalent(ag, from_colouring);
    const bool equal = min.size && *min.size == chi.k && from_colouring.states == chi.k;
    const bool round_trip = back.proper(g) && back.size() <= chi.k;

    std::cout << "graph " << o.files[0] << ": n = " << g.vertices() << ", m = " << g.edges().size() << "\n"
              << "  chi(G)                    = " << chi.k << "\n"
              << "  A_G states / pairs        = " << ag.states << " / " << pairs.size() << "\n"
              << "  colouring -> Rabin states = " << from_colouring.states << "\n"
              << "  Rabin -> colouring size   = " << back.size() << "\n"
              << "  A_G ~ colouring automaton = " << yes_no(equiv_ok) << "\n"
              << "  min Rabin                 = " << (min.size ? std::to_string(*min.size) : "none") << "\n"
              << "  chi(G) == min Rabin       = " << yes_no(equal) << "\n";
    return ag_ok && equiv_ok && equal && round_trip ? kOk : kViolation;
}

int exit_code(ErrorKind k) {
    switch (k) {
    case ErrorKind::Violation: return kViolation;
    case ErrorKind::ScaleGuard: return kScale;
    default: return kBadInput;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Muller conditions, Zielonka trees, Rabin automata and memory for Muller games"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "seed for randomised generators")->capture_default_str();
    app.add_option("--format", o.format, "output format of report commands")
        ->check(CLI::IsMember({"auto", "text", "json"}))
        ->capture_default_str();
    app.add_option("--threads", o.threads, "workers for the minimal Rabin search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int status = kOk;
    auto add = [&](const std::string& name, const std::string& help, std::size_t files, int (*run)(const Options&)) {
        auto* sub = app.add_subcommand(name, help);
        if (files) sub->add_option("files", o.files, "input files")->required()->expected(static_cast<int>(files));
        sub->callback([&o, &status, run] { status = run(o); });
        return sub;
    };

    add("zielonka", "Zielonka tree of a condition (--format text renders ASCII)", 1, cmd_zielonka);
    add("mem", "memory requirements read off the Zielonka tree", 1, cmd_mem);
    add("memchrom", "least chromatic memory, via the minimal Rabin search", 1, cmd_memchrom)
        ->add_option("--max-size", o.max_size, "largest size tried (default: leaves of the tree)");
    add("zt2parity", "minimal parity automaton of a condition", 1, cmd_zt2parity);
    add("minparity", "minimise a parity automaton recognising a Muller language", 1, cmd_minparity);
    add("minbuchi", "one-state generalised (co-)Buchi automaton", 1, cmd_minbuchi);
    add("rabincheck", "Rabin-typeness check of an automaton", 1, cmd_rabincheck)
        ->add_flag("--synthesize", o.synthesize, "emit an equivalent Rabin automaton on the same structure");
    add("equiv", "language equivalence of two automata", 2, cmd_equiv);
    add("chromatic", "chromatic number and optimal colouring of a DIMACS graph", 1, cmd_chromatic);
    add("graph2rabin", "Rabin automaton A_G of a graph", 1, cmd_graph2rabin);
    add("colour2rabin", "Rabin automaton from a graph and a colouring", 2, cmd_colour2rabin);
    add("rabin2colouring", "colouring from a Rabin automaton and a graph", 2, cmd_rabin2colouring);
    auto* solve = add("solve", "winner and a chromatic-memory strategy for Eve", 1, cmd_solve);
    auto* verify = add("verify", "check that a strategy wins (exit 1 if not)", 2, cmd_verify);
    auto* memgame = add("memgame", "least chromatic memory for one game", 1, cmd_memgame);
    memgame->add_option("--max-size", o.max_size, "largest size tried (default: leaves of the tree)");
    memgame->add_flag("--two-state", o.two_state, "two-state general memory for {A : |A| > 1}");
    for (auto* sub : {solve, verify, memgame})
        sub->add_option("--condition", o.condition_path, "condition file overriding the game's own");
    auto* gen = app.add_subcommand("gen", "fixtures: example22, example22-general, example22-chromatic, "
                                          "clique-cond, min2-cond, random-game");
    gen->add_option("what", o.what)->required();
    gen->add_option("n", o.n, "number of colours")->check(CLI::Range(1, 64));
    gen->callback([&] { status = cmd_gen(o); });
    add("reduce-demo", "chromatic number vs minimal Rabin automaton for a graph", 1, cmd_reduce_demo);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return status;
}
