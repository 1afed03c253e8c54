#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "clutter/json_io.hpp"
#include "clutter/selftest.hpp"

namespace clutter::cli {

/// Exit-code contract: 0 = property holds / construction succeeded,
/// 1 = property fails / result absent, 2 = usage or validation error,
/// 3 = size-guard refusal.
enum ExitCode : int { exit_holds = 0, exit_fails = 1, exit_invalid = 2, exit_guard = 3 };

namespace detail {

inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

inline nlohmann::ordered_json matching_to_json(const Clutter& c, const Matching& m) {
    nlohmann::ordered_json j;
    j["edges"] = set_list_to_json(c, m.edges);
    j["perfect"] = m.perfect;
    j["konig_type"] = m.konig_type;
    return j;
}

inline nlohmann::ordered_json shelling_to_json(const Clutter& c, const ShellingOrder& order) {
    nlohmann::ordered_json j;
    j["facets"] = set_list_to_json(c, order.facets);
    j["pure"] = order.pure();
    auto table = nlohmann::ordered_json::array();
    for (size_t jj = 1; jj < order.witnesses.size(); ++jj)
        for (size_t i = 0; i < order.witnesses[jj].size(); ++i) {
            nlohmann::ordered_json w;
            w["i"] = i;
            w["j"] = jj;
            w["vertex"] = c.label(order.witnesses[jj][i].vertex);
            w["ell"] = order.witnesses[jj][i].ell;
            table.push_back(w);
        }
    j["witnesses"] = table;
    return j;
}

} // namespace detail

/// Run the command line given as an argument vector (no program name).
/// Reads clutter documents from --input or `in`, writes the JSON report
/// (or, for transforming commands, the resulting clutter document) to
/// `out`.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"combinatorial toolkit for clutters and square-free monomial edge ideals"};
    app.require_subcommand(1);
    bool timing = false;
    app.add_flag("--timing", timing, "report wall-clock time instead of 0");

    std::string input_path;
    std::string property, method = "recursive", criterion;
    bool want_konig = false, relaxed = false, allow_isolated = false, use_edge_generators = false;
    int gen_g = 0, gen_d = 0;
    std::string structure_path;
    int max_n = limits::cover_enumeration_vertices;
    int max_facets = limits::shelling_search_facets;
    std::uint64_t seed = selftest::Options{}.seed;
    bool skip_slow = false;
    std::vector<std::pair<char, std::string>> minor_steps;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input,-i", input_path, "clutter JSON file (default: stdin)");
    };

    auto* check = app.add_subcommand("check", "evaluate a property; exit 0/1 mirrors the result");
    add_input(check);
    check
        ->add_option("--property,-p", property,
                     "unmixed|konig|ordering|balanced|totally-balanced|free-vertex|theorem25|"
                     "char-tbc")
        ->required();
    check->add_flag("--allow-isolated", allow_isolated, "permit isolated vertices where possible");

    auto* covers_cmd = app.add_subcommand("covers", "minimal vertex covers and the covering number");
    add_input(covers_cmd);
    covers_cmd->add_option("--max-n", max_n, "enumeration vertex limit");

    auto* matching_cmd = app.add_subcommand("matching", "maximum matching, or a Konig-type one");
    add_input(matching_cmd);
    matching_cmd->add_flag("--konig", want_konig, "require a perfect matching of Konig type");

    auto* minor_cmd =
        app.add_subcommand("minor", "apply contractions and deletions left to right");
    add_input(minor_cmd);
    minor_cmd->add_option_function<std::vector<std::string>>(
        "--contract", [&](const std::vector<std::string>& vs) {
            for (const auto& v : vs) minor_steps.emplace_back('c', v);
        },
        "contract a vertex");
    minor_cmd->add_option_function<std::vector<std::string>>(
        "--delete", [&](const std::vector<std::string>& vs) {
            for (const auto& v : vs) minor_steps.emplace_back('d', v);
        },
        "delete a vertex");

    auto* shell = app.add_subcommand("shell", "shelling order of a facet family");
    add_input(shell);
    shell->add_option("--method,-m", method, "recursive|bruteforce|lex (default recursive)");
    shell->add_option("--max-facets", max_facets, "bruteforce facet limit");

    auto* gen = app.add_subcommand("gen", "generate instances");
    auto* gen_ca = gen->add_subcommand("complete-admissible", "complete admissible clutter");
    gen_ca->add_option("--g", gen_g, "number of matching parts");
    gen_ca->add_option("--d", gen_d, "number of color classes");
    gen_ca->add_option("--structure", structure_path,
                       "JSON file with vertices/classes/matching (instead of --g/--d)");
    gen_ca->add_flag("--relaxed", relaxed, "allow class gaps in admissible sets");

    auto* dual_cmd = app.add_subcommand("dual", "Alexander dual (blocker)");
    add_input(dual_cmd);

    auto* dual_ideal_cmd = app.add_subcommand("dual-ideal", "generator supports of the dual ideal");
    add_input(dual_ideal_cmd);

    auto* lq = app.add_subcommand("linear-quotients", "linear-quotients ordering search");
    add_input(lq);
    lq->add_flag("--edges", use_edge_generators,
                 "order the edge generators themselves (default: dual ideal generators)");

    auto* bip = app.add_subcommand("bipartite", "bipartite-graph criteria");
    add_input(bip);
    bip->add_option("--criterion,-c", criterion, "herzog-hibi|h1|unmixed|skeleton-shelling")
        ->required();
    bip->add_flag("--allow-isolated", allow_isolated, "permit isolated vertices where possible");

    auto* whisker_cmd = app.add_subcommand("whisker", "attach a pendant partner to every vertex");
    add_input(whisker_cmd);

    auto* self = app.add_subcommand("selftest", "run the full acceptance suite");
    self->add_option("--seed", seed, "seed for the randomized suites");
    self->add_flag("--skip-slow", skip_slow, "skip the admissible-relabeling search");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_holds;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_invalid;
    }

    detail::Timer timer;

    auto load = [&]() -> ClutterDocument {
        std::string text;
        if (!input_path.empty()) {
            std::ifstream file(input_path);
            if (!file) throw validation_error("cannot open input file: " + input_path);
            std::stringstream ss;
            ss << file.rdbuf();
            text = ss.str();
        } else {
            std::stringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        return parse_clutter_document(text);
    };

    auto emit_report = [&](const std::string& command, const std::string& digest,
                           nlohmann::ordered_json result, nlohmann::ordered_json witness,
                           int code) -> int {
        nlohmann::ordered_json rep;
        rep["command"] = command;
        rep["input_digest"] = digest;
        rep["result"] = std::move(result);
        rep["witness"] = std::move(witness);
        rep["elapsed_ms"] = timing ? timer.ms() : 0;
        out << rep.dump(2) << "\n";
        return code;
    };

    auto matching_from_doc = [&](const ClutterDocument& doc) -> Matching {
        if (!doc.matching)
            throw validation_error("this operation needs a \"matching\" annotation in the input");
        return make_matching(doc.clutter, *doc.matching);
    };

    try {
        if (*check) {
            ClutterDocument doc = load();
            const Clutter& c = doc.clutter;
            std::string digest = detail::fnv1a_hex(serialize_clutter(doc));
            if (property == "unmixed") {
                bool v = is_unmixed(c);
                return emit_report("check/unmixed", digest, v, nullptr, v ? exit_holds : exit_fails);
            }
            if (property == "konig") {
                Matching m = maximum_edge_matching(c);
                bool v = m.size() == covering_number(c);
                return emit_report("check/konig", digest, v, detail::matching_to_json(c, m),
                                   v ? exit_holds : exit_fails);
            }
            if (property == "ordering") {
                bool v = ordering_condition(c, matching_from_doc(doc));
                return emit_report("check/ordering", digest, v, nullptr, v ? exit_holds : exit_fails);
            }
            if (property == "balanced") {
                bool v = is_balanced(c);
                return emit_report("check/balanced", digest, v, nullptr, v ? exit_holds : exit_fails);
            }
            if (property == "totally-balanced") {
                bool v = is_totally_balanced(c);
                return emit_report("check/totally-balanced", digest, v, nullptr,
                                   v ? exit_holds : exit_fails);
            }
            if (property == "free-vertex") {
                bool v = matching_edges_have_free_vertex(c, matching_from_doc(doc));
                return emit_report("check/free-vertex", digest, v, nullptr,
                                   v ? exit_holds : exit_fails);
            }
            if (property == "theorem25" || property == "unmixed-equivalence") {
                auto rep = unmixedness_equivalence_report(c, matching_from_doc(doc));
                nlohmann::ordered_json result;
                result["unmixed"] = rep.unmixed;
                result["vertex_exchange"] = rep.vertex_exchange;
                result["support_division"] = rep.support_division;
                result["pair_colon"] = rep.pair_colon;
                result["colon_sum"] = rep.colon_sum;
                result["all_agree"] = rep.all_agree();
                return emit_report("check/unmixed-equivalence", digest, result, nullptr,
                                   rep.all_agree() ? exit_holds : exit_fails);
            }
            if (property == "char-tbc" || property == "free-ordered-matching") {
                auto witness = find_free_ordered_matching(c, allow_isolated);
                return emit_report("check/free-ordered-matching", digest, witness.has_value(),
                                   witness ? detail::matching_to_json(c, *witness)
                                           : nlohmann::ordered_json(nullptr),
                                   witness ? exit_holds : exit_fails);
            }
            throw validation_error("unknown property: " + property);
        }

        if (*covers_cmd) {
            ClutterDocument doc = load();
            std::string digest = detail::fnv1a_hex(serialize_clutter(doc));
            auto covers = minimal_vertex_covers(doc.clutter, max_n);
            int tau = covers.empty() ? 0 : covers.front().size();
            for (const auto& s : covers) tau = std::min(tau, s.size());
            nlohmann::ordered_json result;
            result["covering_number"] = tau;
            result["count"] = covers.size();
            result["unmixed"] = is_unmixed(doc.clutter, max_n);
            nlohmann::ordered_json witness;
            witness["covers"] = set_list_to_json(doc.clutter, covers);
            witness["facets"] = set_list_to_json(doc.clutter, stanley_reisner_facets(doc.clutter, max_n));
            return emit_report("covers", digest, result, witness, exit_holds);
        }

        if (*matching_cmd) {
            ClutterDocument doc = load();
            std::string digest = detail::fnv1a_hex(serialize_clutter(doc));
            if (want_konig) {
                auto m = find_perfect_matching_konig(doc.clutter);
                return emit_report("matching", digest, m.has_value(),
                                   m ? detail::matching_to_json(doc.clutter, *m)
                                     : nlohmann::ordered_json(nullptr),
                                   m ? exit_holds : exit_fails);
            }
            Matching m = maximum_edge_matching(doc.clutter);
            return emit_report("matching", digest, m.size(), detail::matching_to_json(doc.clutter, m),
                               exit_holds);
        }

        if (*minor_cmd) {
            ClutterDocument doc = load();
            Clutter current = doc.clutter;
            for (const auto& [op, name] : minor_steps) {
                int v = current.index_of(name);
                if (v < 0) throw validation_error("unknown vertex name: " + name);
                if (op == 'd') {
                    current = delete_vertex(current, v);
                    continue;
                }
                MinorOutcome outcome = contract(current, v);
                if (outcome.is_improper()) {
                    nlohmann::ordered_json j;
                    j["improper"] = true;
                    j["note"] = "contraction produced the unit ideal";
                    out << j.dump(2) << "\n";
                    return exit_holds;
                }
                current = outcome.get();
            }
            out << serialize_clutter(current);
            return exit_holds;
        }

        if (*shell) {
            ClutterDocument doc = load();
            const Clutter& c = doc.clutter;
            std::string digest = detail::fnv1a_hex(serialize_clutter(doc));
            if (method == "recursive") {
                auto order = recursive_shelling(c, matching_from_doc(doc));
                return emit_report("shell/recursive", digest, order.has_value(),
                                   order ? detail::shelling_to_json(c, *order)
                                         : nlohmann::ordered_json(nullptr),
                                   order ? exit_holds : exit_fails);
            }
            if (method == "bruteforce") {
                auto order = bruteforce_shelling(stanley_reisner_facets(c, max_n), max_facets);
                return emit_report("shell/bruteforce", digest, order.has_value(),
                                   order ? detail::shelling_to_json(c, *order)
                                         : nlohmann::ordered_json(nullptr),
                                   order ? exit_holds : exit_fails);
            }
            if (method == "lex") {
                if (!doc.classes || !doc.matching)
                    throw validation_error(
                        "lex shelling needs \"classes\" and \"matching\" annotations");
                auto a = make_admissible_structure(c.vertex_count(), *doc.classes, *doc.matching);
                auto order = lex_shelling(c, a);
                return emit_report("shell/lex", digest, true, detail::shelling_to_json(c, order),
                                   exit_holds);
            }
            throw validation_error("unknown method: " + method);
        }

        if (*gen_ca) {
            if (!structure_path.empty()) {
                std::ifstream file(structure_path);
                if (!file) throw validation_error("cannot open structure file: " + structure_path);
                std::stringstream ss;
                ss << file.rdbuf();
                auto sdoc = parse_clutter_document(ss.str());
                if (!sdoc.classes || !sdoc.matching)
                    throw validation_error(
                        "structure file needs \"classes\" and \"matching\" annotations");
                auto a = make_admissible_structure(sdoc.clutter.vertex_count(), *sdoc.classes,
                                                   *sdoc.matching);
                Clutter c = generate_complete_admissible(sdoc.clutter.labels(), a, relaxed);
                out << serialize_clutter(ClutterDocument{c, a.matching, a.classes});
                return exit_holds;
            }
            if (gen_g < 1 || gen_d < 1)
                throw validation_error("gen complete-admissible needs --g and --d (or --structure)");
            auto gen_result = generate_complete_admissible_uniform(gen_g, gen_d);
            out << serialize_clutter(ClutterDocument{gen_result.clutter,
                                                     gen_result.structure.matching,
                                                     gen_result.structure.classes});
            return exit_holds;
        }

        if (*dual_cmd) {
            ClutterDocument doc = load();
            out << serialize_clutter(alexander_dual(doc.clutter, max_n));
            return exit_holds;
        }

        if (*dual_ideal_cmd) {
            ClutterDocument doc = load();
            std::string digest = detail::fnv1a_hex(serialize_clutter(doc));
            auto gens = dual_ideal_generators(doc.clutter);
            return emit_report("dual-ideal", digest, static_cast<int>(gens.size()),
                               set_list_to_json(doc.clutter, gens), exit_holds);
        }

        if (*lq) {
            ClutterDocument doc = load();
            std::string digest = detail::fnv1a_hex(serialize_clutter(doc));
            std::vector<VertexSet> gens =
                use_edge_generators ? doc.clutter.edges() : dual_ideal_generators(doc.clutter);
            auto order = has_linear_quotients(gens);
            nlohmann::ordered_json witness(nullptr);
            if (order) {
                std::vector<VertexSet> ordered;
                for (int i : *order) ordered.push_back(gens[i]);
                witness = set_list_to_json(doc.clutter, ordered);
            }
            return emit_report("linear-quotients", digest, order.has_value(), witness,
                               order ? exit_holds : exit_fails);
        }

        if (*bip) {
            ClutterDocument doc = load();
            const Clutter& c = doc.clutter;
            std::string digest = detail::fnv1a_hex(serialize_clutter(doc));
            auto need_matching = [&]() -> Matching {
                if (doc.matching) return make_matching(c, *doc.matching);
                std::optional<Matching> pm;
                for_each_perfect_matching(c, [&](const std::vector<int>& picked) {
                    std::vector<VertexSet> edges;
                    for (int j : picked) edges.push_back(c.edge(j));
                    pm = make_matching(c, std::move(edges));
                    return false;
                });
                if (!pm) throw validation_error("graph has no perfect matching");
                return *pm;
            };
            if (criterion == "herzog-hibi") {
                auto cert = herzog_hibi_cm(c, allow_isolated);
                nlohmann::ordered_json witness(nullptr);
                if (cert) {
                    witness = nlohmann::ordered_json();
                    witness["matching"] = detail::matching_to_json(c, cert->matching);
                    witness["order"] = cert->order;
                }
                return emit_report("bipartite/herzog-hibi", digest, cert.has_value(), witness,
                                   cert ? exit_holds : exit_fails);
            }
            if (criterion == "h1") {
                Matching m = need_matching();
                auto order = h1_ordering(c, m);
                nlohmann::ordered_json witness(nullptr);
                if (order) {
                    std::vector<VertexSet> reordered;
                    for (int i : *order) reordered.push_back(m.edges[i]);
                    witness = set_list_to_json(c, reordered);
                }
                return emit_report("bipartite/h1", digest, order.has_value(), witness,
                                   order ? exit_holds : exit_fails);
            }
            if (criterion == "unmixed") {
                auto witness = unmixed_bipartite_check(c, allow_isolated);
                return emit_report("bipartite/unmixed", digest, witness.has_value(),
                                   witness ? detail::matching_to_json(c, *witness)
                                           : nlohmann::ordered_json(nullptr),
                                   witness ? exit_holds : exit_fails);
            }
            if (criterion == "skeleton-shelling") {
                auto order = skeleton_shelling(c, need_matching());
                return emit_report("bipartite/skeleton-shelling", digest, order.has_value(),
                                   order ? detail::shelling_to_json(c, *order)
                                         : nlohmann::ordered_json(nullptr),
                                   order ? exit_holds : exit_fails);
            }
            throw validation_error("unknown criterion: " + criterion);
        }

        if (*whisker_cmd) {
            ClutterDocument doc = load();
            Clutter w = whisker(doc.clutter);
            const int n = doc.clutter.vertex_count();
            std::vector<VertexSet> wm;
            for (int v = 0; v < n; ++v) wm.push_back(VertexSet(2 * n, {v, n + v}));
            out << serialize_clutter(ClutterDocument{w, wm, std::nullopt});
            return exit_holds;
        }

        if (*self) {
            auto results = selftest::run_all({seed, skip_slow});
            int failures = selftest::print_report(results, out);
            return failures == 0 ? exit_holds : exit_fails;
        }
    } catch (const size_guard_error& e) {
        err << "size guard: " << e.what() << "\n";
        return exit_guard;
    } catch (const validation_error& e) {
        err << "invalid input: " << e.what() << "\n";
        return exit_invalid;
    }
    err << "no subcommand selected\n";
    return exit_invalid;
}

} // namespace clutter::cli
