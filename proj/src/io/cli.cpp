#include "pdfa/io/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdfa/birecurrence.hpp"
#include "pdfa/graph.hpp"
#include "pdfa/io/dot.hpp"
#include "pdfa/io/layout_json.hpp"
#include "pdfa/io/text_format.hpp"
#include "pdfa/rank.hpp"
#include "pdfa/reductions.hpp"
#include "pdfa/saturation.hpp"

namespace pdfa::io {

namespace {

using nlohmann::json;

struct Options {
    bool json = false;
    std::size_t budget = SearchBudget::default_limit;

    std::string file;
    std::string method;
    bool witness = false;
    std::string set;
    std::string target_from;
    std::string reduce_kind;
    std::string output;
    std::string last_letter;
    bool add_selfloop = false;
    std::string oracle_kind;
};

json word_json(const PartialDfa& dfa, const Word& w) {
    json names = json::array();
    for (Letter a : w) names.push_back(dfa.letter_name(a));
    return names;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    int validate() {
        std::string text = read_text(opt_.file);
        // Instance files start with an alphabet line and contain machine blocks.
        bool instance = text.find("machine:") != std::string::npos;
        json j{{"file", opt_.file}, {"valid", true}};
        if (instance) {
            IntersectionInstance inst = parse_instance(text);
            j["kind"] = "instance";
            j["machines"] = inst.size();
            j["letters"] = inst.alphabet().size();
            emit(j, "ok: instance with " + std::to_string(inst.size()) + " machines over " +
                        std::to_string(inst.alphabet().size()) + " letters");
        } else {
            AutomatonFile f = parse_automaton(text);
            j["kind"] = "automaton";
            j["states"] = f.dfa.state_count();
            j["letters"] = f.dfa.letter_count();
            emit(j, "ok: " + std::to_string(f.dfa.state_count()) + " states, " +
                        std::to_string(f.dfa.letter_count()) + " letters");
        }
        return exit_yes;
    }

    int info() {
        AutomatonFile f = read_automaton(opt_.file);
        const PartialDfa& d = f.dfa;
        json j{{"states", d.state_count()},
               {"letters", d.letter_count()},
               {"complete", is_complete(d)},
               {"permutation", is_permutation(d)},
               {"strongly_connected", is_strongly_connected(d)}};
        std::ostringstream text;
        text << "states: " << d.state_count() << "\nletters: " << d.letter_count()
             << "\ncomplete: " << yes_no(is_complete(d)) << "\npermutation: " << yes_no(is_permutation(d))
             << "\nstrongly connected: " << yes_no(is_strongly_connected(d));
        emit(j, text.str());
        return exit_yes;
    }

    int rank() {
        AutomatonFile f = read_automaton(opt_.file);
        RankResult r = opt_.method == "poly" ? min_rank_word_sc(f.dfa) : exact_rank(f.dfa, budget());
        json j{{"rank", r.rank}, {"method", opt_.method}};
        std::string text = "rank: " + std::to_string(r.rank);
        if (opt_.witness) {
            j["witness"] = word_json(f.dfa, r.witness);
            j["length"] = r.word_length();
            text += "\nwitness: " + format_word(f.dfa, r.witness) + "\nlength: " + std::to_string(r.word_length());
        }
        emit(j, text);
        return exit_yes;
    }

    int sync() {
        AutomatonFile f = read_automaton(opt_.file);
        auto w = find_synchronizing_word(f.dfa, budget());
        json j{{"synchronizing", w.has_value()}};
        std::string text = w ? "synchronizing" : "not synchronizing";
        if (w && opt_.witness) {
            j["witness"] = word_json(f.dfa, *w);
            j["length"] = w->size();
            text += "\nwitness: " + format_word(f.dfa, *w);
        }
        emit(j, text);
        return w ? exit_yes : exit_no;
    }

    int saturate() {
        AutomatonFile f = read_automaton(opt_.file);
        StateSet target = parse_target(f.dfa);
        auto w = find_saturating_min_rank_word(f.dfa, target, budget());
        json j{{"set", target.members()}, {"found", w.has_value()}};
        if (w) {
            j["witness"] = word_json(f.dfa, *w);
            j["length"] = w->size();
        }
        emit(j, w ? "saturating word: " + format_word(f.dfa, *w) : "none");
        return w ? exit_yes : exit_no;
    }

    int birecurrent() {
        AutomatonFile f = read_automaton(opt_.file);
        Acceptor acc = f.acceptor();
        bool verdict;
        if (opt_.method == "direct") verdict = is_birecurrent_direct(acc, budget());
        else if (opt_.method == "char") verdict = is_birecurrent_characterization(acc, budget());
        else verdict = is_birecurrent(acc, budget());
        emit(json{{"birecurrent", verdict}, {"method", opt_.method}},
             std::string("birecurrent: ") + yes_no(verdict));
        return verdict ? exit_yes : exit_no;
    }

    int reduce() {
        IntersectionInstance inst = read_instance(opt_.file);
        PartialDfa gadget;
        json sidecar;
        if (opt_.reduce_kind == "sync") {
            Gadget g = build_sync_gadget(inst);
            sidecar = layout_to_json(g.layout, g.dfa);
            gadget = std::move(g.dfa);
        } else if (opt_.reduce_kind == "saturation") {
            Gadget g = build_saturation_gadget(inst);
            sidecar = layout_to_json(g.layout, g.dfa, g.dfa.all_states());
            gadget = std::move(g.dfa);
        } else if (opt_.reduce_kind == "sc") {
            Gadget base = build_saturation_gadget(inst);
            Gadget g = strongly_connect_gadget(base.dfa, base.layout.special_states.at("Y"));
            GadgetLayout layout = base.layout;
            for (const auto& [name, letter] : g.layout.special_letters) layout.special_letters[name] = letter;
            layout.connector_letters = g.layout.connector_letters;
            layout.connector_targets = g.layout.connector_targets;
            sidecar = layout_to_json(layout, g.dfa, g.dfa.all_states());
            gadget = std::move(g.dfa);
        } else {
            CompleteGadget g = build_complete_gadget(inst);
            sidecar = layout_to_json(g.layout, g.dfa, g.target);
            gadget = std::move(g.dfa);
        }
        sidecar["kind"] = opt_.reduce_kind;
        return write_gadget(gadget, sidecar);
    }

    int binarize_cmd() {
        AutomatonFile f = read_automaton(opt_.file);
        if (opt_.add_selfloop == !opt_.last_letter.empty())
            throw InputError("binarize needs exactly one of --last-letter or --add-selfloop");
        Gadget g = opt_.add_selfloop ? binarize_with_selfloop(f.dfa) : binarize(f.dfa, opt_.last_letter);
        json sidecar = layout_to_json(g.layout, g.dfa);
        sidecar["kind"] = "binarize";
        return write_gadget(g.dfa, sidecar);
    }

    int oracle() {
        IntersectionInstance inst = read_instance(opt_.file);
        auto w = has_common_word(inst, budget());
        // Any machine's automaton carries the shared alphabet names.
        const PartialDfa& names = inst.machines().front().dfa();
        json j{{"found", w.has_value()}};
        if (w) {
            j["witness"] = word_json(names, *w);
            j["length"] = w->size();
        }
        emit(j, w ? "common word: " + format_word(names, *w) : "none");
        return w ? exit_yes : exit_no;
    }

    int dot() {
        out_ << to_dot(read_automaton(opt_.file));
        return exit_yes;
    }

private:
    SearchBudget budget() const { return SearchBudget{opt_.budget}; }

    void emit(const json& j, const std::string& text) {
        if (opt_.json) out_ << j.dump(2) << '\n';
        else out_ << text << '\n';
    }

    StateSet parse_target(const PartialDfa& dfa) {
        if (opt_.set.empty() == opt_.target_from.empty())
            throw InputError("saturate needs exactly one of --set or --target-from");
        if (!opt_.target_from.empty()) {
            auto sidecar = json::parse(read_text(opt_.target_from));
            auto set = target_from_json(sidecar, dfa.state_count());
            if (!set) throw InputError("sidecar '" + opt_.target_from + "' has no target_set");
            return *set;
        }
        if (opt_.set == "all") return dfa.all_states();
        StateSet set(dfa.state_count());
        std::stringstream in(opt_.set);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (item.empty()) continue;
            std::size_t pos = 0;
            unsigned long s = 0;
            try {
                s = std::stoul(item, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != item.size() || item.front() == '-') throw InputError("bad state index '" + item + "' in --set");
            if (s >= dfa.state_count()) throw InputError("state " + item + " out of range in --set");
            set.insert(static_cast<State>(s));
        }
        return set;
    }

    int write_gadget(const PartialDfa& gadget, const json& sidecar) {
        const std::string layout_path = opt_.output + ".layout.json";
        write_text(opt_.output, serialize_automaton(AutomatonFile{gadget, std::nullopt, std::nullopt}));
        write_text(layout_path, sidecar.dump(2) + "\n");
        json j{{"output", opt_.output},
               {"layout", layout_path},
               {"states", gadget.state_count()},
               {"letters", gadget.letter_count()}};
        emit(j, "wrote " + opt_.output + " (" + std::to_string(gadget.state_count()) + " states, " +
                    std::to_string(gadget.letter_count()) + " letters) and " + layout_path);
        return exit_yes;
    }

    const Options& opt_;
    std::ostream& out_;
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Analysis of partial deterministic finite automata", "pdfa"};
    app.require_subcommand(1);
    app.add_flag("--json", opt.json, "Machine-readable JSON output");
    app.add_option("--budget", opt.budget, "Maximum configurations visited by subset/product searches")
        ->check(CLI::PositiveNumber);

    auto file_arg = [&](CLI::App* sub, const char* what = "Automaton file") {
        sub->fallthrough();
        sub->add_option("FILE", opt.file, what)->required();
    };

    auto* validate = app.add_subcommand("validate", "Check that an automaton or instance file is well formed");
    file_arg(validate, "Automaton or instance file");
    auto* info = app.add_subcommand("info", "Basic structural properties");
    file_arg(info);
    auto* rank = app.add_subcommand("rank", "Minimum nonzero rank");
    file_arg(rank);
    opt.method = "bfs";
    rank->add_option("--method", opt.method, "bfs (exact) or poly (strongly connected only)")
        ->check(CLI::IsMember({"bfs", "poly"}));
    rank->add_flag("--witness", opt.witness, "Print a word of minimum rank");
    auto* sync = app.add_subcommand("sync", "Decide synchronizability");
    file_arg(sync);
    sync->add_flag("--witness", opt.witness, "Print a shortest synchronizing word");
    auto* saturate = app.add_subcommand("saturate", "Find a minimum-rank word saturating a state set");
    file_arg(saturate);
    auto* set_opt = saturate->add_option("--set", opt.set, "Comma-separated state indices, or 'all'");
    auto* from_opt = saturate->add_option("--target-from", opt.target_from, "Read target_set from a layout sidecar");
    set_opt->excludes(from_opt);
    auto* birec = app.add_subcommand("birecurrent", "Decide whether the acceptor recognizes a birecurrent set");
    file_arg(birec);
    auto* birec_method = birec->add_option("--method", opt.method, "direct, char or both")
                             ->check(CLI::IsMember({"direct", "char", "both"}));
    auto* reduce = app.add_subcommand("reduce", "Build a reduction gadget from an intersection instance");
    reduce->fallthrough();
    reduce->add_option("KIND", opt.reduce_kind, "sync, saturation, sc or complete")
        ->required()
        ->check(CLI::IsMember({"sync", "saturation", "sc", "complete"}));
    reduce->add_option("INSTANCE", opt.file, "Instance file")->required();
    reduce->add_option("-o,--output", opt.output, "Output automaton file")->required();
    auto* bin = app.add_subcommand("binarize", "Encode over a two-letter alphabet");
    file_arg(bin);
    auto* last = bin->add_option("--last-letter", opt.last_letter, "Letter placed last in the encoding order");
    auto* loop = bin->add_flag("--add-selfloop", opt.add_selfloop, "Append an identity letter and place it last");
    last->excludes(loop);
    bin->add_option("-o,--output", opt.output, "Output automaton file")->required();
    auto* oracle = app.add_subcommand("oracle", "Reference decision procedures");
    oracle->fallthrough();
    oracle->add_option("KIND", opt.oracle_kind, "common-word")->required()->check(CLI::IsMember({"common-word"}));
    oracle->add_option("INSTANCE", opt.file, "Instance file")->required();
    auto* dot = app.add_subcommand("dot", "Graphviz rendering on standard output");
    file_arg(dot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_yes;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_yes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
    }
    if (birec->parsed() && birec_method->count() == 0) opt.method = "both";

    Runner runner(opt, out);
    try {
        if (validate->parsed()) return runner.validate();
        if (info->parsed()) return runner.info();
        if (rank->parsed()) return runner.rank();
        if (sync->parsed()) return runner.sync();
        if (saturate->parsed()) return runner.saturate();
        if (birec->parsed()) return runner.birecurrent();
        if (reduce->parsed()) return runner.reduce();
        if (bin->parsed()) return runner.binarize_cmd();
        if (oracle->parsed()) return runner.oracle();
        if (dot->parsed()) return runner.dot();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        if (opt.json) out << json{{"error", e.what()}}.dump(2) << '\n';
        return exit_error;
    }
    err << "error: no command\n";
    return exit_error;
}

} // namespace pdfa::io
