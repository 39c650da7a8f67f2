#include "pdfa/io/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace pdfa::io {

namespace {

struct Line {
    std::size_t number;
    std::string key;
    std::vector<std::string> values;
};

std::vector<std::string> split_ws(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) out.push_back(token);
    return out;
}

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (split_ws(raw).empty()) continue;
        auto colon = raw.find(':');
        if (colon == std::string_view::npos) throw ParseError(number, "expected 'key: values'");
        auto key_tokens = split_ws(raw.substr(0, colon));
        if (key_tokens.size() != 1) throw ParseError(number, "malformed key");
        lines.push_back({number, key_tokens.front(), split_ws(raw.substr(colon + 1))});
        if (end == text.size()) break;
    }
    return lines;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
    return value;
}

struct Transition {
    std::size_t line;
    std::size_t from;
    std::string letter;
    std::size_t to;
};

/// Fields of one automaton description before validation.
struct Block {
    std::size_t start_line = 0;
    std::optional<std::size_t> states;
    std::size_t states_line = 0;
    std::optional<std::vector<std::string>> alphabet;
    std::optional<std::size_t> initial;
    std::size_t initial_line = 0;
    std::optional<std::vector<std::size_t>> accepting;
    std::size_t accepting_line = 0;
    std::vector<Transition> transitions;

    /// Returns false if the key is not an automaton field.
    bool absorb(const Line& line, bool allow_alphabet) {
        auto once = [&](bool present) {
            if (present) throw ParseError(line.number, "duplicate '" + line.key + ":' line");
        };
        if (line.key == "states") {
            once(states.has_value());
            if (line.values.size() != 1) throw ParseError(line.number, "'states:' takes one count");
            states = parse_index(line.values[0], line.number);
            states_line = line.number;
        } else if (line.key == "alphabet" && allow_alphabet) {
            once(alphabet.has_value());
            alphabet = line.values;
        } else if (line.key == "initial") {
            once(initial.has_value());
            if (line.values.size() != 1) throw ParseError(line.number, "'initial:' takes one state");
            initial = parse_index(line.values[0], line.number);
            initial_line = line.number;
        } else if (line.key == "accepting") {
            once(accepting.has_value());
            std::vector<std::size_t> states_list;
            for (const auto& v : line.values) states_list.push_back(parse_index(v, line.number));
            accepting = std::move(states_list);
            accepting_line = line.number;
        } else if (line.key == "trans") {
            if (line.values.size() != 3) throw ParseError(line.number, "'trans:' takes <src> <letter> <dst>");
            transitions.push_back({line.number, parse_index(line.values[0], line.number), line.values[1],
                                   parse_index(line.values[2], line.number)});
        } else {
            return false;
        }
        return true;
    }

    AutomatonFile build(const std::vector<std::string>& letters) const {
        if (!states) throw ParseError(start_line, "missing 'states:' line");
        const std::size_t n = *states;
        for (const auto& name : letters)
            if (name == "ε") throw ParseError(start_line, "'ε' is reserved for the empty word");
        DfaBuilder builder(n, letters);
        std::vector<bool> seen(n * letters.size(), false);
        for (const auto& t : transitions) {
            auto it = std::find(letters.begin(), letters.end(), t.letter);
            if (it == letters.end()) throw ParseError(t.line, "unknown letter '" + t.letter + "'");
            if (t.from >= n || t.to >= n) throw ParseError(t.line, "state index out of range");
            std::size_t a = static_cast<std::size_t>(it - letters.begin());
            if (seen[t.from * letters.size() + a])
                throw ParseError(t.line, "second transition for state " + std::to_string(t.from) + " on '" +
                                             t.letter + "'");
            seen[t.from * letters.size() + a] = true;
            builder.set(static_cast<State>(t.from), static_cast<Letter>(a), static_cast<State>(t.to));
        }
        AutomatonFile file;
        try {
            file.dfa = builder.build();
        } catch (const InputError& e) {
            throw ParseError(start_line, e.what());
        }
        if (initial) {
            if (*initial >= n) throw ParseError(initial_line, "initial state out of range");
            file.initial = static_cast<State>(*initial);
        }
        if (accepting) {
            StateSet set(n);
            for (std::size_t s : *accepting) {
                if (s >= n) throw ParseError(accepting_line, "accepting state out of range");
                if (set.contains(static_cast<State>(s))) throw ParseError(accepting_line, "repeated accepting state");
                set.insert(static_cast<State>(s));
            }
            file.accepting = std::move(set);
        } else if (initial) {
            file.accepting = StateSet(n);
        }
        return file;
    }
};

void write_block(std::ostringstream& out, const PartialDfa& dfa, const std::optional<State>& initial,
                 const std::optional<StateSet>& accepting, bool with_alphabet) {
    out << "states: " << dfa.state_count() << '\n';
    if (with_alphabet) {
        out << "alphabet:";
        for (const auto& name : dfa.alphabet()) out << ' ' << name;
        out << '\n';
    }
    if (initial) out << "initial: " << *initial << '\n';
    if (accepting) {
        out << "accepting:";
        for (State s : *accepting) out << ' ' << s;
        out << '\n';
    }
    for (State s = 0; s < dfa.state_count(); ++s)
        for (Letter a = 0; a < dfa.letter_count(); ++a)
            if (State t = dfa.target(s, a); t != kUndefined)
                out << "trans: " << s << ' ' << dfa.alphabet()[a] << ' ' << t << '\n';
}

} // namespace

Acceptor AutomatonFile::acceptor() const {
    if (!initial) throw InputError("the automaton has no initial state");
    return Acceptor(dfa, *initial, accepting ? *accepting : StateSet(dfa.state_count()));
}

AutomatonFile parse_automaton(std::string_view text) {
    Block block;
    block.start_line = 0;
    for (const Line& line : tokenize(text))
        if (!block.absorb(line, true)) throw ParseError(line.number, "unknown key '" + line.key + "'");
    if (!block.alphabet) throw ParseError(0, "missing 'alphabet:' line");
    if (block.accepting && !block.initial) throw ParseError(block.accepting_line, "'accepting:' without 'initial:'");
    return block.build(*block.alphabet);
}

std::string serialize_automaton(const AutomatonFile& file) {
    std::ostringstream out;
    write_block(out, file.dfa, file.initial, file.initial ? file.accepting : std::nullopt, true);
    return out.str();
}

IntersectionInstance parse_instance(std::string_view text) {
    std::optional<std::vector<std::string>> alphabet;
    std::vector<Block> blocks;
    for (const Line& line : tokenize(text)) {
        if (line.key == "alphabet") {
            if (alphabet) throw ParseError(line.number, "duplicate 'alphabet:' line");
            if (!blocks.empty()) throw ParseError(line.number, "'alphabet:' must precede the machines");
            alphabet = line.values;
        } else if (line.key == "machine") {
            if (!line.values.empty()) throw ParseError(line.number, "'machine:' takes no values");
            blocks.emplace_back();
            blocks.back().start_line = line.number;
        } else {
            if (blocks.empty()) throw ParseError(line.number, "'" + line.key + ":' outside a machine block");
            if (!blocks.back().absorb(line, false)) throw ParseError(line.number, "unknown key '" + line.key + "'");
        }
    }
    if (!alphabet) throw ParseError(0, "missing 'alphabet:' line");
    if (blocks.empty()) throw ParseError(0, "no 'machine:' blocks");
    std::vector<Acceptor> machines;
    for (const Block& block : blocks) {
        if (!block.initial) throw ParseError(block.start_line, "machine without 'initial:' line");
        AutomatonFile file = block.build(*alphabet);
        if (!is_complete(file.dfa)) throw ParseError(block.start_line, "machine is not complete");
        machines.push_back(file.acceptor());
    }
    try {
        return IntersectionInstance(std::move(machines));
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_instance(const IntersectionInstance& inst) {
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& name : inst.alphabet()) out << ' ' << name;
    out << '\n';
    for (const auto& m : inst.machines()) {
        out << "machine:\n";
        write_block(out, m.dfa(), m.initial(), m.accepting(), false);
    }
    return out.str();
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw InputError("error writing '" + path.string() + "'");
}

} // namespace pdfa::io
