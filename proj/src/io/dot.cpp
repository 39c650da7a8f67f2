#include "pdfa/io/dot.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace pdfa::io {

namespace {

std::string quoted(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string to_dot(const AutomatonFile& file, const std::string& graph_name) {
    const PartialDfa& dfa = file.dfa;
    std::ostringstream out;
    out << "digraph " << quoted(graph_name) << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    if (file.initial) {
        out << "  __start [shape=point, label=\"\"];\n";
        out << "  __start -> " << *file.initial << ";\n";
    }
    for (State s = 0; s < dfa.state_count(); ++s) {
        out << "  " << s;
        if (file.accepting && file.accepting->contains(s)) out << " [shape=doublecircle]";
        out << ";\n";
    }
    std::map<std::pair<State, State>, std::string> edges;
    for (State s = 0; s < dfa.state_count(); ++s) {
        for (Letter a = 0; a < dfa.letter_count(); ++a) {
            State t = dfa.target(s, a);
            if (t == kUndefined) continue;
            std::string& label = edges[{s, t}];
            if (!label.empty()) label += ",";
            label += dfa.alphabet()[a];
        }
    }
    for (const auto& [edge, label] : edges)
        out << "  " << edge.first << " -> " << edge.second << " [label=" << quoted(label) << "];\n";
    out << "}\n";
    return out.str();
}

} // namespace pdfa::io
