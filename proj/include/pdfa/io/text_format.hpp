#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "pdfa/automaton.hpp"
#include "pdfa/reductions.hpp"

namespace pdfa::io {

/// Parse failure, with the 1-based line it was detected on (0 when the
/// problem is not tied to a line, e.g. a missing header).
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& message)
        : InputError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Contents of an automaton file:
///
///     # comment
///     states: 3
///     alphabet: a b
///     initial: 0            (optional)
///     accepting: 1 2        (optional)
///     trans: 0 a 1
///
/// States are indices, letters are names. A file with `initial:` but no
/// `accepting:` line has an empty accepting set.
struct AutomatonFile {
    PartialDfa dfa;
    std::optional<State> initial;
    std::optional<StateSet> accepting;

    /// Throws InputError when the file has no initial state.
    Acceptor acceptor() const;

    bool operator==(const AutomatonFile&) const = default;
};

AutomatonFile parse_automaton(std::string_view text);

/// Canonical text: header lines in fixed order, then transitions sorted by
/// (source, letter index).
std::string serialize_automaton(const AutomatonFile& file);

/// Instance file: a shared `alphabet:` line, then one block per machine
/// introduced by `machine:` with `states:`, `initial:`, `accepting:` and
/// `trans:` lines. Every machine must be complete.
IntersectionInstance parse_instance(std::string_view text);
std::string serialize_instance(const IntersectionInstance& inst);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

inline AutomatonFile read_automaton(const std::filesystem::path& path) { return parse_automaton(read_text(path)); }
inline IntersectionInstance read_instance(const std::filesystem::path& path) { return parse_instance(read_text(path)); }

} // namespace pdfa::io
