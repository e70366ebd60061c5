#include "core/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace wfa {

namespace {

struct Line {
    size_t number;
    std::string text;
};

[[noreturn]] void parse_fail(size_t line, const std::string& message) {
    throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string> split_fields(const std::string& s) {
    std::vector<std::string> fields;
    std::istringstream in(s);
    std::string field;
    while (in >> field)
        fields.push_back(field);
    return fields;
}

// Non-empty, non-comment lines with trailing comments and whitespace removed.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> lines;
    size_t number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        number++;
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            start++;
        line.erase(0, start);
        if (!line.empty())
            lines.push_back({number, std::move(line)});
        if (end == text.size())
            break;
    }
    return lines;
}

Vec parse_rational_list(size_t line_number, const std::string& content,
                        const std::string& field, size_t expected) {
    std::vector<std::string> tokens = split_fields(content);
    if (tokens.size() != expected)
        parse_fail(line_number, "'" + field + "' expects " + std::to_string(expected) +
                                    " entries, got " + std::to_string(tokens.size()));
    Vec values;
    values.reserve(tokens.size());
    for (const auto& t : tokens) {
        try {
            values.push_back(Rational::from_string(t));
        } catch (const Error& e) {
            parse_fail(line_number, std::string(e.what()) + " in '" + field + "'");
        }
    }
    return values;
}

} // namespace

WeightedAutomaton parse_automaton(std::string_view text) {
    std::vector<Line> lines = significant_lines(text);
    size_t cursor = 0;
    auto expect_header = [&](const std::string& field) -> const Line& {
        if (cursor >= lines.size())
            parse_fail(lines.empty() ? 1 : lines.back().number, "missing '" + field + "' field");
        const Line& line = lines[cursor];
        if (line.text.rfind(field + ":", 0) != 0)
            parse_fail(line.number, "expected '" + field + ":'");
        cursor++;
        return line;
    };

    const Line& alphabet_line = expect_header("alphabet");
    std::vector<Symbol> alphabet = split_fields(alphabet_line.text.substr(9));
    for (const auto& s : alphabet)
        if (!is_valid_symbol(s))
            parse_fail(alphabet_line.number, "invalid alphabet symbol '" + s + "'");

    const Line& states_line = expect_header("states");
    std::vector<std::string> state_fields = split_fields(states_line.text.substr(7));
    size_t states = 0;
    if (state_fields.size() != 1 ||
        state_fields[0].find_first_not_of("0123456789") != std::string::npos)
        parse_fail(states_line.number, "'states' expects one non-negative integer");
    states = static_cast<size_t>(std::stoull(state_fields[0]));

    const Line& initial_line = expect_header("initial");
    Vec initial = parse_rational_list(initial_line.number, initial_line.text.substr(8),
                                      "initial", states);
    const Line& final_line = expect_header("final");
    Vec final_weights = parse_rational_list(final_line.number, final_line.text.substr(6),
                                            "final", states);

    std::vector<Symbol> seen;
    std::vector<Matrix> transitions(alphabet.size(), Matrix(states, states));
    while (cursor < lines.size()) {
        const Line& header = lines[cursor];
        std::vector<std::string> fields = split_fields(header.text);
        if (fields.size() != 2 || fields[0] != "transitions" || fields[1].back() != ':')
            parse_fail(header.number, "expected 'transitions SYMBOL:'");
        Symbol symbol = fields[1].substr(0, fields[1].size() - 1);
        auto it = std::find(alphabet.begin(), alphabet.end(), symbol);
        if (it == alphabet.end())
            parse_fail(header.number, "unknown transition symbol '" + symbol + "'");
        if (std::find(seen.begin(), seen.end(), symbol) != seen.end())
            parse_fail(header.number, "duplicate transitions for symbol '" + symbol + "'");
        seen.push_back(symbol);
        cursor++;
        Matrix& m = transitions[static_cast<size_t>(it - alphabet.begin())];
        for (size_t r = 0; r < states; r++) {
            if (cursor >= lines.size())
                parse_fail(header.number,
                           "transitions for '" + symbol + "' need " + std::to_string(states) + " rows");
            Vec row = parse_rational_list(lines[cursor].number, lines[cursor].text,
                                          "transitions " + symbol, states);
            for (size_t c = 0; c < states; c++)
                m.at(r, c) = row[c];
            cursor++;
        }
    }
    if (seen.size() != alphabet.size())
        for (const auto& s : alphabet)
            if (std::find(seen.begin(), seen.end(), s) == seen.end())
                parse_fail(lines.empty() ? 1 : lines.back().number,
                           "missing transitions for symbol '" + s + "'");

    return WeightedAutomaton(states, std::move(alphabet), std::move(transitions),
                             std::move(initial), std::move(final_weights));
}

std::string print_automaton(const WeightedAutomaton& a) {
    std::ostringstream out;
    out << "alphabet:";
    for (const auto& s : a.alphabet())
        out << " " << s;
    out << "\n";
    out << "states: " << a.states() << "\n";
    out << "initial:";
    for (const auto& x : a.initial())
        out << " " << x;
    out << "\n";
    out << "final:";
    for (const auto& x : a.final_weights())
        out << " " << x;
    out << "\n";
    for (size_t k = 0; k < a.alphabet().size(); k++) {
        out << "transitions " << a.alphabet()[k] << ":\n";
        const Matrix& m = a.transition(k);
        for (size_t r = 0; r < a.states(); r++) {
            for (size_t c = 0; c < a.states(); c++)
                out << (c == 0 ? "" : " ") << m.at(r, c);
            out << "\n";
        }
    }
    return out.str();
}

WeightedAutomaton read_automaton_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_automaton(buffer.str());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Parse || e.code() == ErrorCode::Dimension)
            throw Error(e.code(), path + ": " + e.what());
        throw;
    }
}

void write_automaton_file(const WeightedAutomaton& a, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    out << print_automaton(a);
    if (!out)
        throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

Word parse_word(const WeightedAutomaton& a, std::string_view text) {
    if (text.empty() || text == "''")
        return {};
    Word w;
    if (text.find('.') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t end = text.find('.', pos);
            if (end == std::string_view::npos)
                end = text.size();
            std::string token(text.substr(pos, end - pos));
            if (token.empty())
                throw Error(ErrorCode::Parse, "empty symbol in word '" + std::string(text) + "'");
            w.push_back(std::move(token));
            if (end == text.size())
                break;
            pos = end + 1;
        }
    } else {
        bool single_char_alphabet =
            std::all_of(a.alphabet().begin(), a.alphabet().end(),
                        [](const Symbol& s) { return s.size() == 1; });
        if (single_char_alphabet) {
            for (char c : text)
                w.push_back(std::string(1, c));
        } else {
            w.push_back(std::string(text));
        }
    }
    for (const auto& s : w)
        if (!a.has_symbol(s))
            throw Error(ErrorCode::UnknownSymbol, "symbol '" + s + "' is not in the alphabet");
    return w;
}

std::string word_to_string(const Word& w) {
    if (w.empty())
        return "''";
    std::string out;
    for (size_t i = 0; i < w.size(); i++) {
        if (i > 0)
            out += ".";
        out += w[i];
    }
    return out;
}

} // namespace wfa
