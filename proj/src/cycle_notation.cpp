#include "permkit/cycle_notation.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace permkit {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && is_space(text[pos])) ++pos;
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    Point read_point() {
        const std::size_t start = pos;
        while (pos < text.size() && is_digit(text[pos])) ++pos;
        Point value = 0;
        const auto result = std::from_chars(text.data() + start, text.data() + pos, value);
        if (result.ec == std::errc::result_out_of_range)
            throw ParseError("point does not fit in 64 bits", start);
        return value;
    }
};

}  // namespace

Perm parse_cycles(std::string_view text) {
    Scanner in{text};
    std::vector<Cycle> cycles;
    bool saw_empty_cycle = false;

    in.skip_spaces();
    if (in.done()) throw ParseError("expected a cycle", in.pos);
    while (!in.done()) {
        if (in.peek() != '(') throw ParseError("expected '('", in.pos);
        const std::size_t open = in.pos;
        ++in.pos;
        // "()" with nothing at all between the parentheses is the identity.
        if (!in.done() && in.peek() == ')') {
            saw_empty_cycle = true;
            cycles.emplace_back();
            ++in.pos;
            in.skip_spaces();
            continue;
        }
        Cycle cycle;
        in.skip_spaces();
        if (in.done()) throw ParseError("unterminated cycle", open);
        if (!is_digit(in.peek())) throw ParseError("expected a point", in.pos);
        cycle.push_back(in.read_point());
        while (true) {
            in.skip_spaces();
            if (in.done()) throw ParseError("unterminated cycle", open);
            if (in.peek() == ')') {
                ++in.pos;
                break;
            }
            if (in.peek() == ',') {
                ++in.pos;
                in.skip_spaces();
                if (in.done()) throw ParseError("unterminated cycle", open);
            }
            if (!is_digit(in.peek())) throw ParseError("expected a point", in.pos);
            cycle.push_back(in.read_point());
        }
        cycles.push_back(std::move(cycle));
        in.skip_spaces();
    }

    if (saw_empty_cycle && cycles.size() > 1)
        throw ParseError("\"()\" must stand alone", 0);
    return Perm::from_cycles(cycles);
}

std::string to_cycle_text(const Perm& p) {
    if (p.is_identity()) return "()";
    std::string out;
    for (const Cycle& cycle : p.cycles()) {
        out.push_back('(');
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out.push_back(' ');
            out += std::to_string(cycle[i]);
        }
        out.push_back(')');
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Perm& p) { return os << to_cycle_text(p); }

}  // namespace permkit
