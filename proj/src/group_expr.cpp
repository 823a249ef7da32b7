// Grammar:  expr := term ( "+" term )*
//           term := "0" | "Z" | "Z^" k | "Z/" n      (k >= 1, n >= 2)

#include <cctype>
#include <string>

#include "gkt/abelian.hpp"

namespace gkt {

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& text) : s_(text) {}

    FgAbelianGroup parse() {
        std::size_t free_rank = 0;
        IntVector torsion;
        skip_ws();
        if (at_end()) fail("empty group expression");
        for (;;) {
            term(free_rank, torsion);
            skip_ws();
            if (at_end()) break;
            expect('+');
            skip_ws();
        }
        return FgAbelianGroup::from_invariants(free_rank, torsion);
    }

private:
    void term(std::size_t& free_rank, IntVector& torsion) {
        if (peek() == '0') {
            ++pos_;
            if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) fail("unexpected digit after 0");
            return;
        }
        expect('Z');
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            Integer k = number();
            if (k < 1) fail("exponent must be at least 1");
            free_rank += k.get_ui();
        } else if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            Integer n = number();
            if (n < 2) fail("torsion order must be at least 2");
            torsion.push_back(n);
        } else {
            free_rank += 1;
        }
    }

    Integer number() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(s_.substr(start, pos_ - start));
    }

    void expect(char c) {
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw GroupError("group expression '" + s_ + "': " + msg + " at position " + std::to_string(pos_));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

FgAbelianGroup parse_group_expr(const std::string& text) { return ExprParser(text).parse(); }

std::string format_group(const FgAbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& term) {
        if (!out.empty()) out += " + ";
        out += term;
    };
    if (g.free_rank() == 1) append("Z");
    else if (g.free_rank() > 1) append("Z^" + std::to_string(g.free_rank()));
    for (const auto& d : g.invariant_factors()) append("Z/" + d.get_str());
    return out;
}

}  // namespace gkt
