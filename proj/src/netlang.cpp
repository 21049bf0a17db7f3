#include "fixword/netlang.hpp"

#include "fixword/error.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace fixword {

namespace {

constexpr int kMaxDepth = 512;
constexpr long long kMaxInt = 1'000'000'000;

// Character cursor tracking line/column. '#' comments run to end of line
// and are skipped together with spaces and tabs; newlines are significant.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    int line() const { return line_; }
    int column() const { return col_; }

    char get() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_blanks() {
        while (!at_end()) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\r') {
                get();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') get();
            } else {
                break;
            }
        }
    }

    // Blanks, comments and newlines.
    void skip_space() {
        for (;;) {
            skip_blanks();
            if (peek() == '\n') get();
            else break;
        }
    }

    [[noreturn]] void fail(const std::string& message) const { throw parse_error(line_, col_, message); }

    long long integer(const char* what) {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(std::string("expected ") + what);
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > kMaxInt) fail(std::string(what) + " too large");
        }
        return v;
    }

    bool keyword(std::string_view word) {
        if (text_.substr(pos_, word.size()) != word) return false;
        for (std::size_t k = 0; k < word.size(); ++k) get();
        return true;
    }

    void end_of_line() {
        skip_blanks();
        if (at_end()) return;
        if (peek() != '\n') fail(std::string("unexpected character '") + peek() + "'");
        get();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

int header(Cursor& c, std::string_view word) {
    c.skip_space();
    if (!c.keyword(word)) c.fail("expected '" + std::string(word) + " N' header");
    c.skip_blanks();
    const long long n = c.integer("component count");
    if (n < 1 || n > kMaxComponents) c.fail("component count must be in [1,63]");
    c.end_of_line();
    return static_cast<int>(n);
}

class ExprParser {
public:
    ExprParser(Cursor& c, int n) : c_(c), n_(n) {}

    Formula expr(int depth = 0) {
        std::vector<Formula> terms{term(depth)};
        for (;;) {
            c_.skip_blanks();
            if (c_.peek() != '|') break;
            c_.get();
            terms.push_back(term(depth));
        }
        return Formula::disjunction(std::move(terms));
    }

private:
    Formula term(int depth) {
        std::vector<Formula> factors{factor(depth)};
        for (;;) {
            c_.skip_blanks();
            if (c_.peek() != '&') break;
            c_.get();
            factors.push_back(factor(depth));
        }
        return Formula::conjunction(std::move(factors));
    }

    Formula factor(int depth) {
        if (depth > kMaxDepth) c_.fail("expression nested too deeply");
        c_.skip_blanks();
        const char ch = c_.peek();
        if (ch == '!') {
            c_.get();
            return Formula::negation(factor(depth + 1));
        }
        if (ch == '(') {
            c_.get();
            // The group stays a separate node, so tree shapes survive round trips.
            Formula inner = expr(depth + 1);
            c_.skip_blanks();
            if (c_.peek() != ')') c_.fail("expected ')'");
            c_.get();
            return inner;
        }
        if (ch == '0' || ch == '1') {
            c_.get();
            if (std::isdigit(static_cast<unsigned char>(c_.peek()))) c_.fail("constants are 0 or 1");
            return Formula::constant(ch == '1');
        }
        if (ch == 'x') {
            const int line = c_.line();
            const int col = c_.column();
            c_.get();
            const long long i = c_.integer("variable index");
            if (i < 1 || i > n_)
                throw parse_error(line, col, "variable index x" + std::to_string(i) + " out of range [1," +
                                                 std::to_string(n_) + "]");
            return Formula::variable(static_cast<int>(i));
        }
        if (c_.at_end() || ch == '\n') c_.fail("unexpected end of expression");
        c_.fail(std::string("unexpected character '") + ch + "'");
    }

    Cursor& c_;
    int n_;
};

} // namespace

BooleanNetwork parse_network(std::string_view text) {
    Cursor c(text);
    const int n = header(c, "network");
    std::vector<std::optional<Formula>> locals(static_cast<std::size_t>(n));
    for (;;) {
        c.skip_space();
        if (c.at_end()) break;
        const int line = c.line();
        const int col = c.column();
        const long long i = c.integer("component index");
        if (i < 1 || i > n)
            throw parse_error(line, col, "component " + std::to_string(i) + " out of range [1," + std::to_string(n) + "]");
        auto& slot = locals[static_cast<std::size_t>(i - 1)];
        if (slot) throw parse_error(line, col, "component " + std::to_string(i) + " defined twice");
        c.skip_blanks();
        if (c.peek() != ':') c.fail("expected ':'");
        c.get();
        slot = ExprParser(c, n).expr();
        c.end_of_line();
    }
    std::vector<Formula> out;
    for (int i = 1; i <= n; ++i) {
        auto& slot = locals[static_cast<std::size_t>(i - 1)];
        if (!slot) c.fail("component " + std::to_string(i) + " is not defined");
        out.push_back(*slot);
    }
    return BooleanNetwork::from_formulas(n, std::move(out));
}

SignedDigraph parse_graph(std::string_view text) {
    Cursor c(text);
    const int n = header(c, "digraph");
    SignedDigraph g(n);
    for (;;) {
        c.skip_space();
        if (c.at_end()) break;
        const int line = c.line();
        const int col = c.column();
        const long long j = c.integer("source vertex");
        c.skip_blanks();
        if (!c.keyword("->")) c.fail("expected '->'");
        c.skip_blanks();
        const long long i = c.integer("target vertex");
        if (j < 1 || j > n || i < 1 || i > n)
            throw parse_error(line, col, "vertex out of range [1," + std::to_string(n) + "]");
        c.skip_blanks();
        Sign s = Sign::positive;
        if (c.peek() == '+' || c.peek() == '-' || c.peek() == '?') {
            const char ch = c.get();
            s = ch == '+' ? Sign::positive : ch == '-' ? Sign::negative : Sign::zero;
        }
        if (g.has_edge(static_cast<int>(j), static_cast<int>(i)))
            throw parse_error(line, col, "duplicate edge " + std::to_string(j) + " -> " + std::to_string(i));
        g.add_edge(static_cast<int>(j), static_cast<int>(i), s);
        c.end_of_line();
    }
    return g;
}

Word parse_word(std::string_view text) {
    Cursor c(text);
    struct Token {
        std::string digits;
        int line;
        int col;
    };
    std::vector<Token> tokens;
    bool separated = false;
    for (;;) {
        c.skip_space();
        if (c.at_end()) break;
        const char ch = c.peek();
        if (ch == ',') {
            separated = true;
            c.get();
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch))) c.fail(std::string("unexpected character '") + ch + "'");
        Token t{{}, c.line(), c.column()};
        while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            t.digits += c.get();
        }
        tokens.push_back(std::move(t));
    }
    if (tokens.size() > 1) separated = true;

    Word w;
    if (!separated && tokens.size() == 1) {
        const Token& t = tokens.front();
        for (std::size_t k = 0; k < t.digits.size(); ++k) {
            if (t.digits[k] == '0') throw parse_error(t.line, t.col + static_cast<int>(k), "letters are positive");
            w.push_back(t.digits[k] - '0');
        }
        return w;
    }
    for (const Token& t : tokens) {
        if (t.digits.size() > 9) throw parse_error(t.line, t.col, "letter too large");
        const long long v = std::stoll(t.digits);
        if (v < 1) throw parse_error(t.line, t.col, "letters are positive");
        w.push_back(static_cast<Letter>(v));
    }
    return w;
}

std::string emit_network(const BooleanNetwork& f) {
    const int n = f.size();
    std::string out = "network " + std::to_string(n) + "\n";
    if (const auto* fs = f.formulas()) {
        for (int i = 1; i <= n; ++i)
            out += std::to_string(i) + ": " + (*fs)[static_cast<std::size_t>(i - 1)].to_string() + "\n";
        return out;
    }
    const auto table = f.images();
    for (int i = 1; i <= n; ++i) {
        std::vector<Formula> terms;
        for (std::uint32_t x = 0; x < table.size(); ++x) {
            if (!((table[x] >> (i - 1)) & 1U)) continue;
            std::vector<Formula> lits;
            for (int j = 1; j <= n; ++j) {
                const Formula v = Formula::variable(j);
                lits.push_back(((x >> (j - 1)) & 1U) ? v : Formula::negation(v));
            }
            terms.push_back(Formula::conjunction(std::move(lits)));
        }
        const Formula g = terms.size() == table.size() ? Formula::constant(true) : Formula::disjunction(std::move(terms));
        out += std::to_string(i) + ": " + g.to_string() + "\n";
    }
    return out;
}

std::string emit_graph(const SignedDigraph& g) {
    std::string out = "digraph " + std::to_string(g.size()) + "\n";
    for (const auto& e : g.edges()) {
        out += std::to_string(e.source) + " -> " + std::to_string(e.target);
        if (e.sign == Sign::negative) out += " -";
        else if (e.sign == Sign::zero) out += " ?";
        out += "\n";
    }
    return out;
}

std::string emit_word(const Word& w, int n) {
    bool compact = n <= 9;
    for (const Letter a : w)
        if (a < 1 || a > 9) compact = false;
    std::string out;
    if (compact) {
        for (const Letter a : w) out += static_cast<char>('0' + a);
        return out;
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(w[k]);
    }
    if (w.size() == 1) out += ',';
    return out;
}

} // namespace fixword
