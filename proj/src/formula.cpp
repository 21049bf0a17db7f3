#include "fixword/formula.hpp"

#include "fixword/error.hpp"

#include <algorithm>

namespace fixword {

Formula Formula::constant(bool value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::constant;
    node->value = value;
    return Formula(std::move(node));
}

Formula Formula::variable(int index) {
    if (index < 1 || index > kMaxComponents) throw invalid_input("variable index out of range");
    auto node = std::make_shared<Node>();
    node->kind = Kind::variable;
    node->index = index;
    return Formula(std::move(node));
}

Formula Formula::negation(Formula operand) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::negation;
    node->operands.push_back(std::move(operand));
    return Formula(std::move(node));
}

Formula Formula::conjunction(std::vector<Formula> operands) {
    if (operands.empty()) return constant(true);
    if (operands.size() == 1) return operands.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::conjunction;
    node->operands = std::move(operands);
    return Formula(std::move(node));
}

Formula Formula::disjunction(std::vector<Formula> operands) {
    if (operands.empty()) return constant(false);
    if (operands.size() == 1) return operands.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::disjunction;
    node->operands = std::move(operands);
    return Formula(std::move(node));
}

bool Formula::evaluate(State x) const {
    switch (kind()) {
    case Kind::constant: return value();
    case Kind::variable: return x[index()];
    case Kind::negation: return !operands().front().evaluate(x);
    case Kind::conjunction:
        return std::all_of(operands().begin(), operands().end(),
                           [x](const Formula& g) { return g.evaluate(x); });
    case Kind::disjunction:
        return std::any_of(operands().begin(), operands().end(),
                           [x](const Formula& g) { return g.evaluate(x); });
    }
    return false;
}

int Formula::max_variable() const {
    if (kind() == Kind::variable) return index();
    int m = 0;
    for (const auto& g : operands()) m = std::max(m, g.max_variable());
    return m;
}

namespace {

// 0 = or-level, 1 = and-level, 2 = atom/negation
int level(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::disjunction: return 0;
    case Formula::Kind::conjunction: return 1;
    default: return 2;
    }
}

std::string render(const Formula& f, int context) {
    std::string s;
    switch (f.kind()) {
    case Formula::Kind::constant: s = f.value() ? "1" : "0"; break;
    case Formula::Kind::variable: s = "x" + std::to_string(f.index()); break;
    case Formula::Kind::negation: s = "!" + render(f.operands().front(), 2); break;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
        const char* op = f.kind() == Formula::Kind::conjunction ? " & " : " | ";
        const int lv = level(f);
        for (std::size_t k = 0; k < f.operands().size(); ++k) {
            if (k) s += op;
            // Left-associative chains are flattened, so a same-level operand
            // must be parenthesized to keep the tree shape on re-parse.
            s += render(f.operands()[k], lv + 1);
        }
        break;
    }
    }
    return level(f) < context ? "(" + s + ")" : s;
}

} // namespace

std::string Formula::to_string() const { return render(*this, 0); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case Formula::Kind::constant: return a.value() == b.value();
    case Formula::Kind::variable: return a.index() == b.index();
    default: return a.operands() == b.operands();
    }
}

} // namespace fixword
