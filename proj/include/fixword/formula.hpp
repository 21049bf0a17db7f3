#ifndef FIXWORD_FORMULA_HPP
#define FIXWORD_FORMULA_HPP

#include "fixword/state.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fixword {

// Immutable propositional formula over x1..xN built from constants,
// variables, negation and n-ary conjunction/disjunction.
class Formula {
public:
    enum class Kind { constant, variable, negation, conjunction, disjunction };

    static Formula constant(bool value);
    static Formula variable(int index);
    static Formula negation(Formula operand);
    static Formula conjunction(std::vector<Formula> operands);
    static Formula disjunction(std::vector<Formula> operands);

    Kind kind() const { return node_->kind; }
    bool value() const { return node_->value; }
    int index() const { return node_->index; }
    const std::vector<Formula>& operands() const { return node_->operands; }

    bool evaluate(State x) const;
    // Largest variable index used (0 if none).
    int max_variable() const;

    // Canonical text with the minimal parentheses for precedence ! > & > |.
    std::string to_string() const;

    // Structural equality.
    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Kind kind = Kind::constant;
        bool value = false;
        int index = 0;
        std::vector<Formula> operands;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace fixword

#endif
