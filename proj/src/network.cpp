#include "fixword/network.hpp"

#include "fixword/error.hpp"

#include <string>

namespace fixword {

namespace {

void check_size(int n) {
    if (n < 1 || n > kMaxComponents)
        throw invalid_input("component count must be in [1,63], got " + std::to_string(n));
}

void check_table_size(int n) {
    check_size(n);
    if (n > kMaxTableComponents)
        throw cap_exceeded("truth table components", kMaxTableComponents, n);
}

} // namespace

BooleanNetwork BooleanNetwork::from_table(int n, std::vector<std::uint32_t> images) {
    check_table_size(n);
    if (images.size() != (std::size_t{1} << n))
        throw invalid_input("truth table must have 2^n entries");
    const std::uint32_t mask = static_cast<std::uint32_t>(State::ones(n).bits());
    for (const auto y : images)
        if (y & ~mask) throw invalid_input("truth table entry has bits above component n");
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->backing = Backing::truth_table;
    impl->table = std::move(images);
    return BooleanNetwork(std::move(impl));
}

BooleanNetwork BooleanNetwork::from_formulas(int n, std::vector<Formula> locals) {
    check_size(n);
    if (static_cast<int>(locals.size()) != n)
        throw invalid_input("expected one formula per component");
    for (const auto& g : locals)
        if (g.max_variable() > n) throw invalid_input("formula uses a variable beyond x" + std::to_string(n));
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->backing = Backing::formula;
    impl->formulas = std::move(locals);
    if (n <= kFormulaTableLimit) {
        impl->table.resize(std::size_t{1} << n);
        for (std::uint32_t x = 0; x < impl->table.size(); ++x) {
            std::uint32_t y = 0;
            for (int i = 1; i <= n; ++i)
                if (impl->formulas[static_cast<std::size_t>(i - 1)].evaluate(State{x})) y |= 1U << (i - 1);
            impl->table[x] = y;
        }
    }
    return BooleanNetwork(std::move(impl));
}

BooleanNetwork BooleanNetwork::from_map(int n, MapFn map) {
    check_size(n);
    if (!map) throw invalid_input("empty map function");
    auto impl = std::make_shared<Impl>();
    impl->n = n;
    impl->backing = Backing::structural;
    impl->map = std::move(map);
    if (n <= kFormulaTableLimit) {
        impl->table.resize(std::size_t{1} << n);
        for (std::uint32_t x = 0; x < impl->table.size(); ++x)
            impl->table[x] = static_cast<std::uint32_t>(impl->map(State{x}).bits());
    }
    return BooleanNetwork(std::move(impl));
}

State BooleanNetwork::image(State x) const {
    const Impl& m = *impl_;
    if (!m.table.empty()) return State{m.table[x.index()]};
    if (m.backing == Backing::formula) {
        State y;
        for (int i = 1; i <= m.n; ++i)
            y = y.with(i, m.formulas[static_cast<std::size_t>(i - 1)].evaluate(x));
        return y;
    }
    return m.map(x);
}

bool BooleanNetwork::image_bit(int i, State x) const {
    const Impl& m = *impl_;
    if (!m.table.empty()) return (m.table[x.index()] >> (i - 1)) & 1U;
    if (m.backing == Backing::formula) return m.formulas[static_cast<std::size_t>(i - 1)].evaluate(x);
    return m.map(x)[i];
}

std::vector<std::uint32_t> BooleanNetwork::images() const {
    if (!impl_->table.empty()) return impl_->table;
    check_table_size(size());
    std::vector<std::uint32_t> t(std::size_t{1} << size());
    for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint32_t>(image(State{x}).bits());
    return t;
}

BooleanNetwork BooleanNetwork::tabulated() const {
    if (backing() == Backing::truth_table) return *this;
    return from_table(size(), images());
}

bool same_map(const BooleanNetwork& f, const BooleanNetwork& g) {
    if (f.size() != g.size()) return false;
    check_table_size(f.size());
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.size()); ++x)
        if (f.image(State{x}) != g.image(State{x})) return false;
    return true;
}

} // namespace fixword
