#ifndef FIXWORD_NETWORK_HPP
#define FIXWORD_NETWORK_HPP

#include "fixword/formula.hpp"
#include "fixword/state.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace fixword {

inline constexpr int kMaxTableComponents = 24;
inline constexpr int kFormulaTableLimit = 16;

enum class Backing { truth_table, formula, structural };

// f: {0,1}^n -> {0,1}^n. Immutable; copies share the implementation.
//
// truth_table: images[x] = f(x) for every x, n <= 24.
// formula: one Formula per component; an image table is cached when n <= 16.
// structural: an arbitrary image function, used by the families at large n;
// an image table is cached when n <= 16.
class BooleanNetwork {
public:
    using MapFn = std::function<State(State)>;

    static BooleanNetwork from_table(int n, std::vector<std::uint32_t> images);
    static BooleanNetwork from_formulas(int n, std::vector<Formula> locals);
    static BooleanNetwork from_map(int n, MapFn map);

    int size() const { return impl_->n; }
    Backing backing() const { return impl_->backing; }

    State image(State x) const;
    bool local(int i, State x) const { return image_bit(i, x); }

    // Cached or owned image table, empty when none is stored.
    std::span<const std::uint32_t> table() const { return impl_->table; }
    // Image table, computing it if needed (requires n <= 24).
    std::vector<std::uint32_t> images() const;
    // The same map with a truth-table backing.
    BooleanNetwork tabulated() const;

    const std::vector<Formula>* formulas() const {
        return impl_->backing == Backing::formula ? &impl_->formulas : nullptr;
    }

private:
    struct Impl {
        int n = 0;
        Backing backing = Backing::truth_table;
        std::vector<std::uint32_t> table;
        std::vector<Formula> formulas;
        MapFn map;
    };
    explicit BooleanNetwork(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    bool image_bit(int i, State x) const;

    std::shared_ptr<const Impl> impl_;
};

// Same map on every state (requires n <= 24).
bool same_map(const BooleanNetwork& f, const BooleanNetwork& g);

} // namespace fixword

#endif
