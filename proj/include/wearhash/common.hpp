#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace wearhash {

using Key = std::uint64_t;
using Value = std::uint64_t;

// One hash-table slot: an optional (key, value) occupant plus a monotone
// counter of how many times a value has been written into the slot.
struct Cell {
    Key key = 0;
    Value value = 0;
    std::uint32_t wear = 0;
    bool occupied = false;
};

// Instrumentation of one insertion's displacement chain.
// writes_performed counts every value write, including ping-pong bounces that
// the fast-forward shortcut never executes one by one.
struct DisplacementOutcome {
    std::uint64_t writes_performed = 0;
    std::uint32_t chain_length = 0;
    bool failed = false;
    // Item evicted past the kick budget; never re-placed. Only set when failed.
    std::optional<std::pair<Key, Value>> dropped;
};

class duplicate_key_error : public std::logic_error {
public:
    explicit duplicate_key_error(Key key)
        : std::logic_error("duplicate key: " + std::to_string(key)) {}
};

class table_full_error : public std::runtime_error {
public:
    table_full_error() : std::runtime_error("table full") {}
};

inline constexpr std::uint32_t kMaxChoices = 8;
inline constexpr std::uint32_t kNoCell = 0xffffffffu;

// The d distinct cell indices associated with one key, in derivation order.
struct ChoiceSet {
    std::array<std::uint32_t, kMaxChoices> cells{};
    std::uint32_t count = 0;

    std::uint32_t operator[](std::uint32_t i) const { return cells[i]; }
    const std::uint32_t* begin() const { return cells.data(); }
    const std::uint32_t* end() const { return cells.data() + count; }
    std::uint32_t size() const { return count; }

    bool contains(std::uint32_t cell) const {
        for (std::uint32_t i = 0; i < count; ++i)
            if (cells[i] == cell) return true;
        return false;
    }

    bool operator==(const ChoiceSet& other) const {
        if (count != other.count) return false;
        for (std::uint32_t i = 0; i < count; ++i)
            if (cells[i] != other.cells[i]) return false;
        return true;
    }
};

}  // namespace wearhash
