#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

namespace fpcodes {

// Guardrails for the exhaustive checkers. The defaults keep worst cases at
// desk scale (minutes on one core); exceeding any limit raises CapacityError
// with the offending count in the message.
struct Budget {
    std::size_t max_words = 64;
    unsigned max_coalition = 3; // largest accepted t (and T)
    std::size_t max_length = 8;
    std::uint64_t max_products = std::uint64_t{1} << 24; // descendant enumeration ceiling
    std::uint64_t max_work = std::uint64_t{1} << 32;     // outer enumeration size

    static Budget unbounded() {
        Budget b;
        b.max_words = std::numeric_limits<std::size_t>::max();
        b.max_coalition = std::numeric_limits<unsigned>::max();
        b.max_length = std::numeric_limits<std::size_t>::max();
        b.max_products = std::numeric_limits<std::uint64_t>::max();
        b.max_work = std::numeric_limits<std::uint64_t>::max();
        return b;
    }

    // Lifts the structural caps and pins both enumeration ceilings to `work`;
    // backs the CLI --budget flag.
    static Budget with_work(std::uint64_t work) {
        Budget b = unbounded();
        b.max_products = work;
        b.max_work = work;
        return b;
    }
};

} // namespace fpcodes
