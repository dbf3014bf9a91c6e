#pragma once

#include <span>
#include <string>
#include <string_view>

#include "rsg/game.hpp"

namespace rsg {

struct BenchmarkInfo {
    std::string name;       // kebab-case label, also the file stem
    std::string title;      // human-readable one-liner
    int min_initial_length; // smallest word length with a nonempty initial slice
};

// The nine built-in games. Generators are parameter-free: the parameter of
// each parameterized system lives in the word length.
std::span<const BenchmarkInfo> list_benchmarks();

// In-memory construction (validated). Throws InputError for unknown names.
RegularSafetyGame build_benchmark(std::string_view name);

// Game file text in the normative format, with the encoding documented in a
// comment header.
std::string generate_benchmark(std::string_view name);

} // namespace rsg
