#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rsg {

// Symbols and states are dense integer ids. Symbol names are interned once at
// construction time; every algorithm downstream works on ids only.
using Symbol = int;
using State = int;

// Ordered set of distinct symbol names. The declared order defines the
// lexicographic order used for tie-breaking throughout the library.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(Symbol s) const;
    std::optional<Symbol> find(std::string_view name) const;

    const std::vector<std::string>& symbols() const { return symbols_; }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const { return symbols_ != other.symbols_; }

private:
    std::vector<std::string> symbols_;
    std::unordered_map<std::string, Symbol> index_;
};

// A word is a sequence of symbol ids. std::vector's operator< is
// lexicographic, which matches the alphabet order on equal-length words.
using Word = std::vector<Symbol>;

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Symbol s : w) {
            h ^= static_cast<std::size_t>(s) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Space-separated symbol names; the empty word renders as the empty string.
std::string format_word(const Alphabet& alphabet, const Word& w);
Word parse_word(const Alphabet& alphabet, std::string_view text);

} // namespace rsg
