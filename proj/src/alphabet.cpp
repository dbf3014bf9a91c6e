#include "rsg/alphabet.hpp"

#include <sstream>

#include "rsg/errors.hpp"

namespace rsg {

namespace {

bool valid_symbol_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        // '/' is reserved by the transducer transition syntax and '#' starts
        // comments in the file formats.
        if (c == '/' || c == '#' || std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw InputError("alphabet must contain at least one symbol");
    for (int i = 0; i < static_cast<int>(symbols_.size()); ++i) {
        const std::string& name = symbols_[i];
        if (!valid_symbol_name(name))
            throw InputError("invalid symbol name '" + name + "'");
        if (!index_.emplace(name, i).second)
            throw InputError("duplicate symbol '" + name + "'");
    }
}

const std::string& Alphabet::name(Symbol s) const {
    if (s < 0 || s >= size()) throw InputError("symbol id out of range");
    return symbols_[static_cast<std::size_t>(s)];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += alphabet.name(w[i]);
    }
    return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        auto sym = alphabet.find(token);
        if (!sym) throw InputError("unknown symbol '" + token + "'");
        w.push_back(*sym);
    }
    return w;
}

} // namespace rsg
