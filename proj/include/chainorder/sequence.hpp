#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chainorder {

using SymbolId = std::int32_t;

// A run of consecutive symbols, oldest first. Length 0 is the empty string.
using Block = std::vector<SymbolId>;

// Ordered set of distinct token strings; a token's SymbolId is its position.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    // Returns the id of an existing token, or registers it as the next id.
    SymbolId add(const std::string& token);

    SymbolId id_of(const std::string& token) const;  // throws if unknown
    bool contains(const std::string& token) const;
    const std::string& token(SymbolId id) const;
    std::size_t size() const { return tokens_.size(); }
    const std::vector<std::string>& tokens() const { return tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> lookup_;
};

// The data segment X_0..X_n; n() is the largest index, size() = n + 1.
struct Sequence {
    std::vector<SymbolId> symbols;

    Sequence() = default;
    explicit Sequence(std::vector<SymbolId> syms) : symbols(std::move(syms)) {}

    int n() const { return static_cast<int>(symbols.size()) - 1; }
    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    SymbolId operator[](int t) const { return symbols[static_cast<std::size_t>(t)]; }
};

// Reads whitespace-separated tokens; the alphabet lists tokens in order of
// first appearance. Throws std::runtime_error("empty sequence") on no tokens.
std::pair<Alphabet, Sequence> ingest(std::istream& text);
std::pair<Alphabet, Sequence> ingest_string(const std::string& text);
std::pair<Alphabet, Sequence> ingest_file(const std::string& path);

// Inverse of ingest: the token list the sequence encodes.
std::vector<std::string> decode(const Sequence& seq, const Alphabet& alphabet);

// ceil(n/2). X_0^{split-1} and X_split^n partition the data segment X_0^n.
int split_index(int n);

}  // namespace chainorder
