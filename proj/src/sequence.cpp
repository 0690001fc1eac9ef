#include "chainorder/sequence.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chainorder {

Alphabet::Alphabet(std::vector<std::string> tokens) {
    for (auto& t : tokens) {
        auto [it, inserted] =
            lookup_.try_emplace(t, static_cast<SymbolId>(tokens_.size()));
        if (!inserted)
            throw std::invalid_argument("alphabet tokens must be distinct: \"" + t + "\"");
        tokens_.push_back(std::move(t));
    }
}

SymbolId Alphabet::add(const std::string& token) {
    auto [it, inserted] =
        lookup_.try_emplace(token, static_cast<SymbolId>(tokens_.size()));
    if (inserted) tokens_.push_back(token);
    return it->second;
}

SymbolId Alphabet::id_of(const std::string& token) const {
    auto it = lookup_.find(token);
    if (it == lookup_.end())
        throw std::out_of_range("unknown token: \"" + token + "\"");
    return it->second;
}

bool Alphabet::contains(const std::string& token) const {
    return lookup_.count(token) > 0;
}

const std::string& Alphabet::token(SymbolId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= tokens_.size())
        throw std::out_of_range("symbol id out of range");
    return tokens_[static_cast<std::size_t>(id)];
}

std::pair<Alphabet, Sequence> ingest(std::istream& text) {
    Alphabet alphabet;
    Sequence seq;
    std::string token;
    while (text >> token) seq.symbols.push_back(alphabet.add(token));
    if (seq.empty()) throw std::runtime_error("empty sequence");
    return {std::move(alphabet), std::move(seq)};
}

std::pair<Alphabet, Sequence> ingest_string(const std::string& text) {
    std::istringstream in(text);
    return ingest(in);
}

std::pair<Alphabet, Sequence> ingest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return ingest(in);
}

std::vector<std::string> decode(const Sequence& seq, const Alphabet& alphabet) {
    std::vector<std::string> out;
    out.reserve(seq.size());
    for (SymbolId s : seq.symbols) out.push_back(alphabet.token(s));
    return out;
}

int split_index(int n) {
    if (n < 0) throw std::invalid_argument("split_index: n must be >= 0");
    return (n + 1) / 2;
}

}  // namespace chainorder
