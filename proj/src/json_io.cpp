#include "chainorder/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace chainorder {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw std::runtime_error(std::string(what) + ": not valid JSON");
    return j;
}

json read_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(std::string(what) + ": cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse(text, what);
}

std::vector<std::string> string_array(const json& j, const char* field,
                                      const char* what) {
    if (!j.contains(field) || !j[field].is_array())
        throw std::runtime_error(std::string(what) + ": missing array field \"" +
                                 field + "\"");
    std::vector<std::string> out;
    for (const auto& item : j[field]) {
        if (!item.is_string())
            throw std::runtime_error(std::string(what) + ": \"" + field +
                                     "\" entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<double> number_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::runtime_error(where + ": must be an array");
    std::vector<double> out;
    for (const auto& item : j) {
        if (!item.is_number())
            throw std::runtime_error(where + ": entries must be numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

ChainSpec chain_spec_from(const json& j) {
    const char* what = "chain spec";
    if (!j.is_object()) throw std::runtime_error(std::string(what) + ": must be an object");
    if (!j.contains("order") || !j["order"].is_number_integer())
        throw std::runtime_error(std::string(what) + ": missing integer field \"order\"");
    const int order = j["order"].get<int>();
    if (order < 0) throw std::runtime_error(std::string(what) + ": \"order\" must be >= 0");

    std::vector<std::string> tokens = string_array(j, "alphabet", what);
    if (tokens.empty())
        throw std::runtime_error(std::string(what) + ": \"alphabet\" is empty");
    for (const auto& t : tokens)
        if (t.find(',') != std::string::npos)
            throw std::runtime_error(std::string(what) +
                                     ": alphabet tokens must not contain ','");
    Alphabet alphabet(tokens);

    if (!j.contains("transitions") || !j["transitions"].is_object())
        throw std::runtime_error(std::string(what) +
                                 ": missing object field \"transitions\"");
    const json& tr = j["transitions"];

    // materialize rows in context-rank order; every context must be present
    std::int64_t contexts = 1;
    for (int p = 0; p < order; ++p) contexts *= static_cast<std::int64_t>(tokens.size());
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(contexts));
    for (std::int64_t rank = 0; rank < contexts; ++rank) {
        Block ctx(static_cast<std::size_t>(order));
        std::int64_t rest = rank;
        for (int p = order - 1; p >= 0; --p) {
            ctx[static_cast<std::size_t>(p)] =
                static_cast<SymbolId>(rest % static_cast<std::int64_t>(tokens.size()));
            rest /= static_cast<std::int64_t>(tokens.size());
        }
        std::string key;
        for (std::size_t p = 0; p < ctx.size(); ++p) {
            if (p) key += ',';
            key += alphabet.token(ctx[p]);
        }
        if (!tr.contains(key))
            throw std::runtime_error(std::string(what) +
                                     ": transitions missing context \"" + key + "\"");
        rows.push_back(number_array(tr[key], std::string(what) + ": transitions[\"" +
                                                 key + "\"]"));
    }
    if (tr.size() != static_cast<std::size_t>(contexts))
        throw std::runtime_error(std::string(what) +
                                 ": transitions has unknown context keys");
    return ChainSpec(order, std::move(alphabet), std::move(rows));
}

HmmSpec hmm_spec_from(const json& j) {
    const char* what = "hmm spec";
    if (!j.is_object()) throw std::runtime_error(std::string(what) + ": must be an object");
    std::vector<std::string> tokens = string_array(j, "alphabet", what);
    Alphabet alphabet(tokens);

    auto matrix = [&](const char* field) {
        if (!j.contains(field) || !j[field].is_array())
            throw std::runtime_error(std::string(what) + ": missing array field \"" +
                                     field + "\"");
        std::vector<std::vector<double>> m;
        std::size_t i = 0;
        for (const auto& row : j[field])
            m.push_back(number_array(row, std::string(what) + ": " + field + "[" +
                                              std::to_string(i++) + "]"));
        return m;
    };
    return HmmSpec(matrix("hidden_transitions"), matrix("emissions"),
                   std::move(alphabet));
}

}  // namespace

ChainSpec load_chain_spec(const std::string& path) {
    return chain_spec_from(read_file(path, "chain spec"));
}

ChainSpec chain_spec_from_json_text(const std::string& text) {
    return chain_spec_from(parse(text, "chain spec"));
}

HmmSpec load_hmm_spec(const std::string& path) {
    return hmm_spec_from(read_file(path, "hmm spec"));
}

HmmSpec hmm_spec_from_json_text(const std::string& text) {
    return hmm_spec_from(parse(text, "hmm spec"));
}

}  // namespace chainorder
